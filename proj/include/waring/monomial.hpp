#ifndef WARING_MONOMIAL_HPP
#define WARING_MONOMIAL_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

using Exponents = std::vector<unsigned>;

/// Monomial in the user's variable order; zero exponents allowed.
struct Monomial {
    Exponents exponents;

    explicit Monomial(Exponents e);
    unsigned degree() const;
    std::size_t num_vars() const { return exponents.size(); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
};

/// Parses `x<k>` / `x<k>^<e>` factors joined by `*`, e.g. "x1^2*x3".
/// Whitespace is ignored, variables are 1-indexed, repeated variables sum
/// their exponents. Throws std::invalid_argument on malformed input.
Monomial parse_monomial(std::string_view text);

/// Monomial with zero exponents dropped and the rest sorted non-decreasing,
/// plus the mapping from canonical positions back to the original variables.
class CanonicalMonomial {
  public:
    CanonicalMonomial(Exponents sorted_exponents, std::vector<std::size_t> variable_map);
    /// Identity variable map; exponents must already be sorted and positive.
    static CanonicalMonomial from_sorted_exponents(Exponents sorted_exponents);

    const Exponents& exponents() const { return exponents_; }
    /// Canonical position -> index of the variable in the original monomial.
    const std::vector<std::size_t>& variable_map() const { return variable_map_; }
    std::size_t num_vars() const { return exponents_.size(); }
    unsigned degree() const;

    friend bool operator==(const CanonicalMonomial& a, const CanonicalMonomial& b) {
        return a.exponents_ == b.exponents_ && a.variable_map_ == b.variable_map_;
    }
    friend std::ostream& operator<<(std::ostream& os, const CanonicalMonomial& m);

  private:
    Exponents exponents_;
    std::vector<std::size_t> variable_map_;
};

/// Drops zero exponents and sorts the rest (stable on equal exponents).
/// Throws std::domain_error for a degree-0 input.
CanonicalMonomial normalize(const Monomial& m);

/// Rank of the monomial x1^b1*...*xn^bn with b1 <= ... <= bn: the product of
/// (bi + 1) over i >= 2. A pure power has rank 1.
Integer waring_rank(const CanonicalMonomial& c);

/// Lower bound on the multiplicity of a one-dimensional radical ideal inside
/// (y1^a1, ..., yn^an): the product of ai over i >= 2.
/// Requires 2 <= a1 <= ... <= an and n > 1.
Integer multiplicity_lower_bound(const std::vector<unsigned>& a);

/// Multiplicity of a monomial complete intersection: the product of the
/// generator degrees.
Integer ci_multiplicity(const std::vector<unsigned>& degrees);

struct RankBounds {
    Integer lower;
    Integer upper;
};

/// Rank bounds for a sum of pairwise coprime monomials of equal degree:
/// each summand's rank from below, the rank of the product from above.
RankBounds coprime_rank_bounds(const std::vector<Monomial>& monomials);

/// ceil(C(d + num_vars - 1, d) / num_vars), the rank of the generic degree-d
/// form in num_vars variables.
Integer generic_rank_naive(unsigned num_vars, unsigned degree);

struct ExtremalRank {
    Integer value;
    CanonicalMonomial exponents;
};

/// Maximal monomial rank in three variables, closed form: ((d+1)/2)^2 for odd
/// d and (d/2)(d/2+1) for even d, attained at (1,(d-1)/2,(d-1)/2) resp.
/// (1,d/2-1,d/2). Requires d >= 3.
ExtremalRank extremal_rank_ternary(unsigned d);

/// Exhaustive maximum of waring_rank over all partitions of d into exactly n
/// positive parts; ties resolved toward the lexicographically smallest sorted
/// exponent sequence. Requires d >= n >= 1.
ExtremalRank extremal_rank_bruteforce(unsigned n, unsigned d);

/// Partition of an integer into positive non-decreasing parts.
struct Partition {
    std::vector<unsigned> parts;

    explicit Partition(std::vector<unsigned> p);
    unsigned total() const;
};

/// For a partition with exactly n parts d1 <= ... <= dn, the secant index
/// prod over i >= 2 of (di + 1).
Integer secant_bound(const Partition& lambda, unsigned n);

/// Finite set of minimal monomial generators over a fixed variable count.
class MonomialIdeal {
  public:
    MonomialIdeal(std::size_t num_vars, std::vector<Exponents> generators);

    std::size_t num_vars() const { return num_vars_; }
    /// Minimal generators, lexicographically sorted.
    const std::vector<Exponents>& generators() const { return generators_; }
    /// Membership for a monomial: divisible by some generator.
    bool contains(const Exponents& monomial) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.num_vars_ == b.num_vars_ && a.generators_ == b.generators_;
    }

  private:
    std::size_t num_vars_;
    std::vector<Exponents> generators_;
};

/// Apolar ideal of a canonical monomial: the pure powers yi^(bi+1).
MonomialIdeal perp_generators(const CanonicalMonomial& c);

/// Apolar ideal of a raw monomial in its full ambient ring: yi^(bi+1) for
/// every ambient variable, so zero exponents contribute linear generators.
MonomialIdeal perp_generators(const Monomial& m);

/// Minimal generators of the intersection, by pairwise componentwise-max
/// closure followed by minimalization. All ideals must share num_vars.
MonomialIdeal ideal_intersect(const std::vector<MonomialIdeal>& ideals);

/// Number of exponent sequences alpha <= b componentwise with |alpha| = a:
/// the rank of the degree-(a, d-a) catalecticant of the monomial. Requires
/// 0 <= a <= degree.
Integer catalecticant_rank(const CanonicalMonomial& c, unsigned a);

}  // namespace waring

#endif
