#ifndef WARING_HILBERT_HPP
#define WARING_HILBERT_HPP

#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Quotient of k[y1..yn] by pure powers y_j^{a_j}, possibly fewer generators
/// than variables. Artinian exactly when every variable carries a generator.
struct CIData {
    unsigned num_vars;
    std::vector<unsigned> gen_degrees;

    CIData(unsigned n, std::vector<unsigned> degrees);
    bool artinian() const { return gen_degrees.size() == num_vars; }
    /// Top nonzero degree, sum of (a_j - 1); defined only for Artinian data.
    unsigned socle_degree() const;
};

/// Coefficient of t^i in prod_j (1 - t^{a_j}) / (1 - t)^n, by truncated exact
/// series arithmetic.
Integer hilbert_function(const CIData& ci, unsigned i);

/// Counts degree-i monomials divisible by none of the generators, by direct
/// enumeration; independent of the series route.
Integer hilbert_function_bruteforce(const CIData& ci, unsigned i);

/// Socle degree of (y1, y2^{a2}, ..., yn^{an}): sum of a_i minus (n-1), for
/// the sequence a = (a2, ..., an) with 2 <= a2 <= ... <= an.
unsigned socle_degree(const std::vector<unsigned>& a);

struct Lemma22Result {
    Integer lhs;
    Integer rhs;
    bool holds;
};

/// For J = (y1, y2^{a2}, ..., yn^{an}): compares the Hilbert-function sum
/// over degrees a2..tau against prod a_i - C(a2+n-2, n-1). An empty summation
/// window (a2 > tau) counts as 0.
Lemma22Result lemma22_check(const std::vector<unsigned>& a);

}  // namespace waring

#endif
