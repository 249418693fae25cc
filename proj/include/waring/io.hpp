#ifndef WARING_IO_HPP
#define WARING_IO_HPP

#include <string>

#include "waring/cyclotomic.hpp"
#include "waring/decompose.hpp"

namespace waring {

/// The monomial of a decomposition as an expression in the user's variable
/// order, e.g. "x1*x2^2".
std::string monomial_expression(const Decomposition& dec);

/// Compact JSON with fixed key order:
/// {"input": ..., "canonical_exponents": [...], "variable_map": [...],
///  "degree": d, "rank": "R", "cyclotomic_order": N, "terms": [...]}.
/// variable_map entries are 1-indexed user variables; the rank is a decimal
/// string so exactness survives any consumer.
std::string decomposition_to_json(const Decomposition& dec, const std::string& input_expression);

struct ParsedDecomposition {
    Decomposition decomposition;
    std::string input;
};

/// Reads the JSON layout above; throws std::invalid_argument when the text
/// is not a structurally valid decomposition.
ParsedDecomposition decomposition_from_json(const std::string& json_text);

/// Line-oriented rendering, stable across runs.
std::string decomposition_to_plain(const Decomposition& dec, const std::string& input_expression);

/// Display-math LaTeX; roots of unity appear as \zeta_{N}^{e}, or as signs
/// when the order is at most 2.
std::string decomposition_to_latex(const Decomposition& dec);

/// {"order": N, "coeffs": ["p/q", ...]}, or the compact
/// {"rational": "p/q", "zeta_exp": e} when the value is a rational multiple
/// of a single power of zeta_N.
std::string cyclotomic_to_json(const CyclotomicNumber& value);

}  // namespace waring

#endif
