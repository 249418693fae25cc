#include "waring/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace waring {

namespace {

using ordered_json = nlohmann::ordered_json;

// Canonical positions ordered by the user's variable indices.
std::vector<std::size_t> positions_in_user_order(const Decomposition& dec) {
    std::vector<std::size_t> order(dec.monomial.num_vars());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto& map = dec.monomial.variable_map();
    std::sort(order.begin(), order.end(),
              [&map](std::size_t a, std::size_t b) { return map[a] < map[b]; });
    return order;
}

}  // namespace

std::string monomial_expression(const Decomposition& dec) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t pos : positions_in_user_order(dec)) {
        if (!first) out << "*";
        first = false;
        out << "x" << dec.monomial.variable_map()[pos] + 1;
        const unsigned e = dec.monomial.exponents()[pos];
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

std::string decomposition_to_json(const Decomposition& dec, const std::string& input_expression) {
    ordered_json j;
    j["input"] = input_expression;
    j["canonical_exponents"] = dec.monomial.exponents();
    std::vector<std::size_t> user_vars;
    for (std::size_t raw : dec.monomial.variable_map()) user_vars.push_back(raw + 1);
    j["variable_map"] = user_vars;
    j["degree"] = dec.degree();
    j["rank"] = std::to_string(dec.rank());
    j["cyclotomic_order"] = dec.cyclotomic_order;
    ordered_json terms = ordered_json::array();
    for (const DecompositionTerm& term : dec.terms) {
        ordered_json t;
        t["gamma"] = {{"rational", term.gamma_rational.fraction_string()},
                      {"zeta_exp", term.gamma_zeta_exp}};
        t["form"] = term.form_exponents;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw std::invalid_argument("malformed decomposition JSON: " + why);
}

unsigned read_unsigned(const ordered_json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_unsigned()) {
        malformed(std::string("missing or non-integer '") + field + "'");
    }
    return j[field].get<unsigned>();
}

}  // namespace

ParsedDecomposition decomposition_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(e.what());
    }
    if (!j.is_object()) malformed("top level is not an object");

    std::string input;
    if (j.contains("input") && j["input"].is_string()) input = j["input"].get<std::string>();

    if (!j.contains("canonical_exponents") || !j["canonical_exponents"].is_array()) {
        malformed("missing 'canonical_exponents'");
    }
    Exponents exponents;
    for (const auto& e : j["canonical_exponents"]) {
        if (!e.is_number_unsigned()) malformed("canonical exponents must be non-negative integers");
        exponents.push_back(e.get<unsigned>());
    }

    if (!j.contains("variable_map") || !j["variable_map"].is_array()) {
        malformed("missing 'variable_map'");
    }
    std::vector<std::size_t> variable_map;
    for (const auto& v : j["variable_map"]) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
            malformed("variable_map entries must be 1-indexed integers");
        }
        variable_map.push_back(v.get<std::size_t>() - 1);
    }

    const unsigned degree = read_unsigned(j, "degree");
    const unsigned order = read_unsigned(j, "cyclotomic_order");
    if (order == 0) malformed("cyclotomic_order must be positive");

    if (!j.contains("rank")) malformed("missing 'rank'");
    std::string rank_text;
    if (j["rank"].is_string()) {
        rank_text = j["rank"].get<std::string>();
    } else if (j["rank"].is_number_unsigned()) {
        rank_text = std::to_string(j["rank"].get<unsigned long long>());
    } else {
        malformed("'rank' must be a string or integer");
    }

    if (!j.contains("terms") || !j["terms"].is_array()) malformed("missing 'terms'");
    std::vector<DecompositionTerm> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("gamma") || !t.contains("form")) {
            malformed("terms need 'gamma' and 'form'");
        }
        const auto& g = t["gamma"];
        if (!g.is_object() || !g.contains("rational") || !g["rational"].is_string()) {
            malformed("gamma needs a 'rational' string");
        }
        Rational rational;
        try {
            rational = Rational::from_string(g["rational"].get<std::string>());
        } catch (const std::exception& e) {
            malformed(e.what());
        }
        const unsigned zeta_exp = read_unsigned(g, "zeta_exp");
        if (zeta_exp >= order) malformed("gamma zeta_exp out of range");
        if (!t["form"].is_array()) malformed("'form' must be an array");
        Exponents form;
        for (const auto& e : t["form"]) {
            if (!e.is_number_unsigned() || e.get<unsigned>() >= order) {
                malformed("form exponents must be integers below the cyclotomic order");
            }
            form.push_back(e.get<unsigned>());
        }
        if (form.size() != exponents.size()) malformed("form length does not match variable count");
        if (!form.empty() && form[0] != 0) malformed("form entries must lead with exponent 0");
        terms.push_back(DecompositionTerm{std::move(rational), zeta_exp, std::move(form)});
    }

    CanonicalMonomial monomial = [&] {
        try {
            return CanonicalMonomial(std::move(exponents), std::move(variable_map));
        } catch (const std::exception& e) {
            malformed(e.what());
        }
    }();
    if (monomial.degree() != degree) malformed("degree does not match the exponents");
    if (rank_text != std::to_string(terms.size())) {
        malformed("rank does not match the term count");
    }

    return ParsedDecomposition{
        Decomposition{std::move(monomial), order, std::move(terms)}, std::move(input)};
}

namespace {

// Renders gamma and the linear form for plain text. With order <= 2 the
// roots of unity are just signs.
std::string plain_gamma(const DecompositionTerm& term, unsigned order) {
    Rational value = term.gamma_rational;
    unsigned exp = term.gamma_zeta_exp;
    if (order <= 2) {
        if (exp == 1) value = -value;
        exp = 0;
    }
    std::string out = "(" + value.str() + ")";
    if (exp != 0) out += "*z^" + std::to_string(exp);
    return out;
}

std::string plain_form(const Decomposition& dec, const DecompositionTerm& term) {
    const unsigned order = dec.cyclotomic_order;
    std::ostringstream out;
    bool first = true;
    for (std::size_t pos : positions_in_user_order(dec)) {
        const unsigned e = term.form_exponents[pos];
        const std::string var = "x" + std::to_string(dec.monomial.variable_map()[pos] + 1);
        if (order <= 2 && e == 1) {
            out << (first ? "-" : " - ") << var;
        } else {
            if (!first) out << " + ";
            if (e != 0) out << "z^" << e << "*";
            out << var;
        }
        first = false;
    }
    return out.str();
}

}  // namespace

std::string decomposition_to_plain(const Decomposition& dec, const std::string& input_expression) {
    std::ostringstream out;
    out << "input: " << input_expression << "\n";
    out << "degree: " << dec.degree() << "\n";
    out << "rank: " << dec.rank() << "\n";
    out << "order: " << dec.cyclotomic_order << "\n";
    if (dec.cyclotomic_order > 2) {
        out << "zeta: z = primitive root of unity of order " << dec.cyclotomic_order << "\n";
    }
    for (const DecompositionTerm& term : dec.terms) {
        out << "term: " << plain_gamma(term, dec.cyclotomic_order) << " * ("
            << plain_form(dec, term) << ")^" << dec.degree() << "\n";
    }
    return out.str();
}

namespace {

std::string latex_rational_magnitude(const Rational& value) {
    const Rational a = value.sign() < 0 ? -value : value;
    if (a.is_integer()) return a.numerator().get_str();
    return "\\tfrac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex_variable(std::size_t raw_index) {
    return "x_{" + std::to_string(raw_index + 1) + "}";
}

}  // namespace

std::string decomposition_to_latex(const Decomposition& dec) {
    const unsigned order = dec.cyclotomic_order;
    std::ostringstream out;
    out << "\\[\n";
    for (std::size_t pos : positions_in_user_order(dec)) {
        out << latex_variable(dec.monomial.variable_map()[pos]);
        const unsigned e = dec.monomial.exponents()[pos];
        if (e > 1) out << "^{" << e << "}";
    }
    out << " = ";
    for (std::size_t t = 0; t < dec.terms.size(); ++t) {
        const DecompositionTerm& term = dec.terms[t];
        Rational gamma = term.gamma_rational;
        unsigned gamma_exp = term.gamma_zeta_exp;
        if (order <= 2) {
            if (gamma_exp == 1) gamma = -gamma;
            gamma_exp = 0;
        }
        if (gamma.sign() < 0) {
            out << (t == 0 ? "-" : " - ");
        } else if (t != 0) {
            out << " + ";
        }
        const bool unit_gamma = gamma == Rational(1) || gamma == Rational(-1);
        if (!unit_gamma) out << latex_rational_magnitude(gamma);
        if (gamma_exp != 0) out << "\\zeta_{" << order << "}^{" << gamma_exp << "}";
        out << "\\left(";
        bool first = true;
        for (std::size_t pos : positions_in_user_order(dec)) {
            const unsigned e = term.form_exponents[pos];
            if (order <= 2 && e == 1) {
                out << "-";
            } else if (!first) {
                out << "+";
            }
            if (e != 0 && order > 2) out << "\\zeta_{" << order << "}^{" << e << "}";
            out << latex_variable(dec.monomial.variable_map()[pos]);
            first = false;
        }
        out << "\\right)^{" << dec.degree() << "}";
    }
    out << "\n\\]\n";
    return out.str();
}

std::string cyclotomic_to_json(const CyclotomicNumber& value) {
    ordered_json j;
    std::size_t nonzero = 0;
    std::size_t nonzero_index = 0;
    for (std::size_t i = 0; i < value.coefficients().size(); ++i) {
        if (!value.coefficients()[i].is_zero()) {
            ++nonzero;
            nonzero_index = i;
        }
    }
    if (nonzero <= 1) {
        const Rational c = nonzero == 0 ? Rational() : value.coefficients()[nonzero_index];
        j["rational"] = c.fraction_string();
        j["zeta_exp"] = nonzero == 0 ? 0 : nonzero_index;
        return j.dump();
    }
    j["order"] = value.order();
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : value.coefficients()) coeffs.push_back(c.fraction_string());
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

}  // namespace waring
