#include "waring/rational.hpp"

#include <cctype>

namespace waring {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
    const std::size_t slash = text.find('/');
    const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    const std::size_t num_start = (!num_part.empty() && num_part[0] == '-') ? 1 : 0;
    if (!all_digits(num_part, num_start, num_part.size())) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    Integer num(num_part, 10);
    if (slash == std::string::npos) return Rational(num);

    const std::string den_part = text.substr(slash + 1);
    if (!all_digits(den_part, 0, den_part.size())) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    Integer den(den_part, 10);
    if (den == 0) throw std::domain_error("rational with zero denominator: '" + text + "'");
    return Rational(num, den);
}

}  // namespace waring
