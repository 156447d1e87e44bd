#include <ogf/rational.hpp>

#include <stdexcept>

namespace ogf {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty rational literal");

    const auto slash = t.find('/');
    std::string_view num_part = slash == std::string_view::npos ? t : t.substr(0, slash);
    if (!is_integer_literal(num_part))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (num_part.front() == '+') num_part.remove_prefix(1);  // cpp_int rejects a leading '+'
    Integer num{std::string(num_part)};

    if (slash == std::string_view::npos) return Rational(num);

    const std::string_view den_part = t.substr(slash + 1);
    if (!is_integer_literal(den_part) || den_part.front() == '+' || den_part.front() == '-')
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    Integer den{std::string(den_part)};
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational literal '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    const unsigned long mag = exp > 0 ? static_cast<unsigned long>(exp)
                                      : static_cast<unsigned long>(-exp);
    if (exp > 0) {
        return Rational(boost::multiprecision::pow(boost::multiprecision::numerator(base), mag),
                        boost::multiprecision::pow(boost::multiprecision::denominator(base), mag));
    }
    if (base == 0) throw std::invalid_argument("zero base with negative exponent");
    Integer num = boost::multiprecision::pow(boost::multiprecision::denominator(base), mag);
    Integer den = boost::multiprecision::pow(boost::multiprecision::numerator(base), mag);
    if (den < 0) {  // the constructor requires a positive denominator
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace ogf
