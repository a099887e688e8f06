#include "segcover/rational.hpp"

#include <cctype>

namespace segcover {

namespace {

bool is_integer_literal(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// mpz_set_str rejects a leading '+', which we accept.
std::string strip_plus(const std::string& s) {
    return !s.empty() && s[0] == '+' ? s.substr(1) : s;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(text, true)) return std::nullopt;
        return Rational(Integer(strip_plus(text), 10));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) return std::nullopt;
    Integer d(den, 10);
    if (d == 0) return std::nullopt;
    Rational r(Integer(strip_plus(num), 10), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Integer ceil_rational(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer floor_rational(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational pow_rational(const Rational& r, unsigned long e) {
    Rational acc(1);
    Rational base = r;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

}  // namespace segcover
