#ifndef BURNSIDE_RATIONAL_HPP
#define BURNSIDE_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

/// Arbitrary-precision rational in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Parses "p/q" or "p" (optional sign, decimal digits only).
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!valid_int(den, false)) throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    if (!valid_int(num, true)) throw std::invalid_argument("malformed rational: " + std::string(text));
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Rational r;
    r.get_num() = Integer(n, 10);
    r.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(10); }
inline std::string pretty(const Rational& x) { return x.get_str(10); }

}  // namespace burnside

#endif  // BURNSIDE_RATIONAL_HPP
