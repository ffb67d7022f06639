#ifndef BURNSIDE_POLYNOMIAL_HPP
#define BURNSIDE_POLYNOMIAL_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace burnside {

namespace detail {
template <class K>
bool coeff_is_zero(const K& x) {
    return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field K, lowest degree first.
///
/// K must provide the field operations, equality, `zero_like`, `one_like`,
/// `is_zero` (found by ADL) and multiplication by `long`. The zero polynomial
/// is the empty coefficient sequence; otherwise the leading coefficient is
/// nonzero.
template <class K>
class Polynomial {
   public:
    using value_type = K;

    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}); }

    /// c * x^degree
    static Polynomial monomial(const K& c, std::size_t degree) {
        std::vector<K> v(degree + 1, zero_like(c));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// x - root
    static Polynomial linear_root(const K& root) {
        return Polynomial(std::vector<K>{K(-root), one_like(root)});
    }

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<K>& coeffs() const noexcept { return c_; }
    const K& operator[](std::size_t i) const { return c_.at(i); }

    const K& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == one_like(c_.back()); }

    Polynomial operator-() const {
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.emplace_back(-x);
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), zero_like(rhs.c_.back()));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), zero_like(rhs.c_.back()));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const K& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
    friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += K(a.c_[i] * b.c_[j]);
        }
        return Polynomial(std::move(v));
    }

    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

   private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<K>{}, a};
    std::vector<K> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const K lead_inv = K(one_like(bc.back()) / bc.back());
    const std::size_t db = bc.size() - 1;
    std::vector<K> quo(rem.size() - db, zero_like(bc.back()));
    for (std::size_t k = rem.size(); k-- > db;) {
        if (is_zero(rem[k])) continue;
        K f = K(rem[k] * lead_inv);
        const std::size_t shift = k - db;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= K(f * bc[j]);
        quo[shift] = std::move(f);
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
    return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

template <class K>
Polynomial<K> operator/(const Polynomial<K>& a, const Polynomial<K>& b) { return divmod(a, b).first; }

template <class K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) { return divmod(a, b).second; }

template <class K>
bool divides(const Polynomial<K>& d, const Polynomial<K>& p) {
    if (d.is_zero()) return p.is_zero();
    return (p % d).is_zero();
}

template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
    if (p.is_zero()) return p;
    const K inv = K(one_like(p.leading()) / p.leading());
    return p * inv;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        Polynomial<K> r = a % b;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic gcd. Requires (a, b) != (0, 0).
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> extended_gcd(const Polynomial<K>& a,
                                                                     const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("extended_gcd(0, 0)");
    const K one = one_like(a.is_zero() ? b.leading() : a.leading());
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0 = Polynomial<K>::constant(one), s1;
    Polynomial<K> t0, t1 = Polynomial<K>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const K inv = K(one / r0.leading());
    return {r0 * inv, s0 * inv, t0 * inv};
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p) {
    if (p.size() <= 1) return {};
    std::vector<K> v;
    v.reserve(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) v.emplace_back(p[k] * static_cast<long>(k));
    return Polynomial<K>(std::move(v));
}

/// p / gcd(p, p'), monic. Same roots as p, each simple (characteristic zero).
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    return monic(p / gcd(p, derivative(p)));
}

template <class K>
bool is_squarefree(const Polynomial<K>& p) {
    return gcd(p, derivative(p)).degree() == 0;
}

template <class K>
K evaluate(const Polynomial<K>& p, const K& x) {
    if (p.is_zero()) return zero_like(x);
    K acc = p.leading();
    for (std::size_t k = p.size() - 1; k-- > 0;) acc = K(acc * x + p[k]);
    return acc;
}

template <class K>
Polynomial<K> pow(Polynomial<K> base, unsigned long e) {
    if (base.is_zero()) {
        if (e == 0) throw std::domain_error("0^0");
        return base;
    }
    Polynomial<K> acc = Polynomial<K>::constant(one_like(base.leading()));
    while (e) {
        if (e & 1UL) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

template <class K>
std::string to_string(const Polynomial<K>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (is_zero(p[k])) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = p[k] == one_like(p[k]);
        if (k == 0 || !unit) os << "(" << pretty(p[k]) << ")";
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace burnside

#endif  // BURNSIDE_POLYNOMIAL_HPP
