#ifndef BURNSIDE_CYCLOTOMIC_HPP
#define BURNSIDE_CYCLOTOMIC_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace burnside {

using RationalPolynomial = Polynomial<Rational>;

inline unsigned long euler_phi(unsigned long d) {
    if (d == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned long result = d;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

inline std::vector<unsigned long> divisors(unsigned long d) {
    std::vector<unsigned long> small, large;
    for (unsigned long k = 1; k * k <= d; ++k) {
        if (d % k) continue;
        small.push_back(k);
        if (k * k != d) large.push_back(d / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// x^d - 1 over Q.
inline RationalPolynomial x_pow_minus_one(unsigned long d) {
    RationalPolynomial p = RationalPolynomial::monomial(Rational(1), d);
    return p - RationalPolynomial::constant(Rational(1));
}

/// Cyclotomic polynomials for a divisor-closed set of orders. Each Phi_d is
/// obtained by exact division of x^d - 1 by the product of Phi_e over the
/// proper divisors e of d.
class CyclotomicTable {
   public:
    explicit CyclotomicTable(std::vector<unsigned long> orders) : orders_(std::move(orders)) {
        std::sort(orders_.begin(), orders_.end());
        orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
        polys_.reserve(orders_.size());
        for (unsigned long d : orders_) {
            RationalPolynomial denom = RationalPolynomial::constant(Rational(1));
            for (unsigned long e : divisors(d))
                if (e < d) denom *= (*this)[e];
            auto [q, r] = divmod(x_pow_minus_one(d), denom);
            if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
            polys_.push_back(std::move(q));
        }
    }

    const std::vector<unsigned long>& orders() const noexcept { return orders_; }

    const RationalPolynomial& operator[](unsigned long d) const {
        auto it = std::lower_bound(orders_.begin(), orders_.end(), d);
        if (it == orders_.end() || *it != d || static_cast<std::size_t>(it - orders_.begin()) >= polys_.size())
            throw std::out_of_range("cyclotomic order not in table (set must be divisor-closed)");
        return polys_[static_cast<std::size_t>(it - orders_.begin())];
    }

   private:
    std::vector<unsigned long> orders_;
    std::vector<RationalPolynomial> polys_;
};

inline RationalPolynomial cyclotomic_poly(unsigned long d) {
    if (d == 0) throw std::invalid_argument("cyclotomic_poly(0)");
    return CyclotomicTable(divisors(d))[d];
}

/// Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1) modulo Phi_m.
class CyclotomicField {
   public:
    explicit CyclotomicField(unsigned long m) : m_(m) {
        if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
        modulus_ = cyclotomic_poly(m);
        degree_ = static_cast<std::size_t>(modulus_.degree());
        // x^j mod Phi_m for j < m
        powers_.reserve(m);
        RationalPolynomial x = RationalPolynomial::monomial(Rational(1), 1);
        RationalPolynomial cur = RationalPolynomial::constant(Rational(1)) % modulus_;
        for (unsigned long j = 0; j < m; ++j) {
            powers_.push_back(dense(cur));
            cur = (cur * x) % modulus_;
        }
    }

    unsigned long order() const noexcept { return m_; }
    std::size_t degree() const noexcept { return degree_; }
    const RationalPolynomial& modulus() const noexcept { return modulus_; }

    /// Coefficients of zeta^j (j taken mod m) in the power basis.
    const std::vector<Rational>& power(long j) const {
        const long m = static_cast<long>(m_);
        return powers_[static_cast<std::size_t>(((j % m) + m) % m)];
    }

    /// Reduce an arbitrary coefficient sequence sum c_k zeta^k into the basis.
    std::vector<Rational> reduce(const std::vector<Rational>& c) const {
        std::vector<Rational> out(degree_);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (sgn(c[k]) == 0) continue;
            if (k < degree_) {
                out[k] += c[k];
                continue;
            }
            const auto& p = power(static_cast<long>(k));
            for (std::size_t i = 0; i < degree_; ++i)
                if (sgn(p[i]) != 0) out[i] += c[k] * p[i];
        }
        return out;
    }

    friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) { return a.m_ == b.m_; }

   private:
    std::vector<Rational> dense(const RationalPolynomial& p) const {
        std::vector<Rational> v(degree_);
        for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i];
        return v;
    }

    unsigned long m_;
    std::size_t degree_ = 0;
    RationalPolynomial modulus_;
    std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

inline FieldPtr make_field(unsigned long m) { return std::make_shared<const CyclotomicField>(m); }

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && a->order() == b->order());
}

/// Element of Q(zeta_m), immutable by convention; arithmetic returns new values.
class FieldElement {
   public:
    /// Zero of the field.
    explicit FieldElement(FieldPtr field) : field_(std::move(field)), c_(field_->degree()) {}

    FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field)) { c_[0] = value; }

    FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), Rational(value)) {}

    /// sum coeffs[k] zeta^k for any length; reduced modulo Phi_m.
    FieldElement(FieldPtr field, const std::vector<Rational>& coeffs)
        : field_(std::move(field)), c_(field_->reduce(coeffs)) {}

    static FieldElement zeta(const FieldPtr& field, long power = 1) {
        FieldElement z(field);
        z.c_ = field->power(power);
        return z;
    }

    const FieldPtr& field() const noexcept { return field_; }
    unsigned long order() const noexcept { return field_->order(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }

    const Rational& rational_part() const { return c_[0]; }

    FieldElement operator-() const {
        FieldElement r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    FieldElement& operator+=(const FieldElement& b) {
        check(b);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
        return *this;
    }

    FieldElement& operator-=(const FieldElement& b) {
        check(b);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
        return *this;
    }

    FieldElement& operator*=(const FieldElement& b) {
        check(b);
        const std::size_t d = c_.size();
        if (d == 1) {
            c_[0] *= b.c_[0];
            return *this;
        }
        std::vector<Rational> prod(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(c_[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(b.c_[j]) != 0) prod[i + j] += c_[i] * b.c_[j];
        }
        c_ = field_->reduce(prod);
        return *this;
    }

    FieldElement& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    FieldElement& operator/=(const FieldElement& b) { return *this *= b.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
    friend FieldElement operator*(FieldElement a, long s) { return a *= Rational(s); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return same_field(a.field_, b.field_) && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Multiplicative inverse via extended Euclid against Phi_m.
    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero field element");
        if (c_.size() == 1) return FieldElement(field_, Rational(1 / c_[0]));
        auto [g, s, t] = extended_gcd(RationalPolynomial(c_), field_->modulus());
        if (g.degree() != 0) throw std::logic_error("cyclotomic modulus not irreducible");
        return FieldElement(field_, s.coeffs());
    }

    /// The automorphism zeta -> zeta^-1 (complex conjugation in the canonical embedding).
    FieldElement conj() const {
        std::vector<Rational> out(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (sgn(c_[k]) == 0) continue;
            const auto& p = field_->power(-static_cast<long>(k));
            for (std::size_t i = 0; i < out.size(); ++i)
                if (sgn(p[i]) != 0) out[i] += c_[k] * p[i];
        }
        FieldElement r(field_);
        r.c_ = std::move(out);
        return r;
    }

   private:
    void check(const FieldElement& b) const {
        if (!same_field(field_, b.field_)) throw std::invalid_argument("field elements from different cyclotomic fields");
    }

    FieldPtr field_;
    std::vector<Rational> c_;
};

inline FieldElement zero_like(const FieldElement& x) { return FieldElement(x.field()); }
inline FieldElement one_like(const FieldElement& x) { return FieldElement(x.field(), 1L); }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

/// Space-separated coefficient string "c_0 c_1 ... c_{phi(m)-1}".
inline std::string to_string(const FieldElement& x) {
    std::string out;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) out += ' ';
        out += to_string(x.coeffs()[i]);
    }
    return out;
}

/// Inverse of to_string; also accepts commas and shorter or longer sequences
/// (interpreted as sum c_k zeta^k and reduced).
inline FieldElement parse_field_element(const FieldPtr& field, const std::string& text) {
    std::string cleaned = text;
    for (auto& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream is(cleaned);
    std::vector<Rational> coeffs;
    for (std::string tok; is >> tok;) coeffs.push_back(parse_rational(tok));
    if (coeffs.empty()) throw std::invalid_argument("empty field element");
    return FieldElement(field, coeffs);
}

/// Human-oriented rendering, e.g. "1/2 + z - 3*z^2" (z = zeta_m).
inline std::string pretty(const FieldElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    const auto& c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        Rational mag = abs(c[k]);
        if (out.empty()) {
            if (sgn(c[k]) < 0) out += "-";
        } else {
            out += sgn(c[k]) < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (k == 0 || !unit) out += to_string(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

using FieldPolynomial = Polynomial<FieldElement>;

/// Maps a rational polynomial into K[x].
inline FieldPolynomial lift(const RationalPolynomial& p, const FieldPtr& field) {
    std::vector<FieldElement> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.emplace_back(field, c);
    return FieldPolynomial(std::move(v));
}

}  // namespace burnside

#endif  // BURNSIDE_CYCLOTOMIC_HPP
