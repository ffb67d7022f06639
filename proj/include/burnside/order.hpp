#ifndef BURNSIDE_ORDER_HPP
#define BURNSIDE_ORDER_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "matrix.hpp"

namespace burnside {

enum class InfiniteReason { NotQuasiunipotent, NotSemisimple };

inline std::string to_string(InfiniteReason r) {
    return r == InfiniteReason::NotQuasiunipotent ? "NotQuasiunipotent" : "NotSemisimple";
}

inline InfiniteReason parse_infinite_reason(const std::string& s) {
    if (s == "NotQuasiunipotent") return InfiniteReason::NotQuasiunipotent;
    if (s == "NotSemisimple") return InfiniteReason::NotSemisimple;
    throw std::invalid_argument("unknown infinite-order reason: " + s);
}

/// FiniteOrder(k) or InfiniteOrder(reason).
class OrderResult {
   public:
    static OrderResult finite(std::uint64_t k) { return OrderResult(true, k, InfiniteReason::NotSemisimple); }
    static OrderResult infinite(InfiniteReason why) { return OrderResult(false, 0, why); }

    bool is_finite() const noexcept { return finite_; }

    std::uint64_t order() const {
        if (!finite_) throw std::logic_error("order() of an infinite-order result");
        return order_;
    }

    InfiniteReason reason() const {
        if (finite_) throw std::logic_error("reason() of a finite-order result");
        return reason_;
    }

    friend bool operator==(const OrderResult& a, const OrderResult& b) {
        return a.finite_ == b.finite_ && (a.finite_ ? a.order_ == b.order_ : a.reason_ == b.reason_);
    }

    std::string to_string() const {
        return finite_ ? "FiniteOrder(" + std::to_string(order_) + ")"
                       : "InfiniteOrder(" + burnside::to_string(reason_) + ")";
    }

   private:
    OrderResult(bool f, std::uint64_t k, InfiniteReason r) : finite_(f), order_(k), reason_(r) {}

    bool finite_;
    std::uint64_t order_;
    InfiniteReason reason_;
};

/// All d >= 1 with phi(d) <= bound, ascending. Uses phi(d) >= sqrt(d/2).
inline std::vector<unsigned long> root_of_unity_orders(unsigned long bound) {
    std::vector<unsigned long> out;
    const unsigned long limit = 2 * bound * bound + 2;
    for (unsigned long d = 1; d <= limit; ++d)
        if (euler_phi(d) <= bound) out.push_back(d);
    return out;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    const std::uint64_t q = a / g;
    if (q != 0 && b > std::numeric_limits<std::uint64_t>::max() / q) throw std::overflow_error("matrix order overflows 64 bits");
    return q * b;
}

/// Decides which roots of unity occur as roots of a polynomial over Q(zeta_m).
///
/// Candidate orders are D = {d : phi(d) <= n * phi(m)}: an eigenvalue of an
/// n x n matrix over Q(zeta_m) has degree at most n * phi(m) over Q. The
/// cyclotomic polynomials for D are built once and shared by every query.
class OrderTester {
   public:
    struct Profile {
        std::vector<unsigned long> orders;  // d with gcd(q, Phi_d) nontrivial
        long unmatched_degree = 0;          // degree of q after removing all cyclotomic factors
    };

    OrderTester(FieldPtr field, std::size_t dim)
        : field_(std::move(field)), dim_(dim), table_(root_of_unity_orders(dim * field_->degree())) {
        lifted_.reserve(table_.orders().size());
        for (unsigned long d : table_.orders()) lifted_.push_back(lift(table_[d], field_));
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<unsigned long>& candidate_orders() const noexcept { return table_.orders(); }

    /// Splits a nonzero squarefree polynomial into cyclotomic parts.
    Profile profile(const FieldPolynomial& squarefree) const {
        Profile out;
        FieldPolynomial rest = monic(squarefree);
        const auto& orders = table_.orders();
        const unsigned long m = field_->order();
        const unsigned long phi_m = field_->degree();
        for (std::size_t k = 0; k < orders.size() && rest.degree() > 0; ++k) {
            const unsigned long d = orders[k];
            // a primitive d-th root of unity has degree phi(lcm(m, d)) / phi(m) over Q(zeta_m)
            const unsigned long l = m / std::gcd(m, d) * d;
            if (euler_phi(l) / phi_m > static_cast<unsigned long>(rest.degree())) continue;
            FieldPolynomial g = gcd(rest, lifted_[k]);
            if (g.degree() <= 0) continue;
            out.orders.push_back(d);
            rest = rest / g;
        }
        out.unmatched_degree = rest.degree();
        return out;
    }

    bool is_quasiunipotent(const SquareMatrix& a) const {
        check(a);
        FieldPolynomial cp = charpoly(a);
        if (cp[0].is_zero()) throw std::domain_error("quasiunipotency test on a singular matrix");
        return profile(squarefree_part(cp)).unmatched_degree == 0;
    }

    OrderResult finite_order(const SquareMatrix& a) const {
        check(a);
        FieldPolynomial mp = minpoly(a);
        if (mp[0].is_zero()) throw std::domain_error("order of a singular matrix");
        FieldPolynomial q = squarefree_part(mp);
        Profile p = profile(q);
        if (p.unmatched_degree != 0) return OrderResult::infinite(InfiniteReason::NotQuasiunipotent);
        if (q != mp) return OrderResult::infinite(InfiniteReason::NotSemisimple);
        std::uint64_t k = 1;
        for (unsigned long d : p.orders) k = checked_lcm(k, d);
        if (!pow(a, k).is_identity()) throw std::logic_error("order certificate failed: a^k != I");
        return OrderResult::finite(k);
    }

   private:
    void check(const SquareMatrix& a) const {
        if (a.dim() > dim_ || !same_field(a.field(), field_))
            throw std::invalid_argument("matrix outside the order tester's field or dimension bound");
    }

    FieldPtr field_;
    std::size_t dim_;
    CyclotomicTable table_;
    std::vector<FieldPolynomial> lifted_;
};

inline bool is_quasiunipotent(const SquareMatrix& a) { return OrderTester(a.field(), a.dim()).is_quasiunipotent(a); }

inline OrderResult finite_order(const SquareMatrix& a) { return OrderTester(a.field(), a.dim()).finite_order(a); }

}  // namespace burnside

#endif  // BURNSIDE_ORDER_HPP
