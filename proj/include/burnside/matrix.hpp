#ifndef BURNSIDE_MATRIX_HPP
#define BURNSIDE_MATRIX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"

namespace burnside {

using Vector = std::vector<FieldElement>;

/// Nonempty-or-empty strictly increasing set of 1-based indices I of [r].
class SubsetIndex {
   public:
    SubsetIndex() = default;
    explicit SubsetIndex(std::vector<std::size_t> members) : members_(std::move(members)) {
        for (std::size_t k = 0; k < members_.size(); ++k) {
            if (members_[k] == 0) throw std::invalid_argument("subset indices are 1-based");
            if (k && members_[k] <= members_[k - 1]) throw std::invalid_argument("subset indices must increase strictly");
        }
    }

    static SubsetIndex full(std::size_t r) {
        std::vector<std::size_t> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = i + 1;
        return SubsetIndex(std::move(v));
    }

    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::size_t operator[](std::size_t k) const { return members_.at(k); }

    friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t k = 0; k < members_.size(); ++k) s += (k ? "," : "") + std::to_string(members_[k]);
        return s + "}";
    }

   private:
    std::vector<std::size_t> members_;
};

/// All nonempty strictly increasing subsets of {lo, ..., hi}, ordered by size
/// and then lexicographically.
inline std::vector<std::vector<std::size_t>> increasing_subsets(std::size_t lo, std::size_t hi) {
    std::vector<std::vector<std::size_t>> out;
    if (hi < lo) return out;
    const std::size_t count = hi - lo + 1;
    for (std::size_t size = 1; size <= count; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t k = 0; k < size; ++k) pick[k] = k;
        while (true) {
            std::vector<std::size_t> s(size);
            for (std::size_t k = 0; k < size; ++k) s[k] = lo + pick[k];
            out.push_back(std::move(s));
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == count - size + (k - 1)) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t t = k; t < size; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    return out;
}

/// Nonempty subsets of [r] in enumeration order (size, then lexicographic).
inline std::vector<SubsetIndex> nonempty_subsets(std::size_t r) {
    std::vector<SubsetIndex> out;
    for (auto& s : increasing_subsets(1, r)) out.emplace_back(std::move(s));
    return out;
}

/// Dense n x n matrix over a cyclotomic field, row-major.
class SquareMatrix {
   public:
    SquareMatrix(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), a_(n * n, FieldElement(field_)) {}

    SquareMatrix(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows)
        : SquareMatrix(std::move(field), rows.size()) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != n_) throw std::invalid_argument("matrix rows must form a square");
            for (std::size_t j = 0; j < n_; ++j) {
                if (!same_field(rows[i][j].field(), field_))
                    throw std::invalid_argument("matrix entries from different fields");
                a_[i * n_ + j] = rows[i][j];
            }
        }
    }

    static SquareMatrix identity(const FieldPtr& field, std::size_t n) {
        SquareMatrix m(field, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(field, 1L);
        return m;
    }

    static SquareMatrix from_rationals(const FieldPtr& field, std::initializer_list<std::initializer_list<Rational>> rows) {
        SquareMatrix m(field, rows.size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.n_) throw std::invalid_argument("matrix rows must form a square");
            std::size_t j = 0;
            for (const auto& x : row) m(i, j++) = FieldElement(field, x);
            ++i;
        }
        return m;
    }

    static SquareMatrix diagonal(const FieldPtr& field, const Vector& d) {
        SquareMatrix m(field, d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }

    const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    Vector row(std::size_t i) const { return Vector(a_.begin() + i * n_, a_.begin() + (i + 1) * n_); }

    Vector column(std::size_t j) const {
        Vector v;
        v.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    /// Row-major entries.
    const std::vector<FieldElement>& entries() const noexcept { return a_; }

    SquareMatrix& operator+=(const SquareMatrix& b) {
        check(b);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
        return *this;
    }

    SquareMatrix& operator-=(const SquareMatrix& b) {
        check(b);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
        return *this;
    }

    SquareMatrix& operator*=(const FieldElement& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, const FieldElement& s) { return a *= s; }
    friend SquareMatrix operator*(const FieldElement& s, SquareMatrix a) { return a *= s; }

    SquareMatrix operator-() const {
        SquareMatrix r(*this);
        for (auto& x : r.a_) x = -x;
        return r;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.check(b);
        const std::size_t n = a.n_;
        SquareMatrix c(a.field_, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const FieldElement& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const FieldElement& y = b(k, j);
                    if (!y.is_zero()) c(i, j) += x * y;
                }
            }
        return c;
    }

    SquareMatrix& operator*=(const SquareMatrix& b) { return *this = *this * b; }

    Vector operator*(const Vector& v) const {
        if (v.size() != n_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
        Vector out(n_, FieldElement(field_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && same_field(a.field_, b.field_) && a.a_ == b.a_;
    }
    friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

    SquareMatrix transpose() const {
        SquareMatrix t(field_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    FieldElement trace() const {
        FieldElement t(field_);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const auto& x = (*this)(i, j);
                if (i == j ? !(x.is_rational() && x.rational_part() == 1) : !x.is_zero()) return false;
            }
        return true;
    }

    bool is_symmetric() const { return *this == transpose(); }

    /// Canonical serialization; equal matrices have equal keys.
    std::string key() const {
        std::string k = std::to_string(n_) + ":" + std::to_string(field_->order());
        for (const auto& x : a_) {
            k += '|';
            k += to_string(x);
        }
        return k;
    }

   private:
    void check(const SquareMatrix& b) const {
        if (n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
        if (!same_field(field_, b.field_)) throw std::invalid_argument("matrices over different fields");
    }

    FieldPtr field_;
    std::size_t n_;
    std::vector<FieldElement> a_;
};

inline SquareMatrix pow(SquareMatrix base, std::uint64_t e) {
    SquareMatrix acc = SquareMatrix::identity(base.field(), base.dim());
    while (e) {
        if (e & 1U) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

/// u v^T
inline SquareMatrix outer(const FieldPtr& field, const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("outer product dimension mismatch");
    SquareMatrix m(field, u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

inline FieldElement dot(const Vector& u, const Vector& v) {
    if (u.size() != v.size() || u.empty()) throw std::invalid_argument("dot product dimension mismatch");
    FieldElement s(u[0].field());
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

namespace detail {

// Reduces rows in place to reduced row echelon form, pivoting only in the
// first `cols` columns; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const FieldElement inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const FieldElement f = rows[i][c];
            for (std::size_t j = c; j < rows[r].size(); ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::vector<Vector> rows_of(const SquareMatrix& a) {
    std::vector<Vector> rows;
    rows.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.row(i));
    return rows;
}

}  // namespace detail

inline FieldElement det(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> m = detail::rows_of(a);
    FieldElement d(a.field(), 1L);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return FieldElement(a.field());
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        const FieldElement inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const FieldElement f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

inline std::size_t rank(const SquareMatrix& a) {
    auto rows = detail::rows_of(a);
    return detail::rref(rows, a.dim()).size();
}

/// Rank of a list of vectors of equal length.
inline std::size_t rank(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    auto rows = vectors;
    return detail::rref(rows, rows[0].size()).size();
}

inline SquareMatrix inverse(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = a.row(i);
        for (std::size_t j = 0; j < n; ++j) r.emplace_back(a.field(), i == j ? 1L : 0L);
        aug.push_back(std::move(r));
    }
    auto pivots = detail::rref(aug, n);
    if (pivots.size() != n) throw std::domain_error("inverse of singular matrix");
    SquareMatrix inv(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
    return inv;
}

/// Principal submatrix a_I with 1-based I.
inline SquareMatrix principal_submatrix(const SquareMatrix& a, const SubsetIndex& subset) {
    const auto& idx = subset.members();
    for (std::size_t i : idx)
        if (i > a.dim()) throw std::out_of_range("subset index exceeds matrix dimension");
    SquareMatrix s(a.field(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = a(idx[i] - 1, idx[j] - 1);
    return s;
}

/// Classical adjugate: a * adj(a) = det(a) * I.
inline SquareMatrix adjugate(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    const FieldPtr& f = a.field();
    SquareMatrix adj(f, n);
    if (n == 1) {
        adj(0, 0) = FieldElement(f, 1L);
        return adj;
    }
    if (n == 2) {
        adj(0, 0) = a(1, 1);
        adj(0, 1) = -a(0, 1);
        adj(1, 0) = -a(1, 0);
        adj(1, 1) = a(0, 0);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // cofactor C_ji goes to adj(i, j)
            SquareMatrix minor(f, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = a(r, c);
                }
                ++rr;
            }
            FieldElement d = det(minor);
            adj(i, j) = (i + j) % 2 ? -d : d;
        }
    return adj;
}

/// det(lambda - a) via Faddeev-LeVerrier (exact in characteristic zero).
inline FieldPolynomial charpoly(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    const FieldPtr& f = a.field();
    std::vector<FieldElement> c(n + 1, FieldElement(f));
    c[n] = FieldElement(f, 1L);
    SquareMatrix m(f, n);
    const SquareMatrix id = SquareMatrix::identity(f, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + id * c[n - k + 1];
        c[n - k] = -(a * m).trace() * Rational(1, static_cast<unsigned long>(k));
    }
    return FieldPolynomial(std::move(c));
}

/// p(a) by Horner's rule.
inline SquareMatrix evaluate(const FieldPolynomial& p, const SquareMatrix& a) {
    SquareMatrix acc(a.field(), a.dim());
    const SquareMatrix id = SquareMatrix::identity(a.field(), a.dim());
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * a + id * p[k];
    return acc;
}

/// Monic minimal polynomial from the first linear dependence among I, a, a^2, ...
inline FieldPolynomial minpoly(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    const FieldPtr& f = a.field();
    struct Row {
        Vector entries;
        Vector combo;  // coefficients on I, a, a^2, ...
        std::size_t pivot;
    };
    std::vector<Row> basis;
    SquareMatrix power = SquareMatrix::identity(f, n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vector e = power.entries();
        Vector combo(k + 1, FieldElement(f));
        combo[k] = FieldElement(f, 1L);
        for (const auto& b : basis) {
            if (e[b.pivot].is_zero()) continue;
            const FieldElement factor = e[b.pivot];
            for (std::size_t j = 0; j < e.size(); ++j)
                if (!b.entries[j].is_zero()) e[j] -= factor * b.entries[j];
            for (std::size_t j = 0; j < b.combo.size(); ++j)
                if (!b.combo[j].is_zero()) combo[j] -= factor * b.combo[j];
        }
        auto nz = std::find_if(e.begin(), e.end(), [](const FieldElement& x) { return !x.is_zero(); });
        if (nz == e.end()) return monic(FieldPolynomial(std::move(combo)));
        const std::size_t pivot = static_cast<std::size_t>(nz - e.begin());
        const FieldElement inv = e[pivot].inverse();
        for (auto& x : e) x *= inv;
        for (auto& x : combo) x *= inv;
        for (auto& b : basis) {
            if (b.entries[pivot].is_zero()) continue;
            const FieldElement factor = b.entries[pivot];
            for (std::size_t j = 0; j < e.size(); ++j)
                if (!e[j].is_zero()) b.entries[j] -= factor * e[j];
            b.combo.resize(combo.size(), FieldElement(f));
            for (std::size_t j = 0; j < combo.size(); ++j)
                if (!combo[j].is_zero()) b.combo[j] -= factor * combo[j];
        }
        basis.push_back({std::move(e), std::move(combo), pivot});
        power *= a;
    }
    throw std::logic_error("minimal polynomial search exceeded dimension");
}

/// Exact null-space basis (column vectors x with a x = 0), one vector per free column.
inline std::vector<Vector> kernel_basis(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    auto rows = detail::rows_of(a);
    auto pivots = detail::rref(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, FieldElement(a.field()));
        v[free] = FieldElement(a.field(), 1L);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace burnside

#endif  // BURNSIDE_MATRIX_HPP
