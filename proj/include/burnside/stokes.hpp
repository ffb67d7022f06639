// Stokes matrices, their associated representations and the finiteness test
// over the increasing subwords gamma_I.
#ifndef BURNSIDE_STOKES_HPP
#define BURNSIDE_STOKES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <burnside/matrix.hpp>
#include <burnside/order.hpp>
#include <burnside/parallel.hpp>
#include <burnside/realsign.hpp>
#include <burnside/verdict.hpp>
#include <burnside/word.hpp>

namespace burnside {

using Representation = std::vector<SquareMatrix>;

/// Upper triangular unipotent r x r matrix; only x_ij for i < j is stored.
class StokesMatrix {
   public:
    StokesMatrix(FieldPtr field, std::size_t r) : field_(std::move(field)), r_(r), s_(SquareMatrix::identity(field_, r)) {}

    /// Entries given as (i, j, value) with 1 <= i < j <= r.
    StokesMatrix(FieldPtr field, std::size_t r, const std::vector<std::tuple<std::size_t, std::size_t, FieldElement>>& upper)
        : StokesMatrix(std::move(field), r) {
        for (const auto& [i, j, v] : upper) set(i, j, v);
    }

    /// Every x_ij equal to the same value.
    static StokesMatrix constant(const FieldPtr& field, std::size_t r, const FieldElement& v) {
        StokesMatrix s(field, r);
        for (std::size_t i = 1; i <= r; ++i)
            for (std::size_t j = i + 1; j <= r; ++j) s.set(i, j, v);
        return s;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rank() const noexcept { return r_; }

    const FieldElement& x(std::size_t i, std::size_t j) const {
        check_pair(i, j);
        return s_(i - 1, j - 1);
    }

    void set(std::size_t i, std::size_t j, const FieldElement& v) {
        check_pair(i, j);
        if (!same_field(v.field(), field_)) throw std::invalid_argument("Stokes entry from another field");
        s_(i - 1, j - 1) = v;
    }

    const SquareMatrix& matrix() const noexcept { return s_; }

   private:
    void check_pair(std::size_t i, std::size_t j) const {
        if (i < 1 || j > r_ || i >= j) throw std::out_of_range("Stokes entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the strict upper triangle");
    }

    FieldPtr field_;
    std::size_t r_;
    SquareMatrix s_;
};

inline SquareMatrix gram(const StokesMatrix& s) { return s.matrix() + s.matrix().transpose(); }

/// gamma_i -> 1 - E_i (s + s^T).
inline Representation associated_rep(const StokesMatrix& s) {
    const SquareMatrix g = gram(s);
    const std::size_t r = s.rank();
    Representation rep;
    rep.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        SquareMatrix a = SquareMatrix::identity(s.field(), r);
        for (std::size_t j = 0; j < r; ++j) a(i, j) -= g(i, j);
        rep.push_back(std::move(a));
    }
    return rep;
}

inline SquareMatrix subword_rep(const Representation& rep, const SubsetIndex& subset) {
    if (subset.empty()) throw std::invalid_argument("subword of an empty index set");
    SquareMatrix p = rep.at(subset[0] - 1);
    for (std::size_t k = 1; k < subset.size(); ++k) p *= rep.at(subset[k] - 1);
    return p;
}

inline SquareMatrix subword_rep(const StokesMatrix& s, const SubsetIndex& subset) {
    if (!subset.empty() && subset.members().back() > s.rank()) throw std::out_of_range("subset index exceeds Stokes rank");
    return subword_rep(associated_rep(s), subset);
}

/// rho_s(gamma_1 ... gamma_r).
inline SquareMatrix coxeter_element(const StokesMatrix& s) { return subword_rep(s, SubsetIndex::full(s.rank())); }

/// The word gamma_I as a free word.
inline FreeWord subset_word(const SubsetIndex& subset) {
    std::vector<int> letters;
    for (std::size_t i : subset.members()) letters.push_back(static_cast<int>(i));
    return FreeWord(letters);
}

/// (charpoly of rho_s(gamma_I), (lambda - 1)^(r - |I|) charpoly(-s_I^-1 s_I^T)).
inline std::pair<FieldPolynomial, FieldPolynomial> subword_charpoly_identity(const StokesMatrix& s, const SubsetIndex& subset) {
    const FieldPtr& f = s.field();
    FieldPolynomial lhs = charpoly(subword_rep(s, subset));
    const SquareMatrix si = principal_submatrix(s.matrix(), subset);
    FieldPolynomial rhs = charpoly(-(inverse(si) * si.transpose()));
    const FieldPolynomial shift({FieldElement(f, -1L), FieldElement(f, 1L)});
    for (std::size_t k = subset.size(); k < s.rank(); ++k) rhs *= shift;
    return {lhs, rhs};
}

struct RadicalData {
    /// Basis of the kernel of s + s^T; every vector is fixed by rho_s.
    std::vector<Vector> radical;
    /// Standard basis indices (0-based) chosen to complete the radical.
    std::vector<std::size_t> complement;
    /// rho_s on the quotient by the radical, in the complement basis.
    Representation induced;
    /// The pairing s + s^T on the quotient, nondegenerate.
    SquareMatrix induced_gram;
};

inline RadicalData radical_and_induced(const StokesMatrix& s) {
    const FieldPtr& f = s.field();
    const std::size_t r = s.rank();
    const SquareMatrix g = gram(s);
    RadicalData out{kernel_basis(g), {}, {}, SquareMatrix(f, 0)};

    std::vector<Vector> basis = out.radical;
    for (std::size_t e = 0; e < r && basis.size() < r; ++e) {
        Vector v(r, FieldElement(f));
        v[e] = FieldElement(f, 1L);
        basis.push_back(v);
        if (rank(basis) == basis.size()) out.complement.push_back(e);
        else basis.pop_back();
    }

    // Columns of p are the adapted basis; p^-1 rho p = [[1, *], [0, induced]].
    SquareMatrix p(f, r);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 0; i < r; ++i) p(i, c) = basis[c][i];
    const SquareMatrix pinv = inverse(p);
    const std::size_t k = out.radical.size(), w = out.complement.size();
    for (const auto& a : associated_rep(s)) {
        const SquareMatrix b = pinv * a * p;
        SquareMatrix y(f, w);
        for (std::size_t i = 0; i < w; ++i)
            for (std::size_t j = 0; j < w; ++j) y(i, j) = b(k + i, k + j);
        out.induced.push_back(std::move(y));
    }
    out.induced_gram = SquareMatrix(f, w);
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) out.induced_gram(i, j) = g(out.complement[i], out.complement[j]);
    return out;
}

/// Positive semidefiniteness by signs of all principal minors, evaluated in
/// the embedding zeta_m -> exp(2 pi i / m).
inline bool is_psd(const SquareMatrix& g, unsigned threads = 1) {
    if (!g.is_symmetric()) throw std::invalid_argument("is_psd: matrix is not symmetric");
    for (const auto& x : g.entries())
        if (x.conj() != x) throw std::invalid_argument("is_psd: entry not fixed by complex conjugation");
    const auto subsets = nonempty_subsets(g.dim());
    return !first_index(subsets.size(), threads, [&](std::size_t k) {
                return real_sign(det(principal_submatrix(g, subsets[k]))) < 0;
            }).has_value();
}

struct StokesOptions {
    std::size_t rank_cap = 16;
    unsigned threads = 1;
};

/// Checks finite_order on rho_s(gamma_I) for every nonempty I, ordered by
/// size then lexicographically.
inline Verdict semisimplification_finite(const StokesMatrix& s, const StokesOptions& opt = {}) {
    if (s.rank() > opt.rank_cap)
        throw std::invalid_argument("Stokes rank " + std::to_string(s.rank()) + " exceeds cap " + std::to_string(opt.rank_cap));
    const auto rep = associated_rep(s);
    const auto subsets = nonempty_subsets(s.rank());
    const OrderTester tester(s.field(), s.rank());
    std::vector<std::optional<OrderResult>> results(subsets.size());
    const auto bad = first_index(subsets.size(), opt.threads, [&](std::size_t k) {
        results[k] = tester.finite_order(subword_rep(rep, subsets[k]));
        return !results[k]->is_finite();
    });
    if (bad) {
        const OrderResult& res = *results[*bad];
        InfiniteVerdict v;
        v.witness = subset_word(subsets[*bad]);
        v.reason = res.reason();
        v.semisimplification_caveat = res.reason() == InfiniteReason::NotSemisimple;
        return v;
    }
    FiniteVerdict v;
    for (std::size_t k = 0; k < subsets.size(); ++k) v.word_orders.emplace_back(subset_word(subsets[k]), results[k]->order());
    return v;
}

}  // namespace burnside

#endif
