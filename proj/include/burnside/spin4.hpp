// The Clifford algebra of (Mat_2, det) as Mat_2^2 + Mat_2^2 iota, and the
// correspondence between SL_2 representations of F_r and point tuples.
#ifndef BURNSIDE_SPIN4_HPP
#define BURNSIDE_SPIN4_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <burnside/matrix.hpp>
#include <burnside/stokes.hpp>
#include <burnside/word.hpp>

namespace burnside {

/// (a, b) when even, (a, b) iota when odd. iota (a, b) = (b, a) iota and
/// iota^2 = (1, 1), so that j(x)^2 = det(x).
struct CliffordElement {
    SquareMatrix a;
    SquareMatrix b;
    bool odd = false;

    static CliffordElement unit(const FieldPtr& f) {
        return {SquareMatrix::identity(f, 2), SquareMatrix::identity(f, 2), false};
    }

    friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
        return x.odd == y.odd && x.a == y.a && x.b == y.b;
    }
};

inline CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) {
    if (!x.odd) return {x.a * y.a, x.b * y.b, y.odd};
    return {x.a * y.b, x.b * y.a, !y.odd};
}

inline CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) { return clifford_mul(x, y); }

inline CliffordElement operator*(const CliffordElement& x, const FieldElement& c) { return {x.a * c, x.b * c, x.odd}; }

/// x -> (x, adj x) iota.
inline CliffordElement j_embed(const SquareMatrix& x) {
    if (x.dim() != 2) throw std::invalid_argument("j_embed expects a 2x2 matrix");
    return {x, adjugate(x), true};
}

/// The parity automorphism: negates odd elements.
inline CliffordElement alpha(const CliffordElement& g) {
    if (!g.odd) return g;
    return {-g.a, -g.b, true};
}

inline CliffordElement inverse(const CliffordElement& g) {
    if (!g.odd) return {inverse(g.a), inverse(g.b), false};
    return {inverse(g.b), inverse(g.a), true};
}

/// v -> alpha(g) j(v) g^-1, read back through j.
inline SquareMatrix pin_action(const CliffordElement& g, const SquareMatrix& v) {
    if (det(g.a).is_zero() || det(g.b).is_zero()) throw std::invalid_argument("pin_action: element is not invertible");
    return (alpha(g) * j_embed(v) * inverse(g)).a;
}

namespace detail {

inline void require_sl2(const SquareMatrix& x, const char* what) {
    if (x.dim() != 2) throw std::invalid_argument(std::string(what) + ": expected 2x2 matrices");
    if (det(x) != FieldElement(x.field(), 1L)) throw std::invalid_argument(std::string(what) + ": determinant is not 1");
}

}  // namespace detail

/// u_0 = 1, u_i = rho(gamma_i)^-1 u_{i-1}.
inline std::vector<SquareMatrix> rep_to_points(const Representation& images, const FieldPtr& field) {
    std::vector<SquareMatrix> u{SquareMatrix::identity(field, 2)};
    for (const auto& g : images) {
        detail::require_sl2(g, "rep_to_points");
        u.push_back(adjugate(g) * u.back());
    }
    return u;
}

inline std::vector<SquareMatrix> rep_to_points(const Representation& images) {
    if (images.empty()) throw std::invalid_argument("rep_to_points: field unknown for an empty tuple");
    return rep_to_points(images, images.front().field());
}

/// rho(gamma_i) = u_{i-1} u_i^-1.
inline Representation points_to_rep(const std::vector<SquareMatrix>& u) {
    for (const auto& x : u) detail::require_sl2(x, "points_to_rep");
    Representation rep;
    for (std::size_t i = 1; i < u.size(); ++i) rep.push_back(u[i - 1] * adjugate(u[i]));
    return rep;
}

/// Entry (i, j) = tr(u_i u_j^-1), the polarized determinant form.
inline SquareMatrix gram_of_sl2_points(const std::vector<SquareMatrix>& u) {
    if (u.empty()) throw std::invalid_argument("gram_of_sl2_points: empty tuple");
    for (const auto& x : u) detail::require_sl2(x, "gram_of_sl2_points");
    SquareMatrix g(u.front().field(), u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) g(i, j) = (u[i] * adjugate(u[j])).trace();
    return g;
}

/// Pairs consecutive letters: d_a d_b -> gamma_{a+1} ... gamma_b when a < b,
/// its inverse reversed otherwise.
inline FreeWord delta_word_rewrite(const CoxWord& w, std::size_t r) {
    const auto& d = w.letters();
    if (d.size() % 2) throw std::invalid_argument("delta_word_rewrite: odd length");
    for (std::size_t x : d)
        if (x > r) throw std::out_of_range("delta index exceeds rank");
    FreeWord out;
    for (std::size_t k = 0; k < d.size(); k += 2) {
        const int a = static_cast<int>(d[k]), b = static_cast<int>(d[k + 1]);
        if (a < b) out *= FreeWord::run(a + 1, b);
        else if (a > b) out *= FreeWord::run(b + 1, a).inverse();
    }
    return out;
}

/// delta_I delta_I for I = {i_1 < ... < i_u} in {0..r}.
inline CoxWord delta_square(const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> twice(subset);
    twice.insert(twice.end(), subset.begin(), subset.end());
    return CoxWord(twice);
}

/// Generators, commutators [g_i, g_j] = g_i g_j g_i^-1 g_j^-1, and the
/// rewrites of delta_I^2, deduplicated up to inversion and sorted.
inline std::vector<FreeWord> burnside_set_gl2(std::size_t r) {
    std::vector<FreeWord> cand;
    for (std::size_t i = 1; i <= r; ++i) cand.push_back(FreeWord::generator(static_cast<int>(i)));
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) {
            const auto gi = FreeWord::generator(static_cast<int>(i)), gj = FreeWord::generator(static_cast<int>(j));
            cand.push_back(gi * gj * gi.inverse() * gj.inverse());
        }
    for (const auto& subset : increasing_subsets(0, r)) cand.push_back(delta_word_rewrite(delta_square(subset), r));

    std::sort(cand.begin(), cand.end());
    std::vector<FreeWord> out;
    for (const auto& w : cand) {
        if (w.empty()) continue;
        if (std::find(out.begin(), out.end(), w) != out.end()) continue;
        if (std::find(out.begin(), out.end(), w.inverse()) != out.end()) continue;
        out.push_back(w);
    }
    return out;
}

}  // namespace burnside

#endif
