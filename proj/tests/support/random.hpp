// Seeded generators for property tests.
#ifndef BURNSIDE_TESTS_RANDOM_HPP
#define BURNSIDE_TESTS_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <burnside/matrix.hpp>
#include <burnside/stokes.hpp>

namespace burnside::testing {

using Rng = std::mt19937_64;

/// Rational p/q with |p| <= height, 1 <= q <= height.
inline Rational random_rational(Rng& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    Rational r(num(rng), static_cast<unsigned long>(den(rng)));
    r.canonicalize();
    return r;
}

inline long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline FieldElement random_element(Rng& rng, const FieldPtr& field, long height) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < field->degree(); ++i) c.push_back(random_rational(rng, height));
    return FieldElement(field, c);
}

inline FieldElement random_nonzero_element(Rng& rng, const FieldPtr& field, long height) {
    while (true) {
        FieldElement x = random_element(rng, field, height);
        if (!x.is_zero()) return x;
    }
}

inline SquareMatrix random_matrix(Rng& rng, const FieldPtr& field, std::size_t n, long height) {
    SquareMatrix m(field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(rng, field, height);
    return m;
}

/// Integer entries in [-height, height] for the rational part only.
inline SquareMatrix random_integer_matrix(Rng& rng, const FieldPtr& field, std::size_t n, long height) {
    SquareMatrix m(field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = FieldElement(field, random_int(rng, -height, height));
    return m;
}

inline SquareMatrix random_invertible(Rng& rng, const FieldPtr& field, std::size_t n, long height) {
    while (true) {
        SquareMatrix m = random_integer_matrix(rng, field, n, height);
        if (!det(m).is_zero()) return m;
    }
}

/// Stokes matrix with rational x_ij of height <= height.
inline StokesMatrix random_stokes(Rng& rng, const FieldPtr& field, std::size_t r, long height) {
    StokesMatrix s(field, r);
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) s.set(i, j, FieldElement(field, random_rational(rng, height)));
    return s;
}

/// Product of elementary unipotents and a diagonal torus element; det = 1.
inline SquareMatrix random_sl2(Rng& rng, const FieldPtr& field, long height) {
    const FieldElement one(field, 1L), zero(field);
    SquareMatrix a = SquareMatrix::identity(field, 2);
    for (int k = 0; k < 2; ++k) {
        a *= SquareMatrix(field, {{one, random_element(rng, field, height)}, {zero, one}});
        a *= SquareMatrix(field, {{one, zero}, {random_element(rng, field, height), one}});
    }
    const FieldElement t = random_nonzero_element(rng, field, height);
    return a * SquareMatrix(field, {{t, zero}, {zero, t.inverse()}});
}

/// Rational point of the unit sphere by inverse stereographic projection.
inline Vector random_unit_vector(Rng& rng, const FieldPtr& field, std::size_t n, long height) {
    std::vector<Rational> t(n - 1);
    Rational norm = 0;
    for (auto& x : t) {
        x = random_rational(rng, height);
        norm += x * x;
    }
    const Rational denom = norm + 1;
    Vector u;
    for (const auto& x : t) u.emplace_back(field, Rational(2 * x / denom));
    u.emplace_back(field, Rational((norm - 1) / denom));
    return u;
}

/// Random signed permutation matrix, an element of O(n) over Q.
inline SquareMatrix random_signed_permutation(Rng& rng, const FieldPtr& field, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    SquareMatrix p(field, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = FieldElement(field, random_int(rng, 0, 1) ? 1L : -1L);
    return p;
}

}  // namespace burnside::testing

#endif
