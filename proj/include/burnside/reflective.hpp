// Reflective representations gamma_i -> (v -> v - 2 (v, u_i) u_i).
#ifndef BURNSIDE_REFLECTIVE_HPP
#define BURNSIDE_REFLECTIVE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <burnside/matrix.hpp>
#include <burnside/stokes.hpp>
#include <burnside/verdict.hpp>
#include <burnside/word.hpp>

namespace burnside {

/// Vectors u_1..u_r in the algebraic unit sphere sum_k u_k^2 = 1 of K^n.
class VectorTuple {
   public:
    VectorTuple(FieldPtr field, std::size_t n, std::vector<Vector> vectors)
        : field_(std::move(field)), n_(n), u_(std::move(vectors)) {
        const FieldElement one(field_, 1L);
        for (std::size_t i = 0; i < u_.size(); ++i) {
            if (u_[i].size() != n_) throw std::invalid_argument("vector " + std::to_string(i + 1) + " has wrong length");
            for (const auto& x : u_[i])
                if (!same_field(x.field(), field_)) throw std::invalid_argument("vector entry from another field");
            if (dot(u_[i], u_[i]) != one) throw std::invalid_argument("vector " + std::to_string(i + 1) + " is not a unit vector");
        }
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return u_.size(); }
    const Vector& operator[](std::size_t i) const { return u_.at(i); }
    const std::vector<Vector>& vectors() const noexcept { return u_; }

    bool linearly_independent() const { return rank(u_) == u_.size(); }

   private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<Vector> u_;
};

/// 1 - 2 u_i u_i^T for each i.
inline Representation reflection_rep(const VectorTuple& u) {
    Representation rep;
    for (const auto& v : u.vectors())
        rep.push_back(SquareMatrix::identity(u.field(), u.dim()) - outer(u.field(), v, v) * FieldElement(u.field(), 2L));
    return rep;
}

/// x_ij = 2 (u_i, u_j) for i < j.
inline StokesMatrix stokes_of_vectors(const VectorTuple& u) {
    StokesMatrix s(u.field(), u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) s.set(i + 1, j + 1, dot(u[i], u[j]) * 2L);
    return s;
}

/// The increasing subwords gamma_I, shortest first.
inline std::vector<FreeWord> burnside_set_Lr(std::size_t r) {
    std::vector<FreeWord> out;
    for (const auto& subset : nonempty_subsets(r)) out.push_back(subset_word(subset));
    return out;
}

/// Decides finiteness of the semisimplified reflective representation.
inline Verdict decide_reflective(const VectorTuple& u, const StokesOptions& opt = {}) {
    return semisimplification_finite(stokes_of_vectors(u), opt);
}

}  // namespace burnside

#endif
