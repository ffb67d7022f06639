// Runs the acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <string>

#include <burnside/burnside.hpp>

#include "support/catalog.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace burnside;
using burnside::testing::Rng;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const FieldPtr Q = make_field(1);

/// rho_s(g_i) = 1 - E_i (s + s^T), built directly from the entries.
SquareMatrix reflection_of(const StokesMatrix& s, std::size_t i) {
    const SquareMatrix g = s.matrix() + s.matrix().transpose();
    SquareMatrix a = SquareMatrix::identity(s.field(), s.rank());
    for (std::size_t j = 0; j < s.rank(); ++j) a(i, j) -= g(i, j);
    return a;
}

SquareMatrix product_of(const StokesMatrix& s, const std::vector<std::size_t>& subset) {
    SquareMatrix p = SquareMatrix::identity(s.field(), s.rank());
    for (std::size_t i : subset) p *= reflection_of(s, i - 1);
    return p;
}

FieldPolynomial lambda_minus_one(const FieldPtr& f) { return FieldPolynomial({FieldElement(f, -1L), FieldElement(f, 1L)}); }

Outcome coxeter_identity() {
    Outcome o;
    Rng rng(101);
    for (int t = 0; t < 200 && o.ok; ++t) {
        const std::size_t r = static_cast<std::size_t>(testing::random_int(rng, 1, 6));
        const auto s = testing::random_stokes(rng, Q, r, 10);
        const auto& m = s.matrix();
        std::vector<std::size_t> all;
        for (std::size_t i = 1; i <= r; ++i) all.push_back(i);
        const SquareMatrix direct = product_of(s, all);
        o.require(direct == -(inverse(m) * m.transpose()), "sample " + std::to_string(t) + ": product differs from -s^-1 s^T");
        o.require(coxeter_element(s) == direct, "sample " + std::to_string(t) + ": coxeter_element differs");
    }
    return o;
}

Outcome charpoly_factorization() {
    Outcome o;
    Rng rng(102);
    for (int t = 0; t < 50 && o.ok; ++t) {
        const std::size_t r = static_cast<std::size_t>(testing::random_int(rng, 1, 5));
        const auto s = testing::random_stokes(rng, Q, r, 10);
        for (const auto& subset : nonempty_subsets(r)) {
            const auto [lhs, rhs] = subword_charpoly_identity(s, subset);
            o.require(lhs == rhs, "sample " + std::to_string(t) + ", subset " + subset.to_string());
            o.require(lhs == testing::cofactor_charpoly(product_of(s, subset.members())),
                      "sample " + std::to_string(t) + ": lhs differs from cofactor expansion");
        }
    }
    return o;
}

Outcome subword_quadratic() {
    Outcome o;
    Rng rng(103);
    for (int t = 0; t < 100 && o.ok; ++t) {
        const std::size_t r = static_cast<std::size_t>(testing::random_int(rng, 2, 5));
        const auto s = testing::random_stokes(rng, Q, r, 10);
        const std::size_t i = static_cast<std::size_t>(testing::random_int(rng, 1, static_cast<long>(r) - 1));
        const std::size_t j = static_cast<std::size_t>(testing::random_int(rng, static_cast<long>(i) + 1, static_cast<long>(r)));
        FieldPolynomial factor = testing::cofactor_charpoly(product_of(s, {i, j}));
        for (std::size_t k = 2; k < r; ++k) {
            const auto [q, rem] = divmod(factor, lambda_minus_one(Q));
            o.require(rem.is_zero(), "sample " + std::to_string(t) + ": lambda - 1 does not divide");
            factor = q;
        }
        const FieldElement x = s.x(i, j);
        // trace of g_i g_j on span(v_i, v_j) is x^2 - 2
        const FieldPolynomial expect({FieldElement(Q, 1L), FieldElement(Q, 2L) - x * x, FieldElement(Q, 1L)});
        o.require(factor == expect, "sample " + std::to_string(t) + ": quadratic mismatch");
    }
    return o;
}

Outcome coxeter_catalog() {
    Outcome o;
    const std::map<std::string, std::uint64_t> wanted{{"A2", 6}, {"A3", 24}, {"B3", 48}, {"I2(5)", 10}};
    std::size_t seen = 0;
    for (const auto& c : testing::finite_coxeter_catalog()) {
        const auto it = wanted.find(c.name);
        if (it == wanted.end()) continue;
        ++seen;
        o.require(is_finite(semisimplification_finite(c.s)), c.name + ": verdict not Finite");
        const auto closure = bfs_closure(GroupInput(associated_rep(c.s)));
        o.require(is_finite(closure) && as_finite(closure).closure_order == it->second, c.name + ": closure order wrong");
    }
    o.require(seen == wanted.size(), "catalog incomplete");
    return o;
}

Outcome infinite_detection() {
    Outcome o;
    for (const auto& c : {testing::infinite_dihedral(), testing::affine_a2()}) {
        const auto v = semisimplification_finite(c.s);
        o.require(is_infinite(v), c.name + ": not Infinite");
        if (!is_infinite(v)) continue;
        o.require(as_infinite(v).reason == InfiniteReason::NotSemisimple, c.name + ": reason is not NotSemisimple");
        const GroupInput g(associated_rep(c.s));
        o.require(!finite_order(evaluate_word(g, as_infinite(v).witness)).is_finite(), c.name + ": witness has finite order");
        o.require(is_inconclusive(bfs_closure(g, 20000)), c.name + ": oracle closed");
    }
    return o;
}

Outcome psd_consistency() {
    Outcome o;
    for (const auto& c : testing::finite_coxeter_catalog()) {
        if (!is_finite(semisimplification_finite(c.s))) continue;
        o.require(is_psd(gram(c.s)), c.name + ": Finite but Gram not PSD");
    }
    for (const long x : {-2L, -3L}) {
        const StokesMatrix s(Q, 2, {{1, 2, FieldElement(Q, x)}});
        // 2x2 minors of [[2, x], [x, 2]]: 2, 2 and 4 - x^2
        const bool by_minors = 4 - x * x >= 0;
        o.require(is_psd(gram(s)) == by_minors, "x12 = " + std::to_string(x) + ": PSD disagrees with minors");
        o.require(is_infinite(semisimplification_finite(s)), "x12 = " + std::to_string(x) + ": not Infinite");
    }
    o.require(is_psd(gram(testing::affine_a2().s)), "affine A2 Gram should be PSD and singular");
    o.require(det(gram(testing::affine_a2().s)).is_zero(), "affine A2 Gram should be singular");
    return o;
}

Outcome gl2_pipeline() {
    Outcome o;
    Rng rng(107);
    const auto f = make_field(12);
    const auto catalog = testing::finite_gl2_catalog();
    for (int t = 0; t < 50 && o.ok; ++t) {
        const auto& c = catalog[static_cast<std::size_t>(t) % catalog.size()];
        const auto g = testing::conjugate(c.group, testing::random_invertible(rng, f, 2, 2));
        const auto v = decide_finite_gl2(g);
        o.require(is_finite(v), c.name + " conjugate " + std::to_string(t) + ": not Finite");
        if (!is_finite(v)) continue;
        o.require(as_finite(v).closure_order == c.closure, c.name + " conjugate " + std::to_string(t) + ": closure disagrees");
    }
    for (int t = 0; t < 20 && o.ok; ++t) {
        const auto g = testing::conjugate(testing::sl2z_pair(f), testing::random_invertible(rng, f, 2, 2));
        const auto v = decide_finite_gl2(g);
        o.require(is_infinite(v), "SL2(Z) conjugate " + std::to_string(t) + ": not Infinite");
        if (!is_infinite(v)) continue;
        o.require(as_infinite(v).witness.length() <= 6, "SL2(Z) conjugate " + std::to_string(t) + ": witness longer than 3r");
        o.require(certificate_holds(g, v), "SL2(Z) conjugate " + std::to_string(t) + ": witness fails recheck");
    }
    const auto standard = decide_finite_gl2(testing::sl2z_pair(f));
    o.require(is_infinite(standard) && as_infinite(standard).witness.length() <= 2, "standard pair: witness longer than 2");
    return o;
}

Outcome correspondence() {
    Outcome o;
    Rng rng(108);
    const auto f = make_field(8);
    for (int t = 0; t < 100 && o.ok; ++t) {
        const std::size_t r = static_cast<std::size_t>(testing::random_int(rng, 1, 4));
        Representation rep;
        for (std::size_t k = 0; k < r; ++k) rep.push_back(testing::random_sl2(rng, f, 3));
        const auto points = rep_to_points(rep);
        o.require(points_to_rep(points) == rep, "sample " + std::to_string(t) + ": round trip");
        const auto g = gram_of_sl2_points(points);
        const GroupInput group(rep);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = i + 1; j <= r; ++j) {
                SquareMatrix p = SquareMatrix::identity(f, 2);
                for (std::size_t k = i + 1; k <= j; ++k) p *= rep[k - 1];
                o.require(g(i, j) == p.trace(), "sample " + std::to_string(t) + ": Gram entry differs from trace");
            }
    }
    return o;
}

Outcome rewriting_soundness() {
    Outcome o;
    Rng rng(109);
    const auto f = make_field(8);
    for (std::size_t r = 1; r <= 4; ++r)
        for (int t = 0; t < 20 && o.ok; ++t) {
            Representation rep;
            for (std::size_t k = 0; k < r; ++k) rep.push_back(testing::random_sl2(rng, f, 2));
            const auto points = rep_to_points(rep);
            const GroupInput group(rep);
            for (const auto& subset : increasing_subsets(0, r)) {
                CliffordElement p = CliffordElement::unit(f);
                for (int twice = 0; twice < 2; ++twice)
                    for (std::size_t i : subset) p = p * j_embed(points[i]);
                const auto rewritten = evaluate_word(group, delta_word_rewrite(delta_square(subset), r));
                o.require(!p.odd && p.a == rewritten, "r = " + std::to_string(r) + ": rewrite disagrees with the pin model");
            }
        }
    return o;
}

Outcome reflective_commutativity() {
    Outcome o;
    Rng rng(110);
    int done = 0;
    while (done < 50 && o.ok) {
        const std::size_t n = static_cast<std::size_t>(1 + done % 4);
        std::vector<Vector> vs;
        for (std::size_t k = 0; k < n; ++k) vs.push_back(testing::random_unit_vector(rng, Q, n, 4));
        const VectorTuple u(Q, n, vs);
        if (!u.linearly_independent()) continue;
        const GroupInput refl(reflection_rep(u));
        const GroupInput stokes(associated_rep(stokes_of_vectors(u)));
        o.require(fingerprints_agree(refl, stokes), "tuple " + std::to_string(done) + ": fingerprints differ");
        if (n <= 3) o.require(trace_fingerprint(refl) == trace_fingerprint(stokes), "tuple " + std::to_string(done) + ": enumerated traces differ");
        ++done;
    }
    return o;
}

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Coxeter element equals -s^-1 s^T", 10, coxeter_identity},
        {2, "subword charpoly factorization", 30, charpoly_factorization},
        {3, "rank-2 subword quadratic", 5, subword_quadratic},
        {4, "finite Coxeter catalog vs closure oracle", 60, coxeter_catalog},
        {5, "infinite dihedral and affine A2 detected", 30, infinite_detection},
        {6, "PSD consistency", 5, psd_consistency},
        {7, "GL2 Burnside pipeline", 300, gl2_pipeline},
        {8, "SL2 point correspondence and Gram traces", 30, correspondence},
        {9, "delta rewriting soundness", 60, rewriting_soundness},
        {10, "reflection and Stokes fingerprints coincide", 60, reflective_commutativity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_seconds) {
            o.ok = false;
            o.detail = "over the time budget";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " (" << timing << ")";
        if (!o.ok) std::cout << " -- " << o.detail;
        std::cout << std::endl;
        failures += !o.ok;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures ? 1 : 0;
}
