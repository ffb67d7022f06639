#include <catch_amalgamated.hpp>

#include <burnside/decision.hpp>
#include <burnside/spin4.hpp>

#include "support/printing.hpp"
#include "support/random.hpp"

using namespace burnside;
using burnside::testing::Rng;

namespace {

const FieldPtr Q = make_field(1);
const FieldPtr Q8 = make_field(8);

SquareMatrix M(std::initializer_list<std::initializer_list<Rational>> rows, const FieldPtr& f = Q) {
    return SquareMatrix::from_rationals(f, rows);
}

Representation random_sl2_tuple(Rng& rng, const FieldPtr& f, std::size_t r) {
    Representation rep;
    for (std::size_t i = 0; i < r; ++i) rep.push_back(testing::random_sl2(rng, f, 3));
    return rep;
}

/// First component of prod_k j(u_{i_k}) over delta_I delta_I.
SquareMatrix pin_square(const std::vector<SquareMatrix>& points, const std::vector<std::size_t>& subset) {
    CliffordElement p = CliffordElement::unit(points.front().field());
    for (int twice = 0; twice < 2; ++twice)
        for (std::size_t i : subset) p = p * j_embed(points[i]);
    REQUIRE_FALSE(p.odd);
    return p.a;
}

}  // namespace

TEST_CASE("Clifford multiplication", "[spin4]") {
    Rng rng(1);
    const auto unit = CliffordElement::unit(Q8);
    const auto x = testing::random_matrix(rng, Q8, 2, 4);
    const auto y = testing::random_matrix(rng, Q8, 2, 4);
    const CliffordElement even{x, y, false}, odd{y, x, true};
    CHECK(unit * even == even);
    CHECK(even * unit == even);
    CHECK(unit * odd == odd);
    CHECK(odd * unit == odd);

    const auto u = M({{1, 1}, {0, 1}});
    CHECK(j_embed(u) * j_embed(u) == CliffordElement::unit(Q) * det(u));

    const auto a = testing::random_matrix(rng, Q8, 2, 4), b = testing::random_matrix(rng, Q8, 2, 4);
    const auto c = testing::random_matrix(rng, Q8, 2, 4), d = testing::random_matrix(rng, Q8, 2, 4);
    CHECK(CliffordElement{a, b, true} * CliffordElement{c, d, true} == CliffordElement{a * d, b * c, false});
    CHECK(CliffordElement{a, b, false} * CliffordElement{c, d, true} == CliffordElement{a * c, b * d, true});
    CHECK(CliffordElement{a, b, true} * CliffordElement{c, d, false} == CliffordElement{a * d, b * c, true});

    SECTION("associativity") {
        for (int t = 0; t < 20; ++t) {
            std::vector<CliffordElement> e;
            for (int k = 0; k < 3; ++k)
                e.push_back({testing::random_matrix(rng, Q8, 2, 3), testing::random_matrix(rng, Q8, 2, 3), testing::random_int(rng, 0, 1) == 1});
            CHECK((e[0] * e[1]) * e[2] == e[0] * (e[1] * e[2]));
        }
    }

    SECTION("Clifford relation j(x)^2 = det(x)") {
        for (int t = 0; t < 100; ++t) {
            const auto m = testing::random_matrix(rng, Q8, 2, 5);
            CHECK(j_embed(m) * j_embed(m) == CliffordElement::unit(Q8) * det(m));
        }
    }
}

TEST_CASE("j embedding", "[spin4]") {
    CHECK(j_embed(SquareMatrix::identity(Q, 2)) ==
          CliffordElement{SquareMatrix::identity(Q, 2), SquareMatrix::identity(Q, 2), true});
    CHECK(j_embed(M({{0, -1}, {1, 0}})) == CliffordElement{M({{0, -1}, {1, 0}}), M({{0, 1}, {-1, 0}}), true});
    Rng rng(2);
    const auto s = testing::random_sl2(rng, Q8, 3);
    CHECK(j_embed(s).b == inverse(s));
    CHECK_THROWS_AS(j_embed(SquareMatrix::identity(Q, 3)), std::invalid_argument);
}

TEST_CASE("pin action", "[spin4]") {
    Rng rng(3);
    const auto v = testing::random_matrix(rng, Q8, 2, 4);
    CHECK(pin_action(CliffordElement::unit(Q8), v) == v);
    for (int t = 0; t < 40; ++t) {
        const auto a = testing::random_invertible(rng, Q8, 2, 3), b = testing::random_invertible(rng, Q8, 2, 3);
        const auto w = testing::random_matrix(rng, Q8, 2, 4);
        const CliffordElement even{a, b, false};
        CHECK(pin_action(even, w) == a * w * inverse(b));
        const CliffordElement odd{a, b, true};
        CHECK(det(pin_action(even, w)) * det(a).inverse() * det(b) == det(w));
        CHECK(det(pin_action(odd, w)) * det(a).inverse() * det(b) == det(w));
        // j(u) for a unit vector acts as a reflection
        const auto u = testing::random_sl2(rng, Q8, 2);
        const auto image = pin_action(j_embed(u), w);
        CHECK(det(image) == det(w));
        CHECK(pin_action(j_embed(u), image) == w);
        // the image of u itself is -u
        CHECK(pin_action(j_embed(u), u) == -u);
    }
    CHECK_THROWS_AS(pin_action(CliffordElement{SquareMatrix(Q, 2), SquareMatrix::identity(Q, 2), false}, SquareMatrix::identity(Q, 2)),
                    std::invalid_argument);
}

TEST_CASE("representations and point tuples", "[spin4]") {
    const auto id = SquareMatrix::identity(Q, 2);
    const auto pts = rep_to_points({id, id, id});
    REQUIRE(pts.size() == 4);
    for (const auto& u : pts) CHECK(u == id);
    CHECK(points_to_rep(pts) == Representation{id, id, id});

    const auto one = rep_to_points({M({{0, -1}, {1, 0}})});
    CHECK(one[1] == M({{0, 1}, {-1, 0}}));
    CHECK(points_to_rep({id, M({{0, 1}, {-1, 0}})}) == Representation{M({{0, -1}, {1, 0}})});
    CHECK_THROWS_AS(rep_to_points({M({{2, 0}, {0, 1}})}), std::invalid_argument);
    CHECK_THROWS_AS(points_to_rep({id, M({{2, 0}, {0, 1}})}), std::invalid_argument);

    Rng rng(4);
    SECTION("round trip") {
        for (int t = 0; t < 50; ++t) {
            const auto rep = random_sl2_tuple(rng, Q8, static_cast<std::size_t>(testing::random_int(rng, 1, 4)));
            CHECK(points_to_rep(rep_to_points(rep)) == rep);
        }
    }
    SECTION("two-sided translation conjugates the images") {
        for (int t = 0; t < 20; ++t) {
            const auto rep = random_sl2_tuple(rng, Q8, 3);
            auto pts2 = rep_to_points(rep);
            const auto a = testing::random_sl2(rng, Q8, 2), b = testing::random_sl2(rng, Q8, 2);
            for (auto& u : pts2) u = a * u * inverse(b);
            const auto moved = points_to_rep(pts2);
            for (std::size_t i = 0; i < rep.size(); ++i) CHECK(moved[i] == a * rep[i] * inverse(a));
        }
    }
}

TEST_CASE("Gram matrix of points", "[spin4]") {
    const auto id = SquareMatrix::identity(Q, 2);
    const auto constant = gram_of_sl2_points({id, id, id});
    for (const auto& x : constant.entries()) CHECK(x == FieldElement(Q, 2L));
    CHECK(gram_of_sl2_points({id, M({{0, 1}, {-1, 0}})})(0, 1).is_zero());

    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = static_cast<std::size_t>(testing::random_int(rng, 1, 4));
        const auto rep = random_sl2_tuple(rng, Q8, r);
        const auto g = gram_of_sl2_points(rep_to_points(rep));
        const GroupInput group(rep);
        CHECK(g.is_symmetric());
        for (std::size_t i = 0; i <= r; ++i) {
            CHECK(g(i, i) == FieldElement(Q8, 2L));
            for (std::size_t j = i + 1; j <= r; ++j)
                CHECK(g(i, j) == evaluate_word(group, FreeWord::run(static_cast<int>(i) + 1, static_cast<int>(j))).trace());
        }
    }
}

TEST_CASE("delta word rewriting", "[spin4]") {
    CHECK(delta_word_rewrite(CoxWord({0, 1}), 1) == FreeWord({1}));
    CHECK(delta_word_rewrite(CoxWord({0, 2}), 2) == FreeWord({1, 2}));
    CHECK(delta_word_rewrite(CoxWord({0, 1, 0, 1}), 1) == FreeWord({1, 1}));
    CHECK(delta_word_rewrite(CoxWord({2, 0}), 2) == FreeWord({-2, -1}));
    CHECK(delta_word_rewrite(delta_square({0, 1, 2}), 2) == FreeWord({1, -2, -1, 2}));
    CHECK(delta_word_rewrite(CoxWord({1, 1}), 1).empty());
    CHECK_THROWS_AS(delta_word_rewrite(CoxWord({0, 1, 2}), 2), std::invalid_argument);
    CHECK_THROWS_AS(delta_word_rewrite(CoxWord({0, 3}), 2), std::out_of_range);
    CHECK(CoxWord({0, 1, 1, 2}) == CoxWord({0, 2}));

    SECTION("agrees with the pin model") {
        Rng rng(6);
        for (std::size_t r = 1; r <= 3; ++r)
            for (int t = 0; t < 4; ++t) {
                const auto rep = random_sl2_tuple(rng, Q8, r);
                const GroupInput group(rep);
                const auto pts = rep_to_points(rep);
                for (const auto& subset : increasing_subsets(0, r))
                    CHECK(evaluate_word(group, delta_word_rewrite(delta_square(subset), r)) == pin_square(pts, subset));
            }
    }
}

TEST_CASE("GL2 Burnside set", "[spin4]") {
    CHECK(burnside_set_gl2(1) == std::vector<FreeWord>{FreeWord({1}), FreeWord({1, 1})});
    const auto w2 = burnside_set_gl2(2);
    for (const auto& w : {FreeWord({1}), FreeWord({2}), FreeWord({1, 2, -1, -2}), FreeWord({1, -2, -1, 2})})
        CHECK(std::find(w2.begin(), w2.end(), w) != w2.end());
    CHECK(std::is_sorted(w2.begin(), w2.end()));
    for (std::size_t r = 1; r <= 5; ++r) {
        const auto words = burnside_set_gl2(r);
        std::size_t longest = 0;
        for (const auto& w : words) {
            longest = std::max(longest, w.length());
            CHECK_FALSE(w.empty());
            CHECK(std::count(words.begin(), words.end(), w) == 1);
            CHECK(std::find(words.begin(), words.end(), w.inverse()) == words.end());
        }
        CHECK(longest <= 3 * r);
    }
}
