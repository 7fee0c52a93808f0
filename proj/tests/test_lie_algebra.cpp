#include "nilcone/catalog.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/lie_algebra.hpp"

#include <doctest.h>

#include <array>
#include <random>

using namespace nilcone;

namespace {

LieBracket units(int dim, std::vector<std::array<int, 3>> slots) {
    std::vector<BracketTerm> terms;
    for (auto& s : slots) terms.push_back({s[0], s[1], s[2], Rational(1)});
    return LieBracket::validate(dim, std::move(terms));
}

IVec iv(std::vector<int> v) {
    IVec out;
    for (int x : v) out.emplace_back(x);
    return out;
}

// Left-normed brackets mu(e_{i0}, mu(e_{i1}, ... mu(e_{i_{n-1}}, e_{i_n}))).
bool all_long_brackets_vanish(const LieBracket& mu) {
    const int n = mu.dim();
    std::vector<int> tuple(n + 1, 1);
    while (true) {
        QVector v(n, Rational(0));
        v[tuple[n] - 1] = 1;
        for (int t = n - 1; t >= 0; --t) {
            QVector e(n, Rational(0));
            e[tuple[t] - 1] = 1;
            v = mu.apply(e, v);
        }
        if (!is_zero(v)) return false;
        int pos = n;
        while (pos >= 0 && tuple[pos] == n) --pos;
        if (pos < 0) return true;
        ++tuple[pos];
        for (int t = pos + 1; t <= n; ++t) tuple[t] = 1;
    }
}

}  // namespace

TEST_CASE("validate accepts the standard filiform data") {
    CHECK_NOTHROW(units(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}));
}

TEST_CASE("validate accepts the abelian bracket") {
    LieBracket mu = LieBracket::validate(3, {});
    CHECK(mu.is_zero());
}

TEST_CASE("validate reports a Jacobi violation with the triple") {
    try {
        units(3, {{1, 2, 3}, {2, 3, 1}, {1, 3, 3}});
        FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& e) {
        CHECK(e.i == 1);
        CHECK(e.j == 2);
        CHECK(e.k == 3);
    }
}

TEST_CASE("validate rejects out-of-range indices and i = j") {
    CHECK_THROWS_AS(units(3, {{1, 4, 2}}), IndexOutOfRange);
    CHECK_THROWS_AS(units(3, {{2, 2, 3}}), IndexOutOfRange);
}

TEST_CASE("validate folds j < i antisymmetrically and drops cancellations") {
    LieBracket mu = LieBracket::validate(
        3, {{1, 2, 3, Rational(1)}, {2, 1, 3, Rational(1)}});  // c - c = 0
    CHECK(mu.is_zero());
}

TEST_CASE("nilpotency of the catalog and counterexamples") {
    CHECK(is_nilpotent(units(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}})));
    CHECK(is_nilpotent(LieBracket::validate(4, {})));
    CHECK(!is_nilpotent(LieBracket::validate(2, {{1, 2, 2, Rational(1)}})));
}

TEST_CASE("nilpotency agrees with the long-bracket oracle") {
    std::vector<LieBracket> cases;
    for (const std::string& id : catalog_ids())
        if (get(id).bracket.dim() <= 5) cases.push_back(get(id).bracket);
    cases.push_back(LieBracket::validate(2, {{1, 2, 2, Rational(1)}}));
    cases.push_back(LieBracket::validate(3, {{1, 2, 2, Rational(1)}, {1, 3, 3, Rational(2)}}));
    cases.push_back(LieBracket::validate(4, {}));
    for (const LieBracket& mu : cases) CHECK(is_nilpotent(mu) == all_long_brackets_vanish(mu));
}

TEST_CASE("torus of the standard filiform of dimension 5") {
    TorusParam t = diagonal_derivation_space(units(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}));
    REQUIRE(t.rank() == 2);
    CHECK(t.columns()[0] == iv({1, 0, 1, 2, 3}));
    CHECK(t.columns()[1] == iv({0, 1, 1, 1, 1}));
    CHECK(t.trace_form() == iv({7, 4}));
}

TEST_CASE("torus of the abelian algebra is the identity parametrization") {
    TorusParam t = diagonal_derivation_space(LieBracket::validate(3, {}));
    REQUIRE(t.rank() == 3);
    CHECK(t.columns()[0] == iv({1, 0, 0}));
    CHECK(t.columns()[1] == iv({0, 1, 0}));
    CHECK(t.columns()[2] == iv({0, 0, 1}));
}

TEST_CASE("torus parametrizations produce genuine derivations") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-5, 5);
    for (const std::string& id : catalog_ids()) {
        LieBracket mu = get(id).bracket;
        TorusParam t = diagonal_derivation_space(mu);
        QVector p(t.rank());
        for (Rational& x : p) x = Rational(num(rng), 3);
        QVector d = t.diag(p);
        const int n = mu.dim();
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                QVector ei(n, Rational(0)), ej(n, Rational(0));
                ei[i - 1] = 1;
                ej[j - 1] = 1;
                QVector lhs = mu.apply(ei, ej);
                for (int m = 0; m < n; ++m) lhs[m] *= d[m];  // D mu(e_i, e_j)
                QVector rhs = mu.apply(ei, ej);
                for (int m = 0; m < n; ++m) rhs[m] *= d[i - 1] + d[j - 1];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("nice basis recognition") {
    for (const std::string& id : catalog_ids()) CHECK(is_nice_basis(get(id).bracket));
    CHECK(!is_nice_basis(units(4, {{1, 2, 3}, {1, 2, 4}})));          // two targets for one pair
    CHECK(!is_nice_basis(units(5, {{1, 2, 4}, {2, 3, 5}, {1, 3, 5}})));  // overlapping pairs
}

TEST_CASE("weights of the standard filiform") {
    auto w = weights_of(units(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}));
    REQUIRE(w.size() == 3);
    CHECK(w[0].i == 1);
    CHECK(w[0].j == 2);
    CHECK(w[0].k == 3);
    CHECK(w[0].diag == std::vector<int>{-1, -1, 1, 0, 0});
    CHECK(w[2].diag == std::vector<int>{-1, 0, 0, -1, 1});
}

TEST_CASE("weights of n6 and the abelian algebra") {
    auto w = weights_of(units(5, {{1, 2, 4}, {1, 3, 5}}));
    REQUIRE(w.size() == 2);
    CHECK(w[0].diag == std::vector<int>{-1, -1, 0, 1, 0});
    CHECK(w[1].diag == std::vector<int>{-1, 0, -1, 0, 1});
    CHECK(weights_of(LieBracket::validate(3, {})).empty());
}

TEST_CASE("weight trace sum equals minus the number of terms") {
    for (const std::string& id : catalog_ids()) {
        LieBracket mu = get(id).bracket;
        auto ws = weights_of(mu);
        CHECK(ws.size() == mu.terms().size());
        int total = 0;
        for (const Weight& w : ws)
            for (int x : w.diag) total += x;
        CHECK(total == -static_cast<int>(ws.size()));
    }
}

TEST_CASE("center of catalog algebras") {
    auto z1 = center(units(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}));
    REQUIRE(z1.indices);
    CHECK(*z1.indices == std::vector<int>{5});

    auto z2 = center(heisenberg_bracket(2));
    REQUIRE(z2.indices);
    CHECK(*z2.indices == std::vector<int>{5});

    auto z3 = center(LieBracket::validate(3, {}));
    REQUIRE(z3.indices);
    CHECK(*z3.indices == std::vector<int>{1, 2, 3});
}

TEST_CASE("non-coordinate center is detected and refused") {
    // mu(e1,e2) = e3, mu(e1,e3) = e3: center is spanned by e2 - e3.
    LieBracket mu = units(3, {{1, 2, 3}, {1, 3, 3}});
    auto z = center(mu);
    CHECK(!z.indices);
    REQUIRE(z.basis.size() == 1);
    CHECK(z.basis[0] == iv({0, 1, -1}));
    TorusParam t = diagonal_derivation_space(mu);
    if (t.rank() > 0) {
        QVector p(t.rank(), Rational(1));
        CHECK_THROWS_AS(necessary_condition(mu, t, p), NonCoordinateCenter);
    }
}

TEST_CASE("necessary condition on reference points") {
    LieBracket n1 = units(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}});
    TorusParam t1 = diagonal_derivation_space(n1);
    CHECK(!necessary_condition(n1, t1, {Rational(-1), Rational(2)}));  // D = (-1,2,1,0,-1)
    CHECK(necessary_condition(n1, t1, {Rational(1), Rational(0)}));
    CHECK(!necessary_condition(n1, t1, {Rational(0), Rational(0)}));

    // Center point of the trace-3 slice of h5: d1 = d2 = 1/2, d3 = 1 in the
    // printed coordinates.
    CatalogEntry h5 = get("h5");
    CHECK(necessary_condition(h5.bracket, h5.printed_torus,
                              {Rational(1, 2), Rational(1, 2), Rational(1)}));
}

TEST_CASE("signed permutation transform yields a valid bracket") {
    LieBracket h3 = heisenberg_bracket(1);
    LieBracket t = transform_signed_permutation(h3, {3, 1, 2}, {1, -1, 1});
    CHECK(t.terms().size() == 1);
    CHECK(t.coeff(1, 3, 2) != 0);
    CHECK_THROWS_AS(transform_signed_permutation(h3, {1, 1, 2}, {1, 1, 1}), UsageError);
    CHECK_THROWS_AS(transform_signed_permutation(h3, {1, 2, 3}, {1, 2, 1}), UsageError);
}
