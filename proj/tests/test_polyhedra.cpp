#include "nilcone/catalog.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/polyhedra.hpp"

#include <doctest.h>

#include <random>

using namespace nilcone;

namespace {

IVec iv(std::vector<int> v) {
    IVec out;
    for (int x : v) out.emplace_back(x);
    return out;
}

StrictSystem sys(std::vector<std::string> names, std::vector<std::vector<int>> forms) {
    std::vector<IVec> fs;
    for (auto& f : forms) fs.push_back(iv(f));
    return StrictSystem(std::move(names), std::move(fs));
}

bool has_form(const StrictSystem& s, const IVec& f) {
    for (const IVec& g : s.forms())
        if (g == f) return true;
    return false;
}

// FM-based conic membership: eliminate the multipliers of
// target = sum lambda_i g_i with lambda_i >= 0 (homogenized by one strict
// scaling variable). Independent route used to cross-check the simplex.
bool conic_member_fm(const IVec& target, const std::vector<IVec>& gens) {
    const std::size_t m = gens.size();
    detail::TaggedSystem s;
    s.nvars = m + 1;
    for (std::size_t i = 0; i < m; ++i) {
        IVec e(m + 1, Int(0));
        e[i] = 1;
        s.forms.push_back({std::move(e), false});
    }
    IVec scale(m + 1, Int(0));
    scale[m] = 1;
    s.forms.push_back({std::move(scale), true});
    for (std::size_t t = 0; t < target.size(); ++t) {
        IVec row(m + 1, Int(0));
        bool zero = true;
        for (std::size_t i = 0; i < m; ++i) {
            row[i] = gens[i][t];
            if (row[i] != 0) zero = false;
        }
        row[m] = -target[t];
        if (row[m] != 0) zero = false;
        if (zero) continue;
        IVec neg(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
        s.forms.push_back({std::move(row), false});
        s.forms.push_back({std::move(neg), false});
    }
    while (s.nvars > 0) s = detail::eliminate(s, 0);
    return !s.contradiction;
}

}  // namespace

TEST_CASE("system canonicalization: primitive, deduplicated, sorted") {
    StrictSystem s = sys({"x", "y"}, {{2, 4}, {1, 2}, {3, -1}});
    REQUIRE(s.forms().size() == 2);
    CHECK(s.forms()[0] == iv({1, 2}));
    CHECK(s.forms()[1] == iv({3, -1}));
    CHECK_THROWS_AS(sys({"x"}, {{0}}), DomainError);
}

TEST_CASE("single-pairing elimination") {
    StrictSystem s = sys({"a", "x", "y"}, {{1, -1, 0}, {-1, 0, 1}});
    StrictSystem r = fm_eliminate(s, 0);
    REQUIRE(r.forms().size() == 1);
    CHECK(r.forms()[0] == iv({-1, 1}));
    CHECK(r.var_names() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("contradictory pairing sets the marker") {
    StrictSystem s = sys({"a"}, {{1}, {-1}});
    StrictSystem r = fm_eliminate(s, 0);
    CHECK(r.contradictory());
    CHECK(!is_feasible(s));
}

TEST_CASE("the reference elimination chain appears") {
    // Variables (a, b, c, d1, d2); the defining rows of the dim-5 filiform.
    StrictSystem s = sys({"a", "b", "c", "d1", "d2"},
                         {{1, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0},
                          {0, 0, 1, 0, 0},
                          {1, 1, 1, 1, 0},
                          {1, 0, 0, 0, 1},
                          {-1, 1, 0, 1, 1},
                          {0, -1, 1, 2, 1},
                          {0, 0, -1, 3, 1}});
    StrictSystem after_c = fm_eliminate(s, 2);
    CHECK(has_form(after_c, iv({0, -1, 5, 2})));  // 5 d1 + 2 d2 > b
    StrictSystem after_b = fm_eliminate(after_c, 1);
    CHECK(has_form(after_b, iv({-1, 6, 3})));  // 6 d1 + 3 d2 > a
    CHECK(has_form(after_b, iv({1, 9, 3})));   // a > -9 d1 - 3 d2
    CHECK(has_form(after_b, iv({1, 0, 1})));   // a > -d2
    StrictSystem done = fm_eliminate(after_b, 0);
    CHECK(is_feasible(done));
    CHECK(systems_equal(minimize(done), sys({"d1", "d2"}, {{3, 1}, {3, 2}})));
}

TEST_CASE("feasibility basics") {
    CHECK(is_feasible(sys({"x"}, {{1}})));
    CHECK(!is_feasible(sys({"x"}, {{1}, {-1}})));
    CHECK(is_feasible(StrictSystem({"x", "y"}, {})));
}

TEST_CASE("containment is strict and exact") {
    StrictSystem cone = sys({"d1", "d2"}, {{3, 1}, {3, 2}});
    CHECK(contains(cone, {Rational(1), Rational(0)}));
    CHECK(!contains(cone, {Rational(-1), Rational(3)}));  // 3 d1 + d2 = 0 on the boundary
    CHECK(!contains(cone, {Rational(0), Rational(0)}));
    CHECK_THROWS_AS(contains(cone, {Rational(1)}), UsageError);
}

TEST_CASE("minimize removes a sum redundancy") {
    StrictSystem s = sys({"d1", "d2"}, {{1, 0}, {0, 1}, {1, 1}});
    StrictSystem m = minimize(s);
    REQUIRE(m.forms().size() == 2);
    CHECK(m.forms()[0] == iv({0, 1}));
    CHECK(m.forms()[1] == iv({1, 0}));
}

TEST_CASE("minimize requires feasibility") {
    CHECK_THROWS_AS(minimize(sys({"x"}, {{1}, {-1}})), InfeasibleInput);
}

TEST_CASE("minimize keeps the h5 closed form at its true facet count") {
    // The subset-free positivity form is a positive combination of the
    // k = 1 pair, so 8 of the 9 forms survive.
    StrictSystem closed = heisenberg_closed_form(2);
    REQUIRE(closed.forms().size() == 9);
    StrictSystem m = minimize(closed);
    CHECK(m.forms().size() == 8);
    CHECK(systems_equal(m, closed));
    CHECK(!has_form(m, iv({0, 0, 1})));
}

TEST_CASE("systems_equal identifies rescalings and redundancy") {
    CHECK(systems_equal(sys({"x", "y"}, {{1, 0}, {0, 1}}),
                        sys({"x", "y"}, {{2, 0}, {0, 3}, {1, 1}})));
    CHECK(!systems_equal(sys({"x", "y"}, {{1, 0}}), sys({"x", "y"}, {{0, 1}})));
    CHECK_THROWS_AS(systems_equal(sys({"x"}, {{1}, {-1}}), sys({"x"}, {{1}})), InfeasibleInput);
}

TEST_CASE("product concatenates variable spaces") {
    StrictSystem p = product(sys({"d1"}, {{1}}), sys({"d2"}, {{1}}));
    REQUIRE(p.nvars() == 2);
    CHECK(p.forms()[0] == iv({0, 1}));
    CHECK(p.forms()[1] == iv({1, 0}));
}

TEST_CASE("conic coefficients reconstruct the target exactly") {
    std::vector<IVec> gens{iv({3, 1}), iv({3, 2})};
    auto lambda = conic_coefficients(iv({7, 4}), gens);
    REQUIRE(lambda);
    CHECK((*lambda)[0] == Rational(2, 3));
    CHECK((*lambda)[1] == Rational(5, 3));
    CHECK(!conic_coefficients(iv({-1, 0}), gens));
}

TEST_CASE("simplex membership agrees with the FM multiplier route") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> dims(2, 3);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = dims(rng);
        std::size_t m = count(rng);
        std::vector<IVec> gens;
        for (std::size_t g = 0; g < m; ++g) {
            IVec v(n);
            bool zero = true;
            for (Int& x : v) {
                int c = coef(rng);
                x = c;
                if (c) zero = false;
            }
            if (zero) v[0] = 1;
            gens.push_back(std::move(v));
        }
        IVec target(n);
        for (Int& x : target) x = coef(rng);
        bool via_lp = conic_coefficients(target, gens).has_value();
        bool via_fm = conic_member_fm(target, gens);
        CHECK(via_lp == via_fm);
        if (auto lambda = conic_coefficients(target, gens)) {
            QVector sum(n, Rational(0));
            for (std::size_t g = 0; g < m; ++g)
                for (std::size_t t = 0; t < n; ++t) sum[t] += (*lambda)[g] * Rational(gens[g][t]);
            for (std::size_t t = 0; t < n; ++t) CHECK(sum[t] == Rational(target[t]));
            for (const Rational& l : *lambda) CHECK(l >= 0);
        }
    }
}

TEST_CASE("slice of the n6 cone is the reference pentagon") {
    StrictSystem cone = sys({"d1", "d2", "d3"},
                            {{1, 1, 0}, {1, 0, 1}, {1, 0, 2}, {1, 2, 0}, {3, 1, 1}});
    AffineForm tr{{Rational(3), Rational(2), Rational(2)}, Rational(1)};
    SlicePolytope p = slice_vertices(cone, tr);
    CHECK(p.vertices.size() == 5);
    CHECK(p.facets.size() == 5);
    // Every vertex is tight on enough independent facets.
    for (const QVector& v : p.vertices) {
        std::vector<QVector> tight;
        for (const IVec& f : cone.forms())
            if (dot(f, v) == 0) tight.push_back(to_rational(f));
        tight.push_back(tr.normal);
        CHECK(rank(QMatrix::from_rows(tight)) == 3);
    }
    // Midpoints of vertex pairs stay in the closed slice, and the centroid
    // is strictly interior.
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
            QVector mid(3);
            for (int c = 0; c < 3; ++c) mid[c] = (p.vertices[i][c] + p.vertices[j][c]) / 2;
            for (const IVec& f : cone.forms()) CHECK(dot(f, mid) >= 0);
        }
    }
    QVector centroid(3, Rational(0));
    for (const QVector& v : p.vertices)
        for (int c = 0; c < 3; ++c) centroid[c] += v[c] / Rational(p.vertices.size());
    CHECK(contains(cone, centroid));
}

TEST_CASE("unbounded slices are rejected") {
    StrictSystem half = sys({"x", "y"}, {{1, 0}});
    AffineForm norm{{Rational(1), Rational(0)}, Rational(1)};
    CHECK_THROWS_AS(slice_vertices(half, norm), Unbounded);
}

TEST_CASE("slice enumeration stays at desk scale") {
    StrictSystem big({"a", "b", "c", "d", "e"}, {iv({1, 0, 0, 0, 0})});
    AffineForm norm{QVector(5, Rational(1)), Rational(1)};
    CHECK_THROWS_AS(slice_vertices(big, norm), TooManyVars);
}

TEST_CASE("coordinate substitution matches point transport") {
    // q = S p with S = [[1,0],[1,1]].
    QMatrix s(2, 2);
    s.at(0, 0) = 1;
    s.at(1, 0) = 1;
    s.at(1, 1) = 1;
    StrictSystem over_q = sys({"q1", "q2"}, {{0, 1}, {1, 1}, {-1, 2}});
    StrictSystem over_p = substitute_coordinates(over_q, s, {"p1", "p2"});
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        QVector p{Rational(num(rng), 2), Rational(num(rng), 3)};
        QVector q{p[0], p[0] + p[1]};
        CHECK(contains(over_p, p) == contains(over_q, q));
    }
}

TEST_CASE("form ordering makes output deterministic") {
    StrictSystem a = sys({"x", "y"}, {{1, 2}, {2, 1}});
    StrictSystem b = sys({"x", "y"}, {{2, 1}, {1, 2}});
    CHECK(a == b);
    CHECK(a.forms() == b.forms());
}
