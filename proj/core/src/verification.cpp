#include "nilcone/verification.hpp"

#include "nilcone/catalog.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/json_io.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace nilcone {

namespace {

// ---------------------------------------------------------------------------
// Small deterministic sampling helpers.

Rational random_rational(std::mt19937_64& rng, int lo = -9, int hi = 9, bool nonzero = true) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Rational(n, den(rng));
}

Rational random_positive_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

// Bracket shapes known to satisfy the Jacobi identity for every choice of
// coefficients (each Jacobi summand vanishes slotwise).
const std::vector<std::pair<int, std::vector<std::array<int, 3>>>>& bracket_shapes() {
    static const std::vector<std::pair<int, std::vector<std::array<int, 3>>>> shapes = {
        {3, {{1, 2, 3}}},
        {4, {{1, 2, 3}, {1, 3, 4}}},
        {4, {{1, 2, 4}}},
        {5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}},
        {5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}}},
        {5, {{1, 2, 4}, {2, 3, 5}, {1, 4, 5}}},
        {5, {{1, 2, 5}, {3, 4, 5}}},
        {5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}}},
        {5, {{1, 2, 4}, {1, 3, 5}}},
        {5, {{1, 2, 3}}},
        {5, {{1, 2, 3}, {1, 3, 4}}},
        {2, {{1, 2, 2}}},  // solvable, non-nilpotent; still fine for moment checks
    };
    return shapes;
}

LieBracket random_bracket(std::mt19937_64& rng, bool positive_coeffs, std::size_t shape_index) {
    const auto& [dim, slots] = bracket_shapes()[shape_index % bracket_shapes().size()];
    std::vector<BracketTerm> terms;
    for (const auto& s : slots) {
        Rational c = positive_coeffs ? random_positive_rational(rng) : random_rational(rng);
        terms.push_back({s[0], s[1], s[2], c});
    }
    return LieBracket::validate(dim, std::move(terms));
}

QVector scale(const QVector& v, const Rational& c) {
    QVector out = v;
    for (Rational& x : out) x *= c;
    return out;
}

std::string describe(const StrictSystem& s) {
    return system_to_text(s);
}

std::string describe_vertices(const std::vector<QVector>& vs) {
    std::string out;
    for (const QVector& v : vs) out += to_string(v) + " ";
    return out;
}

// Strictly interior points of the cone: positive combinations of the
// trace-one slice vertices, rescaled. The slice of every catalog cone is a
// bounded polytope, so this covers the whole interior.
std::vector<QVector> interior_points(const ConeSpec& spec, std::size_t count, std::uint64_t seed) {
    AffineForm tr{to_rational(spec.torus.trace_form()), Rational(1)};
    SlicePolytope slice = slice_vertices(spec.system, tr);
    if (slice.vertices.empty()) throw DomainError("catalog cone slice has no vertices");
    std::mt19937_64 rng(seed);
    std::vector<QVector> points;
    while (points.size() < count) {
        QVector p(spec.system.nvars(), Rational(0));
        Rational total = 0;
        for (const QVector& v : slice.vertices) {
            Rational w = random_positive_rational(rng);
            total += w;
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += w * v[i];
        }
        for (Rational& x : p) x /= total;
        points.push_back(scale(p, random_positive_rational(rng)));
    }
    return points;
}

// Exact feasibility of the one-variable system obtained by fixing every
// coordinate except `var` of a 1-lower-dimensional point y: the surviving
// interval for the eliminated variable is computable exactly.
bool interval_oracle(const StrictSystem& s, std::size_t var, const QVector& y) {
    bool has_lower = false, has_upper = false;
    Rational lower = 0, upper = 0;
    for (const IVec& f : s.forms()) {
        Rational rest = 0;
        std::size_t w = 0;
        for (std::size_t i = 0; i < s.nvars(); ++i) {
            if (i == var) continue;
            rest += Rational(f[i]) * y[w++];
        }
        const Int& c = f[var];
        if (c == 0) {
            if (rest <= 0) return false;
        } else if (c > 0) {
            Rational bound = -rest / Rational(c);
            if (!has_lower || bound > lower) lower = bound;
            has_lower = true;
        } else {
            Rational bound = -rest / Rational(c);
            if (!has_upper || bound < upper) upper = bound;
            has_upper = true;
        }
    }
    if (has_lower && has_upper) return lower < upper;
    return true;
}

// ---------------------------------------------------------------------------
// Check harness.

class Harness {
public:
    void check(const std::string& criterion, const std::string& name,
               const std::function<void(std::string&)>& body) {
        CheckResult r{criterion, name, true, ""};
        try {
            std::string detail;
            body(detail);
            r.detail = detail;
            r.passed = detail.empty();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

void require(std::string& detail, bool cond, const std::string& message) {
    if (!cond && detail.empty()) detail = message;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& criterion_titles() {
    static const std::vector<std::pair<std::string, std::string>> titles = {
        {"1", "dimension-5 cones match the reference inequality sets"},
        {"2", "n6 trace-1 slice has the reference vertices and 5 facets"},
        {"3", "Heisenberg pipeline, closed form, counts and slices"},
        {"4", "filiform pipeline equals the closed form for n = 4..10"},
        {"5", "product law reproduces n7 and n8 from h3 and L4"},
        {"6", "moment map properties (trace, scaling, equivariance, nice)"},
        {"7", "necessary condition on interior points; reference rejection"},
        {"8", "polyhedral kernel properties (minimize, relaxed build, FM)"},
    };
    return titles;
}

std::vector<CheckResult> run_verification() {
    Harness h;

    // -- criterion 1: dimension-5 cones ------------------------------------
    for (std::string id : {"n1", "n2", "n3", "n5", "n6", "n7", "n8"}) {
        h.check("1", "cone " + id, [&, id](std::string& detail) {
            CatalogEntry e = get(id);
            ConeSpec built = build_cone(e.bracket, id);
            const StrictSystem& expected = *e.expected_cone;  // printed == canonical here
            require(detail, built.system == expected,
                    "got " + describe(built.system) + " expected " + describe(expected));
            require(detail, systems_equal(built.system, expected), "solution sets differ");
        });
    }

    // -- criterion 2: n6 slice ----------------------------------------------
    h.check("2", "slice n6 at tr = 1", [&](std::string& detail) {
        CatalogEntry e = get("n6");
        ConeSpec built = build_cone(e.bracket, "n6");
        AffineForm tr{to_rational(built.torus.trace_form()), Rational(1)};
        SlicePolytope s = slice_vertices(built.system, tr);
        auto q = [](int num, int den) { return Rational(num, den); };
        std::vector<QVector> expected = {
            {q(-1, 3), q(1, 3), q(2, 3)}, {q(-1, 3), q(2, 3), q(1, 3)}, {q(0, 1), q(0, 1), q(1, 2)},
            {q(0, 1), q(1, 2), q(0, 1)}, {q(1, 1), q(-1, 2), q(-1, 2)}};
        require(detail, s.vertices == expected,
                "got vertices " + describe_vertices(s.vertices));
        require(detail, s.facets.size() == 5,
                "got " + std::to_string(s.facets.size()) + " facets, expected 5");
    });

    // -- criterion 3: Heisenberg --------------------------------------------
    for (int n = 1; n <= 3; ++n) {
        h.check("3", "heisenberg(" + std::to_string(n) + ") pipeline equals closed form",
                [&, n](std::string& detail) {
                    CatalogEntry e = get("heisenberg(" + std::to_string(n) + ")");
                    ConeSpec built = build_cone(e.bracket, e.id);
                    StrictSystem expected = *e.expected_cone_canonical();
                    require(detail, systems_equal(built.system, expected),
                            "got " + describe(built.system));
                });
    }
    h.check("3", "heisenberg closed form emits 3^n forms for n <= 6", [&](std::string& detail) {
        std::size_t expected = 1;
        for (int n = 1; n <= 6; ++n) {
            expected *= 3;
            std::size_t got = heisenberg_closed_form(n).forms().size();
            require(detail, got == expected,
                    "n = " + std::to_string(n) + ": got " + std::to_string(got) + " forms, expected " +
                        std::to_string(expected));
        }
    });
    h.check("3", "h5 slice at d3 = 1 has the 8 reference vertices", [&](std::string& detail) {
        StrictSystem sys = heisenberg_closed_form(2);
        AffineForm norm{{Rational(0), Rational(0), Rational(1)}, Rational(1)};
        SlicePolytope s = slice_vertices(sys, norm);
        auto v = [](int a, int b) { return QVector{Rational(a), Rational(b), Rational(1)}; };
        std::vector<QVector> expected = {v(-1, 0), v(-1, 1), v(0, -1), v(0, 2),
                                         v(1, -1), v(1, 2),  v(2, 0),  v(2, 1)};
        require(detail, s.vertices == expected, "got vertices " + describe_vertices(s.vertices));
        require(detail, s.facets.size() == 8,
                "got " + std::to_string(s.facets.size()) + " facets, expected 8");
    });
    h.check("3", "h7 slice at d4 = 1 has 24 vertices and 26 facets", [&](std::string& detail) {
        StrictSystem sys = heisenberg_closed_form(3);
        AffineForm norm{{Rational(0), Rational(0), Rational(0), Rational(1)}, Rational(1)};
        SlicePolytope s = slice_vertices(sys, norm);
        require(detail, s.vertices.size() == 24,
                "got " + std::to_string(s.vertices.size()) + " vertices, expected 24");
        require(detail, s.facets.size() == 26,
                "got " + std::to_string(s.facets.size()) + " facets, expected 26");
    });

    // -- criterion 4: filiform ----------------------------------------------
    for (int n = 4; n <= 10; ++n) {
        h.check("4", "filiform(" + std::to_string(n) + ") pipeline equals closed form",
                [&, n](std::string& detail) {
                    ConeSpec built = build_cone(filiform_bracket(n));
                    StrictSystem expected = filiform_closed_form(n);
                    require(detail, built.system == expected,
                            "got " + describe(built.system) + " expected " + describe(expected));
                });
    }
    h.check("4", "L5 cone equals the n1 cone", [&](std::string& detail) {
        ConeSpec l5 = build_cone(filiform_bracket(5));
        ConeSpec n1 = build_cone(get("n1").bracket);
        require(detail, l5.system == n1.system && systems_equal(l5.system, n1.system),
                "systems differ");
    });

    // -- criterion 5: product law --------------------------------------------
    h.check("5", "n7 cone equals h3 cone x R^2", [&](std::string& detail) {
        ConeSpec n7 = build_cone(get("n7").bracket, "n7");
        ConeSpec prod = product_cone(build_cone(heisenberg_bracket(1), "h3"), 2);
        require(detail, n7.system == prod.system && systems_equal(n7.system, prod.system),
                "got " + describe(prod.system) + " expected " + describe(n7.system));
        require(detail, n7.torus.columns() == prod.torus.columns(), "product torus differs");
    });
    h.check("5", "n8 cone equals L4 cone x R", [&](std::string& detail) {
        ConeSpec n8 = build_cone(get("n8").bracket, "n8");
        ConeSpec prod = product_cone(build_cone(filiform_bracket(4), "L4"), 1);
        require(detail, n8.system == prod.system && systems_equal(n8.system, prod.system),
                "got " + describe(prod.system) + " expected " + describe(n8.system));
        require(detail, n8.torus.columns() == prod.torus.columns(), "product torus differs");
    });

    // -- criterion 6: moment map ----------------------------------------------
    h.check("6", "tr m(mu) = -1 on 500 random brackets of dim <= 5", [&](std::string& detail) {
        std::mt19937_64 rng(61001);
        for (int t = 0; t < 500; ++t) {
            LieBracket mu = random_bracket(rng, false, static_cast<std::size_t>(t));
            require(detail, moment_map(mu).trace() == Rational(-1),
                    "trace != -1 at sample " + std::to_string(t));
            if (!detail.empty()) return;
        }
    });
    h.check("6", "m(c mu) = m(mu) for c != 0", [&](std::string& detail) {
        std::mt19937_64 rng(61002);
        for (int t = 0; t < 50; ++t) {
            std::size_t shape = static_cast<std::size_t>(t);
            LieBracket mu = random_bracket(rng, false, shape);
            Rational c = random_rational(rng);
            std::vector<BracketTerm> scaled = mu.terms();
            for (BracketTerm& term : scaled) term.c *= c;
            LieBracket cmu = LieBracket::validate(mu.dim(), std::move(scaled));
            require(detail, moment_map(cmu) == moment_map(mu),
                    "scaling changed the moment matrix at sample " + std::to_string(t));
            if (!detail.empty()) return;
        }
    });
    h.check("6", "signed-permutation equivariance", [&](std::string& detail) {
        std::mt19937_64 rng(61003);
        for (int t = 0; t < 50; ++t) {
            LieBracket mu = random_bracket(rng, false, static_cast<std::size_t>(t));
            const int n = mu.dim();
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> signs(n);
            std::uniform_int_distribution<int> coin(0, 1);
            for (int& s : signs) s = coin(rng) ? 1 : -1;
            SymMatrix lhs = moment_map(transform_signed_permutation(mu, perm, signs));
            SymMatrix rhs = moment_map(mu);
            for (int r = 1; r <= n && detail.empty(); ++r)
                for (int s = 1; s <= n && detail.empty(); ++s)
                    require(detail,
                            lhs.at(perm[r - 1] - 1, perm[s - 1] - 1) ==
                                Rational(signs[r - 1] * signs[s - 1]) * rhs.at(r - 1, s - 1),
                            "equivariance fails at sample " + std::to_string(t));
            if (!detail.empty()) return;
        }
    });
    h.check("6", "nice shortcut equals the moment map (random positive coefficients)",
            [&](std::string& detail) {
                std::mt19937_64 rng(61004);
                for (int t = 0; t < 200; ++t) {
                    LieBracket mu = random_bracket(rng, true, static_cast<std::size_t>(t));
                    if (!is_nice_basis(mu)) continue;
                    require(detail, moment_map_nice(mu) == moment_map(mu),
                            "shortcut differs at sample " + std::to_string(t));
                    if (!detail.empty()) return;
                }
            });

    // -- criterion 7: necessary condition -------------------------------------
    h.check("7", "necessary condition holds on 200 interior points per catalog cone",
            [&](std::string& detail) {
                std::uint64_t seed = 71001;
                for (const std::string& id : catalog_ids()) {
                    CatalogEntry e = get(id);
                    ConeSpec built = build_cone(e.bracket, id);
                    TorusParam torus = diagonal_derivation_space(e.bracket);
                    for (const QVector& p : interior_points(built, 200, seed++)) {
                        require(detail, contains(built.system, p),
                                id + ": sampled point not interior");
                        require(detail, necessary_condition(e.bracket, torus, p),
                                id + ": necessary condition fails at " + to_string(p));
                        require(detail, cone_membership(e.bracket, p),
                                id + ": direct membership disagrees at " + to_string(p));
                        if (!detail.empty()) return;
                    }
                }
            });
    h.check("7", "Diag(-1,2,1,0,-1) is rejected for n1", [&](std::string& detail) {
        CatalogEntry e = get("n1");
        QVector p{Rational(-1), Rational(2)};
        require(detail, !cone_membership(e.bracket, p), "membership accepted the reference point");
        require(detail, !necessary_condition(e.bracket, diagonal_derivation_space(e.bracket), p),
                "necessary condition accepted the reference point");
        require(detail, !contains(build_cone(e.bracket).system, p),
                "cone system contains the reference point");
    });

    // -- criterion 8: polyhedral kernel ---------------------------------------
    h.check("8", "minimize preserves solution sets on catalog systems", [&](std::string& detail) {
        std::vector<StrictSystem> systems;
        for (const std::string& id : catalog_ids()) {
            CatalogEntry e = get(id);
            TorusParam torus = diagonal_derivation_space(e.bracket);
            std::vector<Weight> weights = weights_of(e.bracket);
            StrictSystem raw = assemble_cone_system(weights, torus);
            systems.push_back(eliminate_hull_coefficients(std::move(raw), weights.size()));
            if (e.expected_cone) systems.push_back(*e.expected_cone);
        }
        for (int n = 1; n <= 3; ++n) systems.push_back(heisenberg_closed_form(n));
        for (std::size_t i = 0; i < systems.size(); ++i) {
            StrictSystem m = minimize(systems[i]);
            require(detail, systems_equal(systems[i], m),
                    "minimize changed the solution set of system " + std::to_string(i));
            require(detail, m.forms().size() <= systems[i].forms().size(), "minimize grew a system");
            if (!detail.empty()) return;
        }
    });
    h.check("8", "strict and relaxed hull-coefficient builds agree", [&](std::string& detail) {
        for (const std::string& id : catalog_ids()) {
            CatalogEntry e = get(id);
            ConeSpec strict = build_cone(e.bracket, id);
            auto [relaxed, weak] = build_cone_relaxed(e.bracket);
            for (const IVec& w : weak) {
                require(detail, implies(relaxed, w),
                        id + ": weak projected form not implied by the strict part");
                if (!detail.empty()) return;
            }
            require(detail, systems_equal(minimize(relaxed), strict.system),
                    id + ": relaxed build differs");
            if (!detail.empty()) return;
        }
    });
    h.check("8", "FM projection agrees with the exact interval oracle", [&](std::string& detail) {
        std::mt19937_64 rng(81001);
        std::uniform_int_distribution<int> coef(-3, 3);
        std::uniform_int_distribution<int> nforms(2, 6);
        int checked = 0;
        for (int t = 0; t < 60; ++t) {
            std::vector<IVec> forms;
            int m = nforms(rng);
            for (int f = 0; f < m; ++f) {
                IVec v(3);
                bool zero = true;
                for (Int& x : v) {
                    int c = coef(rng);
                    x = c;
                    if (c != 0) zero = false;
                }
                if (zero) v[0] = 1;
                forms.push_back(std::move(v));
            }
            StrictSystem s({"x", "y", "z"}, std::move(forms));
            for (std::size_t var = 0; var < 3; ++var) {
                StrictSystem projected = fm_eliminate(s, var);
                for (int num1 = -2; num1 <= 2; ++num1) {
                    for (int num2 = -2; num2 <= 2; ++num2) {
                        QVector y{Rational(num1, 2), Rational(num2, 3)};
                        bool oracle = interval_oracle(s, var, y);
                        bool fm = contains(projected, y);
                        require(detail, oracle == fm,
                                "projection mismatch at sample " + std::to_string(t));
                        if (!detail.empty()) return;
                        ++checked;
                    }
                }
            }
        }
        require(detail, checked > 1000, "too few oracle comparisons ran");
    });

    return h.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace nilcone
