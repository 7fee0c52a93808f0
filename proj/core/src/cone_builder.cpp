#include "nilcone/cone_builder.hpp"

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

std::vector<std::string> hull_and_torus_names(std::size_t k, std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= m; ++i) names.push_back("d" + std::to_string(i));
    return names;
}

void check_preconditions(const LieBracket& mu) {
    if (!is_nilpotent(mu)) throw DomainError("cone construction requires a nilpotent bracket");
    if (!is_nice_basis(mu)) throw NotNice("cone construction requires a nice basis");
}

// Rows of the defining system over (a_1..a_k, d_1..d_m), as tagged forms so
// both the strict and the relaxed variant can share them.
std::vector<detail::TaggedForm> defining_rows(const std::vector<Weight>& weights,
                                              const TorusParam& torus) {
    const std::size_t k = weights.size();
    const std::size_t m = static_cast<std::size_t>(torus.rank());
    const std::size_t n = static_cast<std::size_t>(torus.dim());
    std::vector<detail::TaggedForm> rows;

    // E_jj > 0: (P p)_j - sum_i a_i (F_i)_jj > 0.
    for (std::size_t j = 0; j < n; ++j) {
        IVec row(k + m, Int(0));
        for (std::size_t i = 0; i < k; ++i) row[i] = -Int(weights[i].diag[j]);
        IVec entry = torus.entry_form(j);
        for (std::size_t c = 0; c < m; ++c) row[k + c] = entry[c];
        if (is_zero(row)) throw EmptyCone("a diagonal entry is identically zero");
        rows.push_back({std::move(row), true});
    }

    // tr D(p) > 0.
    IVec tr = torus.trace_form();
    IVec trace_row(k + m, Int(0));
    for (std::size_t c = 0; c < m; ++c) trace_row[k + c] = tr[c];
    if (is_zero(trace_row)) throw EmptyCone("the trace vanishes on the whole torus");
    rows.push_back({std::move(trace_row), true});

    return rows;
}

}  // namespace

StrictSystem assemble_cone_system(const std::vector<Weight>& weights, const TorusParam& torus) {
    const std::size_t k = weights.size();
    const std::size_t m = static_cast<std::size_t>(torus.rank());
    std::vector<IVec> forms;
    for (std::size_t i = 0; i < k; ++i) {
        IVec ai(k + m, Int(0));
        ai[i] = 1;
        forms.push_back(std::move(ai));
    }
    for (auto& row : defining_rows(weights, torus)) forms.push_back(std::move(row.v));
    return StrictSystem(hull_and_torus_names(k, m), std::move(forms));
}

StrictSystem eliminate_hull_coefficients(StrictSystem s, std::size_t count) {
    for (std::size_t i = count; i-- > 0;) s = fm_eliminate(s, i);
    return s;
}

ConeSpec build_cone(const LieBracket& mu, const std::string& algebra_id) {
    check_preconditions(mu);
    TorusParam torus = diagonal_derivation_space(mu);
    if (torus.rank() == 0) throw DomainError("torus of diagonal derivations is trivial");
    std::vector<Weight> weights = weights_of(mu);

    StrictSystem raw = assemble_cone_system(weights, torus);
    StrictSystem projected = eliminate_hull_coefficients(std::move(raw), weights.size());
    if (!is_feasible(projected)) throw EmptyCone("no positive-trace derivation exists");
    return ConeSpec{algebra_id, std::move(torus), minimize(projected), std::move(weights)};
}

bool cone_membership(const LieBracket& mu, const QVector& p) {
    check_preconditions(mu);
    TorusParam torus = diagonal_derivation_space(mu);
    std::vector<Weight> weights = weights_of(mu);
    QVector d = torus.diag(p);

    Rational tr = 0;
    for (const Rational& x : d) tr += x;
    if (tr <= 0) return false;

    // Feasibility in the hull coefficients alone, homogenized with one
    // scaling variable t > 0 carrying the constants d_j.
    const std::size_t k = weights.size();
    std::vector<QVector> forms;
    for (std::size_t i = 0; i < k; ++i) {
        QVector ai(k + 1, Rational(0));
        ai[i] = 1;
        forms.push_back(std::move(ai));
    }
    QVector t_pos(k + 1, Rational(0));
    t_pos[k] = 1;
    forms.push_back(std::move(t_pos));
    for (int j = 0; j < torus.dim(); ++j) {
        QVector row(k + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) row[i] = -Rational(weights[i].diag[j]);
        row[k] = d[j];
        if (is_zero(row)) return false;  // E_jj = 0 cannot be positive
        forms.push_back(std::move(row));
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("t");
    return is_feasible(StrictSystem::from_rational_forms(std::move(names), forms));
}

ConeSpec product_cone(const ConeSpec& spec, int extra_abelian) {
    if (extra_abelian < 0) throw BadParameter("negative number of abelian directions");
    if (extra_abelian == 0) return spec;
    const int n = spec.torus.dim();
    const int m = spec.torus.rank();

    std::vector<IVec> columns;
    for (const IVec& c : spec.torus.columns()) {
        IVec padded = c;
        padded.resize(n + extra_abelian, Int(0));
        columns.push_back(std::move(padded));
    }
    for (int q = 0; q < extra_abelian; ++q) {
        IVec e(n + extra_abelian, Int(0));
        e[n + q] = 1;
        columns.push_back(std::move(e));
    }

    std::vector<std::string> extra_names;
    for (int q = 1; q <= extra_abelian; ++q) extra_names.push_back("d" + std::to_string(m + q));
    std::vector<IVec> positivity;
    for (int q = 0; q < extra_abelian; ++q) {
        IVec e(static_cast<std::size_t>(extra_abelian), Int(0));
        e[q] = 1;
        positivity.push_back(std::move(e));
    }
    StrictSystem extension(std::move(extra_names), std::move(positivity));

    return ConeSpec{spec.algebra + "+R^" + std::to_string(extra_abelian),
                    TorusParam(n + extra_abelian, std::move(columns)),
                    product(spec.system, extension), spec.weights};
}

std::pair<StrictSystem, std::vector<IVec>> build_cone_relaxed(const LieBracket& mu) {
    check_preconditions(mu);
    TorusParam torus = diagonal_derivation_space(mu);
    if (torus.rank() == 0) throw DomainError("torus of diagonal derivations is trivial");
    std::vector<Weight> weights = weights_of(mu);
    const std::size_t k = weights.size();
    const std::size_t m = static_cast<std::size_t>(torus.rank());

    detail::TaggedSystem sys;
    sys.nvars = k + m;
    for (std::size_t i = 0; i < k; ++i) {
        IVec ai(k + m, Int(0));
        ai[i] = 1;
        sys.forms.push_back({std::move(ai), false});  // a_i >= 0
    }
    if (k > 0) {
        IVec sum(k + m, Int(0));
        for (std::size_t i = 0; i < k; ++i) sum[i] = 1;
        sys.forms.push_back({std::move(sum), true});  // sum a_i > 0
    }
    for (auto& row : defining_rows(weights, torus)) sys.forms.push_back(std::move(row));

    for (std::size_t i = k; i-- > 0;) sys = detail::eliminate(sys, i);

    std::vector<IVec> strict, weak;
    for (auto& f : sys.forms) (f.strict ? strict : weak).push_back(std::move(f.v));
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("d" + std::to_string(i));
    StrictSystem strict_part =
        StrictSystem::with_marker(std::move(names), std::move(strict), sys.contradiction);
    return {std::move(strict_part), std::move(weak)};
}

}  // namespace nilcone
