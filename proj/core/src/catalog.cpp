#include "nilcone/catalog.hpp"

#include "nilcone/errors.hpp"

#include <array>

namespace nilcone {

namespace {

LieBracket unit_bracket(int dim, std::vector<std::array<int, 3>> slots) {
    std::vector<BracketTerm> terms;
    for (const auto& s : slots) terms.push_back({s[0], s[1], s[2], Rational(1)});
    return LieBracket::validate(dim, std::move(terms));
}

std::vector<std::string> d_names(int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("d" + std::to_string(i));
    return names;
}

IVec ivec(std::vector<int> v) {
    IVec out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x);
    return out;
}

std::vector<IVec> int_forms(std::vector<std::vector<int>> forms) {
    std::vector<IVec> out;
    out.reserve(forms.size());
    for (auto& f : forms) out.push_back(ivec(f));
    return out;
}

TorusParam heisenberg_printed_torus(int n) {
    const int dim = 2 * n + 1;
    std::vector<IVec> cols;
    for (int i = 1; i <= n; ++i) {
        IVec c(dim, Int(0));
        c[2 * i - 2] = 1;
        c[2 * i - 1] = -1;
        cols.push_back(std::move(c));
    }
    IVec last(dim, Int(0));
    for (int i = 1; i <= n; ++i) last[2 * i - 1] = 1;
    last[dim - 1] = 1;
    cols.push_back(std::move(last));
    return TorusParam(dim, std::move(cols));
}

TorusParam filiform_printed_torus(int n) {
    IVec c1(n, Int(0)), c2(n, Int(0));
    c1[0] = 1;
    c2[1] = 1;
    for (int j = 3; j <= n; ++j) {
        c1[j - 1] = j - 2;
        c2[j - 1] = 1;
    }
    return TorusParam(n, {std::move(c1), std::move(c2)});
}

CatalogEntry make_entry(std::string id, std::string description, LieBracket bracket,
                        TorusParam printed, std::optional<StrictSystem> expected) {
    TorusParam canonical = diagonal_derivation_space(bracket);
    QMatrix change = torus_coordinate_change(printed, canonical);
    return CatalogEntry{std::move(id),     std::move(description), std::move(bracket),
                        std::move(printed), std::move(change),      std::move(expected)};
}

CatalogEntry make_heisenberg(std::string id, int n) {
    if (n < 1) throw BadParameter("heisenberg requires n >= 1");
    std::optional<StrictSystem> expected;
    if (n <= 6) expected = heisenberg_closed_form(n);
    return make_entry(std::move(id), "Heisenberg h" + std::to_string(2 * n + 1),
                      heisenberg_bracket(n), heisenberg_printed_torus(n), std::move(expected));
}

CatalogEntry make_filiform(std::string id, int n) {
    if (n < 3) throw BadParameter("filiform requires n >= 3");
    std::optional<StrictSystem> expected;
    if (n >= 4) expected = filiform_closed_form(n);
    return make_entry(std::move(id), "filiform L" + std::to_string(n), filiform_bracket(n),
                      filiform_printed_torus(n), std::move(expected));
}

}  // namespace

std::optional<StrictSystem> CatalogEntry::expected_cone_canonical() const {
    if (!expected_cone) return std::nullopt;
    return substitute_coordinates(*expected_cone, coordinate_change,
                                  d_names(static_cast<int>(coordinate_change.cols())));
}

LieBracket heisenberg_bracket(int n) {
    if (n < 1) throw BadParameter("heisenberg requires n >= 1");
    std::vector<std::array<int, 3>> slots;
    for (int i = 1; i <= n; ++i) slots.push_back({2 * i - 1, 2 * i, 2 * n + 1});
    return unit_bracket(2 * n + 1, std::move(slots));
}

LieBracket filiform_bracket(int n) {
    if (n < 3) throw BadParameter("filiform requires n >= 3");
    std::vector<std::array<int, 3>> slots;
    for (int i = 2; i < n; ++i) slots.push_back({1, i, i + 1});
    return unit_bracket(n, std::move(slots));
}

StrictSystem heisenberg_closed_form(int n) {
    if (n < 1) throw BadParameter("heisenberg closed form requires n >= 1");
    if (n > 12) throw BadParameter("heisenberg closed form limited to n <= 12");
    std::vector<IVec> forms;
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        // Iterate over sign patterns of the chosen subset.
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (subset & (1u << i)) members.push_back(i);
        const std::size_t k = members.size();
        for (unsigned signs = 0; signs < (1u << k); ++signs) {
            IVec f(n + 1, Int(0));
            int minus = 0;
            for (std::size_t t = 0; t < k; ++t) {
                if (signs & (1u << t)) {
                    f[members[t]] = -1;
                    ++minus;
                } else {
                    f[members[t]] = 1;
                }
            }
            f[n] = minus + 1;
            forms.push_back(std::move(f));
        }
    }
    return StrictSystem(d_names(n + 1), std::move(forms));
}

StrictSystem filiform_closed_form(int n) {
    if (n < 4) throw BadParameter("filiform closed form requires n >= 4");
    std::vector<IVec> forms;
    forms.push_back(IVec{Int(n - 2), Int(1)});
    forms.push_back(IVec{Int(n - 1) * Int(n - 2) / 2, Int(n - 1)});
    return StrictSystem(d_names(2), std::move(forms));
}

QMatrix torus_coordinate_change(const TorusParam& printed, const TorusParam& canonical) {
    if (printed.dim() != canonical.dim() || printed.rank() != canonical.rank())
        throw DomainError("torus parametrizations of different shape");
    const int n = printed.dim();
    const int m = printed.rank();
    QMatrix p(n, m);
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < n; ++r) p.at(r, c) = Rational(printed.columns()[c][r]);
    QMatrix s(m, m);
    for (int c = 0; c < m; ++c) {
        QVector target(n);
        for (int r = 0; r < n; ++r) target[r] = Rational(canonical.columns()[c][r]);
        auto col = solve_unique(p, target);
        if (!col) throw DomainError("torus parametrizations span different subspaces");
        for (int r = 0; r < m; ++r) s.at(r, c) = (*col)[r];
    }
    if (rank(s) != static_cast<std::size_t>(m))
        throw DomainError("degenerate torus coordinate change");
    return s;
}

CatalogEntry get(const std::string& id) {
    if (id == "n1")
        return make_entry("n1", "filiform L5",
                          unit_bracket(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}),
                          TorusParam(5, {ivec({1, 0, 1, 2, 3}), ivec({0, 1, 1, 1, 1})}),
                          StrictSystem(d_names(2), int_forms({{3, 1}, {3, 2}})));
    if (id == "n2")
        return make_entry("n2", "",
                          unit_bracket(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}}),
                          TorusParam(5, {ivec({1, 2, 3, 4, 5})}),
                          StrictSystem(d_names(1), int_forms({{1}})));
    if (id == "n3")
        return make_entry("n3", "",
                          unit_bracket(5, {{1, 2, 4}, {2, 3, 5}, {1, 4, 5}}),
                          TorusParam(5, {ivec({1, 0, 2, 1, 2}), ivec({0, 1, 0, 1, 1})}),
                          StrictSystem(d_names(2), int_forms({{4, 1}, {1, 1}})));
    if (id == "n4") {
        CatalogEntry h = make_heisenberg("n4", 2);
        h.description = "Heisenberg h5";
        return h;
    }
    if (id == "n5")
        return make_entry("n5", "",
                          unit_bracket(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}}),
                          TorusParam(5, {ivec({1, 0, 1, 2, 1}), ivec({0, 1, 1, 1, 2})}),
                          StrictSystem(d_names(2), int_forms({{1, 2}, {2, 1}})));
    if (id == "n6")
        return make_entry(
            "n6", "", unit_bracket(5, {{1, 2, 4}, {1, 3, 5}}),
            TorusParam(5, {ivec({1, 0, 0, 1, 1}), ivec({0, 1, 0, 1, 0}), ivec({0, 0, 1, 0, 1})}),
            StrictSystem(d_names(3),
                         int_forms({{1, 1, 0}, {1, 0, 1}, {1, 0, 2}, {1, 2, 0}, {3, 1, 1}})));
    if (id == "n7")
        return make_entry(
            "n7", "h3 + R^2", unit_bracket(5, {{1, 2, 3}}),
            TorusParam(5, {ivec({1, 0, 1, 0, 0}), ivec({0, 1, 1, 0, 0}), ivec({0, 0, 0, 1, 0}),
                           ivec({0, 0, 0, 0, 1})}),
            StrictSystem(d_names(4),
                         int_forms({{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})));
    if (id == "n8")
        return make_entry(
            "n8", "L4 + R", unit_bracket(5, {{1, 2, 3}, {1, 3, 4}}),
            TorusParam(5, {ivec({1, 0, 1, 2, 0}), ivec({0, 1, 1, 1, 0}), ivec({0, 0, 0, 0, 1})}),
            StrictSystem(d_names(3), int_forms({{2, 1, 0}, {1, 1, 0}, {0, 0, 1}})));
    if (id == "h3") return make_heisenberg("h3", 1);
    if (id == "h5") return make_heisenberg("h5", 2);
    if (id == "h7") return make_heisenberg("h7", 3);

    auto parse_family = [&](const std::string& prefix) -> std::optional<int> {
        if (id.size() <= prefix.size() + 2 || id.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        if (id[prefix.size()] != '(' || id.back() != ')') return std::nullopt;
        std::string num = id.substr(prefix.size() + 1, id.size() - prefix.size() - 2);
        if (num.empty()) throw BadParameter("missing parameter in '" + id + "'");
        for (char ch : num)
            if (ch < '0' || ch > '9') throw BadParameter("bad parameter in '" + id + "'");
        return std::stoi(num);
    };
    if (auto n = parse_family("heisenberg")) return make_heisenberg(id, *n);
    if (auto n = parse_family("filiform")) return make_filiform(id, *n);

    throw UnknownId("unknown catalog id '" + id +
                    "' (try: n1..n8, h3, h5, h7, heisenberg(n), filiform(n))");
}

std::vector<std::string> catalog_ids() {
    return {"n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8", "h3", "h5", "h7"};
}

}  // namespace nilcone
