#include "nilcone/polyhedra.hpp"

#include "nilcone/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nilcone {

namespace {

void sort_and_dedupe(std::vector<IVec>& forms) {
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
}

}  // namespace

StrictSystem::StrictSystem(std::vector<std::string> var_names, std::vector<IVec> forms)
    : names_(std::move(var_names)) {
    forms_.reserve(forms.size());
    for (const IVec& f : forms) {
        if (f.size() != names_.size()) throw UsageError("form length does not match variable count");
        if (is_zero(f)) throw DomainError("zero form in strict system");
        forms_.push_back(primitive_form(f));
    }
    sort_and_dedupe(forms_);
}

StrictSystem StrictSystem::from_rational_forms(std::vector<std::string> var_names,
                                               const std::vector<QVector>& forms) {
    std::vector<IVec> iforms;
    iforms.reserve(forms.size());
    for (const QVector& f : forms) {
        if (is_zero(f)) throw DomainError("zero form in strict system");
        iforms.push_back(primitive_form(f));
    }
    return StrictSystem(std::move(var_names), std::move(iforms));
}

StrictSystem StrictSystem::with_marker(std::vector<std::string> var_names, std::vector<IVec> forms,
                                       bool contradiction) {
    StrictSystem s(std::move(var_names), std::move(forms));
    s.contradiction_ = contradiction;
    return s;
}

namespace detail {

TaggedSystem eliminate(const TaggedSystem& s, std::size_t var) {
    if (var >= s.nvars) throw UsageError("eliminated variable out of range");
    TaggedSystem out;
    out.nvars = s.nvars - 1;
    out.contradiction = s.contradiction;

    auto drop_var = [var](const IVec& v) {
        IVec w;
        w.reserve(v.size() - 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != var) w.push_back(v[i]);
        return w;
    };

    std::vector<const TaggedForm*> pos, neg;
    // Keyed by primitive vector; strictness is OR-merged since l > 0 subsumes l >= 0.
    std::map<IVec, bool> derived;
    auto add = [&](IVec v, bool strict) {
        if (is_zero(v)) {
            if (strict) out.contradiction = true;
            return;  // weak empty sum 0 >= 0 is vacuous
        }
        IVec p = primitive_form(v);
        auto [it, inserted] = derived.try_emplace(std::move(p), strict);
        if (!inserted) it->second = it->second || strict;
    };

    for (const TaggedForm& f : s.forms) {
        if (f.v[var] > 0)
            pos.push_back(&f);
        else if (f.v[var] < 0)
            neg.push_back(&f);
        else
            add(drop_var(f.v), f.strict);
    }
    for (const TaggedForm* p : pos) {
        for (const TaggedForm* n : neg) {
            // (-n_var) * p + p_var * n cancels the variable with positive weights.
            Int a = -n->v[var];
            Int b = p->v[var];
            IVec combined(s.nvars - 1);
            std::size_t w = 0;
            for (std::size_t i = 0; i < s.nvars; ++i) {
                if (i == var) continue;
                combined[w++] = a * p->v[i] + b * n->v[i];
            }
            add(std::move(combined), p->strict || n->strict);
        }
    }
    out.forms.reserve(derived.size());
    for (auto& [v, strict] : derived) out.forms.push_back({v, strict});
    return out;
}

}  // namespace detail

StrictSystem fm_eliminate(const StrictSystem& s, std::size_t var) {
    if (var >= s.nvars()) throw UsageError("eliminated variable out of range");
    detail::TaggedSystem t;
    t.nvars = s.nvars();
    t.contradiction = s.contradictory();
    for (const IVec& f : s.forms()) t.forms.push_back({f, true});
    detail::TaggedSystem r = detail::eliminate(t, var);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < s.nvars(); ++i)
        if (i != var) names.push_back(s.var_names()[i]);
    std::vector<IVec> forms;
    forms.reserve(r.forms.size());
    for (auto& f : r.forms) forms.push_back(std::move(f.v));
    return StrictSystem::with_marker(std::move(names), std::move(forms), r.contradiction);
}

bool is_feasible(const StrictSystem& s) {
    if (s.contradictory()) return false;
    StrictSystem cur = s;
    while (cur.nvars() > 0) {
        if (cur.contradictory()) return false;
        if (cur.forms().empty()) return true;
        // Cheapest variable first: fewest positive*negative pairings.
        std::size_t best = 0;
        std::size_t best_cost = SIZE_MAX;
        for (std::size_t v = 0; v < cur.nvars(); ++v) {
            std::size_t p = 0, n = 0;
            for (const IVec& f : cur.forms()) {
                if (f[v] > 0) ++p;
                else if (f[v] < 0) ++n;
            }
            std::size_t cost = p * n;
            if (cost < best_cost) {
                best_cost = cost;
                best = v;
            }
        }
        cur = fm_eliminate(cur, best);
    }
    return !cur.contradictory();
}

bool contains(const StrictSystem& s, const QVector& x) {
    if (x.size() != s.nvars()) throw UsageError("point dimension does not match system");
    if (s.contradictory()) return false;
    for (const IVec& f : s.forms())
        if (dot(f, x) <= 0) return false;
    return true;
}

namespace detail {

std::optional<QVector> nonneg_solve(const QMatrix& a, const QVector& b) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (b.size() != rows) throw UsageError("nonneg_solve: size mismatch");

    // Phase-1 simplex tableau: original columns, one artificial per row, rhs.
    const std::size_t total = cols + rows;
    std::vector<QVector> t(rows, QVector(total + 1, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        bool flip = b[r] < 0;
        for (std::size_t c = 0; c < cols; ++c) t[r][c] = flip ? -a.at(r, c) : a.at(r, c);
        t[r][cols + r] = 1;
        t[r][total] = flip ? -b[r] : b[r];
        basis[r] = cols + r;
    }

    auto artificial_basic = [&](std::size_t r) { return basis[r] >= cols; };

    while (true) {
        // Reduced cost of column j for "minimize sum of artificials".
        std::size_t entering = total;
        for (std::size_t j = 0; j < total; ++j) {
            Rational reduced = (j >= cols) ? 1 : 0;
            for (std::size_t r = 0; r < rows; ++r)
                if (artificial_basic(r)) reduced -= t[r][j];
            if (reduced < 0) {
                entering = j;  // Bland: smallest improving index
                break;
            }
        }
        if (entering == total) break;

        std::size_t leaving = rows;
        Rational best_ratio = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][entering] <= 0) continue;
            Rational ratio = t[r][total] / t[r][entering];
            if (leaving == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving == rows) {
            // Unbounded improving direction cannot happen: the objective is
            // bounded below by zero. Defensive stop.
            return std::nullopt;
        }

        Rational piv = t[leaving][entering];
        for (std::size_t j = 0; j <= total; ++j) t[leaving][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leaving || t[r][entering] == 0) continue;
            Rational f = t[r][entering];
            for (std::size_t j = 0; j <= total; ++j) t[r][j] -= f * t[leaving][j];
        }
        basis[leaving] = entering;
    }

    Rational objective = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (artificial_basic(r)) objective += t[r][total];
    if (objective != 0) return std::nullopt;

    QVector z(cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] < cols) z[basis[r]] = t[r][total];
    return z;
}

}  // namespace detail

std::optional<QVector> conic_coefficients(const IVec& target, const std::vector<IVec>& generators) {
    const std::size_t n = target.size();
    QMatrix a(n, generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].size() != n) throw UsageError("generator length mismatch");
        for (std::size_t r = 0; r < n; ++r) a.at(r, g) = Rational(generators[g][r]);
    }
    QVector b(n);
    for (std::size_t r = 0; r < n; ++r) b[r] = Rational(target[r]);
    return detail::nonneg_solve(a, b);
}

bool implies(const StrictSystem& s, const IVec& form) {
    if (form.size() != s.nvars()) throw UsageError("form length does not match system");
    if (is_zero(form)) return false;  // 0 > 0 holds nowhere
    return conic_coefficients(form, s.forms()).has_value();
}

StrictSystem minimize(const StrictSystem& s) {
    if (!is_feasible(s)) throw InfeasibleInput("minimize requires a strictly feasible system");
    const auto& forms = s.forms();
    std::vector<bool> alive(forms.size(), true);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        std::vector<IVec> others;
        for (std::size_t j = 0; j < forms.size(); ++j)
            if (alive[j] && j != i) others.push_back(forms[j]);
        if (conic_coefficients(forms[i], others)) alive[i] = false;
    }
    std::vector<IVec> kept;
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (alive[i]) kept.push_back(forms[i]);
    return StrictSystem(s.var_names(), std::move(kept));
}

bool systems_equal(const StrictSystem& a, const StrictSystem& b) {
    if (a.nvars() != b.nvars()) throw UsageError("systems over different variable counts");
    if (!is_feasible(a) || !is_feasible(b))
        throw InfeasibleInput("systems_equal requires feasible systems");
    for (const IVec& f : a.forms())
        if (!implies(b, f)) return false;
    for (const IVec& f : b.forms())
        if (!implies(a, f)) return false;
    return true;
}

StrictSystem product(const StrictSystem& a, const StrictSystem& b) {
    std::vector<std::string> names = a.var_names();
    std::set<std::string> taken(names.begin(), names.end());
    for (std::string n : b.var_names()) {
        while (taken.count(n)) n += "'";
        taken.insert(n);
        names.push_back(std::move(n));
    }
    std::vector<IVec> forms;
    for (const IVec& f : a.forms()) {
        IVec v = f;
        v.resize(a.nvars() + b.nvars(), Int(0));
        forms.push_back(std::move(v));
    }
    for (const IVec& f : b.forms()) {
        IVec v(a.nvars(), Int(0));
        v.insert(v.end(), f.begin(), f.end());
        forms.push_back(std::move(v));
    }
    return StrictSystem::with_marker(std::move(names), std::move(forms),
                                     a.contradictory() || b.contradictory());
}

namespace {

// Recession direction check: is there x != 0 with all forms >= 0 and
// normal . x = 0? Scaling lets us pin some coordinate to +-1.
bool has_recession_direction(const StrictSystem& s, const QVector& normal) {
    const std::size_t n = s.nvars();
    const std::size_t m = s.forms().size();
    for (std::size_t j = 0; j < n; ++j) {
        for (int sigma : {1, -1}) {
            // Variables: u (n), w (n), slack (m); x = u - w.
            QMatrix a(m + 2, 2 * n + m);
            QVector b(m + 2, Rational(0));
            for (std::size_t f = 0; f < m; ++f) {
                for (std::size_t c = 0; c < n; ++c) {
                    a.at(f, c) = Rational(s.forms()[f][c]);
                    a.at(f, n + c) = -Rational(s.forms()[f][c]);
                }
                a.at(f, 2 * n + f) = -1;
            }
            for (std::size_t c = 0; c < n; ++c) {
                a.at(m, c) = normal[c];
                a.at(m, n + c) = -normal[c];
            }
            a.at(m + 1, j) = 1;
            a.at(m + 1, n + j) = -1;
            b[m + 1] = sigma;
            if (detail::nonneg_solve(a, b)) return true;
        }
    }
    return false;
}

}  // namespace

SlicePolytope slice_vertices(const StrictSystem& s, const AffineForm& normalization) {
    const std::size_t n = s.nvars();
    if (n > 4) throw TooManyVars("slice enumeration supports at most 4 variables");
    if (normalization.normal.size() != n) throw UsageError("normalization dimension mismatch");
    if (is_zero(normalization.normal)) throw DomainError("zero normalization form");
    if (!is_feasible(s)) throw InfeasibleInput("slice of an infeasible system");
    if (has_recession_direction(s, normalization.normal))
        throw Unbounded("slice is unbounded");

    SlicePolytope out;
    out.nvars = n;
    out.normalization = normalization;

    const auto& forms = s.forms();
    const std::size_t m = forms.size();

    // Brute force: every (n-1)-subset of forms, intersected with the plane.
    std::set<QVector> seen;
    auto try_subset = [&](const std::vector<std::size_t>& subset) {
        QMatrix mat(subset.size() + 1, n);
        QVector rhs(subset.size() + 1, Rational(0));
        for (std::size_t r = 0; r < subset.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) mat.at(r, c) = Rational(forms[subset[r]][c]);
        for (std::size_t c = 0; c < n; ++c) mat.at(subset.size(), c) = normalization.normal[c];
        rhs[subset.size()] = normalization.value;
        auto v = solve_unique(mat, rhs);
        if (!v) return;
        for (const IVec& f : forms)
            if (dot(f, *v) < 0) return;
        seen.insert(*v);
    };

    if (n == 1) {
        try_subset({});
    } else {
        // Enumerate combinations of size n-1 from m forms.
        std::vector<std::size_t> comb(n - 1);
        for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = i;
        if (m >= n - 1) {
            while (true) {
                try_subset(comb);
                std::size_t i = comb.size();
                while (i > 0 && comb[i - 1] == m - (comb.size() - (i - 1))) --i;
                if (i == 0) break;
                ++comb[i - 1];
                for (std::size_t j = i; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }
    out.vertices.assign(seen.begin(), seen.end());

    // Facet count: substitute the plane into each form and drop the
    // trivialized and redundant ones.
    std::size_t pivot = n;
    for (std::size_t c = n; c-- > 0;) {
        if (normalization.normal[c] != 0) {
            pivot = c;
            break;
        }
    }
    // Affine forms (c0, c...) over the remaining coordinates, meaning
    // c0 + c . y > 0 on the slice.
    std::map<IVec, IVec> affine_to_original;
    bool slice_open_nonempty = true;
    for (const IVec& f : forms) {
        QVector sub(n, Rational(0));  // position 0 = constant, 1.. = coords except pivot
        Rational factor = Rational(f[pivot]) / normalization.normal[pivot];
        sub[0] = factor * normalization.value;
        std::size_t w = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (c == pivot) continue;
            sub[w++] = Rational(f[c]) - factor * normalization.normal[c];
        }
        bool constant = true;
        for (std::size_t c = 1; c < n; ++c)
            if (sub[c] != 0) constant = false;
        if (constant) {
            if (sub[0] <= 0) slice_open_nonempty = false;
            continue;  // "c0 > 0" carries no facet
        }
        affine_to_original.try_emplace(primitive_form(sub), f);
    }
    if (slice_open_nonempty && !out.vertices.empty()) {
        std::vector<IVec> affine;
        for (const auto& [af, orig] : affine_to_original) affine.push_back(af);
        IVec trivial(n, Int(0));
        trivial[0] = 1;
        for (const auto& [af, orig] : affine_to_original) {
            std::vector<IVec> others{trivial};
            for (const IVec& other : affine)
                if (other != af) others.push_back(other);
            if (!conic_coefficients(af, others)) out.facets.push_back(orig);
        }
        std::sort(out.facets.begin(), out.facets.end());
    }
    return out;
}

StrictSystem substitute_coordinates(const StrictSystem& over_q, const QMatrix& s,
                                    std::vector<std::string> p_names) {
    if (s.rows() != over_q.nvars()) throw UsageError("substitution matrix rows must match system");
    if (s.rows() != s.cols() || rank(s) != s.cols())
        throw UsageError("substitution must be an invertible square change of coordinates");
    if (p_names.size() != s.cols()) throw UsageError("wrong number of new variable names");
    std::vector<QVector> forms;
    for (const IVec& f : over_q.forms()) {
        QVector g(s.cols(), Rational(0));
        for (std::size_t c = 0; c < s.cols(); ++c)
            for (std::size_t r = 0; r < s.rows(); ++r) g[c] += Rational(f[r]) * s.at(r, c);
        forms.push_back(std::move(g));
    }
    return StrictSystem::from_rational_forms(std::move(p_names), forms);
}

}  // namespace nilcone
