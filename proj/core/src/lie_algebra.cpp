#include "nilcone/lie_algebra.hpp"

#include "nilcone/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace nilcone {

LieBracket LieBracket::validate(int dim, std::vector<BracketTerm> terms) {
    if (dim < 0) throw DomainError("negative dimension");
    std::map<std::tuple<int, int, int>, Rational> merged;
    for (BracketTerm& t : terms) {
        if (t.i < 1 || t.i > dim || t.j < 1 || t.j > dim || t.k < 1 || t.k > dim)
            throw IndexOutOfRange("bracket term index outside 1.." + std::to_string(dim));
        if (t.i == t.j) throw IndexOutOfRange("bracket term with i = j");
        if (t.i > t.j) {
            std::swap(t.i, t.j);
            t.c = -t.c;
        }
        merged[{t.i, t.j, t.k}] += t.c;
    }
    std::vector<BracketTerm> stored;
    for (const auto& [key, c] : merged) {
        if (c == 0) continue;
        stored.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    }
    LieBracket mu(dim, std::move(stored));

    for (int i = 1; i <= dim; ++i) {
        for (int j = i + 1; j <= dim; ++j) {
            for (int k = j + 1; k <= dim; ++k) {
                QVector x(dim, Rational(0)), y(dim, Rational(0)), z(dim, Rational(0));
                x[i - 1] = 1;
                y[j - 1] = 1;
                z[k - 1] = 1;
                QVector res = mu.apply(mu.apply(x, y), z);
                QVector t2 = mu.apply(mu.apply(y, z), x);
                QVector t3 = mu.apply(mu.apply(z, x), y);
                for (int m = 0; m < dim; ++m) res[m] += t2[m] + t3[m];
                if (!nilcone::is_zero(res)) throw JacobiViolation(i, j, k, to_string(res));
            }
        }
    }
    return mu;
}

Rational LieBracket::coeff(int i, int j, int k) const {
    if (i == j) return 0;
    Rational sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    for (const BracketTerm& t : terms_) {
        if (t.i == i && t.j == j && t.k == k) return sign * t.c;
    }
    return 0;
}

QVector LieBracket::apply(const QVector& x, const QVector& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw UsageError("bracket applied to vectors of wrong dimension");
    QVector out(dim_, Rational(0));
    for (const BracketTerm& t : terms_) {
        // c * (x_i y_j - x_j y_i) e_k
        Rational s = t.c * (x[t.i - 1] * y[t.j - 1] - x[t.j - 1] * y[t.i - 1]);
        if (s != 0) out[t.k - 1] += s;
    }
    return out;
}

Rational LieBracket::norm_squared() const {
    Rational s = 0;
    for (const BracketTerm& t : terms_) s += t.c * t.c;
    return s;
}

namespace {

// Span of { mu(e_i, v) : i, v in basis of V }, as a canonical basis.
std::vector<IVec> bracket_span(const LieBracket& mu, const std::vector<IVec>& space) {
    std::vector<QVector> generated;
    for (int i = 1; i <= mu.dim(); ++i) {
        QVector ei(mu.dim(), Rational(0));
        ei[i - 1] = 1;
        for (const IVec& v : space) {
            QVector w = mu.apply(ei, to_rational(v));
            if (!is_zero(w)) generated.push_back(std::move(w));
        }
    }
    if (generated.empty()) return {};
    // Canonical basis of the row span: kernel-of-kernel would be overkill,
    // rref directly.
    QMatrix m = QMatrix::from_rows(generated);
    std::vector<std::size_t> pivots = rref(m);
    std::vector<IVec> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(primitive_form(m.row(r)));
    return out;
}

std::vector<IVec> full_space(int dim) {
    std::vector<IVec> basis;
    for (int i = 0; i < dim; ++i) {
        IVec e(dim, Int(0));
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return basis;
}

}  // namespace

bool is_nilpotent(const LieBracket& mu) {
    std::vector<IVec> current = full_space(mu.dim());
    while (!current.empty()) {
        std::vector<IVec> next = bracket_span(mu, current);
        if (next.size() >= current.size()) return false;  // series stalled above zero
        current = std::move(next);
    }
    return true;
}

std::vector<Weight> weights_of(const LieBracket& mu) {
    std::vector<Weight> out;
    for (const BracketTerm& t : mu.terms()) {
        Weight w{t.i, t.j, t.k, std::vector<int>(mu.dim(), 0)};
        w.diag[t.k - 1] += 1;
        w.diag[t.i - 1] -= 1;
        w.diag[t.j - 1] -= 1;
        out.push_back(std::move(w));
    }
    return out;
}

bool is_nice_basis(const LieBracket& mu) {
    std::set<std::pair<int, int>> pairs;
    for (const BracketTerm& t : mu.terms()) pairs.insert({t.i, t.j});
    // Single target per pair.
    for (const auto& [i, j] : pairs) {
        int targets = 0;
        for (const BracketTerm& t : mu.terms())
            if (t.i == i && t.j == j) ++targets;
        if (targets != 1) return false;
    }
    // Pairs hitting the same target are pairwise disjoint.
    std::map<int, std::vector<std::pair<int, int>>> by_target;
    for (const BracketTerm& t : mu.terms()) by_target[t.k].push_back({t.i, t.j});
    for (const auto& [k, ps] : by_target) {
        for (std::size_t a = 0; a < ps.size(); ++a) {
            for (std::size_t b = a + 1; b < ps.size(); ++b) {
                if (ps[a].first == ps[b].first || ps[a].first == ps[b].second ||
                    ps[a].second == ps[b].first || ps[a].second == ps[b].second)
                    return false;
            }
        }
    }
    return true;
}

TorusParam::TorusParam(int dim, std::vector<IVec> columns) : dim_(dim), cols_(std::move(columns)) {
    for (const IVec& c : cols_)
        if (static_cast<int>(c.size()) != dim_) throw UsageError("torus column of wrong dimension");
    if (!cols_.empty()) {
        QMatrix m = QMatrix::from_int_rows(cols_);
        if (nilcone::rank(m) != cols_.size()) throw DomainError("torus columns are dependent");
    }
}

QVector TorusParam::diag(const QVector& p) const {
    if (p.size() != cols_.size()) throw UsageError("torus parameter vector of wrong rank");
    QVector d(dim_, Rational(0));
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (int j = 0; j < dim_; ++j) d[j] += Rational(cols_[c][j]) * p[c];
    return d;
}

IVec TorusParam::entry_form(std::size_t j) const {
    IVec row(cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c) row[c] = cols_[c][j];
    return row;
}

IVec TorusParam::trace_form() const {
    IVec t(cols_.size(), Int(0));
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (int j = 0; j < dim_; ++j) t[c] += cols_[c][j];
    return t;
}

TorusParam diagonal_derivation_space(const LieBracket& mu) {
    std::vector<QVector> rows;
    for (const BracketTerm& t : mu.terms()) {
        QVector row(mu.dim(), Rational(0));
        row[t.k - 1] += 1;
        row[t.i - 1] -= 1;
        row[t.j - 1] -= 1;
        rows.push_back(std::move(row));
    }
    QMatrix m = rows.empty() ? QMatrix(0, mu.dim()) : QMatrix::from_rows(rows);
    return TorusParam(mu.dim(), kernel_basis(m));
}

CenterResult center(const LieBracket& mu) {
    // x central iff mu(x, e_j) = 0 for all j: stack the component maps.
    std::vector<QVector> rows;
    for (int j = 1; j <= mu.dim(); ++j) {
        for (int comp = 1; comp <= mu.dim(); ++comp) {
            QVector row(mu.dim(), Rational(0));
            bool nonzero = false;
            for (int i = 1; i <= mu.dim(); ++i) {
                Rational c = mu.coeff(i, j, comp);
                if (c != 0) {
                    row[i - 1] = c;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    QMatrix m = rows.empty() ? QMatrix(0, mu.dim()) : QMatrix::from_rows(rows);
    std::vector<IVec> basis = kernel_basis(m);

    CenterResult result;
    result.basis = basis;
    std::vector<int> indices;
    bool coordinate = true;
    for (const IVec& v : basis) {
        int nonzeros = 0, where = -1;
        for (std::size_t m = 0; m < v.size(); ++m) {
            if (v[m] != 0) {
                ++nonzeros;
                where = static_cast<int>(m) + 1;
            }
        }
        if (nonzeros == 1) {
            indices.push_back(where);
        } else {
            coordinate = false;
        }
    }
    if (coordinate) {
        std::sort(indices.begin(), indices.end());
        result.indices = std::move(indices);
    }
    return result;
}

LieBracket transform_signed_permutation(const LieBracket& mu, const std::vector<int>& perm,
                                        const std::vector<int>& signs) {
    const int n = mu.dim();
    if (static_cast<int>(perm.size()) != n || static_cast<int>(signs.size()) != n)
        throw UsageError("permutation/sign data of wrong length");
    std::vector<bool> hit(n, false);
    for (int p : perm) {
        if (p < 1 || p > n || hit[p - 1]) throw UsageError("not a permutation of 1..n");
        hit[p - 1] = true;
    }
    for (int s : signs)
        if (s != 1 && s != -1) throw UsageError("signs must be +-1");

    std::vector<BracketTerm> terms;
    for (const BracketTerm& t : mu.terms()) {
        Rational c = t.c * signs[t.i - 1] * signs[t.j - 1] * signs[t.k - 1];
        terms.push_back({perm[t.i - 1], perm[t.j - 1], perm[t.k - 1], c});
    }
    return LieBracket::validate(n, std::move(terms));
}

bool necessary_condition(const LieBracket& mu, const TorusParam& torus, const QVector& p) {
    CenterResult z = center(mu);
    if (!z.indices) throw NonCoordinateCenter("center is not spanned by basis vectors");
    QVector d = torus.diag(p);
    Rational tr = 0;
    for (const Rational& x : d) tr += x;
    if (tr <= 0) return false;
    for (int k : *z.indices)
        if (d[k - 1] <= 0) return false;
    return true;
}

}  // namespace nilcone
