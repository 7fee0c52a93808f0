#include "nilcone/linalg.hpp"

#include "nilcone/errors.hpp"

#include <algorithm>

namespace nilcone {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw UsageError("ragged rows in matrix construction");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

QMatrix QMatrix::from_int_rows(const std::vector<IVec>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw UsageError("ragged rows in matrix construction");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rows[r][c]);
    }
    return m;
}

QVector QMatrix::row(std::size_t r) const {
    QVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

QVector QMatrix::col(std::size_t c) const {
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

void QMatrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
}

QVector QMatrix::apply(const QVector& x) const {
    if (x.size() != cols_) throw UsageError("matrix-vector size mismatch");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) * x[c];
        out[r] = s;
    }
    return out;
}

std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(row, pivot);
        Rational inv = m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) /= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(QMatrix m) {
    return rref(m).size();
}

std::vector<IVec> kernel_basis(const QMatrix& m) {
    QMatrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return {};

    // Re-echelonize so the basis is canonical for the subspace, not an
    // artifact of which columns happened to be free.
    QMatrix k = QMatrix::from_rows(basis);
    rref(k);
    std::vector<IVec> out;
    out.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(primitive_form(k.row(i)));
    return out;
}

std::optional<QVector> solve_linear(const QMatrix& m, const QVector& b) {
    if (b.size() != m.rows()) throw UsageError("solve_linear: right-hand side size mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    QVector x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

std::optional<QVector> solve_unique(const QMatrix& m, const QVector& b) {
    auto x = solve_linear(m, b);
    if (!x) return std::nullopt;
    if (rank(m) != m.cols()) return std::nullopt;
    return x;
}

IVec primitive_form(const QVector& v) {
    if (is_zero(v)) throw DomainError("primitive_form of the zero vector");
    Int lcm_den = 1;
    for (const Rational& x : v) lcm_den = lcm(lcm_den, denominator(x));
    IVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = gcd(g, w[i]);
    }
    for (Int& x : w) x /= g;
    return w;
}

IVec primitive_form(const IVec& v) {
    if (is_zero(v)) throw DomainError("primitive_form of the zero vector");
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    IVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw UsageError("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IVec& a, const QVector& b) {
    if (a.size() != b.size()) throw UsageError("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw UsageError("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace nilcone
