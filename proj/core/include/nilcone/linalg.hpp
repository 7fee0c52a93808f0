#pragma once

#include "nilcone/rational.hpp"

#include <cstddef>
#include <optional>

namespace nilcone {

/// Dense matrix of exact rationals. Every instance in this project is tiny
/// (at most a few dozen rows), so no sparsity or pivoting tricks are needed.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows);
    static QMatrix from_int_rows(const std::vector<IVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    QVector row(std::size_t r) const;
    QVector col(std::size_t c) const;
    void swap_rows(std::size_t r1, std::size_t r2);

    /// Matrix-vector product; x must have cols() entries.
    QVector apply(const QVector& x) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// In-place reduced row echelon form. Returns the pivot columns in order.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Basis of the right null space {x : Mx = 0}. Each vector is
/// integer-primitive with positive leading entry, and the basis as a whole is
/// in reduced echelon form, so the result is canonical for the subspace.
/// The zero map returns the standard basis; an injective map returns {}.
std::vector<IVec> kernel_basis(const QMatrix& m);

/// One exact solution of Mx = b if consistent (free variables set to zero),
/// nullopt otherwise. Throws UsageError on dimension mismatch.
std::optional<QVector> solve_linear(const QMatrix& m, const QVector& b);

/// The solution of Mx = b when it exists and is unique, nullopt otherwise.
std::optional<QVector> solve_unique(const QMatrix& m, const QVector& b);

/// Scales v by a positive rational so the entries become coprime integers.
/// Orientation is preserved. Throws DomainError on the zero vector.
IVec primitive_form(const QVector& v);
IVec primitive_form(const IVec& v);

Rational dot(const QVector& a, const QVector& b);
Rational dot(const IVec& a, const QVector& b);
Int dot(const IVec& a, const IVec& b);

bool is_zero(const QVector& v);
bool is_zero(const IVec& v);

}  // namespace nilcone
