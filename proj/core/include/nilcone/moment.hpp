#pragma once

#include "nilcone/lie_algebra.hpp"

namespace nilcone {

/// Exact symmetric rational matrix, upper-triangle storage.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2) {}

    int dim() const { return n_; }

    const Rational& at(int r, int c) const { return a_[index(r, c)]; }
    void set(int r, int c, const Rational& v) { a_[index(r, c)] = v; }

    Rational trace() const;
    bool is_diagonal() const;
    QVector diagonal() const;

    bool operator==(const SymMatrix& other) const { return n_ == other.n_ && a_ == other.a_; }

private:
    std::size_t index(int r, int c) const;
    int n_;
    std::vector<Rational> a_;
};

/// The symmetric moment matrix of a nonzero bracket, computed from the
/// defining pairing against the standard basis of symmetric matrices and
/// normalized by the squared norm of the structure constants. Trace is
/// always -1; invariant under rescaling the bracket.
SymMatrix moment_map(const LieBracket& mu);

/// Nice-basis shortcut: the convex combination of the weights with
/// coefficients c^2 / |mu|^2. Equals moment_map exactly on nice brackets.
/// Throws NotNice / ZeroBracket.
SymMatrix moment_map_nice(const LieBracket& mu);

}  // namespace nilcone
