#include "nilcone/moment.hpp"

#include "nilcone/errors.hpp"

namespace nilcone {

std::size_t SymMatrix::index(int r, int c) const {
    if (r < 0 || c < 0 || r >= n_ || c >= n_) throw UsageError("symmetric matrix index out of range");
    if (r > c) std::swap(r, c);
    // Row-major upper triangle.
    return static_cast<std::size_t>(r) * n_ - static_cast<std::size_t>(r) * (r - 1) / 2 +
           static_cast<std::size_t>(c - r);
}

Rational SymMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool SymMatrix::is_diagonal() const {
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c)
            if (at(r, c) != 0) return false;
    return true;
}

QVector SymMatrix::diagonal() const {
    QVector d(n_);
    for (int i = 0; i < n_; ++i) d[i] = at(i, i);
    return d;
}

namespace {

// <E_rs . mu, mu> where E_rs is the elementary matrix (1-based r, s) and the
// representation acts by E.mu = E mu(.,.) - mu(E., .) - mu(., E.):
//   (E_rs . mu)(e_i, e_j) = c_ij^s e_r - [s = i] mu(e_r, e_j) - [s = j] mu(e_i, e_r).
Rational elementary_pairing(const LieBracket& mu, int r, int s) {
    const int n = mu.dim();
    Rational total = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            total += mu.coeff(i, j, s) * mu.coeff(i, j, r);
            if (s == i)
                for (int k = 1; k <= n; ++k) total -= mu.coeff(r, j, k) * mu.coeff(i, j, k);
            if (s == j)
                for (int k = 1; k <= n; ++k) total -= mu.coeff(i, r, k) * mu.coeff(i, j, k);
        }
    }
    return total;
}

}  // namespace

SymMatrix moment_map(const LieBracket& mu) {
    if (mu.is_zero()) throw ZeroBracket("moment map of the zero bracket");
    const int n = mu.dim();
    const Rational norm2 = mu.norm_squared();
    SymMatrix m(n);
    for (int r = 1; r <= n; ++r) {
        m.set(r - 1, r - 1, elementary_pairing(mu, r, r) / norm2);
        for (int s = r + 1; s <= n; ++s) {
            // <M, E_rs + E_sr> = 2 M_rs for symmetric M.
            Rational paired = elementary_pairing(mu, r, s) + elementary_pairing(mu, s, r);
            m.set(r - 1, s - 1, paired / (2 * norm2));
        }
    }
    return m;
}

SymMatrix moment_map_nice(const LieBracket& mu) {
    if (mu.is_zero()) throw ZeroBracket("moment map of the zero bracket");
    if (!is_nice_basis(mu)) throw NotNice("nice-basis moment shortcut on a non-nice bracket");
    const Rational norm2 = mu.norm_squared();
    SymMatrix m(mu.dim());
    for (const BracketTerm& t : mu.terms()) {
        Rational w = t.c * t.c / norm2;
        m.set(t.k - 1, t.k - 1, m.at(t.k - 1, t.k - 1) + w);
        m.set(t.i - 1, t.i - 1, m.at(t.i - 1, t.i - 1) - w);
        m.set(t.j - 1, t.j - 1, m.at(t.j - 1, t.j - 1) - w);
    }
    return m;
}

}  // namespace nilcone
