#pragma once

#include "nilcone/linalg.hpp"

#include <optional>

namespace nilcone {

/// One structure-constant term mu(e_i, e_j) += c * e_k. Basis indices are
/// 1-based throughout, and i < j in stored form.
struct BracketTerm {
    int i, j, k;
    Rational c;
};

/// A Lie bracket given by sparse rational structure constants on a fixed
/// basis. Only i < j slots are stored; antisymmetry is implicit. Instances
/// can only be created through validate(), so the Jacobi identity always
/// holds and no zero coefficients are stored.
class LieBracket {
public:
    /// Checks index ranges and the Jacobi identity on all basis triples
    /// (exact rational check). Duplicate (i, j, k) terms are summed, and
    /// terms with j < i are folded in antisymmetrically.
    static LieBracket validate(int dim, std::vector<BracketTerm> terms);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }

    /// Stored terms, ordered by (i, j, k), all with i < j and c != 0.
    const std::vector<BracketTerm>& terms() const { return terms_; }

    /// Signed structure constant for arbitrary i != j.
    Rational coeff(int i, int j, int k) const;

    /// mu(x, y) for coordinate vectors of length dim().
    QVector apply(const QVector& x, const QVector& y) const;

    /// Sum of squared structure constants.
    Rational norm_squared() const;

private:
    LieBracket(int dim, std::vector<BracketTerm> terms)
        : dim_(dim), terms_(std::move(terms)) {}
    int dim_;
    std::vector<BracketTerm> terms_;
};

/// The diagonal integer matrix attached to structure-constant slot (i, j, k):
/// +1 at position k, -1 at positions i and j (entries summed when they
/// collide). Trace is always -1.
struct Weight {
    int i, j, k;
    std::vector<int> diag;  // length dim, diag[m] is entry (m+1, m+1)
};

/// True iff the lower central series reaches zero (exact rank iteration).
bool is_nilpotent(const LieBracket& mu);

/// One Weight per nonzero structure constant, ordered by (i, j, k).
std::vector<Weight> weights_of(const LieBracket& mu);

/// True iff every nonzero mu(e_i, e_j) is a multiple of a single basis
/// vector, and for each target k the source pairs {i, j} are pairwise
/// disjoint.
bool is_nice_basis(const LieBracket& mu);

/// Linear parametrization p -> Diag(P p) of the space of diagonal
/// derivations. Columns of P are a canonical kernel basis, so the
/// parametrization is reproducible across runs.
class TorusParam {
public:
    TorusParam(int dim, std::vector<IVec> columns);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(cols_.size()); }
    const std::vector<IVec>& columns() const { return cols_; }

    /// Diagonal entries of D(p); p must have rank() entries.
    QVector diag(const QVector& p) const;

    /// Row j of P (0-based), i.e. entry (j+1, j+1) of D as a form over p.
    IVec entry_form(std::size_t j) const;

    /// tr D as a form over p (column sums of P).
    IVec trace_form() const;

private:
    int dim_;
    std::vector<IVec> cols_;
};

/// The diagonals d with Diag(d) a derivation of mu: solutions of
/// d_k = d_i + d_j over all nonzero structure constants.
TorusParam diagonal_derivation_space(const LieBracket& mu);

struct CenterResult {
    /// 1-based basis indices spanning the center, when it is coordinate.
    std::optional<std::vector<int>> indices;
    /// Canonical basis of the center subspace (always set).
    std::vector<IVec> basis;
};

CenterResult center(const LieBracket& mu);

/// True iff tr D(p) > 0 and D(p) is positive on every central basis index.
/// Throws NonCoordinateCenter when the center is not spanned by basis
/// vectors.
bool necessary_condition(const LieBracket& mu, const TorusParam& torus, const QVector& p);

/// Basis change by the signed permutation k e_i = signs[i-1] * e_{perm[i-1]}:
/// (k . mu)(x, y) = k mu(k^-1 x, k^-1 y). perm is a 1-based permutation of
/// 1..dim, signs are +-1.
LieBracket transform_signed_permutation(const LieBracket& mu, const std::vector<int>& perm,
                                        const std::vector<int>& signs);

}  // namespace nilcone
