#pragma once

#include "nilcone/linalg.hpp"

#include <string>

namespace nilcone {

/// A finite set of homogeneous strict linear forms, each meaning l . x > 0:
/// the H-representation of an open polyhedral cone. Forms are stored
/// integer-primitive, deduplicated and lexicographically sorted, so equal
/// systems compare equal structurally and all output is byte-stable.
///
/// Fourier-Motzkin elimination of opposing forms can derive the empty sum
/// "0 > 0"; that is kept as a contradiction marker rather than a stored zero
/// form (zero forms are rejected on construction).
class StrictSystem {
public:
    StrictSystem(std::vector<std::string> var_names, std::vector<IVec> forms);

    static StrictSystem from_rational_forms(std::vector<std::string> var_names,
                                            const std::vector<QVector>& forms);

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::vector<IVec>& forms() const { return forms_; }
    bool contradictory() const { return contradiction_; }

    bool operator==(const StrictSystem& other) const {
        return names_.size() == other.names_.size() && forms_ == other.forms_ &&
               contradiction_ == other.contradiction_;
    }

    /// Internal: construct with an explicit contradiction marker.
    static StrictSystem with_marker(std::vector<std::string> var_names, std::vector<IVec> forms,
                                    bool contradiction);

private:
    std::vector<std::string> names_;
    std::vector<IVec> forms_;
    bool contradiction_ = false;
};

/// Projects the solution set onto the remaining variables by pairing each
/// form positive in `var` with each form negative in it; var-free forms are
/// carried over. The variable (column) is removed from the output.
StrictSystem fm_eliminate(const StrictSystem& s, std::size_t var);

/// Strict feasibility, decided by eliminating every variable and checking
/// that no contradiction marker was derived.
bool is_feasible(const StrictSystem& s);

/// True iff l . x > 0 for all forms (exact). The empty system contains
/// everything; a contradictory system contains nothing.
bool contains(const StrictSystem& s, const QVector& x);

/// Nonnegative coefficients expressing target = sum(lambda_i * generators_i),
/// if any exist. Decided exactly (phase-1 simplex with Bland's rule).
std::optional<QVector> conic_coefficients(const IVec& target, const std::vector<IVec>& generators);

/// True iff `form > 0` holds on the whole solution set of s. Valid for
/// strictly feasible systems, where this is exactly conic-hull membership.
bool implies(const StrictSystem& s, const IVec& form);

/// Irredundant subsystem with the same solution set. A form is redundant iff
/// it lies in the conic hull of the others; requires strict feasibility
/// (throws InfeasibleInput otherwise).
StrictSystem minimize(const StrictSystem& s);

/// Solution-set equality of two feasible systems over the same variables.
bool systems_equal(const StrictSystem& a, const StrictSystem& b);

/// Concatenated variable space, forms zero-padded on the other factor.
StrictSystem product(const StrictSystem& a, const StrictSystem& b);

/// An affine normalization normal . x = value.
struct AffineForm {
    QVector normal;
    Rational value;
};

/// V-representation of the closure of a cone sliced by an affine
/// normalization. Vertices are exact, deduplicated and sorted; facets lists
/// the system forms that cut facets of the slice polytope.
struct SlicePolytope {
    std::size_t nvars = 0;
    AffineForm normalization;
    std::vector<QVector> vertices;
    std::vector<IVec> facets;
};

/// Enumerates the vertices of cl{x : forms > 0} intersected with the
/// normalization plane by brute force over facet subsets. Requires the slice
/// to be bounded (throws Unbounded) and nvars <= 4 (throws TooManyVars).
SlicePolytope slice_vertices(const StrictSystem& s, const AffineForm& normalization);

/// Rewrites a system over variables q into one over variables p under the
/// substitution q = S p (S square, invertible): each form l becomes S^T l.
StrictSystem substitute_coordinates(const StrictSystem& over_q, const QMatrix& S,
                                    std::vector<std::string> p_names);

namespace detail {

/// Form with a strictness tag: v . x > 0 when strict, v . x >= 0 otherwise.
struct TaggedForm {
    IVec v;
    bool strict;
};

struct TaggedSystem {
    std::size_t nvars = 0;
    std::vector<TaggedForm> forms;
    bool contradiction = false;
};

/// Fourier-Motzkin step for mixed strict/weak systems. A pairing is strict
/// iff either parent is strict; a strict empty sum sets the contradiction
/// marker, a weak one is dropped.
TaggedSystem eliminate(const TaggedSystem& s, std::size_t var);

/// Exact phase-1 simplex: some z >= 0 with A z = b, or nullopt.
std::optional<QVector> nonneg_solve(const QMatrix& a, const QVector& b);

}  // namespace detail

}  // namespace nilcone
