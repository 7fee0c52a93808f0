#pragma once

#include "nilcone/moment.hpp"
#include "nilcone/polyhedra.hpp"

namespace nilcone {

/// The open convex cone of diagonal derivations D(p) = sum a_i F_i + E with
/// a_i > 0, E positive diagonal and tr D(p) > 0, in minimal H-representation
/// over the torus parameters.
struct ConeSpec {
    std::string algebra;
    TorusParam torus;
    StrictSystem system;  // minimal, feasible, over the torus parameters
    std::vector<Weight> weights;
};

/// Builds the cone for a valid, nilpotent, nice bracket: sets up variables
/// (a_1..a_k, d_1..d_m), eliminates the hull coefficients a_i in descending
/// index order, and minimizes. Throws NotNice; throws EmptyCone when no
/// positive-trace derivation of the required shape exists.
ConeSpec build_cone(const LieBracket& mu, const std::string& algebra_id = "");

/// Direct membership test at a fixed parameter vector p: feasibility of the
/// system in the hull coefficients alone. Agrees with
/// contains(build_cone(mu).system, p) without a full elimination.
bool cone_membership(const LieBracket& mu, const QVector& p);

/// The cone of the algebra extended by `extra_abelian` commuting directions:
/// original forms padded, plus one positivity form per new parameter.
ConeSpec product_cone(const ConeSpec& spec, int extra_abelian);

/// The same construction with relaxed hull coefficients a_i >= 0,
/// sum a_i > 0. Returns the strict forms of the projection together with any
/// weak forms it produced (the latter are expected to be implied by the
/// strict part; the caller checks).
std::pair<StrictSystem, std::vector<IVec>> build_cone_relaxed(const LieBracket& mu);

/// The raw defining system over (a_1..a_k, d_1..d_m), before elimination.
StrictSystem assemble_cone_system(const std::vector<Weight>& weights, const TorusParam& torus);

/// Eliminates the first `count` variables in descending index order.
StrictSystem eliminate_hull_coefficients(StrictSystem s, std::size_t count);

}  // namespace nilcone
