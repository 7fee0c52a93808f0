#pragma once

#include "nilcone/cone_builder.hpp"

#include <optional>

namespace nilcone {

/// A built-in algebra together with the parametrization its reference
/// inequality set is printed in. `coordinate_change` expresses the printed
/// coordinates as functions of the canonical parameters (q = S p), so
/// printed-form systems can be rewritten over the canonical torus exactly.
struct CatalogEntry {
    std::string id;
    std::string description;
    LieBracket bracket;
    TorusParam printed_torus;
    QMatrix coordinate_change;
    std::optional<StrictSystem> expected_cone;  // over the printed coordinates

    /// expected_cone rewritten over the canonical torus parameters.
    std::optional<StrictSystem> expected_cone_canonical() const;
};

/// Looks up a catalog id: n1..n8, h3, h5, h7, heisenberg(n) with n >= 1, or
/// filiform(n) with n >= 3. Throws UnknownId / BadParameter.
CatalogEntry get(const std::string& id);

/// Fixed listing order for the CLI.
std::vector<std::string> catalog_ids();

LieBracket heisenberg_bracket(int n);
LieBracket filiform_bracket(int n);

/// The 3^n defining forms over (d_1..d_{n+1}): for every subset
/// {i_1 < .. < i_k} of {1..n} and every choice of l minus signs,
/// (l+1) d_{n+1} +- d_{i_1} +- ... +- d_{i_k} > 0. Requires n >= 1.
StrictSystem heisenberg_closed_form(int n);

/// The two defining forms over (d_1, d_2):
/// (n-2) d_1 + d_2 > 0 and (n-1)(n-2)/2 d_1 + (n-1) d_2 > 0 (primitive).
/// Requires n >= 4.
StrictSystem filiform_closed_form(int n);

/// The change of coordinates S with P_printed * S = P_canonical, i.e.
/// printed = S * canonical. Throws DomainError when the column spaces differ.
QMatrix torus_coordinate_change(const TorusParam& printed, const TorusParam& canonical);

}  // namespace nilcone
