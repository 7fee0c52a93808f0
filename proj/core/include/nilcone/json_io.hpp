#pragma once

#include "nilcone/catalog.hpp"

namespace nilcone {

// Algebra files: {"dim": n, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, ...]}
// with c a rational string and i < j. The loader validates the bracket.
LieBracket algebra_from_json(const std::string& text);
std::string algebra_to_json(const LieBracket& mu);
LieBracket load_algebra_file(const std::string& path);

// Systems: {"vars": ["d1","d2"], "forms": [[3,1],[3,2]]}.
std::string system_to_json(const StrictSystem& s);
StrictSystem system_from_json(const std::string& text);

std::string cone_to_json(const ConeSpec& spec);

std::string moment_to_json(const SymMatrix& m);

std::string slice_to_json(const SlicePolytope& p, const std::vector<std::string>& var_names);

/// One vertex per row, exact rational strings.
std::string vertices_to_csv(const std::vector<QVector>& vertices);

/// "3*d1 + d2 > 0; 3*d1 + 2*d2 > 0"
std::string system_to_text(const StrictSystem& s);
std::string form_to_text(const IVec& form, const std::vector<std::string>& names);

/// Aligned rows of exact rationals.
std::string moment_to_text(const SymMatrix& m);

}  // namespace nilcone
