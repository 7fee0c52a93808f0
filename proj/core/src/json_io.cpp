#include "nilcone/json_io.hpp"

#include "nilcone/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nilcone {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

ordered_json int_to_json(const Int& x) {
    // Coefficients stay tiny in practice; fall back to strings beyond int64.
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Int int_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw UsageError("expected an integer coefficient");
}

ordered_json forms_to_json(const std::vector<IVec>& forms) {
    ordered_json out = ordered_json::array();
    for (const IVec& f : forms) {
        ordered_json row = ordered_json::array();
        for (const Int& x : f) row.push_back(int_to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

LieBracket algebra_from_json(const std::string& text) {
    ordered_json j = parse(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
        throw UsageError("algebra JSON requires 'dim' and 'brackets'");
    int dim = j.at("dim").get<int>();
    std::vector<BracketTerm> terms;
    for (const auto& b : j.at("brackets")) {
        BracketTerm t;
        t.i = b.at("i").get<int>();
        t.j = b.at("j").get<int>();
        t.k = b.at("k").get<int>();
        if (t.i >= t.j) throw UsageError("bracket terms require i < j");
        t.c = b.at("c").is_string() ? parse_rational(b.at("c").get<std::string>())
                                    : Rational(b.at("c").get<std::int64_t>());
        terms.push_back(std::move(t));
    }
    return LieBracket::validate(dim, std::move(terms));
}

std::string algebra_to_json(const LieBracket& mu) {
    ordered_json j;
    j["dim"] = mu.dim();
    ordered_json brackets = ordered_json::array();
    for (const BracketTerm& t : mu.terms()) {
        ordered_json b;
        b["i"] = t.i;
        b["j"] = t.j;
        b["k"] = t.k;
        b["c"] = to_string(t.c);
        brackets.push_back(std::move(b));
    }
    j["brackets"] = std::move(brackets);
    return j.dump(2) + "\n";
}

LieBracket load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return algebra_from_json(buf.str());
}

std::string system_to_json(const StrictSystem& s) {
    ordered_json j;
    j["vars"] = s.var_names();
    j["forms"] = forms_to_json(s.forms());
    if (s.contradictory()) j["contradiction"] = true;
    return j.dump(2) + "\n";
}

StrictSystem system_from_json(const std::string& text) {
    ordered_json j = parse(text);
    if (!j.is_object() || !j.contains("vars") || !j.contains("forms"))
        throw UsageError("system JSON requires 'vars' and 'forms'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<IVec> forms;
    for (const auto& row : j.at("forms")) {
        IVec f;
        for (const auto& x : row) f.push_back(int_from_json(x));
        forms.push_back(std::move(f));
    }
    bool marker = j.value("contradiction", false);
    return StrictSystem::with_marker(std::move(vars), std::move(forms), marker);
}

std::string cone_to_json(const ConeSpec& spec) {
    ordered_json j;
    j["algebra"] = spec.algebra;
    j["dim"] = spec.torus.dim();
    j["rank"] = spec.torus.rank();
    ordered_json torus = ordered_json::array();
    for (int r = 0; r < spec.torus.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (const IVec& col : spec.torus.columns()) row.push_back(int_to_json(col[r]));
        torus.push_back(std::move(row));
    }
    j["torus"] = std::move(torus);
    j["vars"] = spec.system.var_names();
    j["forms"] = forms_to_json(spec.system.forms());
    return j.dump(2) + "\n";
}

std::string moment_to_json(const SymMatrix& m) {
    ordered_json j;
    j["dim"] = m.dim();
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string slice_to_json(const SlicePolytope& p, const std::vector<std::string>& var_names) {
    ordered_json j;
    j["vars"] = var_names;
    ordered_json norm;
    ordered_json normal = ordered_json::array();
    for (const Rational& x : p.normalization.normal) normal.push_back(to_string(x));
    norm["normal"] = std::move(normal);
    norm["value"] = to_string(p.normalization.value);
    j["normalization"] = std::move(norm);
    ordered_json verts = ordered_json::array();
    for (const QVector& v : p.vertices) {
        ordered_json row = ordered_json::array();
        for (const Rational& x : v) row.push_back(to_string(x));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    j["facet_count"] = p.facets.size();
    j["facets"] = forms_to_json(p.facets);
    return j.dump(2) + "\n";
}

std::string vertices_to_csv(const std::vector<QVector>& vertices) {
    std::string out;
    for (const QVector& v : vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ',';
            out += to_string(v[i]);
        }
        out += '\n';
    }
    return out;
}

std::string form_to_text(const IVec& form, const std::vector<std::string>& names) {
    if (form.size() != names.size()) throw UsageError("form length does not match names");
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) continue;
        Int mag = abs(form[i]);
        if (first) {
            if (form[i] < 0) out += '-';
            first = false;
        } else {
            out += form[i] < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.str() + "*";
        out += names[i];
    }
    if (first) out = "0";
    return out + " > 0";
}

std::string system_to_text(const StrictSystem& s) {
    std::string out;
    bool first = true;
    for (const IVec& f : s.forms()) {
        if (!first) out += "; ";
        out += form_to_text(f, s.var_names());
        first = false;
    }
    if (s.contradictory()) {
        if (!first) out += "; ";
        out += "0 > 0";
    }
    return out;
}

std::string moment_to_text(const SymMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.dim(), std::vector<std::string>(m.dim()));
    std::vector<std::size_t> width(m.dim(), 0);
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            cells[r][c] = to_string(m.at(r, c));
            width[c] = std::max(width[c], cells[r][c].size());
        }
    }
    std::string out;
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            if (c > 0) out += "  ";
            out += std::string(width[c] - cells[r][c].size(), ' ') + cells[r][c];
        }
        out += '\n';
    }
    return out;
}

}  // namespace nilcone
