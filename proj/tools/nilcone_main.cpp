// Command line front end: compute cones, slices, moment maps, membership
// checks, and run the verification suite.

#include "nilcone/catalog.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/json_io.hpp"
#include "nilcone/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace nilcone;
using ordered_json = nlohmann::ordered_json;

struct AlgebraSource {
    LieBracket bracket;
    std::string label;
};

AlgebraSource resolve_algebra(const std::string& source) {
    if (source.find('/') != std::string::npos || source.ends_with(".json") ||
        std::filesystem::exists(source)) {
        return {load_algebra_file(source), source};
    }
    CatalogEntry e = get(source);
    return {std::move(e.bracket), e.id};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output file '" + out_path + "'");
    out << text;
}

QVector parse_vector(const std::string& csv) {
    QVector v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    if (v.empty()) throw UsageError("empty derivation parameter vector");
    return v;
}

std::string slice_to_text(const SlicePolytope& p, const std::vector<std::string>& names) {
    std::string out;
    out += "vertices (" + std::to_string(p.vertices.size()) + "):\n";
    for (const QVector& v : p.vertices) out += "  " + to_string(v) + "\n";
    out += "facets: " + std::to_string(p.facets.size()) + "\n";
    for (const IVec& f : p.facets) out += "  " + form_to_text(f, names) + "\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact cones of diagonal derivations of nilpotent Lie algebras"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* cat = app.add_subcommand("catalog", "list built-in algebras");

    std::string cone_source;
    auto* cone_cmd = app.add_subcommand("cone", "minimal inequality system of the cone");
    cone_cmd->add_option("algebra", cone_source, "catalog id or algebra JSON file")->required();

    std::string slice_source, trace_value;
    auto* slice_cmd = app.add_subcommand("slice", "vertices of the trace-t slice polytope");
    slice_cmd->add_option("algebra", slice_source, "catalog id or algebra JSON file")->required();
    slice_cmd->add_option("--trace", trace_value, "trace value t (rational)")->required();

    std::string moment_source;
    auto* moment_cmd = app.add_subcommand("moment-map", "exact moment matrix of the bracket");
    moment_cmd->add_option("algebra", moment_source, "catalog id or algebra JSON file")->required();

    std::string check_source, derivation;
    auto* check_cmd = app.add_subcommand("check", "membership tests at a parameter vector");
    check_cmd->add_option("algebra", check_source, "catalog id or algebra JSON file")->required();
    check_cmd->add_option("--derivation", derivation, "comma-separated rational parameters")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "run every golden check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cat->parsed()) {
        if (format == "json") {
            ordered_json j = ordered_json::array();
            for (const std::string& id : catalog_ids()) {
                CatalogEntry e = get(id);
                ordered_json row;
                row["id"] = e.id;
                row["dim"] = e.bracket.dim();
                row["description"] = e.description;
                j.push_back(std::move(row));
            }
            emit(j.dump(2) + "\n", out_path);
        } else {
            std::string text;
            for (const std::string& id : catalog_ids()) {
                CatalogEntry e = get(id);
                text += e.id + "  dim " + std::to_string(e.bracket.dim());
                if (!e.description.empty()) text += "  " + e.description;
                text += "\n";
            }
            text += "families: heisenberg(n) for n >= 1, filiform(n) for n >= 3\n";
            emit(text, out_path);
        }
        return 0;
    }

    if (cone_cmd->parsed()) {
        AlgebraSource src = resolve_algebra(cone_source);
        ConeSpec spec = build_cone(src.bracket, src.label);
        if (format == "json") {
            emit(cone_to_json(spec), out_path);
        } else if (format == "csv") {
            std::string text;
            for (const IVec& f : spec.system.forms()) {
                for (std::size_t i = 0; i < f.size(); ++i)
                    text += (i ? "," : "") + f[i].str();
                text += "\n";
            }
            emit(text, out_path);
        } else {
            emit(system_to_text(spec.system) + "\n", out_path);
        }
        return 0;
    }

    if (slice_cmd->parsed()) {
        AlgebraSource src = resolve_algebra(slice_source);
        ConeSpec spec = build_cone(src.bracket, src.label);
        AffineForm norm{to_rational(spec.torus.trace_form()), parse_rational(trace_value)};
        SlicePolytope p = slice_vertices(spec.system, norm);
        if (format == "json") {
            emit(slice_to_json(p, spec.system.var_names()), out_path);
        } else if (format == "csv") {
            emit(vertices_to_csv(p.vertices), out_path);
        } else {
            emit(slice_to_text(p, spec.system.var_names()), out_path);
        }
        return 0;
    }

    if (moment_cmd->parsed()) {
        AlgebraSource src = resolve_algebra(moment_source);
        SymMatrix m = moment_map(src.bracket);
        emit(format == "json" ? moment_to_json(m) : moment_to_text(m), out_path);
        return 0;
    }

    if (check_cmd->parsed()) {
        AlgebraSource src = resolve_algebra(check_source);
        QVector p = parse_vector(derivation);
        bool member = cone_membership(src.bracket, p);
        bool necessary = necessary_condition(src.bracket, diagonal_derivation_space(src.bracket), p);
        if (format == "json") {
            ordered_json j;
            j["cone_membership"] = member;
            j["necessary_condition"] = necessary;
            emit(j.dump(2) + "\n", out_path);
        } else {
            std::string text;
            text += std::string("cone_membership: ") + (member ? "true" : "false") + "\n";
            text += std::string("necessary_condition: ") + (necessary ? "true" : "false") + "\n";
            emit(text, out_path);
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        std::vector<CheckResult> results = run_verification();
        if (format == "json") {
            ordered_json j = ordered_json::array();
            for (const CheckResult& r : results) {
                ordered_json row;
                row["criterion"] = r.criterion;
                row["name"] = r.name;
                row["passed"] = r.passed;
                row["detail"] = r.detail;
                j.push_back(std::move(row));
            }
            emit(j.dump(2) + "\n", out_path);
        } else {
            std::string text;
            for (const CheckResult& r : results) {
                text += (r.passed ? "[PASS] " : "[FAIL] ");
                text += "criterion " + r.criterion + ": " + r.name + "\n";
                if (!r.passed && !r.detail.empty()) text += "       " + r.detail + "\n";
            }
            std::size_t failed = 0;
            for (const CheckResult& r : results)
                if (!r.passed) ++failed;
            text += failed == 0 ? "all " + std::to_string(results.size()) + " checks passed\n"
                                : std::to_string(failed) + " of " + std::to_string(results.size()) +
                                      " checks failed\n";
            emit(text, out_path);
        }
        return all_passed(results) ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const JacobiViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotNice& e) {
        std::cerr << "error: not a nice basis: " << e.what() << "\n";
        return 1;
    } catch (const Unbounded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
