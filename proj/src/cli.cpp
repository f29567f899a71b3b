#include "polyext/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "polyext/errors.hpp"
#include "polyext/group_cohomology.hpp"

namespace polyext {

namespace {

using nlohmann::json;

const char* functor_grammar =
    "expected one of: ab, T^<n>, Lambda^<n>, Gamma^<n>, S^<n>, Pa^<n>";

std::string lowercased(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// --- output formatting ------------------------------------------------------

json degrees_json(const GradedAbGroup& g) {
    json degrees = json::array();
    for (const auto& [d, group] : g.components) {
        json torsion = json::array();
        for (const Int& t : group.torsion()) torsion.push_back(t.convert_to<long long>());
        degrees.push_back({{"i", d}, {"rank", group.rank()}, {"torsion", torsion}});
    }
    return degrees;
}

json graded_value_json(json query, const std::string& grading, const GradedAbGroup& value,
                       const std::optional<std::string>& periodicity,
                       const std::string& method, const std::vector<std::string>& warnings) {
    json j;
    j["query"] = std::move(query);
    j["grading"] = grading;
    j["degrees"] = degrees_json(value);
    j["truncated_above"] = value.truncated_above ? json(*value.truncated_above) : json();
    j["periodicity"] = periodicity ? json(*periodicity) : json();
    j["method"] = method;
    j["warnings"] = warnings;
    return j;
}

void write_graded_text(std::ostream& os, const GradedAbGroup& value, bool rational,
                       const std::optional<std::string>& periodicity,
                       const std::vector<std::string>& warnings) {
    if (value.components.empty()) os << "  (trivial)\n";
    for (const auto& [d, group] : value.components)
        os << "  " << d << ": " << group.to_string(rational) << "\n";
    if (value.truncated_above)
        os << "truncated above degree " << *value.truncated_above << "\n";
    if (periodicity) os << "periodicity: " << *periodicity << "\n";
    for (const auto& w : warnings) os << "warning: " << w << "\n";
}

void write_graded_csv(std::ostream& os, const GradedAbGroup& value) {
    os << "degree,rank,torsion\n";
    for (const auto& [d, group] : value.components) {
        os << d << "," << group.rank() << ",";
        const auto& torsion = group.torsion();
        for (std::size_t i = 0; i < torsion.size(); ++i)
            os << (i ? ";" : "") << torsion[i];
        os << "\n";
    }
}

// One table row in the compact notation "Z/7@1, Z/2@3, Z/6@4, Z/2@6".
std::string table_row_text(const GradedAbGroup& value) {
    if (value.components.empty()) return "0";
    std::string out;
    for (const auto& [d, group] : value.components) {
        if (!out.empty()) out += ", ";
        out += group.to_string() + "@" + std::to_string(d);
    }
    return out;
}

// Runs `write` against stdout or the --out file.
int with_sink(const std::string& path, std::ostream& out, std::ostream& err,
              const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(out);
        return 0;
    }
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return 1;
    }
    write(file);
    return 0;
}

// --- per-subcommand state ---------------------------------------------------

struct Options {
    std::string source, target, format = "text", out_path, method;
    bool rational = false;
    int max_degree = 8;
    // table
    int max_n = 9;
    // stable
    std::string mode = "rational";
    // groupcoh
    std::string group, coefficients = "trivial";
    // check
    bool all = false;
};

void add_format_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "Write primary output to this file");
}

CLI::Option* add_max_degree(CLI::App* cmd, Options& o) {
    return cmd->add_option("--max-degree", o.max_degree,
                           "Reporting bound for infinite torsion families")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
}

// Default truncation bound: POLYEXT_MAX_DEGREE when set, 8 otherwise. A set
// but unusable value is a hard error, not a silent fallback to the default.
bool read_env_max_degree(int& value, std::string& message) {
    const char* raw = std::getenv("POLYEXT_MAX_DEGREE");
    if (raw == nullptr) return true;
    const std::string text(raw);
    bool digits = !text.empty() && text.size() <= 6;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    if (!digits) {
        message = "POLYEXT_MAX_DEGREE must be a non-negative integer, got '" +
                  text + "'";
        return false;
    }
    value = std::stoi(text);
    return true;
}

int run_ext(const Options& o, std::ostream& out, std::ostream& err) {
    const FunctorDescriptor source = parse_functor(o.source);
    const FunctorDescriptor target = parse_functor(o.target);
    ExtOptions opts;
    opts.rational = o.rational;
    opts.max_degree = o.max_degree;
    if (o.method == "closed") opts.method = ExtMethod::ClosedForm;
    if (o.method == "chain") opts.method = ExtMethod::ChainLevel;
    if (o.method == "both") opts.method = ExtMethod::Both;
    const ExtResult result = ext(source, target, opts);

    return with_sink(o.out_path, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json query{{"op", "ext"},
                       {"source", source.name()},
                       {"target", target.name()},
                       {"rational", result.rational},
                       {"max_degree", o.max_degree}};
            os << graded_value_json(query, "ext", result.value, result.periodicity,
                                    to_string(result.method), result.warnings)
                      .dump(2)
               << "\n";
        } else if (o.format == "csv") {
            write_graded_csv(os, result.value);
        } else {
            os << "Ext^*(" << source.name() << ", " << target.name() << ")"
               << (result.rational ? "  [rational]" : "")
               << "  [method: " << to_string(result.method) << "]\n";
            write_graded_text(os, result.value, result.rational, result.periodicity,
                              result.warnings);
        }
    });
}

int run_table(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<ExtResult> rows;
    ExtOptions opts;
    opts.max_degree = o.max_degree;
    for (int n = 1; n <= o.max_n; ++n)
        rows.push_back(ext(FunctorDescriptor::ab(), {FunctorKind::Symmetric, n}, opts));

    return with_sink(o.out_path, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json arr = json::array();
            for (int n = 1; n <= o.max_n; ++n) {
                const ExtResult& r = rows[static_cast<std::size_t>(n - 1)];
                json query{{"op", "ext"},
                           {"source", "ab"},
                           {"target", "S^" + std::to_string(n)},
                           {"rational", false},
                           {"max_degree", o.max_degree}};
                arr.push_back(graded_value_json(query, "ext", r.value, r.periodicity,
                                                to_string(r.method), r.warnings));
            }
            os << arr.dump(2) << "\n";
        } else if (o.format == "csv") {
            os << "n,degree,rank,torsion\n";
            for (int n = 1; n <= o.max_n; ++n)
                for (const auto& [d, group] :
                     rows[static_cast<std::size_t>(n - 1)].value.components) {
                    os << n << "," << d << "," << group.rank() << ",";
                    const auto& torsion = group.torsion();
                    for (std::size_t i = 0; i < torsion.size(); ++i)
                        os << (i ? ";" : "") << torsion[i];
                    os << "\n";
                }
        } else {
            os << "Ext^i(ab, S^n) for n = 1.." << o.max_n << "\n";
            for (int n = 1; n <= o.max_n; ++n)
                os << "n=" << n << ": "
                   << table_row_text(rows[static_cast<std::size_t>(n - 1)].value) << "\n";
        }
    });
}

int run_stable(const Options& o, std::ostream& out, std::ostream& err) {
    const FunctorDescriptor f = parse_functor(o.source);
    const StableMode mode =
        o.mode == "structural" ? StableMode::Structural : StableMode::Rational;
    const StableResult result = stable_cohomology(f, mode, o.max_degree);

    return with_sink(o.out_path, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j;
            j["query"] = {{"op", "stable"}, {"functor", f.name()}, {"mode", o.mode}};
            if (mode == StableMode::Rational) {
                j["grading"] = "stable";
                j["degrees"] = degrees_json(result.value);
            } else {
                json summands = json::array();
                for (const auto& s : result.summands)
                    summands.push_back(
                        {{"shift", s.shift}, {"space", s.space}, {"twist", s.twist}});
                j["summands"] = summands;
            }
            os << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            if (mode == StableMode::Rational) {
                write_graded_csv(os, result.value);
            } else {
                os << "shift,space,twist\n";
                for (const auto& s : result.summands)
                    os << s.shift << "," << s.space << "," << s.twist << "\n";
            }
        } else {
            os << "H^*_s(aut; " << f.name() << ")  [" << o.mode << "]\n";
            if (mode == StableMode::Rational) {
                write_graded_text(os, result.value, true, std::nullopt, {});
            } else {
                for (const auto& s : result.summands)
                    os << "  H^{*-" << s.shift << "}(" << s.space << "; " << s.twist
                       << ")\n";
            }
        }
    });
}

int run_groupcoh(const Options& o, std::ostream& out, std::ostream& err) {
    const int order = o.group == "S2" || o.group == "s2" ? 2 : 3;
    if (order == 3 && o.max_degree > 6)
        err << "note: S3 beyond degree 6 is expensive (the resolution grows as 5^k)\n";
    const FiniteGroup sym = FiniteGroup::symmetric(order);
    const GModule module =
        o.coefficients == "sign" ? GModule::sign(sym) : GModule::trivial(sym);
    const GradedAbGroup value = group_cohomology(module, o.max_degree);

    return with_sink(o.out_path, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json query{{"op", "groupcoh"},
                       {"group", order == 2 ? "S2" : "S3"},
                       {"coefficients", o.coefficients},
                       {"max_degree", o.max_degree}};
            os << graded_value_json(query, "groupcoh", value, std::nullopt, "chain", {})
                      .dump(2)
               << "\n";
        } else if (o.format == "csv") {
            write_graded_csv(os, value);
        } else {
            os << "H^*(" << (order == 2 ? "S2" : "S3") << "; "
               << (o.coefficients == "sign" ? "sign" : "Z") << ") through degree "
               << o.max_degree << "\n";
            write_graded_text(os, value, false, std::nullopt, {});
        }
    });
}

int run_check(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<std::tuple<FunctorDescriptor, FunctorDescriptor, int>> pairs;
    if (o.all) {
        for (int n = 1; n <= 8; ++n)
            pairs.emplace_back(FunctorDescriptor::ab(),
                               FunctorDescriptor{FunctorKind::Passi, n}, 8);
        for (int m = 1; m <= 6; ++m)
            for (int n = 1; n <= 6; ++n)
                pairs.emplace_back(FunctorDescriptor{FunctorKind::Passi, m},
                                   FunctorDescriptor{FunctorKind::Tensor, n}, 8);
        for (int n = 2; n <= 5; ++n)
            pairs.emplace_back(FunctorDescriptor{FunctorKind::Exterior, 2},
                               FunctorDescriptor{FunctorKind::Exterior, n}, 10);
    } else {
        if (o.source.empty() || o.target.empty()) {
            err << "error: check needs --all or a source and a target\n";
            return 1;
        }
        pairs.emplace_back(parse_functor(o.source), parse_functor(o.target),
                           o.max_degree);
    }

    bool mismatched = false;
    for (const auto& [src, tgt, degree] : pairs) {
        const CrossCheckReport report = cross_check(src, tgt, degree);
        if (report.matched) {
            out << "ok " << report.pair << ": methods agree through degree "
                << report.max_degree << "\n";
        } else {
            mismatched = true;
            out << "MISMATCH " << report.pair << ":\n";
            for (const auto& line : report.mismatches) out << "  " << line << "\n";
        }
    }
    if (o.all && !mismatched)
        out << "all " << pairs.size() << " cross-checks passed\n";
    return mismatched ? 3 : 0;
}

}  // namespace

FunctorDescriptor parse_functor(const std::string& text) {
    const std::size_t caret = text.find('^');
    const std::string keyword = lowercased(text.substr(0, caret));
    if (caret == std::string::npos) {
        if (keyword == "ab") return FunctorDescriptor::ab();
        throw ParseError("cannot parse functor '" + text + "'; " + functor_grammar, 0);
    }
    if (keyword == "ab")
        throw ParseError("'ab' does not take an arity", caret);

    FunctorKind kind;
    if (keyword == "t")
        kind = FunctorKind::Tensor;
    else if (keyword == "lambda")
        kind = FunctorKind::Exterior;
    else if (keyword == "gamma")
        kind = FunctorKind::Divided;
    else if (keyword == "s")
        kind = FunctorKind::Symmetric;
    else if (keyword == "pa")
        kind = FunctorKind::Passi;
    else
        throw ParseError("cannot parse functor '" + text + "'; " + functor_grammar, 0);

    const std::string digits = text.substr(caret + 1);
    if (digits.empty())
        throw ParseError("expected an arity after '^'", caret + 1);
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw ParseError("the arity must be a decimal number", caret + 1 + i);
    if (digits.size() > 6)
        throw ParseError("the arity is out of range", caret + 1);
    const int arity = std::stoi(digits);
    if (kind == FunctorKind::Passi && arity < 1)
        throw ParseError("Passi functors start at arity 1", caret + 1);
    return {kind, arity};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ext groups between polynomial functors on free groups"};
    app.require_subcommand(1);
    Options o;
    std::string env_error;
    if (!read_env_max_degree(o.max_degree, env_error)) {
        err << "error: " << env_error << "\n";
        return 1;
    }

    CLI::App* ext_cmd = app.add_subcommand("ext", "Evaluate Ext^*(source, target)");
    ext_cmd->add_option("source", o.source, "Source functor")->required();
    ext_cmd->add_option("target", o.target, "Target functor")->required();
    ext_cmd->add_flag("--rational", o.rational, "Tensor the answer with Q");
    add_max_degree(ext_cmd, o);
    ext_cmd->add_option("--method", o.method, "Evaluation method")
        ->check(CLI::IsMember({"closed", "chain", "both"}));
    add_format_options(ext_cmd, o);

    CLI::App* table_cmd = app.add_subcommand("table", "Print a table of Ext groups");
    table_cmd->add_option("name", o.target, "Table name")
        ->required()
        ->check(CLI::IsMember({"ab-sym"}));
    table_cmd->add_option("--max-n", o.max_n, "Largest symmetric power")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_options(table_cmd, o);

    CLI::App* stable_cmd =
        app.add_subcommand("stable", "Stable cohomology of aut(F_n) with coefficients");
    stable_cmd->add_option("functor", o.source, "Coefficient functor")->required();
    stable_cmd->add_option("--mode", o.mode, "rational or structural")
        ->check(CLI::IsMember({"rational", "structural"}))
        ->capture_default_str();
    add_format_options(stable_cmd, o);

    CLI::App* groupcoh_cmd =
        app.add_subcommand("groupcoh", "Integral cohomology of a symmetric group");
    groupcoh_cmd->add_option("group", o.group, "S2 or S3")
        ->required()
        ->check(CLI::IsMember({"S2", "S3", "s2", "s3"}));
    groupcoh_cmd->add_option("--coeff", o.coefficients, "trivial or sign")
        ->check(CLI::IsMember({"trivial", "sign"}))
        ->capture_default_str();
    add_max_degree(groupcoh_cmd, o);
    add_format_options(groupcoh_cmd, o);

    CLI::App* check_cmd =
        app.add_subcommand("check", "Compare closed-form and chain-level answers");
    check_cmd->add_flag("--all", o.all, "Run the whole cross-check suite");
    check_cmd->add_option("source", o.source, "Source functor");
    check_cmd->add_option("target", o.target, "Target functor");
    add_max_degree(check_cmd, o);

    try {
        std::vector<const char*> argv;
        argv.push_back("polyext");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (ext_cmd->parsed()) return run_ext(o, out, err);
        if (table_cmd->parsed()) return run_table(o, out, err);
        if (stable_cmd->parsed()) return run_stable(o, out, err);
        if (groupcoh_cmd->parsed()) return run_groupcoh(o, out, err);
        if (check_cmd->parsed()) return run_check(o, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at position " << e.position() << ")\n";
        return 1;
    } catch (const UnsupportedPair& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedFunctor& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const OnlyOneMethod& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CrossCheckMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace polyext
