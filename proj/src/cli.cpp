#include "repshift/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "repshift/lifting.hpp"
#include "repshift/laurent.hpp"
#include "repshift/repshift.hpp"

namespace repshift {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json classify_json(const CardinalityClass& c) {
    switch (c.tag) {
        case CardinalityClass::Finite:
            if (c.count <= std::numeric_limits<long long>::max())
                return json{{"class", "finite"},
                            {"count", c.count.convert_to<long long>()}};
            return json{{"class", "finite"}, {"count", c.count.str()}};
        case CardinalityClass::CountablyInfinite:
            return json{{"class", "countable"}};
        default:
            return json{{"class", "uncountable"}};
    }
}

struct Invocation {
    std::string command;
    std::string input;   // digested raw input
    bool timing = false;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
};

void emit(const Invocation& inv, json result, std::ostream& out, std::ostream& err) {
    json report{{"schema", 1},
                {"command", inv.command},
                {"input_digest", fnv1a_digest(inv.input)},
                {"result", std::move(result)},
                {"version", kVersion}};
    out << report.dump(2) << "\n";
    if (inv.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - inv.started)
                      .count();
        err << "timing_ms: " << ms << "\n";
    }
}

json graph_json(const ShiftGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertex_labels) vertices.push_back(v);
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json{{"src", e.src}, {"dst", e.dst}, {"label", e.label}});
    return json{{"vertices", vertices}, {"edges", edges}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"representation shifts of Z-groups: graphs, subgroup counts, lifts, and "
                 "Alexander-polynomial determinants"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "report elapsed time on stderr");

    std::string pres_file, target = "S3", dot_path, ext_name, rep_spec, poly_text, matrix_path;
    long long budget = 2'000'000'000;
    int index_r = 2, max_period = 1, pull_r = 1, window = 0;
    long long mod_p = 0;
    bool json_graph = false, all_periodic = false;

    auto* graph_cmd = app.add_subcommand("graph", "build and export the shift graph");
    graph_cmd->add_option("file", pres_file, "presentation file")->required();
    graph_cmd->add_option("--target", target, "target group name")->required();
    graph_cmd->add_option("--dot", dot_path, "write Graphviz output to this path");
    graph_cmd->add_flag("--json", json_graph, "include the full graph in the report");
    graph_cmd->add_option("--budget", budget, "enumeration budget");
    graph_cmd->add_option("--window", window, "window size override");

    auto* classify_cmd = app.add_subcommand("classify", "cardinality of Hom(K, target)");
    classify_cmd->add_option("file", pres_file)->required();
    classify_cmd->add_option("--target", target)->required();
    classify_cmd->add_option("--budget", budget);

    auto* subgroups_cmd = app.add_subcommand("subgroups", "count index-r subgroups");
    subgroups_cmd->add_option("file", pres_file)->required();
    subgroups_cmd->add_option("--index", index_r, "subgroup index (2..5)")->required();
    subgroups_cmd->add_option("--budget", budget);

    auto* lift_cmd = app.add_subcommand("lift", "lifting analysis through an extension");
    lift_cmd->add_option("file", pres_file)->required();
    lift_cmd->add_option("--ext", ext_name, "extension name (S3/S2, A4/Z3, S4/S3)")->required();
    lift_cmd->add_option("--rep", rep_spec, "periodic representation, cycle:<label>,...");
    lift_cmd->add_flag("--all-periodic", all_periodic, "sweep all periodic representations");
    lift_cmd->add_option("--max-period", max_period, "period bound for --all-periodic");
    lift_cmd->add_option("--budget", budget);

    auto* alex = app.add_subcommand("alex", "Laurent-polynomial computations");
    alex->require_subcommand(1);
    auto* pull_cmd = alex->add_subcommand("pullback", "companion-matrix pullback");
    pull_cmd->add_option("--poly", poly_text, "polynomial, e.g. \"t^2-3t+1\"")->required();
    pull_cmd->add_option("--r", pull_r, "pullback exponent")->required();
    auto* cover2_cmd = alex->add_subcommand("cover2", "2-fold cover determinant factoring");
    cover2_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    cover2_cmd->add_option("--mod", mod_p, "also reduce the determinants mod p");
    auto* cover3_cmd = alex->add_subcommand("cover3", "3-fold cover determinant factoring");
    cover3_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    cover3_cmd->add_option("--mod", mod_p, "also reduce the determinants mod p");

    // let the global --timing flag appear after a subcommand as well
    for (CLI::App* s : {graph_cmd, classify_cmd, subgroups_cmd, lift_cmd, alex, pull_cmd,
                        cover2_cmd, cover3_cmd})
        s->fallthrough();

    try {
        std::vector<const char*> argv{"repshift"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    Invocation inv;
    inv.timing = timing;
    EnumOptions opt;
    opt.budget = budget;

    if (*graph_cmd || *classify_cmd || *subgroups_cmd || *lift_cmd) {
        inv.input = read_file(pres_file);
        Presentation pres = parse_presentation(inv.input);

        if (*graph_cmd) {
            inv.command = "graph";
            FiniteGroup sigma = FiniteGroup::from_name(target);
            ShiftGraph g = window > 0 ? build_shift_graph_window(pres, sigma, window, opt)
                                      : build_shift_graph(pres, sigma, opt);
            if (!dot_path.empty()) {
                std::ofstream dot(dot_path, std::ios::binary);
                if (!dot) throw ConfigError("cannot write file: " + dot_path);
                dot << to_dot(g);
            }
            json result{{"target", sigma.name()},
                        {"vertices", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"classification", classify_json(classify(g))}};
            if (json_graph) result["graph"] = graph_json(g);
            emit(inv, std::move(result), out, err);
        } else if (*classify_cmd) {
            inv.command = "classify";
            FiniteGroup sigma = FiniteGroup::from_name(target);
            ShiftGraph g = build_shift_graph(pres, sigma, opt);
            emit(inv, classify_json(classify(g)), out, err);
        } else if (*subgroups_cmd) {
            inv.command = "subgroups";
            json result = classify_json(count_index_subgroups(pres, index_r, opt));
            result["index"] = index_r;
            emit(inv, std::move(result), out, err);
        } else {
            inv.command = "lift";
            ExtensionData ext = standard_extension(ext_name);
            std::vector<PeriodicRep> reps;
            if (!rep_spec.empty() && !all_periodic) {
                reps.push_back(parse_rep_spec(rep_spec));
            } else if (all_periodic && rep_spec.empty()) {
                ShiftGraph g = build_shift_graph(pres, ext.sigma, opt);
                reps = periodic_reps(g, max_period);
            } else {
                throw ConfigError("lift needs exactly one of --rep or --all-periodic");
            }
            bool any_lift = false, any_surjective = false;
            json details = json::array();
            for (const PeriodicRep& rep : reps) {
                LiftOrbit orbit = lift_orbit_subshift(pres, ext, rep, opt);
                bool lift = orbit.graph.edge_count() > 0;
                bool surj = lift && exists_surjective_lift(orbit, ext);
                any_lift |= lift;
                any_surjective |= surj;
                details.push_back(json{{"cycle", rep.edge_labels},
                                       {"lift_exists", lift},
                                       {"surjective_lift_exists", surj}});
            }
            emit(inv,
                 json{{"extension", ext_name},
                      {"reps_checked", reps.size()},
                      {"lift_exists", any_lift},
                      {"surjective_lift_exists", any_surjective},
                      {"reps", std::move(details)}},
                 out, err);
        }
        return 0;
    }

    if (*pull_cmd) {
        inv.command = "alex pullback";
        inv.input = poly_text;
        auto [poly, var] = parse_poly(poly_text);
        if (poly.is_zero()) throw DomainError("cannot pull back the zero polynomial");
        IntPoly result = pullback_char_poly(poly, pull_r);
        emit(inv,
             json{{"input", poly_str(normalized(poly), var ? var : 't')},
                  {"r", pull_r},
                  {"poly", poly_str(result, 's')}},
             out, err);
        return 0;
    }

    inv.input = read_file(matrix_path);
    auto [matrix, var] = parse_poly_matrix(inv.input);
    if (*cover2_cmd) {
        inv.command = "alex cover2";
        auto [a, b] = split_two_blocks(matrix);
        TwoCoverReport rep = two_cover_factor(a, b);
        json result{{"detSum", poly_str(rep.det_sum, var)},
                    {"detDiff", poly_str(rep.det_diff, var)},
                    {"g", poly_str(rep.g, var)},
                    {"gMod3", poly_str(rep.g_mod3, var)},
                    {"verdict", rep.surjective_s3_lift
                                    ? "surjective S3 lift is possible"
                                    : "no surjective S3 lift (g mod 3 is zero or constant)"}};
        if (mod_p > 1)
            result["detMod"] = poly_str(
                to_mod(rep.det_sum * rep.det_diff, mod_p), var);
        emit(inv, std::move(result), out, err);
    } else {
        inv.command = "alex cover3";
        auto [a, b, c] = split_three_blocks(matrix);
        ThreeCoverReport rep = three_cover_factor(a, b, c);
        json result{{"deltaTilde", poly_str(rep.delta_tilde, var)},
                    {"FFbar", poly_str(rep.ffbar, var)},
                    {"FFbarMod2", poly_str(rep.ffbar_mod2, var)},
                    {"sMinus1SquaredFactor", rep.s_minus_1_sq_factor},
                    {"verdict", rep.surjective_a4_lift
                                    ? "surjective A4 lift is possible"
                                    : "no surjective A4 lift (FFbar mod 2 is trivial)"}};
        if (mod_p > 1)
            result["deltaTildeMod"] = poly_str(to_mod(rep.delta_tilde, mod_p), var);
        emit(inv, std::move(result), out, err);
    }
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "error: resource: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: domain: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "error: internal: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: unexpected: " << e.what() << "\n";
        return 1;
    }
}

} // namespace repshift
