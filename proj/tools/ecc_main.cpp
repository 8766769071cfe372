// Command-line front end: compute invariants of a tree, construct the
// special families, evaluate closed-form bounds, verify theorems by
// exhaustive search, and sweep bounds over a range as CSV.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ecctree/bounds.hpp"
#include "ecctree/constructors.hpp"
#include "ecctree/majorization.hpp"
#include "ecctree/metrics.hpp"
#include "ecctree/oracle.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) ecc::fail(ecc::Errc::invalid_format, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) ecc::fail(ecc::Errc::invalid_format, "empty entry in list");
        out.push_back(std::stoi(token));
    }
    return out;
}

ecc::LevelDegreeSequence parse_lds(const std::string& text) {
    std::vector<std::vector<int>> levels;
    std::stringstream stream(text);
    std::string level;
    while (std::getline(stream, level, ';')) levels.push_back(parse_int_list(level));
    return ecc::LevelDegreeSequence(std::move(levels));
}

ordered_json ratio_json(const ecc::Rational& value) {
    ordered_json obj;
    obj["frac"] = value.str();
    obj["approx"] = value.approx();
    return obj;
}

// ----- compute ---------------------------------------------------------

int run_compute(const std::string& input, const std::string& format) {
    ecc::Tree tree = ecc::parse_tree_auto(read_input(input));
    ecc::EccProfile profile = ecc::ecc_profile(tree);

    ordered_json doc;
    doc["n"] = tree.n();
    doc["ecc"] = profile.ecc;
    doc["total"] = profile.total;
    doc["radius"] = profile.radius;
    doc["diameter"] = profile.diameter;
    doc["center"] = profile.center;
    doc["leaves"] = profile.leaves;
    if (tree.n() >= 2) {
        doc["total_over_center"] =
            ratio_json(ecc::ratio(ecc::RatioKind::total_over_center, tree, profile.center[0]));
        auto& per_leaf = doc["per_leaf"] = ordered_json::array();
        for (ecc::Vertex leaf : profile.leaves) {
            ordered_json entry;
            entry["leaf"] = leaf;
            entry["total_over_leaf"] =
                ratio_json(ecc::ratio(ecc::RatioKind::total_over_leaf, tree, leaf));
            entry["leaf_over_center"] =
                ratio_json(ecc::ratio(ecc::RatioKind::leaf_over_center, tree, leaf));
            per_leaf.push_back(entry);
        }
        // extreme leaf/leaf ratio over ordered pairs of distinct leaves
        ecc::Vertex far = profile.leaves[0];
        for (ecc::Vertex leaf : profile.leaves)
            if (profile.ecc[static_cast<size_t>(leaf)] > profile.ecc[static_cast<size_t>(far)])
                far = leaf;
        ecc::Vertex near = -1;
        for (ecc::Vertex leaf : profile.leaves)
            if (leaf != far &&
                (near < 0 ||
                 profile.ecc[static_cast<size_t>(leaf)] < profile.ecc[static_cast<size_t>(near)]))
                near = leaf;
        ordered_json ll = ratio_json(ecc::ratio(ecc::RatioKind::leaf_over_leaf, tree, far, near));
        ll["u"] = far;
        ll["w"] = near;
        doc["leaf_over_leaf_max"] = ll;
    }

    if (format == "json") {
        std::cout << doc.dump() << "\n";
        return kExitOk;
    }
    std::cout << "n        " << tree.n() << "\n";
    std::cout << "ecc      ";
    for (size_t i = 0; i < profile.ecc.size(); ++i) std::cout << (i ? " " : "") << profile.ecc[i];
    std::cout << "\n";
    std::cout << "total    " << profile.total << "\n";
    std::cout << "radius   " << profile.radius << "\n";
    std::cout << "diameter " << profile.diameter << "\n";
    std::cout << "center  ";
    for (ecc::Vertex v : profile.center) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "leaves  ";
    for (ecc::Vertex v : profile.leaves) std::cout << " " << v;
    std::cout << "\n";
    if (tree.n() >= 2) {
        std::cout << "total/center " << doc["total_over_center"]["frac"].get<std::string>() << "\n";
        for (const auto& entry : doc["per_leaf"])
            std::cout << "leaf " << entry["leaf"].get<int>() << ": total/leaf "
                      << entry["total_over_leaf"]["frac"].get<std::string>() << ", leaf/center "
                      << entry["leaf_over_center"]["frac"].get<std::string>() << "\n";
        std::cout << "leaf/leaf max " << doc["leaf_over_leaf_max"]["frac"].get<std::string>()
                  << " (u=" << doc["leaf_over_leaf_max"]["u"].get<int>()
                  << ", w=" << doc["leaf_over_leaf_max"]["w"].get<int>() << ")\n";
    }
    return kExitOk;
}

// ----- construct -------------------------------------------------------

struct ConstructArgs {
    std::string family;
    int n = 0;
    std::string ds;
    std::string lds;
    std::optional<int> x;
    std::optional<int> variant;
    std::optional<int> attach;
};

int run_construct(const ConstructArgs& args, const std::string& format) {
    ecc::Tree tree = ecc::Tree::single_vertex();
    std::optional<ecc::Vertex> u, w, v;

    if (args.family == "star") {
        tree = ecc::star(args.n);
    } else if (args.family == "path") {
        tree = ecc::path(args.n);
    } else if (args.family == "greedy-tree") {
        tree = ecc::greedy_tree(ecc::DegreeSequence(parse_int_list(args.ds))).tree;
    } else if (args.family == "greedy-caterpillar") {
        tree = ecc::greedy_caterpillar(ecc::DegreeSequence(parse_int_list(args.ds)));
    } else if (args.family == "level-greedy") {
        tree = ecc::level_greedy(parse_lds(args.lds)).tree;
    } else if (args.family == "extremal-T2.2") {
        int x = args.x ? *args.x : static_cast<int>(ecc::min_total_over_center(args.n).optimal_x);
        ecc::ExtremalWitness witness = ecc::extremal_min_total_over_center(args.n, x);
        tree = witness.tree;
        u = witness.u;
        w = witness.w;
        v = witness.v;
    } else if (args.family == "extremal-T2.3") {
        int x = args.x ? *args.x : static_cast<int>(ecc::max_total_over_leaf(args.n).optimal_x);
        ecc::ExtremalWitness witness = ecc::extremal_max_total_over_leaf(args.n, x);
        tree = witness.tree;
        u = witness.u;
        w = witness.w;
        v = witness.v;
    } else if (args.family == "extremal-T2.4") {
        int x = args.x ? *args.x : static_cast<int>(ecc::min_total_over_leaf(args.n).optimal_x);
        ecc::ExtremalWitness witness = ecc::extremal_min_total_over_leaf(args.n, x);
        tree = witness.tree;
        u = witness.u;
        w = witness.w;
        v = witness.v;
    } else if (args.family == "extremal-T2.5") {
        int variant = args.variant ? *args.variant : 1;
        ecc::ExtremalWitness witness =
            ecc::extremal_min_leaf_over_center(args.n, variant, args.attach);
        tree = witness.tree;
        u = witness.u;
        w = witness.w;
        v = witness.v;
    } else if (args.family == "extremal-T2.6") {
        ecc::ExtremalWitness witness = ecc::extremal_max_leaf_over_leaf(args.n, args.attach);
        tree = witness.tree;
        u = witness.u;
        w = witness.w;
        v = witness.v;
    } else {
        ecc::fail(ecc::Errc::bad_parameter, "unknown family '" + args.family + "'");
    }

    if (format == "json") {
        ordered_json doc = ordered_json::parse(ecc::format_tree_json(tree));
        if (u || w || v) {
            ordered_json roles;
            if (u) roles["u"] = *u;
            if (w) roles["w"] = *w;
            if (v) roles["v"] = *v;
            doc["roles"] = roles;
        }
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << ecc::format_tree(tree);
    }
    return kExitOk;
}

// ----- bound -----------------------------------------------------------

int run_bound(const std::string& theorem, long long n, const std::string& format) {
    ordered_json doc;
    doc["theorem"] = theorem;
    doc["n"] = n;
    if (theorem == "T2.1") {
        doc["value"] = ratio_json(ecc::max_total_over_center(n));
    } else if (theorem == "T2.2" || theorem == "T2.3" || theorem == "T2.4") {
        ecc::BoundResult result = theorem == "T2.2"   ? ecc::min_total_over_center(n)
                                  : theorem == "T2.3" ? ecc::max_total_over_leaf(n)
                                                      : ecc::min_total_over_leaf(n);
        doc["value"] = ratio_json(result.value);
        doc["optimal_x"] = result.optimal_x;
        doc["tight_for_both"] = result.tight_for_both;
    } else if (theorem == "T2.5") {
        ecc::LeafCenterBounds bounds = ecc::leaf_over_center_bounds(n);
        doc["max"] = ratio_json(bounds.max);
        if (bounds.min)
            doc["min"] = ratio_json(*bounds.min);
        else
            doc["min"] = nullptr;
    } else if (theorem == "T2.6") {
        doc["value"] = ratio_json(ecc::max_leaf_over_leaf(n));
    } else if (theorem == "P3.1") {
        doc["value"] = ratio_json(ecc::Rational(ecc::min_total_ecc(n)));
    } else {
        ecc::fail(ecc::Errc::unknown_theorem, "no closed-form bound for '" + theorem + "'");
    }

    if (format == "json") {
        std::cout << doc.dump() << "\n";
        return kExitOk;
    }
    std::cout << theorem << " n=" << n;
    if (doc.contains("value"))
        std::cout << ": " << doc["value"]["frac"].get<std::string>()
                  << " (approx " << doc["value"]["approx"].get<double>() << ")";
    if (doc.contains("max"))
        std::cout << ": max " << doc["max"]["frac"].get<std::string>() << ", min "
                  << (doc["min"].is_null() ? std::string("n/a")
                                           : doc["min"]["frac"].get<std::string>());
    if (doc.contains("optimal_x")) std::cout << ", x=" << doc["optimal_x"].get<long long>();
    if (doc.contains("tight_for_both") && doc["tight_for_both"].get<bool>())
        std::cout << " (both x and x+1 extremal)";
    std::cout << "\n";
    return kExitOk;
}

// ----- verify ----------------------------------------------------------

int run_verify(const std::string& theorem, std::optional<int> n, std::optional<int> n_max,
               const ecc::EnumerationCaps& caps, int jobs, const std::string& format) {
    std::optional<ecc::TheoremId> id = ecc::parse_theorem_id(theorem);
    if (!id) ecc::fail(ecc::Errc::unknown_theorem, "unknown theorem '" + theorem + "'");

    ecc::VerifyOptions options;
    options.caps = caps;
    options.jobs = jobs;
    if (n) options.n_min = options.n_max = *n;
    if (n_max) options.n_max = *n_max;
    // Stream one record per instance as it completes; summary line last.
    options.on_instance = [&](const ecc::InstanceResult& inst) {
        if (format == "json") {
            std::cout << ecc::to_json(inst, *id) << "\n";
        } else {
            std::cout << (inst.pass ? "pass" : "FAIL") << " " << theorem << " " << inst.instance
                      << " (bound " << (inst.bound_holds ? "holds" : "VIOLATED") << ", "
                      << (inst.attained ? "attained" : "NOT attained") << ")\n";
        }
        std::cout.flush();
    };

    ecc::VerificationReport report = ecc::verify_theorem(*id, options);
    if (format == "json") {
        ordered_json summary;
        summary["theorem"] = theorem;
        summary["instances"] = report.instances.size();
        summary["pass"] = report.pass;
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << (report.pass ? "PASS" : "FAIL") << " " << theorem << " ("
                  << report.instances.size() << " instances)\n";
    }
    return report.pass ? kExitOk : kExitVerifyFailure;
}

// ----- sweep -----------------------------------------------------------

int run_sweep(const std::string& theorem, int n_min, int n_max) {
    std::cout << "theorem,n,value,approx,optimal_x,tight_for_both\n";
    for (int n = n_min; n <= n_max; ++n) {
        ecc::Rational value;
        std::string x_text, tight_text;
        try {
            if (theorem == "T2.1") {
                value = ecc::max_total_over_center(n);
            } else if (theorem == "T2.2" || theorem == "T2.3" || theorem == "T2.4") {
                ecc::BoundResult result = theorem == "T2.2"   ? ecc::min_total_over_center(n)
                                          : theorem == "T2.3" ? ecc::max_total_over_leaf(n)
                                                              : ecc::min_total_over_leaf(n);
                value = result.value;
                x_text = std::to_string(result.optimal_x);
                tight_text = result.tight_for_both ? "true" : "false";
            } else if (theorem == "T2.5") {
                ecc::LeafCenterBounds bounds = ecc::leaf_over_center_bounds(n);
                if (!bounds.min) continue;
                value = *bounds.min;
            } else if (theorem == "T2.6") {
                value = ecc::max_leaf_over_leaf(n);
            } else if (theorem == "P3.1") {
                value = ecc::Rational(ecc::min_total_ecc(n));
            } else {
                ecc::fail(ecc::Errc::unknown_theorem, "no closed-form bound for '" + theorem + "'");
            }
        } catch (const ecc::Error& e) {
            if (e.code() == ecc::Errc::unknown_theorem) throw;
            continue; // n below the theorem's validity range
        }
        std::cout << theorem << "," << n << "," << value.str() << "," << value.approx() << ","
                  << x_text << "," << tight_text << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eccentricity-based tree invariants: exact ratios, extremal families, and "
                 "exhaustive verification"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    int jobs = 0;
    app.add_option("--jobs", jobs, "Worker threads for enumeration (0 = auto)");
    int cap = 0;
    app.add_option("--cap", cap, "Enumeration cap override (max order)")->check(CLI::PositiveNumber);

    auto* cmd_compute = app.add_subcommand("compute", "Eccentricity profile and ratios of a tree");
    std::string input;
    cmd_compute->add_option("input", input, "Tree file (edge list or JSON), '-' for stdin")
        ->required();

    auto* cmd_construct = app.add_subcommand("construct", "Emit a tree from a named family");
    ConstructArgs cargs;
    cmd_construct
        ->add_option("family", cargs.family,
                     "star|path|greedy-tree|greedy-caterpillar|level-greedy|extremal-T2.2|"
                     "extremal-T2.3|extremal-T2.4|extremal-T2.5|extremal-T2.6")
        ->required();
    cmd_construct->add_option("--n", cargs.n, "Order");
    cmd_construct->add_option("--ds", cargs.ds, "Degree sequence, comma separated");
    cmd_construct->add_option("--lds", cargs.lds, "Level-degree sequence, levels ';'-separated");
    int x_value = 0, variant_value = 0, attach_value = 0;
    auto* x_opt = cmd_construct->add_option("--x", x_value, "Extremal path parameter");
    auto* variant_opt = cmd_construct->add_option("--variant", variant_value, "T2.5 variant (1|2)");
    auto* attach_opt = cmd_construct->add_option("--attach", attach_value, "Attachment index");

    auto* cmd_bound = app.add_subcommand("bound", "Closed-form bound value");
    std::string bound_theorem;
    long long bound_n = 0;
    cmd_bound->add_option("theorem", bound_theorem, "T2.1..T2.6 or P3.1")->required();
    cmd_bound->add_option("--n", bound_n, "Order")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Brute-force check of a theorem");
    std::string verify_theorem_name;
    int verify_n = 0, verify_n_max = 0;
    cmd_verify
        ->add_option("theorem", verify_theorem_name,
                     "T2.1..T2.6, P3.1, P3.4, L-level, T-greedymin, T-majorization")
        ->required();
    auto* verify_n_opt = cmd_verify->add_option("--n", verify_n, "Single order to check");
    auto* verify_n_max_opt = cmd_verify->add_option("--n-max", verify_n_max, "Top of the range");

    auto* cmd_sweep = app.add_subcommand("sweep", "Bound values over a range, CSV");
    std::string sweep_theorem;
    int sweep_n_min = 0, sweep_n_max = 0;
    cmd_sweep->add_option("theorem", sweep_theorem, "T2.1..T2.6 or P3.1")->required();
    auto* sweep_min_opt = cmd_sweep->add_option("--n-min", sweep_n_min, "Bottom of the range");
    cmd_sweep->add_option("--n-max", sweep_n_max, "Top of the range")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    ecc::EnumerationCaps caps = ecc::caps_from_env();
    if (cap > 0) caps.max_order = cap;

    try {
        if (*cmd_compute) return run_compute(input, format);
        if (*cmd_construct) {
            if (*x_opt) cargs.x = x_value;
            if (*variant_opt) cargs.variant = variant_value;
            if (*attach_opt) cargs.attach = attach_value;
            return run_construct(cargs, format);
        }
        if (*cmd_bound) return run_bound(bound_theorem, bound_n, format);
        if (*cmd_verify)
            return run_verify(verify_theorem_name,
                              *verify_n_opt ? std::optional<int>(verify_n) : std::nullopt,
                              *verify_n_max_opt ? std::optional<int>(verify_n_max) : std::nullopt,
                              caps, jobs, format);
        if (*cmd_sweep)
            return run_sweep(sweep_theorem, *sweep_min_opt ? sweep_n_min : 2, sweep_n_max);
    } catch (const ecc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
