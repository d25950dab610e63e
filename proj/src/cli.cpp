#include "critgraph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "critgraph/fibre.hpp"
#include "critgraph/io.hpp"
#include "critgraph/jacobian.hpp"
#include "critgraph/oracle.hpp"
#include "critgraph/sandpile.hpp"
#include "critgraph/version.hpp"

namespace critgraph {

namespace {

using Json = nlohmann::ordered_json;

Json group_json(const FiniteAbelianGroup& g) {
    Json j;
    Json factors = Json::array();
    for (const Int& d : g.invariant_factors) factors.push_back(d.get_str());
    j["invariant_factors"] = factors;
    j["order"] = g.order().get_str();
    j["exponent"] = g.exponent().get_str();
    return j;
}

Json divisor_json(const DecoratedGraph& g, const Cochain0& f) {
    Json j = Json::object();
    for (std::size_t v = 0; v < g.n_vertices(); ++v) j[g.vertex(v).id] = to_string(f.values[v]);
    return j;
}

std::string divisor_text(const DecoratedGraph& g, const Cochain0& f) {
    std::string s;
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
        if (v) s += " ";
        s += g.vertex(v).id + "=" + to_string(f.values[v]);
    }
    return s;
}

std::string group_text(const FiniteAbelianGroup& g) {
    return g.str() + " (order " + g.order().get_str() + ", exponent " + g.exponent().get_str() +
           ")";
}

Cochain0 parse_divisor_arg(const DecoratedGraph& g, const std::string& arg) {
    Cochain0 f = Cochain0::zero(g);
    std::vector<bool> seen(g.n_vertices(), false);
    std::istringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("divisor entry '" + item + "' is not <vertex>=<rational>");
        std::string vid = item.substr(0, eq);
        long v = g.vertex_index(vid);
        if (v < 0) throw std::invalid_argument("divisor references unknown vertex '" + vid + "'");
        if (seen[v]) throw std::invalid_argument("divisor repeats vertex '" + vid + "'");
        seen[v] = true;
        f.values[v] = parse_rational(item.substr(eq + 1));
    }
    return f;
}

struct Options {
    std::string file;
    bool json = false;
    bool oracle = false;
    std::string orient = "keep";
    std::string ell = "1";
    std::string divisor;
    std::string at;
    std::string command;
};

struct Report {
    Json json;
    std::string text;
};

long resolve_ell(const Options& opt, const DecoratedGraph& g) {
    if (opt.ell == "min") return minimal_level(g);
    try {
        std::size_t pos = 0;
        long v = std::stol(opt.ell, &pos);
        if (pos != opt.ell.size() || v < 1) throw std::invalid_argument(opt.ell);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("--ell expects a positive integer or 'min', got '" + opt.ell +
                                    "'");
    }
}

Report run_check(const DecoratedGraph& g, const Options&) {
    Report r;
    r.json["valid"] = true;
    r.json["stable"] = is_stable(g);
    r.json["genus"] = genus(g);
    r.json["betti"] = betti(g);
    std::ostringstream t;
    t << "valid: yes\n"
      << "stable: " << (is_stable(g) ? "yes" : "no") << "\n"
      << "genus: " << genus(g) << "\n"
      << "betti: " << betti(g) << "\n";
    r.text = t.str();
    return r;
}

Report run_complexity(const DecoratedGraph& g, const Options& opt) {
    Report r;
    Int c = complexity(g);
    r.json["complexity"] = c.get_str();
    std::ostringstream t;
    t << "c_t = " << c.get_str() << "\n";
    if (opt.oracle) {
        Int byTrees = oracle::complexity_by_trees(g);
        r.json["oracle"] = byTrees.get_str();
        t << "oracle (spanning trees) = " << byTrees.get_str() << "\n";
        if (byTrees != c)
            throw std::domain_error("oracle mismatch: minor formula " + c.get_str() +
                                    " vs tree enumeration " + byTrees.get_str());
    }
    r.text = t.str();
    return r;
}

Report run_critical(const DecoratedGraph& g, const Options&) {
    Report r;
    FiniteAbelianGroup k = critical_group(g);
    Int formula = critical_order(g);
    r.json["group"] = group_json(k);
    r.json["order_formula"] = formula.get_str();
    r.json["order_matches"] = formula == k.order();
    std::ostringstream t;
    t << "K_t = " << group_text(k) << "\n"
      << "order formula = " << formula.get_str() << " ("
      << (formula == k.order() ? "matches" : "MISMATCH") << ")\n";
    if (formula != k.order())
        throw std::domain_error("critical order formula mismatch: " + formula.get_str() + " vs " +
                                k.order().get_str());
    r.text = t.str();
    return r;
}

Report run_components(const DecoratedGraph& g, const Options&) {
    Report r;
    ExtensionReport ext = verify_extension(g);
    r.json["group"] = group_json(ext.total);
    Json e;
    e["kernel"] = group_json(ext.kernel);
    e["total"] = group_json(ext.total);
    e["quotient"] = group_json(ext.quotient);
    e["orders_multiply"] = ext.orders_multiply;
    e["injection_verified"] = ext.injection_verified;
    r.json["extension"] = e;
    std::ostringstream t;
    t << "Phi_t = " << group_text(ext.total) << "\n"
      << "extension kernel (ker d_t) = " << group_text(ext.kernel) << "\n"
      << "extension quotient (K_t) = " << group_text(ext.quotient) << "\n"
      << "orders multiply: " << (ext.orders_multiply ? "yes" : "no") << "\n"
      << "injection verified: " << (ext.injection_verified ? "yes" : "no") << "\n";
    r.text = t.str();
    return r;
}

Report run_kernel(const DecoratedGraph& g, const Options& opt) {
    Report r;
    long ell = resolve_ell(opt, g);
    FiniteAbelianGroup k = character_kernel(g, ell);
    FiniteAbelianGroup closed = character_kernel_closed_form(scale_thickness(g, ell));
    r.json["ell"] = ell;
    r.json["group"] = group_json(k);
    r.json["closed_form"] = group_json(closed);
    r.json["closed_form_matches"] = closed == k;
    std::ostringstream t;
    t << "ker d_{" << ell << "t} = " << group_text(k) << "\n"
      << "closed form = " << group_text(closed) << " ("
      << (closed == k ? "matches" : "MISMATCH") << ")\n";
    if (closed != k)
        throw std::domain_error("character kernel closed form disagrees with Smith computation");
    if (opt.oracle) {
        FiniteAbelianGroup enumerated = oracle::kernel_by_enumeration(g, ell);
        r.json["oracle"] = group_json(enumerated);
        t << "oracle (enumeration) = " << group_text(enumerated) << "\n";
        if (enumerated != k)
            throw std::domain_error("oracle mismatch: enumeration gives " + enumerated.str());
    }
    r.text = t.str();
    return r;
}

Report run_jacobian(const DecoratedGraph& g, const Options&) {
    Report r;
    FlowLatticeData flow = flow_lattice(g);
    FiniteAbelianGroup j = jacobian_group(g);
    bool abel = verify_abel(g);
    Json gram = Json::array();
    for (std::size_t i = 0; i < flow.gram.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < flow.gram.cols(); ++jj)
            row.push_back(flow.gram(i, jj).get_str());
        gram.push_back(row);
    }
    r.json["gram"] = gram;
    r.json["group"] = group_json(j);
    r.json["abel_match"] = abel;
    std::ostringstream t;
    t << "gram = " << flow.gram.str() << "\n"
      << "J_t = " << group_text(j) << "\n"
      << "abel (J_t = Phi_t with iota onto the fixed set): " << (abel ? "yes" : "NO") << "\n";
    r.text = t.str();
    return r;
}

Report run_decompose(const DecoratedGraph& g, const Options& opt) {
    Report r;
    long ell = resolve_ell(opt, g);
    DecompositionReport d = decompose(g, ell);
    r.json["ell"] = d.level;
    r.json["total_labels"] = d.total_label_count.get_str();
    r.json["fixed_labels"] = d.fixed_label_count.get_str();
    r.json["fixed_group"] = group_json(d.fixed_group);
    r.json["neron_match"] = d.neron_match;
    r.json["minimal_level"] = d.minimal_level;
    std::ostringstream t;
    t << "level = " << d.level << "\n"
      << "labels (|ker d_{lt}|) = " << d.total_label_count.get_str() << "\n"
      << "fixed labels = " << d.fixed_label_count.get_str() << "\n"
      << "fixed group = " << group_text(d.fixed_group) << "\n"
      << "neron match: " << (d.neron_match ? "yes" : "no") << "\n"
      << "minimal level = " << d.minimal_level << "\n";
    if (opt.oracle) {
        Int total = oracle::kernel_by_enumeration(g, ell).order();
        r.json["oracle_total_labels"] = total.get_str();
        t << "oracle labels = " << total.get_str() << "\n";
        if (total != d.total_label_count)
            throw std::domain_error("oracle mismatch: enumerated label count " + total.get_str());
    }
    r.text = t.str();
    return r;
}

Report run_class(const DecoratedGraph& g, const Options& opt) {
    Report r;
    Cochain0 f = parse_divisor_arg(g, opt.divisor);
    r.json["divisor"] = divisor_json(g, f);
    bool member = is_divisor(g, f);
    r.json["is_divisor"] = member;
    std::ostringstream t;
    t << "divisor: " << divisor_text(g, f) << "\n"
      << "in dC1(Z): " << (member ? "yes" : "no") << "\n";
    if (member) {
        CriticalPresentation pres = critical_presentation(g);
        std::vector<Int> coords = class_coordinates(pres, Divisor(g, f));
        Json c = Json::array(), m = Json::array();
        for (const Int& x : coords) c.push_back(x.get_str());
        for (const Int& d : pres.group.invariant_factors) m.push_back(d.get_str());
        r.json["coordinates"] = c;
        r.json["moduli"] = m;
        t << "class coordinates:";
        if (coords.empty()) t << " (trivial group)";
        for (std::size_t i = 0; i < coords.size(); ++i)
            t << " " << coords[i].get_str() << " (mod " << pres.group.invariant_factors[i].get_str()
              << ")";
        t << "\n";
    }
    r.text = t.str();
    return r;
}

Report run_fire(const DecoratedGraph& g, const Options& opt) {
    Report r;
    Cochain0 f = parse_divisor_arg(g, opt.divisor);
    Divisor b(g, f);
    Divisor next = fire(g, b, opt.at);
    r.json["at"] = opt.at;
    r.json["divisor"] = divisor_json(g, f);
    r.json["result"] = divisor_json(g, next.values());
    r.text = "fired " + opt.at + ": " + divisor_text(g, next.values()) + "\n";
    return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"critical groups, component groups and Jacobians of decorated dual graphs"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a machine-readable JSON report");
    app.add_option("--orient", opt.orient, "edge orientation policy (only 'keep': file order)")
        ->check(CLI::IsMember({"keep"}));

    auto add_graph_arg = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "graph file")->required();
    };
    CLI::App* check = app.add_subcommand("check", "validity, stability, genus, betti");
    add_graph_arg(check);
    CLI::App* complexityCmd = app.add_subcommand("complexity", "weighted complexity c_t");
    add_graph_arg(complexityCmd);
    complexityCmd->add_flag("--oracle", opt.oracle, "cross-check against tree enumeration");
    CLI::App* critical = app.add_subcommand("critical", "critical group K_t");
    add_graph_arg(critical);
    CLI::App* components = app.add_subcommand("components", "component group Phi_t + extension");
    add_graph_arg(components);
    CLI::App* kernel = app.add_subcommand("kernel", "character kernel ker d_{lt}");
    add_graph_arg(kernel);
    kernel->add_option("--ell", opt.ell, "level (positive integer or 'min')");
    kernel->add_flag("--oracle", opt.oracle, "cross-check against enumeration");
    CLI::App* jacobian = app.add_subcommand("jacobian", "flow Gram matrix, J_t, Abel check");
    add_graph_arg(jacobian);
    CLI::App* decomposeCmd = app.add_subcommand("decompose", "level-l special-fibre decomposition");
    add_graph_arg(decomposeCmd);
    decomposeCmd->add_option("--ell", opt.ell, "level (positive integer or 'min')")->required();
    decomposeCmd->add_flag("--oracle", opt.oracle, "cross-check label count by enumeration");
    CLI::App* classCmd = app.add_subcommand("class", "divisor membership and class coordinates");
    add_graph_arg(classCmd);
    classCmd->add_option("--divisor", opt.divisor, "v1=q1,v2=q2,... exact rationals")->required();
    CLI::App* fireCmd = app.add_subcommand("fire", "one fractional chip-firing step");
    add_graph_arg(fireCmd);
    fireCmd->add_option("--divisor", opt.divisor, "v1=q1,v2=q2,... exact rationals")->required();
    fireCmd->add_option("--at", opt.at, "vertex to fire")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        DecoratedGraph g = load_graph_file(opt.file);
        Report report;
        std::string command;
        if (check->parsed()) {
            command = "check";
            report = run_check(g, opt);
        } else if (complexityCmd->parsed()) {
            command = "complexity";
            report = run_complexity(g, opt);
        } else if (critical->parsed()) {
            command = "critical";
            report = run_critical(g, opt);
        } else if (components->parsed()) {
            command = "components";
            report = run_components(g, opt);
        } else if (kernel->parsed()) {
            command = "kernel";
            report = run_kernel(g, opt);
        } else if (jacobian->parsed()) {
            command = "jacobian";
            report = run_jacobian(g, opt);
        } else if (decomposeCmd->parsed()) {
            command = "decompose";
            report = run_decompose(g, opt);
        } else if (classCmd->parsed()) {
            command = "class";
            report = run_class(g, opt);
        } else if (fireCmd->parsed()) {
            command = "fire";
            report = run_fire(g, opt);
        } else {
            err << "no subcommand\n";
            return 2;
        }
        if (opt.json) {
            Json j;
            j["command"] = command;
            Json summary;
            summary["vertices"] = g.n_vertices();
            summary["edges"] = g.n_edges();
            summary["betti"] = betti(g);
            summary["genus"] = genus(g);
            summary["stable"] = is_stable(g);
            j["graph"] = summary;
            j["result"] = report.json;
            j["version"] = kVersion;
            out << j.dump(2) << "\n";
        } else {
            out << report.text;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace critgraph
