#include "onext/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "onext/errors.hpp"
#include "onext/extend.hpp"
#include "onext/genset.hpp"
#include "onext/io.hpp"
#include "onext/isets.hpp"
#include "onext/metrics.hpp"
#include "onext/moddecomp.hpp"
#include "onext/partition.hpp"

namespace onext::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open '" + path + "'");
    }
    buffer << file.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path);
    if (!file) {
        throw InputError("cannot write '" + path + "'");
    }
    file << content;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) {
                throw InputError("not an integer: '" + token + "'");
            }
        } catch (const std::logic_error&) {
            throw InputError("not an integer: '" + token + "'");
        }
    }
    return out;
}

std::string join_labels(const GraphDocument& doc, const VertexSet& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        s += (i ? " " : "") + doc.label(vs[i]);
    }
    return s;
}

struct Options {
    std::string input = "-";
    std::string method = "auto";
    int max_k = 0;
    std::string emit_partition;
    std::string dot;
    std::string partition_file;
    std::string theta = "50";
    bool as_float = false;
    std::string family;
    std::vector<std::string> params;
    std::string base;
    bool json = false;
    std::uint64_t seed = 1;
    std::vector<int> targets;
    int k = 0;
    std::string instance_file;
};

int cmd_test(const Options& o, std::istream& in, std::ostream& out) {
    GraphDocument doc = parse_graph_document(read_source(o.input, in));
    const Graph& g = doc.graph;
    ExtReport report;
    std::string method = o.method;
    if (g.empty()) {
        report = {true, 0, std::nullopt};
    } else if (method == "oracle") {
        report = is_1ext_by_oracle(g);
    } else {
        MDTree t = decompose(g);
        if (method == "auto") {
            method = is_cograph(t) ? "cograph" : "mw";
        }
        report = method == "cograph" ? is_1ext_cograph(t) : is_1ext_mw(g, t);
    }
    out << "1-extendable: " << (report.is_1ext ? "yes" : "no") << ", alpha=" << report.alpha
        << ", method=" << method;
    if (!report.is_1ext) {
        out << "; starved: " << join_labels(doc, starvation_set(g));
    }
    out << '\n';
    return report.is_1ext ? kPositive : kNegative;
}

int cmd_chi(const Options& o, std::istream& in, std::ostream& out) {
    GraphDocument doc = parse_graph_document(read_source(o.input, in));
    std::optional<Partition> certificate;
    int chi = 0;
    if (o.max_k > 0) {
        for (int k = 1; k <= o.max_k && !certificate; ++k) {
            if (auto p = find_1ext_partition(doc.graph, k)) {
                certificate = compact(*p);
                chi = k;
            }
        }
        if (!certificate) {
            out << "chi_1ext > " << o.max_k << '\n';
            return kNegative;
        }
    } else {
        ChiResult r = chi_1ext(doc.graph);
        chi = r.chi;
        certificate = compact(r.certificate);
    }
    out << chi << '\n';
    if (!o.emit_partition.empty()) {
        write_file(o.emit_partition, format_partition(*certificate));
    }
    if (!o.dot.empty()) {
        write_file(o.dot, to_dot(doc, certificate));
    }
    return kPositive;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    GraphDocument doc = parse_graph_document(read_source(o.input, in));
    Partition p = parse_partition(read_source(o.partition_file, in), doc.graph.order());
    auto classes = color_classes(p);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (!classes[c].empty() && !is_1ext_oracle(induced_subgraph(doc.graph, classes[c]).graph)) {
            out << "invalid: class " << c + 1 << " {" << join_labels(doc, classes[c])
                << "} is not 1-extendable\n";
            return kNegative;
        }
    }
    out << "valid: " << used_colors(p) << " classes, each 1-extendable\n";
    if (!o.dot.empty()) {
        write_file(o.dot, to_dot(doc, p));
    }
    return kPositive;
}

int cmd_pv(const Options& o, std::istream& in, std::ostream& out) {
    GraphDocument doc = parse_graph_document(read_source(o.input, in));
    AccessProfile profile = access_proportion(doc.graph, parse_rational(o.theta));
    auto show = [&](const Rational& r) {
        if (!o.as_float) {
            return to_string(r);
        }
        std::ostringstream s;
        s << std::fixed << std::setprecision(6) << to_double(r);
        return s.str();
    };
    out << "theta=" << show(profile.theta) << '\n';
    out << "vertex\tp\tlimit\n";
    for (Vertex v = 0; v < doc.graph.order(); ++v) {
        out << doc.label(v) << '\t' << show(profile.p[v]) << '\t' << show(profile.limit_p[v]) << '\n';
    }
    out << "starved: " << (profile.starved.empty() ? "none" : join_labels(doc, profile.starved))
        << '\n';
    return kPositive;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

int cmd_gen(const Options& o, std::istream& in, std::ostream& out) {
    auto param = [&](std::size_t i) -> const std::string& {
        if (i >= o.params.size()) {
            throw InputError("family '" + o.family + "' needs more parameters");
        }
        return o.params[i];
    };
    auto int_param = [&](std::size_t i) {
        auto list = parse_int_list(param(i));
        if (list.size() != 1) {
            throw InputError("expected one integer, got '" + param(i) + "'");
        }
        return list.front();
    };
    GraphDocument doc;
    if (o.family == "multipartite-extremal") {
        int k = int_param(0);
        doc.graph = gen_multipartite_extremal(k);
        for (int i = 0; i <= k; ++i) {
            doc.parts.push_back(1 << i);
        }
    } else if (o.family == "interval-extremal") {
        doc.graph = gen_interval_extremal(int_param(0));
    } else if (o.family == "multipartite") {
        doc.parts = parse_int_list(param(0));
        doc.graph = complete_multipartite(doc.parts).graph;
    } else if (o.family == "hardness") {
        if (o.base.empty()) {
            throw InputError("hardness needs --base <graph file>");
        }
        GraphDocument base = parse_graph_document(read_source(o.base, in));
        doc.graph = gen_hardness_gadget(base.graph, int_param(0));
    } else if (o.family == "random") {
        int n = int_param(0);
        double p = 0.5;
        if (o.params.size() > 1) {
            try {
                p = std::stod(o.params[1]);
            } catch (const std::logic_error&) {
                throw InputError("edge probability must be a number");
            }
        }
        if (n < 0 || !(p >= 0.0 && p <= 1.0)) {
            throw InputError("random needs n >= 0 and 0 <= p <= 1");
        }
        doc.graph = random_graph(n, p, o.seed);
    } else {
        throw InputError("unknown family '" + o.family + "'");
    }
    out << (o.json ? to_json(doc) : to_edge_list(doc));
    return kPositive;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
    GraphDocument doc = parse_graph_document(read_source(o.input, in));
    MDTree t = decompose(doc.graph);
    out << to_text(t) << '\n';
    out << "mw=" << modular_width(t) << '\n';
    out << "cograph: " << (is_cograph(t) ? "yes" : "no") << '\n';
    return kPositive;
}

int cmd_genset(const Options& o, std::istream& in, std::ostream& out) {
    genset::Instance inst;
    if (!o.instance_file.empty()) {
        inst = genset::parse_instance(read_source(o.instance_file, in));
    } else {
        inst = {o.targets, o.k};
        genset::validate(inst);
    }
    std::optional<genset::Solution> sol;
    bool binary = inst.k >= genset::binary_generator_count(inst.alpha_max());
    if (binary) {
        sol = genset::binary_solution(inst.targets);
    } else {
        sol = genset::solve(inst);
    }
    if (!sol) {
        out << "infeasible\n";
        return kNegative;
    }
    out << "generators:";
    for (int g : sol->generators) {
        out << ' ' << g;
    }
    out << (binary ? " (binary)" : "") << '\n';
    for (std::size_t i = 0; i < inst.targets.size(); ++i) {
        out << inst.targets[i] << " =";
        for (std::size_t j = 0; j < sol->subsets[i].size(); ++j) {
            out << (j ? " + " : " ") << sol->generators[sol->subsets[i][j]];
        }
        out << '\n';
    }
    return kPositive;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"onext: 1-extendable partitions of conflict graphs.\n"
                 "Exit codes: 0 positive answer, 1 negative answer, 2 input error, 3 resource budget.", "onext"};
    app.require_subcommand(1);
    Options o;

    auto* test = app.add_subcommand("test", "Decide whether every vertex lies in a maximum independent set");
    test->add_option("input", o.input, "Graph file, or - for stdin");
    test->add_option("--method", o.method, "oracle | cograph | mw | auto")
        ->check(CLI::IsMember({"oracle", "cograph", "mw", "auto"}));

    auto* chi = app.add_subcommand("chi", "Minimum number of classes of a 1-extendable partition");
    chi->add_option("input", o.input, "Graph file, or - for stdin");
    chi->add_option("--max-k", o.max_k, "Only search k = 1..max-k (exit 1 if none)")
        ->check(CLI::PositiveNumber);
    chi->add_option("--emit-partition", o.emit_partition, "Write the certificate as 'vertex color' lines");
    chi->add_option("--dot", o.dot, "Write a Graphviz file colored by class");

    auto* verify = app.add_subcommand("verify", "Check a partition certificate");
    verify->add_option("input", o.input, "Graph file")->required();
    verify->add_option("partition", o.partition_file, "Certificate file")->required();
    verify->add_option("--dot", o.dot, "Write a Graphviz file colored by class");

    auto* pv = app.add_subcommand("pv", "CSMA access proportions p_v and their large-theta limits");
    pv->add_option("input", o.input, "Graph file, or - for stdin");
    pv->add_option("--theta", o.theta, "Transmission/listen duration ratio (rational, default 50)");
    pv->add_flag("--float", o.as_float, "Print decimals instead of exact fractions");

    auto* gen = app.add_subcommand(
        "gen", "Generate a graph: multipartite-extremal K | interval-extremal K | multipartite S1,S2,.. | "
               "hardness K --base FILE | random N [P] --seed S");
    gen->add_option("family", o.family, "Graph family")->required();
    gen->add_option("params", o.params, "Family parameters");
    gen->add_option("--base", o.base, "Base graph for the hardness gadget");
    gen->add_option("--seed", o.seed, "Seed for the random family");
    gen->add_flag("--json", o.json, "Emit adjacency JSON instead of an edge list");

    auto* dec = app.add_subcommand(
        "decompose", "Modular decomposition tree and modular width (a single vertex has width 1)");
    dec->add_option("input", o.input, "Graph file, or - for stdin");

    auto* gs = app.add_subcommand("genset", "Generating-Set: k integers whose subset sums cover the targets");
    gs->add_option("targets", o.targets, "Target integers");
    gs->add_option("--k", o.k, "Number of generators");
    gs->add_option("--file", o.instance_file, "Instance file ('targets: ...' and 'k: ...' lines)");

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kPositive;
        }
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (test->parsed()) return cmd_test(o, in, out);
        if (chi->parsed()) return cmd_chi(o, in, out);
        if (verify->parsed()) return cmd_verify(o, in, out);
        if (pv->parsed()) return cmd_pv(o, in, out);
        if (gen->parsed()) return cmd_gen(o, in, out);
        if (dec->parsed()) return cmd_decompose(o, in, out);
        if (gs->parsed()) return cmd_genset(o, in, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace onext::cli
