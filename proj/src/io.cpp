#include "onext/io.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "json.hpp"

namespace onext {

std::string GraphDocument::label(Vertex v) const {
    return names.empty() ? std::to_string(v) : names.at(v);
}

namespace {

void check_parts(const std::vector<int>& parts, int n, int line) {
    long long total = 0;
    for (int s : parts) {
        if (s < 1) {
            throw ParseError(line, 1, "part sizes must be positive");
        }
        total += s;
    }
    if (!parts.empty() && total != n) {
        throw ParseError(line, 1, "part sizes sum to " + std::to_string(total) + ", expected " +
                                      std::to_string(n));
    }
}

void check_names(const std::vector<std::string>& names, int n, int line) {
    if (names.empty()) {
        return;
    }
    if (static_cast<int>(names.size()) != n) {
        throw ParseError(line, 1, "names must cover all " + std::to_string(n) + " vertices");
    }
    std::set<std::string> unique;
    for (const auto& name : names) {
        if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos) {
            throw ParseError(line, 1, "vertex names must be non-empty and contain no whitespace");
        }
        if (!unique.insert(name).second) {
            throw ParseError(line, 1, "duplicate vertex name '" + name + "'");
        }
    }
}

GraphDocument parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, "invalid JSON");
    }
    GraphDocument doc;
    doc.format = GraphFormat::AdjacencyJson;
    try {
        if (j.contains("format") && j.at("format").get<std::string>() != "adjacency-json") {
            throw ParseError(1, 1, "unsupported format tag '" + j.at("format").get<std::string>() + "'");
        }
        const int n = j.at("n").get<int>();
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : j.value("edges", nlohmann::json::array())) {
            auto pair = e.get<std::array<int, 2>>();
            edges.emplace_back(pair[0], pair[1]);
        }
        doc.names = j.value("names", std::vector<std::string>{});
        doc.parts = j.value("parts", std::vector<int>{});
        check_names(doc.names, n, 1);
        check_parts(doc.parts, n, 1);
        doc.graph = Graph(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("malformed graph document: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(1, 1, e.what());
    }
    return doc;
}

GraphDocument parse_edge_list(const std::string& text) {
    GraphDocument doc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    long long declared_edges = 0;
    int p_line = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> edge_lines;
    std::vector<std::string> names;
    int names_seen = 0;
    int last_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        last_line = line_no;
        const int column = static_cast<int>(first) + 1;
        std::istringstream fields(line.substr(first));
        std::string tag;
        fields >> tag;
        auto expect_end = [&]() {
            std::string extra;
            if (fields >> extra) {
                throw ParseError(line_no, column, "unexpected trailing field '" + extra + "'");
            }
        };
        if (tag == "c") {
            continue;
        }
        if (tag == "p") {
            if (n >= 0) {
                throw ParseError(line_no, column, "duplicate 'p' line");
            }
            if (!(fields >> n >> declared_edges) || n < 0 || declared_edges < 0) {
                throw ParseError(line_no, column, "expected 'p <n> <m>'");
            }
            expect_end();
            names.assign(n, "");
            p_line = line_no;
            continue;
        }
        if (n < 0) {
            throw ParseError(line_no, column, "'" + tag + "' before the 'p <n> <m>' header");
        }
        if (tag == "e") {
            int u, v;
            if (!(fields >> u >> v)) {
                throw ParseError(line_no, column, "expected 'e <u> <v>'");
            }
            expect_end();
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw ParseError(line_no, column, "vertex out of range 0.." + std::to_string(n - 1));
            }
            if (u == v) {
                throw ParseError(line_no, column, "self-loop on vertex " + std::to_string(u));
            }
            edges.emplace_back(u, v);
            edge_lines.push_back(line_no);
        } else if (tag == "v") {
            int v;
            std::string name;
            if (!(fields >> v >> name)) {
                throw ParseError(line_no, column, "expected 'v <vertex> <name>'");
            }
            expect_end();
            if (v < 0 || v >= n) {
                throw ParseError(line_no, column, "vertex out of range 0.." + std::to_string(n - 1));
            }
            if (!names[v].empty()) {
                throw ParseError(line_no, column, "vertex " + std::to_string(v) + " named twice");
            }
            names[v] = name;
            ++names_seen;
        } else if (tag == "parts") {
            int s;
            while (fields >> s) {
                doc.parts.push_back(s);
            }
            if (!fields.eof()) {
                throw ParseError(line_no, column, "part sizes must be integers");
            }
            check_parts(doc.parts, n, line_no);
        } else {
            throw ParseError(line_no, column, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) {
        throw ParseError(std::max(last_line, 1), 1, "missing 'p <n> <m>' header");
    }
    if (static_cast<long long>(edges.size()) != declared_edges) {
        throw ParseError(p_line, 1, "header declares " + std::to_string(declared_edges) +
                                        " edges, found " + std::to_string(edges.size()));
    }
    if (names_seen > 0) {
        check_names(names, n, p_line);
        doc.names = std::move(names);
    }
    // Locate a duplicate edge before Graph rejects it, to report its line.
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto key = std::minmax(edges[i].first, edges[i].second);
        if (!seen.insert(key).second) {
            throw ParseError(edge_lines[i], 1, "duplicate edge {" + std::to_string(key.first) + "," +
                                                   std::to_string(key.second) + "}");
        }
    }
    doc.graph = Graph(n, edges);
    return doc;
}

} // namespace

GraphDocument parse_graph_document(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_json(text);
    }
    return parse_edge_list(text);
}

std::string to_edge_list(const GraphDocument& doc) {
    std::ostringstream out;
    out << "p " << doc.graph.order() << ' ' << doc.graph.size() << '\n';
    for (std::size_t v = 0; v < doc.names.size(); ++v) {
        out << "v " << v << ' ' << doc.names[v] << '\n';
    }
    if (!doc.parts.empty()) {
        out << "parts";
        for (int s : doc.parts) {
            out << ' ' << s;
        }
        out << '\n';
    }
    for (const Edge& e : doc.graph.edges()) {
        out << "e " << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

std::string to_json(const GraphDocument& doc) {
    nlohmann::ordered_json j;
    j["format"] = "adjacency-json";
    j["n"] = doc.graph.order();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : doc.graph.edges()) {
        edges.push_back({e.u, e.v});
    }
    j["edges"] = std::move(edges);
    if (!doc.names.empty()) {
        j["names"] = doc.names;
    }
    if (!doc.parts.empty()) {
        j["parts"] = doc.parts;
    }
    return j.dump() + "\n";
}

std::string format_partition(const Partition& p) {
    std::ostringstream out;
    for (std::size_t v = 0; v < p.color.size(); ++v) {
        out << v << ' ' << p.color[v] << '\n';
    }
    return out.str();
}

Partition parse_partition(const std::string& text, int n) {
    Partition p{0, std::vector<int>(n, 0)};
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long long v, c;
        std::string extra;
        if (!(fields >> v >> c) || (fields >> extra)) {
            throw ParseError(line_no, static_cast<int>(first) + 1, "expected '<vertex> <color>'");
        }
        if (v < 0 || v >= n) {
            throw ParseError(line_no, 1, "vertex " + std::to_string(v) + " out of range 0.." +
                                             std::to_string(n - 1));
        }
        if (c < 1 || c > n + 1) {
            throw ParseError(line_no, 1, "color " + std::to_string(c) + " out of range");
        }
        if (p.color[v] != 0) {
            throw ParseError(line_no, 1, "vertex " + std::to_string(v) + " colored twice");
        }
        p.color[v] = static_cast<int>(c);
        p.k = std::max(p.k, static_cast<int>(c));
    }
    for (int v = 0; v < n; ++v) {
        if (p.color[v] == 0) {
            throw InputError("vertex " + std::to_string(v) + " has no color");
        }
    }
    return p;
}

std::string to_dot(const GraphDocument& doc, const std::optional<Partition>& p) {
    static constexpr std::array<const char*, 10> palette = {
        "#e6c229", "#b0b0b0", "#707070", "#4f81bd", "#c0504d",
        "#9bbb59", "#8064a2", "#4bacc6", "#f79646", "#2c4d75"};
    std::ostringstream out;
    out << "graph G {\n  node [style=filled, fillcolor=white];\n";
    for (Vertex v = 0; v < doc.graph.order(); ++v) {
        out << "  " << v << " [label=\"" << doc.label(v) << "\"";
        if (p && v < static_cast<Vertex>(p->color.size()) && p->color[v] >= 1) {
            out << ", fillcolor=\"" << palette[(p->color[v] - 1) % palette.size()]
                << "\", class=" << p->color[v];
        }
        out << "];\n";
    }
    for (const Edge& e : doc.graph.edges()) {
        out << "  " << e.u << " -- " << e.v << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace onext
