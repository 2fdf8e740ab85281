#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onext/errors.hpp"
#include "onext/graph.hpp"
#include "onext/partition.hpp"

namespace onext {

// Input error pinned to a position in the source text (1-based).
class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

enum class GraphFormat { EdgeList, AdjacencyJson };

struct GraphDocument {
    GraphFormat format = GraphFormat::EdgeList;
    Graph graph;
    std::vector<std::string> names; // empty, or one unique name per vertex
    std::vector<int> parts;         // complete multipartite part sizes, if known

    std::string label(Vertex v) const;
};

// Edge list:
//   c <comment>
//   p <n> <m>
//   v <vertex> <name>          (optional)
//   parts <s1> <s2> ...        (optional)
//   e <u> <v>                  (m lines, 0-based)
// A document whose first non-blank character is '{' is read as JSON:
//   {"format": "adjacency-json", "n": 4, "edges": [[0,1],...],
//    "names": [...], "parts": [...]}
GraphDocument parse_graph_document(const std::string& text);

// Canonical forms: parsing the output reproduces the document exactly.
std::string to_edge_list(const GraphDocument& doc);
std::string to_json(const GraphDocument& doc);

// Certificate file: one "vertex color" line per vertex, colors >= 1.
std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text, int n);

// Graphviz export; vertices are filled by partition class when one is given.
std::string to_dot(const GraphDocument& doc, const std::optional<Partition>& p = std::nullopt);

} // namespace onext
