#ifndef KCYCLE_GRAPH_HPP
#define KCYCLE_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kcycle {

// Static simple graph. Undirected graphs keep each neighbor once per
// endpoint in `adj`; directed graphs keep out-lists in `adj` and in-lists in
// `radj`. Neighbor lists are sorted and duplicate-free, so membership tests
// are binary searches. `labels` are stable external ids: the input graph has
// labels == vertex ids, and a contracted vertex inherits the smallest label
// of its merged set. Ids are kept sorted by label at every stage.
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<int>> radj;  // directed only
    std::vector<int> labels;

    bool has_edge(int u, int v) const;       // directed: u -> v
    bool has_undirected(int u, int v) const; // ignores orientation
    long long edge_count() const;            // undirected pairs / directed arcs
};

// Builds a simple graph from an edge list. Self-loops are rejected,
// endpoints must lie in [0, n), parallel edges are collapsed.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges, bool directed);

// Symmetric simple graph on the same vertices; antiparallel pairs collapse.
Graph underlying_undirected(const Graph& g);

// Edge-list text format: header "n m directed", then m lines "u v".
// Blank lines and '#' comments are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace kcycle

#endif
