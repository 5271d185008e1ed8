#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moorex {

using EdgeList = std::vector<std::pair<int, int>>;

// Raised for invalid graph construction and edge-list parse failures.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable simple graph with dense vertex ids [0, n).
//
// Undirected graphs store each edge once as an unordered pair (min, max) and
// reject self-loops. Directed graphs may contain self-loops (de Bruijn
// digraphs have one at every constant word). All queries are read-only and
// safe for concurrent readers.
class Graph {
public:
    Graph(int n, bool directed, EdgeList edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_directed() const { return directed_; }

    // Canonical order: undirected pairs normalized to (min, max), then sorted.
    const EdgeList& edges() const { return edges_; }

    const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }
    const std::vector<int>& in_neighbors(int v) const { return in_.at(v); }
    // Undirected alias for out_neighbors.
    const std::vector<int>& neighbors(int v) const { return out_.at(v); }

    bool has_edge(int u, int v) const;

    // Dense 0/1 matrix; symmetric for undirected graphs, diagonal entries
    // possible for directed graphs with loops.
    std::vector<std::vector<int>> adjacency_matrix() const;

private:
    int n_;
    bool directed_;
    EdgeList edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

struct DegreeProfile {
    // For undirected graphs in- and out- coincide with the plain degree.
    int min_out = 0;
    int max_out = 0;
    int min_in = 0;
    int max_in = 0;
    bool is_regular = false;
    std::optional<int> degree;  // regular degree d, present iff is_regular
};

DegreeProfile degree_profile(const Graph& g);

struct DiameterReport {
    // nullopt means infinite (some ordered pair unreachable).
    std::optional<int> diameter;
    // Per-vertex eccentricity; -1 where some vertex is unreachable.
    std::vector<int> eccentricity;
    // Connected for undirected graphs, strongly connected for digraphs.
    bool strongly_connected = false;
};

DiameterReport diameter(const Graph& g);

// Single-source BFS distances over out-edges; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// Edge-list text format:
//   line 1: "graph <undirected|directed> <n> <m>"
//   then m lines "<u> <v>", 0-based decimal ids, single space, LF endings.
// Comment lines starting with '#' are permitted before the header only.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);
std::string to_edge_list(const Graph& g);
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace moorex
