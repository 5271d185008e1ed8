#include "moorex/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace moorex {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, bool directed, EdgeList edges)
    : n_(n), directed_(directed) {
    if (n < 1) {
        throw GraphError("vertex count must be >= 1, got " + std::to_string(n));
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw GraphError("vertex out of range [0, " + std::to_string(n) +
                             ") in edge " + edge_str(u, v));
        }
        if (!directed) {
            if (u == v) {
                throw GraphError("self-loop " + edge_str(u, v) +
                                 " not allowed in undirected graph");
            }
            if (u > v) std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            throw GraphError("duplicate edge " +
                             edge_str(edges[i].first, edges[i].second));
        }
    }
    edges_ = std::move(edges);

    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
        if (!directed_) {
            out_[v].push_back(u);
            in_[u].push_back(v);
        }
    }
    for (auto& nbrs : out_) std::sort(nbrs.begin(), nbrs.end());
    for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = out_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::vector<int>> Graph::adjacency_matrix() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
    for (const auto& [u, v] : edges_) {
        a[u][v] = 1;
        if (!directed_) a[v][u] = 1;
    }
    return a;
}

DegreeProfile degree_profile(const Graph& g) {
    const int n = g.vertex_count();
    DegreeProfile p;
    p.min_out = p.min_in = n + 1;
    p.max_out = p.max_in = -1;
    for (int v = 0; v < n; ++v) {
        const int dout = static_cast<int>(g.out_neighbors(v).size());
        const int din = static_cast<int>(g.in_neighbors(v).size());
        p.min_out = std::min(p.min_out, dout);
        p.max_out = std::max(p.max_out, dout);
        p.min_in = std::min(p.min_in, din);
        p.max_in = std::max(p.max_in, din);
    }
    p.is_regular = p.min_out == p.max_out && p.min_in == p.max_in &&
                   p.min_out == p.min_in;
    if (p.is_regular) p.degree = p.min_out;
    return p;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.out_neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

DiameterReport diameter(const Graph& g) {
    const int n = g.vertex_count();
    DiameterReport r;
    r.eccentricity.assign(n, -1);
    r.strongly_connected = true;
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g, v);
        int ecc = 0;
        bool full = true;
        for (int w = 0; w < n; ++w) {
            if (dist[w] < 0) {
                full = false;
            } else {
                ecc = std::max(ecc, dist[w]);
            }
        }
        if (full) {
            r.eccentricity[v] = ecc;
            diam = std::max(diam, ecc);
        } else {
            r.strongly_connected = false;
        }
    }
    if (r.strongly_connected) r.diameter = diam;
    return r;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    // Comments and blank lines allowed before the header only.
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        break;
    }
    if (line.empty() || line[0] == '#') {
        throw GraphError("missing header line");
    }
    std::istringstream header(line);
    std::string tag, mode;
    long long n = 0, m = 0;
    if (!(header >> tag >> mode >> n >> m) || tag != "graph" ||
        (mode != "undirected" && mode != "directed")) {
        throw GraphError("line " + std::to_string(lineno) +
                         ": expected header 'graph <undirected|directed> <n> <m>'");
    }
    std::string trailing;
    if (header >> trailing) {
        throw GraphError("line " + std::to_string(lineno) +
                         ": trailing content after header");
    }
    if (n < 1 || m < 0) {
        throw GraphError("line " + std::to_string(lineno) +
                         ": invalid vertex or edge count");
    }

    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) {
            throw GraphError("unexpected end of input: expected " +
                             std::to_string(m) + " edges, got " +
                             std::to_string(i));
        }
        ++lineno;
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v)) {
            throw GraphError("line " + std::to_string(lineno) +
                             ": expected '<u> <v>'");
        }
        if (es >> trailing) {
            throw GraphError("line " + std::to_string(lineno) +
                             ": trailing content after edge");
        }
        edges.emplace_back(u, v);
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty()) {
            throw GraphError("line " + std::to_string(lineno) +
                             ": unexpected content after edge list");
        }
    }
    try {
        return Graph(static_cast<int>(n), mode == "directed", std::move(edges));
    } catch (const GraphError& e) {
        throw GraphError(std::string("invalid edge list: ") + e.what());
    }
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open file: " + path);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "graph " << (g.is_directed() ? "directed" : "undirected") << ' '
        << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write file: " + path);
    out << to_edge_list(g);
}

}  // namespace moorex
