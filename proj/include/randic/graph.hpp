#ifndef RANDIC_GRAPH_HPP
#define RANDIC_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace randic {

/// Simple undirected graph: a vertex count and a set of unordered pairs.
/// Immutable after construction; edges are normalized to (i, j) with i < j,
/// sorted, and checked for self-loops and duplicates.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::vector<std::pair<int, int>> edges = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const;
    const std::vector<int>& degrees() const { return degree_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int i, int j) const;

    /// k if every vertex has degree k (nullopt otherwise; 0-regular for n>0
    /// edgeless graphs, nullopt for n == 0).
    std::optional<int> regularity() const;
    bool is_connected() const;

    /// Dense 0/1 adjacency matrix.
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> degree_;
};

/// Cycle C_m, m >= 3.
Graph make_cycle(int m);

/// Dutch windmill D_m^n: n copies of C_m sharing vertex 0 as hub.
/// (m-1)n + 1 vertices, mn edges; cycle c occupies vertices
/// 1 + c(m-1) .. (c+1)(m-1) in path order, the hub closing each cycle.
Graph make_dutch_windmill(int m, int n);

/// Friendship graph F_n = D_3^n.
Graph make_friendship(int n);

/// K_{m,n} minus the lexicographically first cross edge (vertex 0 to vertex m).
Graph make_complete_bipartite_minus_edge(int m, int n);

/// The Petersen graph on 10 vertices, labeled as an outer 5-cycle 0..4 with
/// spokes to 5..9 and the inner pentagram.
Graph make_petersen();

/// Vertex-disjoint union with vertices relabeled consecutively.
Graph disjoint_union(const std::vector<Graph>& gs);

/// graph6 small format (n <= 62).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

/// 0/1 rows, one line per vertex, for debugging.
std::string format_adjacency(const Graph& g);

}  // namespace randic

#endif
