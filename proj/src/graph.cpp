#include "randic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "randic/errors.hpp"

namespace randic {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [i, j] : edges) {
        if (i == j) throw std::invalid_argument("Graph: self-loop");
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);

    adj_.resize(n_);
    degree_.assign(n_, 0);
    for (auto [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
        ++degree_[i];
        ++degree_[j];
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("degree: vertex out of range");
    return degree_[v];
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("neighbors: vertex out of range");
    return adj_[v];
}

bool Graph::has_edge(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || i == j) return false;
    const auto& nbrs = adj_[i];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::optional<int> Graph::regularity() const {
    if (n_ == 0) return std::nullopt;
    int k = degree_[0];
    for (int d : degree_)
        if (d != k) return std::nullopt;
    return k;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
    for (auto [i, j] : edges_) a[i][j] = a[j][i] = 1;
    return a;
}

Graph make_cycle(int m) {
    if (m < 3) throw std::invalid_argument("make_cycle: m must be >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, m - 1);
    return Graph(m, std::move(edges));
}

Graph make_dutch_windmill(int m, int n) {
    if (m < 3) throw std::invalid_argument("make_dutch_windmill: m must be >= 3");
    if (n < 1) throw std::invalid_argument("make_dutch_windmill: n must be >= 1");
    int vertices = (m - 1) * n + 1;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m) * n);
    for (int c = 0; c < n; ++c) {
        int first = 1 + c * (m - 1);
        int last = (c + 1) * (m - 1);
        edges.emplace_back(0, first);
        for (int v = first; v < last; ++v) edges.emplace_back(v, v + 1);
        edges.emplace_back(0, last);
    }
    return Graph(vertices, std::move(edges));
}

Graph make_friendship(int n) { return make_dutch_windmill(3, n); }

Graph make_complete_bipartite_minus_edge(int m, int n) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("make_complete_bipartite_minus_edge: m, n must be >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m) * n - 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (!(i == 0 && j == 0)) edges.emplace_back(i, m + j);
    return Graph(m + n, std::move(edges));
}

Graph make_petersen() {
    // Outer cycle 0..4, spokes i -- i+5, inner pentagram 5-7-9-6-8.
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty()) throw std::invalid_argument("disjoint_union: empty list");
    int total = 0;
    std::vector<std::pair<int, int>> edges;
    for (const Graph& g : gs) {
        for (auto [i, j] : g.edges()) edges.emplace_back(total + i, total + j);
        total += g.vertex_count();
    }
    return Graph(total, std::move(edges));
}

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6_encode: small format requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bitpos = 5;
    char cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bitpos);
            if (--bitpos < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bitpos = 5;
            }
        }
    }
    if (bitpos != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph graph6_decode(const std::string& s) {
    if (s.empty()) throw ParseError("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("graph6: character out of range");
    int n = s[0] - 63;
    if (s[0] == 126) throw ParseError("graph6: long format (n > 62) not supported");
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t expect = 1 + (nbits + 5) / 6;
    if (s.size() != expect) throw ParseError("graph6: wrong length for header");
    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = s[1 + bit / 6] - 63;
            if (group & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

std::string format_adjacency(const Graph& g) {
    std::string out;
    for (const auto& row : g.adjacency()) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out.push_back(' ');
            out.push_back(row[j] ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace randic
