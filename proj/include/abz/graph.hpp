#ifndef ABZ_GRAPH_HPP
#define ABZ_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace abz {

// Unordered edge, stored with u < v.
struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b);
    auto operator<=>(const Edge&) const = default;
};

// Finite simple graph on vertices 0..n-1, adjacency kept as one 64-bit
// mask per vertex. Values are treated as immutable once built and are
// safe to share across threads.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    uint64_t neighbor_mask(int v) const;
    int degree(int v) const;
    std::vector<Edge> edges() const; // lexicographic order

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<uint64_t> adj_;
};

// G - e: same vertices, edge removed. Rejects e not in G.
Graph delete_edge(const Graph& g, Edge e);

// G \ e: induced subgraph on the vertices adjacent to neither endpoint
// of e (both endpoints always drop out). Rejects e not in G. When
// old_of_new is given it receives, per new index, the original vertex.
Graph exclude_edge(const Graph& g, Edge e, std::vector<int>* old_of_new = nullptr);

// Induced subgraph on S, relabeled 0..|S|-1 preserving vertex order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s,
                       std::vector<int>* old_of_new = nullptr);
Graph induced_subgraph_mask(const Graph& g, uint64_t mask,
                            std::vector<int>* old_of_new = nullptr);

bool is_discrete(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool is_connected(const Graph& g);

// Chordality via maximum-cardinality search + perfect elimination check.
bool is_chordal(const Graph& g);

// Canonical form: equal bytes iff isomorphic. The key is the
// lexicographically least graph6 line reachable through the
// refinement-guided relabeling search, so it doubles as a printable
// canonical graph6 encoding. Supported for n <= 16.
struct CanonicalKey {
    std::string bytes;
    auto operator<=>(const CanonicalKey&) const = default;
};
CanonicalKey canonical_form(const Graph& g);

// new-index-of-old-vertex map realizing the canonical labeling.
std::vector<int> canonical_labeling(const Graph& g);

// graph6, short form only (n <= 62).
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// Edge-list text: first line "n <count>", then "u v" per line.
// '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// One representative per isomorphism class of simple graphs on n
// vertices (1 <= n <= 8), ordered lexicographically by canonical key.
std::vector<Graph> enumerate_graphs(int n);

} // namespace abz

#endif // ABZ_GRAPH_HPP
