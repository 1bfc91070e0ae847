#include "abz/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace abz {

Edge::Edge(int a, int b) {
    if (a == b) throw std::invalid_argument("Edge: loops are not allowed");
    u = std::min(a, b);
    v = std::max(a, b);
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count out of range 0..64");
    adj_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (Edge e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex index out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u] |= uint64_t(1) << v;
    adj_[v] |= uint64_t(1) << u;
}

uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[u] >> v) & 1) out.push_back(Edge(u, v));
    return out;
}

Graph delete_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("delete_edge: edge not in graph");
    Graph h(g.vertex_count());
    for (Edge f : g.edges())
        if (!(f == e)) h.add_edge(f.u, f.v);
    return h;
}

Graph exclude_edge(const Graph& g, Edge e, std::vector<int>* old_of_new) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("exclude_edge: edge not in graph");
    uint64_t full = g.vertex_count() == 64 ? ~uint64_t(0)
                                           : (uint64_t(1) << g.vertex_count()) - 1;
    uint64_t removed = g.neighbor_mask(e.u) | g.neighbor_mask(e.v) |
                       (uint64_t(1) << e.u) | (uint64_t(1) << e.v);
    return induced_subgraph_mask(g, full & ~removed, old_of_new);
}

Graph induced_subgraph_mask(const Graph& g, uint64_t mask, std::vector<int>* old_of_new) {
    std::vector<int> s;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1) s.push_back(v);
    return induced_subgraph(g, s, old_of_new);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s, std::vector<int>* old_of_new) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex in set");
    for (int v : sorted)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    Graph h(static_cast<int>(sorted.size()));
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_of_new) *old_of_new = sorted;
    return h;
}

bool is_discrete(const Graph& g) { return g.edge_count() == 0; }

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        uint64_t fresh = g.neighbor_mask(v) & ~seen;
        seen |= fresh;
        while (fresh) {
            int w = std::countr_zero(fresh);
            fresh &= fresh - 1;
            stack.push_back(w);
        }
    }
    return std::popcount(seen) == n;
}

bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    // maximum-cardinality search; produces a reverse perfect elimination
    // ordering exactly when the graph is chordal
    std::vector<int> weight(n, 0), order;
    std::vector<char> numbered(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = 1;
        order.push_back(best);
        for (int w = 0; w < n; ++w)
            if (!numbered[w] && g.has_edge(best, w)) ++weight[w];
    }
    std::reverse(order.begin(), order.end()); // candidate peo
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int first = -1;
        for (int w = 0; w < n; ++w)
            if (g.has_edge(v, w) && pos[w] > i && (first < 0 || pos[w] < pos[first])) first = w;
        if (first < 0) continue;
        for (int w = 0; w < n; ++w)
            if (g.has_edge(v, w) && pos[w] > pos[first] && !g.has_edge(first, w)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// graph6

namespace {
std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}
} // namespace

Graph parse_graph6(const std::string& line) {
    std::string s = strip(line);
    if (s.empty()) throw std::invalid_argument("graph6: empty line");
    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
    if (c0 < 63 || c0 > 126) throw std::invalid_argument("graph6: byte outside 63..126 range");
    int n = c0 - 63;
    int bits = n * (n - 1) / 2;
    int nbytes = (bits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: malformed length for n=" + std::to_string(n));
    Graph g(n);
    int t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            unsigned char c = static_cast<unsigned char>(s[1 + t / 6]);
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126 range");
            if (((c - 63) >> (5 - t % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported");
    std::string s(1, static_cast<char>(63 + n));
    int acc = 0, fill = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                s.push_back(static_cast<char>(63 + acc));
                acc = 0;
                fill = 0;
            }
        }
    }
    if (fill) s.push_back(static_cast<char>(63 + (acc << (6 - fill))));
    return s;
}

// ---------------------------------------------------------------------------
// edge-list text

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_tokens = [&](std::vector<long long>& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::string body = strip(line);
            if (body.empty()) continue;
            std::istringstream ss(body);
            out.clear();
            long long x;
            while (ss >> x) out.push_back(x);
            if (!ss.eof())
                throw std::invalid_argument("edge list: line " + std::to_string(lineno) +
                                            ": expected integers");
            return true;
        }
        return false;
    };

    std::vector<long long> toks;
    if (!next_tokens(toks)) throw std::invalid_argument("edge list: missing header line");
    if (toks.size() != 2 || toks[0] < 0 || toks[1] < 0)
        throw std::invalid_argument("edge list: line " + std::to_string(lineno) +
                                    ": header must be \"n <count>\"");
    int n = static_cast<int>(toks[0]);
    long long m = toks[1];
    Graph g(n);
    for (long long k = 0; k < m; ++k) {
        if (!next_tokens(toks))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(k));
        if (toks.size() != 2)
            throw std::invalid_argument("edge list: line " + std::to_string(lineno) +
                                        ": expected \"u v\"");
        long long u = toks[0], v = toks[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: line " + std::to_string(lineno) +
                                        ": vertex out of range");
        if (u == v)
            throw std::invalid_argument("edge list: line " + std::to_string(lineno) + ": loop");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw std::invalid_argument("edge list: line " + std::to_string(lineno) +
                                        ": duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_tokens(toks))
        throw std::invalid_argument("edge list: line " + std::to_string(lineno) +
                                    ": trailing content after edge list");
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// canonical form: color refinement + backtracking over target cells,
// minimizing the adjacency bit string (== the graph6 byte string)

namespace {

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
        for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbor_mask(v));
    }

    std::vector<int> run() {
        if (n_ == 0) return {};
        placed_.reserve(n_);
        bits_.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
        search();
        return best_perm_;
    }

private:
    std::vector<int> refine() const {
        std::vector<int> color(n_, 0);
        std::vector<char> placed(n_, 0);
        for (size_t i = 0; i < placed_.size(); ++i) {
            color[placed_[i]] = static_cast<int>(i);
            placed[placed_[i]] = 1;
        }
        int base = static_cast<int>(placed_.size());
        for (int v = 0; v < n_; ++v)
            if (!placed[v]) color[v] = base;
        for (int round = 0; round < n_; ++round) {
            std::vector<std::pair<std::vector<int>, int>> sigs;
            for (int v = 0; v < n_; ++v) {
                if (placed[v]) continue;
                std::vector<int> sig{color[v]};
                std::vector<int> nb;
                uint64_t m = adj_[v];
                while (m) {
                    int w = std::countr_zero(m);
                    m &= m - 1;
                    nb.push_back(color[w]);
                }
                std::sort(nb.begin(), nb.end());
                sig.insert(sig.end(), nb.begin(), nb.end());
                sigs.emplace_back(std::move(sig), v);
            }
            std::sort(sigs.begin(), sigs.end());
            std::vector<int> next = color;
            int c = base;
            for (size_t i = 0; i < sigs.size(); ++i) {
                if (i > 0 && sigs[i].first != sigs[i - 1].first) ++c;
                next[sigs[i].second] = c;
            }
            if (next == color) break;
            color = std::move(next);
        }
        return color;
    }

    // -1 strictly below best, 0 equal prefix, +1 prune
    int compare_extension(int cand) const {
        if (!have_best_) return -1;
        size_t off = bits_.size();
        size_t k = placed_.size();
        for (size_t j = 0; j < off; ++j)
            if (bits_[j] != best_bits_[j]) return bits_[j] < best_bits_[j] ? -1 : 1;
        for (size_t j = 0; j < k; ++j) {
            uint8_t b = (adj_[placed_[j]] >> cand) & 1;
            if (b != best_bits_[off + j]) return b < best_bits_[off + j] ? -1 : 1;
        }
        return 0;
    }

    bool twins(int u, int v) const {
        uint64_t m = ~((uint64_t(1) << u) | (uint64_t(1) << v));
        return (adj_[u] & m) == (adj_[v] & m);
    }

    void search() {
        if (static_cast<int>(placed_.size()) == n_) {
            if (!have_best_ || bits_ < best_bits_) {
                best_bits_ = bits_;
                best_perm_ = placed_;
                have_best_ = true;
            }
            return;
        }
        std::vector<int> color = refine();
        std::vector<char> placed(n_, 0);
        for (int v : placed_) placed[v] = 1;
        int target = -1;
        for (int v = 0; v < n_; ++v)
            if (!placed[v] && (target < 0 || color[v] < target)) target = color[v];
        std::vector<int> cands;
        for (int v = 0; v < n_; ++v)
            if (!placed[v] && color[v] == target) cands.push_back(v);
        std::vector<int> kept;
        for (int v : cands) {
            bool dup = false;
            for (int u : kept)
                if (twins(u, v)) { dup = true; break; }
            if (!dup) kept.push_back(v);
        }
        for (int v : kept) {
            if (compare_extension(v) > 0) continue;
            size_t mark = bits_.size();
            for (int u : placed_) bits_.push_back((adj_[u] >> v) & 1);
            placed_.push_back(v);
            search();
            placed_.pop_back();
            bits_.resize(mark);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<uint64_t> adj_;
    std::vector<int> placed_;
    std::vector<uint8_t> bits_, best_bits_;
    std::vector<int> best_perm_;
    bool have_best_ = false;
};

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.vertex_count() > 16)
        throw std::invalid_argument("canonical_form: supported for n <= 16 only");
    std::vector<int> perm = Canonicalizer(g).run(); // placement order: old ids
    std::vector<int> new_of_old(g.vertex_count());
    for (size_t i = 0; i < perm.size(); ++i) new_of_old[perm[i]] = static_cast<int>(i);
    return new_of_old;
}

CanonicalKey canonical_form(const Graph& g) {
    std::vector<int> lab = canonical_labeling(g);
    Graph h(g.vertex_count());
    for (Edge e : g.edges()) h.add_edge(lab[e.u], lab[e.v]);
    return CanonicalKey{write_graph6(h)};
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_graphs: n must be in 1..8");
    std::map<std::string, Graph> all;
    Graph discrete(n);
    std::string k0 = canonical_form(discrete).bytes;
    std::map<std::string, Graph> level{{k0, discrete}};
    all = level;
    while (!level.empty()) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : level) {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    Graph h = g;
                    h.add_edge(u, v);
                    std::string k = canonical_form(h).bytes;
                    if (!all.count(k) && !next.count(k)) next.emplace(k, parse_graph6(k));
                }
            }
        }
        all.insert(next.begin(), next.end());
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(all.size());
    for (const auto& [key, g] : all) out.push_back(g);
    return out;
}

} // namespace abz
