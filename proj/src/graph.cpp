#include "hopfchrom/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace hopfchrom {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw consistency_error("negative vertex count");
    if (n > 63) throw resource_error("graphs above 63 vertices are unsupported");
    adj_.assign(n, 0);
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == j) throw consistency_error("graph has a self-loop");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw consistency_error("edge endpoint out of range");
        if (i > j) std::swap(i, j);
        if ((adj_[i] >> j) & 1ull) throw consistency_error("duplicate edge");
        adj_[i] |= 1ull << j;
        adj_[j] |= 1ull << i;
        edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw consistency_error("cycle needs at least 3 vertices");
    auto g = Graph::path(n).edges();
    g.emplace_back(0, n - 1);
    return Graph(n, std::move(g));
}

int Graph::degree_of(int v) const { return __builtin_popcountll(adj_[v]); }

std::string Graph::str() const {
    std::ostringstream out;
    out << "Graph(n=" << n_ << ", edges={";
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (i) out << ",";
        out << edges_[i].first << "-" << edges_[i].second;
    }
    out << "})";
    return out.str();
}

Graph parse_graph6(const std::string& text, int vertex_cap) {
    if (vertex_cap <= 0) vertex_cap = global_caps().vertex_cap;
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > text.size())
            throw parse_error("graph6: truncated record at byte offset " + std::to_string(text.size()));
    };
    auto byte = [&](size_t at) -> int {
        int c = (unsigned char)text[at];
        if (c < 63 || c > 126)
            throw parse_error("graph6: invalid byte at offset " + std::to_string(at));
        return c - 63;
    };
    need(1);
    long long n;
    if ((unsigned char)text[pos] == 126) {
        ++pos;
        need(1);
        if ((unsigned char)text[pos] == 126) {
            ++pos;
            need(6);
            n = 0;
            for (int k = 0; k < 6; ++k) n = (n << 6) | byte(pos + k);
            pos += 6;
        } else {
            need(3);
            n = 0;
            for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos + k);
            pos += 3;
        }
    } else {
        n = byte(pos);
        ++pos;
    }
    if (n > vertex_cap)
        throw parse_error("graph6: vertex count " + std::to_string(n) + " exceeds cap " +
                          std::to_string(vertex_cap) + " (record starts at byte offset 0)");
    long long bits = n * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    need((size_t)bytes);
    std::vector<std::pair<int, int>> edges;
    long long t = 0;
    // Bit order: columns j = 1..n-1, rows i = 0..j-1, MSB of each sextet first.
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t) {
            int b = byte(pos + t / 6);
            if ((b >> (5 - t % 6)) & 1) edges.emplace_back(i, j);
        }
    pos += (size_t)bytes;
    if (pos != text.size())
        throw parse_error("graph6: trailing data at byte offset " + std::to_string(pos));
    return Graph((int)n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    std::string out;
    int n = g.vertex_count();
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    }
    long long bits = (long long)n * (n - 1) / 2;
    std::vector<int> sextets((size_t)((bits + 5) / 6), 0);
    long long t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.has_edge(i, j)) sextets[t / 6] |= 1 << (5 - t % 6);
    for (int s : sextets) out.push_back((char)(s + 63));
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [i, j] : h.edges()) edges.emplace_back(i + g.vertex_count(), j + g.vertex_count());
    return Graph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw consistency_error("induced_subgraph: vertex out of range");
        if (seen[v]) throw consistency_error("induced_subgraph: duplicate vertex");
        seen[v] = true;
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (g.has_edge(vertices[a], vertices[b])) edges.emplace_back((int)a, (int)b);
    return Graph((int)vertices.size(), std::move(edges));
}

Graph relabel_graph(const Graph& g, const Perm& relabel) {
    if (relabel.degree() != g.vertex_count())
        throw consistency_error("relabel_graph: degree mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [i, j] : g.edges()) edges.emplace_back(relabel(i), relabel(j));
    return Graph(g.vertex_count(), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> blocks;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, block;
        comp[s] = (int)blocks.size();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            block.push_back(v);
            std::uint64_t m = g.adjacency_mask(v);
            while (m) {
                int w = __builtin_ctzll(m);
                m &= m - 1;
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Iterated splitting by neighbour counts per cell; sub-cells ordered by
// signature so the refined partition depends only on isomorphism data.
void refine_partition(const Graph& g, Partition& cells) {
    int n = g.vertex_count();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(n);
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[v] = (int)c;
        Partition next;
        for (const auto& cell : cells) {
            if (cell.size() <= 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> tagged;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                std::uint64_t m = g.adjacency_mask(v);
                while (m) {
                    int w = __builtin_ctzll(m);
                    m &= m - 1;
                    ++sig[cell_of[w]];
                }
                tagged.emplace_back(std::move(sig), v);
            }
            std::sort(tagged.begin(), tagged.end());
            std::vector<int> cur{tagged[0].second};
            for (size_t i = 1; i < tagged.size(); ++i) {
                if (tagged[i].first != tagged[i - 1].first) {
                    next.push_back(std::move(cur));
                    cur.clear();
                }
                cur.push_back(tagged[i].second);
            }
            next.push_back(std::move(cur));
        }
        if (next.size() != cells.size()) changed = true;
        cells = std::move(next);
    }
    for (auto& cell : cells) std::sort(cell.begin(), cell.end());
}

// Exact minimum, over all orderings, of the adjacency bitstring read in
// graph6 column order: placing position p appends the p bits (sigma_0, p),
// ..., (sigma_(p-1), p), so the string grows with the search and strictly
// larger prefixes can be cut. Equal-string leaves yield automorphisms, which
// prune sibling branches orbit-wise (this is what tames K_bar_n and friends).
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> color;            // stable refinement colors, for branch order
    bool have_best = false;
    std::vector<std::uint8_t> best;    // full bitstring of the best leaf
    std::vector<int> best_labeling;    // position -> vertex
    std::vector<Perm> automorphisms;   // discovered along the way

    std::vector<int> prefix;           // position -> vertex, current branch
    std::vector<std::uint8_t> bits;    // bits of the current branch

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        Partition cells(1);
        cells[0].resize(n);
        std::iota(cells[0].begin(), cells[0].end(), 0);
        refine_partition(g, cells);
        color.assign(n, 0);
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) color[v] = (int)c;
    }

    std::vector<int> candidate_reps(const std::vector<int>& candidates) const {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : automorphisms) {
            bool fixes = true;
            for (int v : prefix)
                if (a(v) != v) { fixes = false; break; }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int ra = find(v), rb = find(a(v));
                if (ra != rb) parent[ra] = rb;
            }
        }
        std::vector<int> reps;
        std::vector<bool> used(n, false);
        for (int v : candidates) {
            int r = find(v);
            if (!used[r]) {
                used[r] = true;
                reps.push_back(v);
            }
        }
        return reps;
    }

    // Lexicographic compare of the current partial string against the same-
    // length prefix of best: -1 smaller, 0 equal, +1 greater. Done in full at
    // every node so pruning stays sound when best moves mid-subtree.
    int compare_prefix() const {
        for (size_t t = 0; t < bits.size(); ++t)
            if (bits[t] != best[t]) return bits[t] < best[t] ? -1 : 1;
        return 0;
    }

    void search(std::uint64_t placed_mask) {
        size_t p = prefix.size();
        if (p == (size_t)n) {
            if (!have_best) {
                have_best = true;
                best = bits;
                best_labeling = prefix;
                return;
            }
            int cmp = compare_prefix();
            if (cmp < 0) {
                best = bits;
                best_labeling = prefix;
            } else if (cmp == 0) {
                std::vector<int> a(n);
                for (int q = 0; q < n; ++q) a[best_labeling[q]] = prefix[q];
                automorphisms.emplace_back(std::move(a));
            }
            return;
        }
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (!((placed_mask >> v) & 1)) candidates.push_back(v);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](int a, int b) { return color[a] < color[b]; });
        for (int v : candidate_reps(candidates)) {
            size_t base = bits.size();
            for (size_t q = 0; q < p; ++q) bits.push_back(g.has_edge(prefix[q], v) ? 1 : 0);
            if (!have_best || compare_prefix() <= 0) {
                prefix.push_back(v);
                search(placed_mask | (1ull << v));
                prefix.pop_back();
            }
            bits.resize(base);
        }
    }
};

int effective_vertex_cap(int vertex_cap) {
    return vertex_cap > 0 ? vertex_cap : global_caps().vertex_cap;
}

}  // namespace

CanonicalWitness canonical_form(const Graph& g, int vertex_cap) {
    if (g.vertex_count() > effective_vertex_cap(vertex_cap))
        throw resource_error("canonical_form: vertex count exceeds cap");
    int n = g.vertex_count();
    if (n == 0) return {g, Perm::identity(0)};
    CanonSearch search(g);
    search.search(0);
    // best_labeling[p] = input vertex at position p; the witness maps input
    // vertices to canonical positions.
    std::vector<int> relabel(n);
    for (int p = 0; p < n; ++p) relabel[search.best_labeling[p]] = p;
    Perm w(std::move(relabel));
    return {relabel_graph(g, w), w};
}

PermGroup automorphism_group(const Graph& g, int vertex_cap, long long order_cap) {
    if (g.vertex_count() > effective_vertex_cap(vertex_cap))
        throw resource_error("automorphism_group: vertex count exceeds cap");
    if (order_cap <= 0) order_cap = global_caps().group_cap;
    int n = g.vertex_count();
    Partition cells(1);
    cells[0].resize(n);
    std::iota(cells[0].begin(), cells[0].end(), 0);
    refine_partition(g, cells);
    std::vector<int> color(n);
    for (size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) color[v] = (int)c;

    std::vector<Perm> found;
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            if ((long long)found.size() >= order_cap)
                throw resource_error("automorphism group exceeds order cap " +
                                     std::to_string(order_cap));
            found.emplace_back(img);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(img[u], w)) ok = false;
            if (!ok) continue;
            img[v] = w;
            used[w] = true;
            extend(v + 1);
            img[v] = -1;
            used[w] = false;
        }
    };
    extend(0);
    return PermGroup::from_elements(n, std::move(found));
}

PermGroup automorphism_group_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> found;
    do {
        bool ok = true;
        for (auto [i, j] : g.edges())
            if (!g.has_edge(img[i], img[j])) { ok = false; break; }
        if (ok) found.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return PermGroup::from_elements(n, std::move(found));
}

}  // namespace hopfchrom
