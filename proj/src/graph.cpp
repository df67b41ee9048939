#include "c0pdom/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "c0pdom/errors.hpp"

namespace c0pdom {

VertexSet normalize_vertex_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool BitMatrix::is_symmetric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (test(i, j) != test(j, i)) return false;
    return true;
}

bool BitMatrix::has_unit_diagonal() const {
    for (int i = 0; i < size(); ++i)
        if (!test(i, i)) return false;
    return true;
}

VertexSet Graph::neighbors(int v) const {
    VertexSet out;
    for (int u = 0; u < n(); ++u)
        if (adj_.test(v, u)) out.push_back(u);
    return out;
}

EdgeList Graph::edges() const {
    EdgeList out;
    for (int u = 0; u < n(); ++u)
        for (int v = u + 1; v < n(); ++v)
            if (adj_.test(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::from_bit_rows(BitRows rows) {
    Graph g;
    const int n = rows.size();
    int m = 0;
    for (int v = 0; v < n; ++v) {
        if (rows.test(v, v)) throw SelfLoop("adjacency diagonal must be zero");
        m += rows.row_popcount(v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rows.test(u, v) != rows.test(v, u))
                throw Error("adjacency rows not symmetric");
    g.adj_ = std::move(rows);
    g.edge_count_ = m / 2;
    return g;
}

Graph from_edge_list(int n, const EdgeList& edges) {
    if (n < 0) throw IndexOutOfRange("vertex count must be non-negative");
    Graph g;
    g.adj_ = BitRows(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRange("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                  " outside 0.." + std::to_string(n - 1));
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        if (!g.adj_.test(u, v)) {
            g.adj_.set(u, v);
            g.adj_.set(v, u);
            ++g.edge_count_;
        }
    }
    return g;
}

BitMatrix augmented_matrix(const Graph& g) {
    BitMatrix m(g.n());
    for (int i = 0; i < g.n(); ++i) {
        m.set(i, i);
        for (int j = 0; j < g.n(); ++j)
            if (g.adjacent(i, j)) m.set(i, j);
    }
    return m;
}

int min_degree(const Graph& g) {
    if (g.n() == 0) throw EmptyGraph("minimum degree of the empty graph is undefined");
    int d = g.n();
    for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet u;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == g.n() - 1) u.push_back(v);
    return u;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    VertexSet k = normalize_vertex_set(keep);
    for (int v : k)
        if (v < 0 || v >= g.n())
            throw IndexOutOfRange("kept vertex " + std::to_string(v) + " outside graph");
    InducedSubgraph out;
    out.old_to_new.assign(g.n(), -1);
    out.new_to_old = k;
    for (size_t i = 0; i < k.size(); ++i) out.old_to_new[k[i]] = static_cast<int>(i);
    EdgeList edges;
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = i + 1; j < k.size(); ++j)
            if (g.adjacent(k[i], k[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    out.graph = from_edge_list(static_cast<int>(k.size()), edges);
    return out;
}

bool is_k_tuple_dominating(const Graph& g, const VertexSet& d, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    VertexSet ds = normalize_vertex_set(d);
    for (int v : ds)
        if (v < 0 || v >= g.n())
            throw IndexOutOfRange("dominating-set vertex " + std::to_string(v) + " outside graph");
    if (k == 0) return true;
    const int words = g.words_per_row();
    std::vector<uint64_t> mask(std::max(words, 1), 0);
    for (int v : ds) mask[v >> 6] |= uint64_t{1} << (v & 63);
    std::vector<char> in_d(g.n(), 0);
    for (int v : ds) in_d[v] = 1;
    for (int v = 0; v < g.n(); ++v) {
        const uint64_t* row = g.neighbor_row(v);
        int c = in_d[v];
        for (int w = 0; w < words; ++w) c += std::popcount(row[w] & mask[w]);
        if (c < k) return false;
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 0; u < g.n(); ++u)
                if (!seen[u] && g.adjacent(v, u)) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        comps.push_back(normalize_vertex_set(std::move(comp)));
    }
    return comps;
}

}  // namespace c0pdom
