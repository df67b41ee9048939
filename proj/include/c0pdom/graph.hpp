#ifndef C0PDOM_GRAPH_HPP
#define C0PDOM_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "c0pdom/bitrows.hpp"

namespace c0pdom {

// Sorted duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

VertexSet normalize_vertex_set(VertexSet s);

using EdgeList = std::vector<std::pair<int, int>>;

// Augmented adjacency matrix role (symmetric, unit diagonal when produced by
// augmented_matrix).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : rows_(n) {}

    int size() const { return rows_.size(); }
    bool test(int i, int j) const { return rows_.test(i, j); }
    void set(int i, int j) { rows_.set(i, j); }
    const BitRows& rows() const { return rows_; }
    bool is_symmetric() const;
    bool has_unit_diagonal() const;
    bool operator==(const BitMatrix& o) const { return rows_ == o.rows_; }

private:
    BitRows rows_;
};

// Simple undirected graph on dense vertices 0..n-1. Immutable after
// construction; adjacency is a packed bit row per vertex.
class Graph {
public:
    Graph() = default;

    int n() const { return adj_.size(); }
    int m() const { return edge_count_; }
    bool adjacent(int u, int v) const { return adj_.test(u, v); }
    int degree(int v) const { return adj_.row_popcount(v); }
    const uint64_t* neighbor_row(int v) const { return adj_.row(v); }
    int words_per_row() const { return adj_.words_per_row(); }

    VertexSet neighbors(int v) const;
    EdgeList edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    // Builder used by the generator; rows must already be symmetric with an
    // all-zero diagonal.
    static Graph from_bit_rows(BitRows rows);

private:
    friend Graph from_edge_list(int n, const EdgeList& edges);
    BitRows adj_;
    int edge_count_ = 0;
    std::vector<std::string> labels_;
};

Graph from_edge_list(int n, const EdgeList& edges);

BitMatrix augmented_matrix(const Graph& g);

int min_degree(const Graph& g);

VertexSet universal_vertices(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for dropped vertices
    std::vector<int> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_k_tuple_dominating(const Graph& g, const VertexSet& d, int k);

std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace c0pdom

#endif
