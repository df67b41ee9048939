#ifndef C0PDOM_PQTREE_HPP
#define C0PDOM_PQTREE_HPP

#include <vector>

namespace c0pdom {

// PQ-tree over leaves 0..n-1. Represents the set of leaf orderings in which
// every successfully reduced set is consecutive: P-node children permute
// freely, Q-node children are ordered up to reversal.
//
// This implementation relabels the whole tree on every reduce instead of
// running the bottom-up bubble pass, so no blocked-sibling or pseudonode
// machinery is needed. Each reduce is O(tree size), which is plenty for the
// dense matrices handled here.
class PQTree {
public:
    explicit PQTree(int leaves);

    // Restrict to orderings where `set` is consecutive. Returns false when no
    // such ordering exists; the tree must not be used after a failure.
    bool reduce(const std::vector<int>& set);

    // Current leaf order, left to right.
    std::vector<int> frontier() const;

    int leaf_count() const { return leaves_; }

private:
    enum class Type : unsigned char { Leaf, P, Q };
    enum class Label : unsigned char { Empty, Full, Partial };

    struct Node {
        Type type = Type::Leaf;
        int leaf = -1;
        std::vector<int> kids;
    };

    std::vector<Node> nodes_;
    int root_ = -1;
    int leaves_ = 0;

    // Scratch, rebuilt per reduce.
    std::vector<char> in_set_;
    std::vector<int> full_count_;
    std::vector<int> leaf_total_;

    int new_node(Type t);
    int group_or_single(const std::vector<int>& kids);
    void count_pass(int x);
    int find_pertinent_root(int set_size) const;
    bool process(int x, bool pertinent_root, Label& out);
    bool process_p(int x, bool pertinent_root, Label& out);
    bool process_q(int x, bool pertinent_root, Label& out);
    void collect_frontier(int x, std::vector<int>& out) const;
};

}  // namespace c0pdom

#endif
