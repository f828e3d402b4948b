#pragma once

#include <string>
#include <vector>

#include "efl/perm.hpp"
#include "efl/poly.hpp"

namespace efl {

// Complete increasing binary tree: every internal node carries a label and
// exactly two children, each either another internal node or a leaf slot.
class IncTree {
public:
    static constexpr int kLeaf = -1;
    struct Node {
        int label;
        int left = kLeaf;
        int right = kLeaf;
    };

    // Minimum of the word becomes the root, the prefix builds the left
    // subtree, the suffix the right subtree.
    static IncTree from_perm(const Perm& p) { return from_word(p.word()); }
    static IncTree from_word(const std::vector<int>& word);
    static IncTree from_parts(std::vector<Node> nodes, int root);

    // In-order reading of the internal labels.
    Perm to_perm() const;

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int root() const { return root_; }
    const Node& node(int idx) const { return nodes_[idx]; }
    const std::vector<Node>& nodes() const { return nodes_; }

    IncTree subtree_copy(int idx) const;

    // "1(4(8(.,.),6(9(.,.),.)),2(.,3(5(.,.),7(.,.))))"
    std::string str() const;

    friend bool operator==(const IncTree& a, const IncTree& b) {
        return a.str() == b.str();
    }

private:
    std::vector<Node> nodes_;
    int root_ = kLeaf;
};

// Vertex classification induced by the two pole leaves: the a-leaf ends the
// leftmost spine, the b-leaf the rightmost; non-root vertices on those spines
// are the alpha- and beta-vertices.
struct PoleClasses {
    std::vector<bool> alpha, beta;  // per node index
    int a_parent = -1;              // its left child is the a-leaf
    int b_parent = -1;              // its right child is the b-leaf
};
PoleClasses pole_classes(const IncTree& t);

enum class LabelScheme { XY, ABAlphaBeta, ABAlpha, Modified1, Modified2, AXYZ };

struct TreeStats {
    int peaks = 0;    // vertices with two proper leaf children
    int xleaf = 0;    // proper left leaf slots
    int yleaf = 0;    // proper right leaf slots
    int n_alpha = 0;
    int n_beta = 0;
};
TreeStats tree_stats(const IncTree& t);

// All slot/vertex counts any labeling scheme needs, from one walk.
struct LabelCounts {
    int left_slots = 0, right_slots = 0;  // all leaf slots by side
    int xleaf = 0, yleaf = 0;             // proper leaf slots by side
    int n_alpha = 0, n_beta = 0;
    int peaks = 0;                        // proper sibling leaf pairs
    int singles = 0;                      // proper leaves without a proper leaf sibling
    int ax = 0, ay = 0, az = 0;           // AXYZ leaf counts (plus one 'a' label)
};
LabelCounts label_counts(const IncTree& t);

struct LabeledTree {
    LabelScheme scheme;
    std::string rendered;  // tree text with the labels attached
    Poly weight;           // product of all labels
};
LabeledTree apply_labeling(const IncTree& t, LabelScheme scheme);

// Weight of a tree with the given counts, as a fully expanded polynomial.
Poly scheme_weight(LabelScheme scheme, const LabelCounts& c);

// Sum of labeled-tree weights over all increasing binary trees on [n], n >= 1.
Poly sum_weights(int n, LabelScheme scheme, unsigned threads = 1);

}  // namespace efl
