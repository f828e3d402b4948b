#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efl/ibtree.hpp"
#include "efl/poly.hpp"

namespace efl {

struct TooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RuleMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LeafSide { Left, Right };

// Planted increasing binary tree: a root alone, a root over one leaf
// (recorded when the decomposition detached one), or a root over a complete
// increasing binary subtree.
struct PlantedTree {
    int root_label = 0;
    std::optional<IncTree> child;
    std::optional<LeafSide> leaf_child;

    bool single() const { return !child.has_value(); }
};

struct SupportForest {
    std::vector<PlantedTree> components;  // increasing root labels

    std::vector<int> labels() const;  // sorted ground set
    void shift_labels(int delta);
    std::string str() const;  // "2(x) 3(5(x,y)) 4(6(9(x,y),y)) 7(x) 8(y)"
};

// Detach every alpha- and beta-vertex together with the subtree hanging off
// its non-spine child. Roots of the components are exactly those vertices;
// the ground set is [2, n]. Throws TooSmallError for the single-node tree.
SupportForest supporting_forest(const IncTree& t);

// Forest of planted increasing 0-1-2 plane trees: orbit representative of a
// supporting forest under swapping a leaf with its non-leaf sibling.
struct PlaneForest {
    struct Node {
        int label;
        int parent = -1;            // -1 for component roots
        std::vector<int> children;  // ordered, size <= 2 (<= 1 for roots)
    };
    enum class VertexClass { SingleRoot, RootWithChild, Leaf, Unary, Binary };

    std::vector<Node> nodes;
    std::vector<int> roots;  // node indices, increasing root labels

    VertexClass classify(int idx) const;
    void shift_labels(int delta);
    // Canonical text, also the orbit key:
    // "2:s 3:r[5:l] 4:r[6:u[9:l]] 7:s 8:s"
    std::string str() const;
};

PlaneForest canonicalize(const SupportForest& f);

enum class WeightRules {
    Support,        // supporting forests, inherited leaf labels
    AlphaBeta,      // plane: single root x*beta+y*alpha, other roots alpha+beta
    AlphaGamma,     // plane, alpha=beta: single root alpha(x+y), other roots 2alpha
    DerangementQ,   // plane, fully planted: every root q
    HalfAlphaBeta,  // plane: single root (x+y)(alpha+beta)/2, other roots alpha+beta
};

Poly forest_weight(const SupportForest& f, WeightRules rules);
Poly forest_weight(const PlaneForest& f, WeightRules rules);

enum class ForestFamily { All, FullyPlanted };

// Streams every forest of planted increasing 0-1-2 plane trees on [n],
// exactly once, in a fixed order. The reference passed to the visitor is
// only valid during the call.
void for_each_plane_forest(int n, ForestFamily family,
                           const std::function<void(const PlaneForest&)>& visit);

// Streams every (leaf-suppressed) supporting forest on [n]: forests of
// planted increasing binary trees whose components are a bare root or a root
// over a complete binary subtree.
void for_each_support_forest(int n,
                             const std::function<void(const SupportForest&)>& visit);

// Sum of forest weights over the stream; the family is forced to
// FullyPlanted by the DerangementQ rules and is All otherwise.
Poly total_plane_weight(int n, WeightRules rules);

// Sum of Support-rule weights over all supporting forests on [n].
Poly total_support_weight(int n);

// The AlphaGamma weights grouped directly into gamma-expansion blocks
// (rest = alpha^c keyed to the leaf count j), built from the forest stream.
GammaExpansion plane_gamma_table(int n);

}  // namespace efl
