#include "efl/forest.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

namespace efl {

namespace {

void collect_labels(const IncTree& t, int idx, std::vector<int>& out) {
    if (idx == IncTree::kLeaf) return;
    out.push_back(t.node(idx).label);
    collect_labels(t, t.node(idx).left, out);
    collect_labels(t, t.node(idx).right, out);
}

void count_slots(const IncTree& t, int idx, int& left, int& right) {
    if (idx == IncTree::kLeaf) return;
    if (t.node(idx).left == IncTree::kLeaf) ++left;
    if (t.node(idx).right == IncTree::kLeaf) ++right;
    count_slots(t, t.node(idx).left, left, right);
    count_slots(t, t.node(idx).right, left, right);
}

void render_binary(const IncTree& t, int idx, std::string& out) {
    if (idx == IncTree::kLeaf) return;
    out += std::to_string(t.node(idx).label);
    out += '(';
    if (t.node(idx).left == IncTree::kLeaf)
        out += 'x';
    else
        render_binary(t, t.node(idx).left, out);
    out += ',';
    if (t.node(idx).right == IncTree::kLeaf)
        out += 'y';
    else
        render_binary(t, t.node(idx).right, out);
    out += ')';
}

}  // namespace

std::vector<int> SupportForest::labels() const {
    std::vector<int> out;
    for (const auto& c : components) {
        out.push_back(c.root_label);
        if (c.child) collect_labels(*c.child, c.child->root(), out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void SupportForest::shift_labels(int delta) {
    for (auto& c : components) {
        c.root_label += delta;
        if (c.child) {
            std::vector<IncTree::Node> nodes = c.child->nodes();
            for (auto& nd : nodes) nd.label += delta;
            c.child = IncTree::from_parts(std::move(nodes), c.child->root());
        }
    }
}

std::string SupportForest::str() const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += ' ';
        const auto& c = components[i];
        out += std::to_string(c.root_label);
        if (c.child) {
            out += '(';
            render_binary(*c.child, c.child->root(), out);
            out += ')';
        } else if (c.leaf_child) {
            out += *c.leaf_child == LeafSide::Left ? "(x)" : "(y)";
        }
    }
    return out;
}

SupportForest supporting_forest(const IncTree& t) {
    if (t.node_count() < 2)
        throw TooSmallError("the single-node tree has no supporting forest");
    const PoleClasses pc = pole_classes(t);

    std::vector<int> vertices;
    for (int i = 0; i < t.node_count(); ++i)
        if (pc.alpha[i] || pc.beta[i]) vertices.push_back(i);
    std::sort(vertices.begin(), vertices.end(),
              [&](int a, int b) { return t.node(a).label < t.node(b).label; });

    SupportForest f;
    for (int v : vertices) {
        PlantedTree comp;
        comp.root_label = t.node(v).label;
        // The spine continues through an alpha-vertex's left child and a
        // beta-vertex's right child; the other child is detached with it.
        const int detached = pc.alpha[v] ? t.node(v).right : t.node(v).left;
        if (detached == IncTree::kLeaf)
            comp.leaf_child = pc.alpha[v] ? LeafSide::Right : LeafSide::Left;
        else
            comp.child = t.subtree_copy(detached);
        f.components.push_back(std::move(comp));
    }
    return f;
}

PlaneForest::VertexClass PlaneForest::classify(int idx) const {
    const Node& nd = nodes[idx];
    if (nd.parent == -1)
        return nd.children.empty() ? VertexClass::SingleRoot : VertexClass::RootWithChild;
    switch (nd.children.size()) {
        case 0: return VertexClass::Leaf;
        case 1: return VertexClass::Unary;
        default: return VertexClass::Binary;
    }
}

void PlaneForest::shift_labels(int delta) {
    for (auto& nd : nodes) nd.label += delta;
}

std::string PlaneForest::str() const {
    auto marker = [&](int idx) {
        switch (classify(idx)) {
            case VertexClass::SingleRoot: return 's';
            case VertexClass::RootWithChild: return 'r';
            case VertexClass::Leaf: return 'l';
            case VertexClass::Unary: return 'u';
            case VertexClass::Binary: return 'b';
        }
        return '?';
    };
    std::string out;
    auto walk = [&](auto&& self, int idx) -> void {
        out += std::to_string(nodes[idx].label);
        out += ':';
        out += marker(idx);
        if (!nodes[idx].children.empty()) {
            out += '[';
            for (std::size_t i = 0; i < nodes[idx].children.size(); ++i) {
                if (i) out += ',';
                self(self, nodes[idx].children[i]);
            }
            out += ']';
        }
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) out += ' ';
        walk(walk, roots[i]);
    }
    return out;
}

PlaneForest canonicalize(const SupportForest& f) {
    PlaneForest out;
    // A binary vertex with two leaf children becomes a plane leaf; with one
    // leaf child it becomes unary (side erased); with two internal children
    // it keeps both in their original order.
    auto walk = [&](auto&& self, const IncTree& t, int idx, int parent) -> int {
        const int at = static_cast<int>(out.nodes.size());
        out.nodes.push_back({t.node(idx).label, parent, {}});
        const int l = t.node(idx).left;
        const int r = t.node(idx).right;
        if (l != IncTree::kLeaf) out.nodes[at].children.push_back(self(self, t, l, at));
        if (r != IncTree::kLeaf) out.nodes[at].children.push_back(self(self, t, r, at));
        return at;
    };
    for (const auto& comp : f.components) {
        const int at = static_cast<int>(out.nodes.size());
        out.nodes.push_back({comp.root_label, -1, {}});
        out.roots.push_back(at);
        if (comp.child)
            out.nodes[at].children.push_back(
                walk(walk, *comp.child, comp.child->root(), at));
    }
    return out;
}

namespace {

struct ClassCounts {
    int single = 0, rooted = 0, unary = 0, leaf = 0;
};

ClassCounts class_counts(const PlaneForest& f) {
    ClassCounts c;
    for (int i = 0; i < static_cast<int>(f.nodes.size()); ++i) {
        switch (f.classify(i)) {
            case PlaneForest::VertexClass::SingleRoot: ++c.single; break;
            case PlaneForest::VertexClass::RootWithChild: ++c.rooted; break;
            case PlaneForest::VertexClass::Unary: ++c.unary; break;
            case PlaneForest::VertexClass::Leaf: ++c.leaf; break;
            case PlaneForest::VertexClass::Binary: break;
        }
    }
    return c;
}

const Poly& p_single_ab() {
    static const Poly p = Poly::var(Var::X) * Poly::var(Var::Beta) +
                          Poly::var(Var::Y) * Poly::var(Var::Alpha);
    return p;
}
const Poly& p_alpha_beta() {
    static const Poly p = Poly::var(Var::Alpha) + Poly::var(Var::Beta);
    return p;
}
const Poly& p_x_plus_y() {
    static const Poly p = Poly::var(Var::X) + Poly::var(Var::Y);
    return p;
}
const Poly& p_xy() {
    static const Poly p = Poly::var(Var::X) * Poly::var(Var::Y);
    return p;
}

Poly rule_weight(WeightRules rules, const ClassCounts& c) {
    switch (rules) {
        case WeightRules::AlphaBeta:
            return p_single_ab().pow(c.single) * p_alpha_beta().pow(c.rooted) *
                   p_x_plus_y().pow(c.unary) * p_xy().pow(c.leaf);
        case WeightRules::AlphaGamma:
            return (Poly::var(Var::Alpha) * p_x_plus_y()).pow(c.single) *
                   Poly::var(Var::Alpha).scaled(2).pow(c.rooted) *
                   p_x_plus_y().pow(c.unary) * p_xy().pow(c.leaf);
        case WeightRules::DerangementQ:
            if (c.single > 0)
                throw RuleMismatchError("derangement rules give no weight to a singleton component");
            return Poly::var(Var::Q).pow(c.rooted) * p_x_plus_y().pow(c.unary) *
                   p_xy().pow(c.leaf);
        case WeightRules::HalfAlphaBeta:
            return (p_x_plus_y() * p_alpha_beta()).scaled(Rat(1, 2)).pow(c.single) *
                   p_alpha_beta().pow(c.rooted) * p_x_plus_y().pow(c.unary) *
                   p_xy().pow(c.leaf);
        case WeightRules::Support:
            throw RuleMismatchError("supporting-forest rules apply to supporting forests");
    }
    return Poly();
}

}  // namespace

Poly forest_weight(const SupportForest& f, WeightRules rules) {
    if (rules != WeightRules::Support)
        throw RuleMismatchError("plane rules apply to plane forests");
    Poly w(Rat(1));
    for (const auto& comp : f.components) {
        if (comp.single()) {
            w = w * p_single_ab();
        } else {
            int left = 0, right = 0;
            count_slots(*comp.child, comp.child->root(), left, right);
            Monomial m;
            m.exp[static_cast<int>(Var::X)] = static_cast<std::uint16_t>(left);
            m.exp[static_cast<int>(Var::Y)] = static_cast<std::uint16_t>(right);
            w = w * p_alpha_beta() * Poly::monomial(m);
        }
    }
    return w;
}

Poly forest_weight(const PlaneForest& f, WeightRules rules) {
    return rule_weight(rules, class_counts(f));
}

void for_each_plane_forest(int n, ForestFamily family,
                           const std::function<void(const PlaneForest&)>& visit) {
    PlaneForest f;
    int singles = 0;
    auto fits = [&](int singles_after, int placed) {
        return family != ForestFamily::FullyPlanted || singles_after <= n - placed;
    };
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            if (family == ForestFamily::FullyPlanted && singles > 0) return;
            visit(f);
            return;
        }
        // start a new component
        if (fits(singles + 1, k)) {
            f.nodes.push_back({k, -1, {}});
            f.roots.push_back(static_cast<int>(f.nodes.size()) - 1);
            ++singles;
            self(self, k + 1);
            --singles;
            f.roots.pop_back();
            f.nodes.pop_back();
        }
        // attach below an existing vertex
        const std::size_t limit = f.nodes.size();
        for (std::size_t j = 0; j < limit; ++j) {
            const bool is_root = f.nodes[j].parent == -1;
            const std::size_t deg = f.nodes[j].children.size();
            auto attach = [&](std::size_t pos, int singles_after) {
                if (!fits(singles_after, k)) return;
                f.nodes.push_back({k, static_cast<int>(j), {}});
                auto& ch = f.nodes[j].children;
                ch.insert(ch.begin() + pos, static_cast<int>(f.nodes.size()) - 1);
                const int saved = singles;
                singles = singles_after;
                self(self, k + 1);
                singles = saved;
                f.nodes[j].children.erase(f.nodes[j].children.begin() + pos);
                f.nodes.pop_back();
            };
            if (is_root) {
                if (deg == 0) attach(0, singles - 1);
            } else if (deg == 0) {
                attach(0, singles);
            } else if (deg == 1) {
                attach(0, singles);
                attach(1, singles);
            }
        }
    };
    rec(rec, 1);
}

namespace {

IncTree extract_subtree(const std::vector<IncTree::Node>& arena, int idx) {
    std::vector<IncTree::Node> nodes;
    auto copy = [&](auto&& self, int i) -> int {
        if (i == IncTree::kLeaf) return IncTree::kLeaf;
        const int at = static_cast<int>(nodes.size());
        nodes.push_back({arena[i].label, IncTree::kLeaf, IncTree::kLeaf});
        const int l = self(self, arena[i].left);
        const int r = self(self, arena[i].right);
        nodes[at].left = l;
        nodes[at].right = r;
        return at;
    };
    const int root = copy(copy, idx);
    return IncTree::from_parts(std::move(nodes), root);
}

}  // namespace

void for_each_support_forest(int n,
                             const std::function<void(const SupportForest&)>& visit) {
    std::vector<IncTree::Node> arena;
    std::vector<std::pair<int, int>> comps;  // root label, subtree arena index or -1
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            SupportForest f;
            for (const auto& [root, sub] : comps) {
                PlantedTree comp;
                comp.root_label = root;
                if (sub != -1) comp.child = extract_subtree(arena, sub);
                f.components.push_back(std::move(comp));
            }
            visit(f);
            return;
        }
        comps.push_back({k, -1});
        self(self, k + 1);
        comps.pop_back();

        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].second != -1) continue;
            arena.push_back({k, IncTree::kLeaf, IncTree::kLeaf});
            comps[i].second = static_cast<int>(arena.size()) - 1;
            self(self, k + 1);
            comps[i].second = -1;
            arena.pop_back();
        }
        const std::size_t limit = arena.size();
        for (std::size_t j = 0; j < limit; ++j) {
            if (arena[j].left == IncTree::kLeaf) {
                arena.push_back({k, IncTree::kLeaf, IncTree::kLeaf});
                arena[j].left = static_cast<int>(arena.size()) - 1;
                self(self, k + 1);
                arena[j].left = IncTree::kLeaf;
                arena.pop_back();
            }
            if (arena[j].right == IncTree::kLeaf) {
                arena.push_back({k, IncTree::kLeaf, IncTree::kLeaf});
                arena[j].right = static_cast<int>(arena.size()) - 1;
                self(self, k + 1);
                arena[j].right = IncTree::kLeaf;
                arena.pop_back();
            }
        }
    };
    rec(rec, 1);
}

namespace {

using PlaneTally = std::map<std::array<int, 4>, std::uint64_t>;

PlaneTally plane_tally(int n, ForestFamily family) {
    PlaneTally tally;
    for_each_plane_forest(n, family, [&](const PlaneForest& f) {
        const ClassCounts c = class_counts(f);
        ++tally[{c.single, c.rooted, c.unary, c.leaf}];
    });
    return tally;
}

}  // namespace

Poly total_plane_weight(int n, WeightRules rules) {
    const ForestFamily family = rules == WeightRules::DerangementQ
                                    ? ForestFamily::FullyPlanted
                                    : ForestFamily::All;
    Poly acc;
    for (const auto& [key, count] : plane_tally(n, family)) {
        const ClassCounts c{key[0], key[1], key[2], key[3]};
        acc += rule_weight(rules, c).scaled(Rat(Int(count)));
    }
    return acc;
}

GammaExpansion plane_gamma_table(int n) {
    GammaExpansion table;
    for (const auto& [key, count] : plane_tally(n, ForestFamily::All)) {
        const ClassCounts c{key[0], key[1], key[2], key[3]};
        const Monomial rest = Monomial::var(Var::Alpha, c.single + c.rooted);
        auto [it, fresh] = table.blocks.try_emplace(rest);
        if (fresh) {
            it->second.degree = static_cast<unsigned>(n);
            it->second.gamma.assign(n / 2 + 1, Rat(0));
        }
        // weight alpha^c 2^rooted (x+y)^(n-2*leaf) (xy)^leaf
        it->second.gamma[c.leaf] += Rat(Int(count)) * Rat(Int(1) << c.rooted);
    }
    return table;
}

Poly total_support_weight(int n) {
    std::map<std::array<int, 4>, std::uint64_t> tally;
    for_each_support_forest(n, [&](const SupportForest& f) {
        int single = 0, rooted = 0, left = 0, right = 0;
        for (const auto& comp : f.components) {
            if (comp.single()) {
                ++single;
            } else {
                ++rooted;
                count_slots(*comp.child, comp.child->root(), left, right);
            }
        }
        ++tally[{single, rooted, left, right}];
    });

    Poly acc;
    for (const auto& [key, count] : tally) {
        Monomial m;
        m.exp[static_cast<int>(Var::X)] = static_cast<std::uint16_t>(key[2]);
        m.exp[static_cast<int>(Var::Y)] = static_cast<std::uint16_t>(key[3]);
        acc += (p_single_ab().pow(key[0]) * p_alpha_beta().pow(key[1]) *
                Poly::monomial(m))
                   .scaled(Rat(Int(count)));
    }
    return acc;
}

}  // namespace efl
