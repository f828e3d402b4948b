#include "efl/ibtree.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "efl/parallel.hpp"

namespace efl {

namespace {

int build_range(std::vector<IncTree::Node>& nodes, const std::vector<int>& w,
                int lo, int hi) {
    if (lo >= hi) return IncTree::kLeaf;
    int mi = lo;
    for (int i = lo + 1; i < hi; ++i)
        if (w[i] < w[mi]) mi = i;
    const int idx = static_cast<int>(nodes.size());
    nodes.push_back({w[mi], IncTree::kLeaf, IncTree::kLeaf});
    const int l = build_range(nodes, w, lo, mi);
    const int r = build_range(nodes, w, mi + 1, hi);
    nodes[idx].left = l;
    nodes[idx].right = r;
    return idx;
}

}  // namespace

IncTree IncTree::from_word(const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("empty word has no tree");
    IncTree t;
    t.root_ = build_range(t.nodes_, word, 0, static_cast<int>(word.size()));
    return t;
}

IncTree IncTree::from_parts(std::vector<Node> nodes, int root) {
    IncTree t;
    t.nodes_ = std::move(nodes);
    t.root_ = root;
    return t;
}

namespace {

void inorder(const IncTree& t, int idx, std::vector<int>& out) {
    if (idx == IncTree::kLeaf) return;
    inorder(t, t.node(idx).left, out);
    out.push_back(t.node(idx).label);
    inorder(t, t.node(idx).right, out);
}

void render(const IncTree& t, int idx, std::string& out) {
    if (idx == IncTree::kLeaf) {
        out += '.';
        return;
    }
    out += std::to_string(t.node(idx).label);
    out += '(';
    render(t, t.node(idx).left, out);
    out += ',';
    render(t, t.node(idx).right, out);
    out += ')';
}

}  // namespace

Perm IncTree::to_perm() const {
    std::vector<int> w;
    w.reserve(nodes_.size());
    inorder(*this, root_, w);
    return Perm(std::move(w));
}

IncTree IncTree::subtree_copy(int idx) const {
    IncTree out;
    struct Copier {
        const IncTree& src;
        IncTree& dst;
        int run(int i) {
            if (i == kLeaf) return kLeaf;
            const int at = static_cast<int>(dst.nodes_.size());
            dst.nodes_.push_back({src.node(i).label, kLeaf, kLeaf});
            const int l = run(src.node(i).left);
            const int r = run(src.node(i).right);
            dst.nodes_[at].left = l;
            dst.nodes_[at].right = r;
            return at;
        }
    } copier{*this, out};
    out.root_ = copier.run(idx);
    return out;
}

std::string IncTree::str() const {
    std::string out;
    render(*this, root_, out);
    return out;
}

PoleClasses pole_classes(const IncTree& t) {
    PoleClasses pc;
    pc.alpha.assign(t.node_count(), false);
    pc.beta.assign(t.node_count(), false);
    int cur = t.root();
    while (t.node(cur).left != IncTree::kLeaf) {
        cur = t.node(cur).left;
        pc.alpha[cur] = true;
    }
    pc.a_parent = cur;
    cur = t.root();
    while (t.node(cur).right != IncTree::kLeaf) {
        cur = t.node(cur).right;
        pc.beta[cur] = true;
    }
    pc.b_parent = cur;
    return pc;
}

LabelCounts label_counts(const IncTree& t) {
    const PoleClasses pc = pole_classes(t);
    LabelCounts c;
    for (int i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(i);
        if (pc.alpha[i]) ++c.n_alpha;
        if (pc.beta[i]) ++c.n_beta;

        const bool left_leaf = nd.left == IncTree::kLeaf;
        const bool right_leaf = nd.right == IncTree::kLeaf;
        const bool left_is_a = left_leaf && i == pc.a_parent;
        const bool right_is_b = right_leaf && i == pc.b_parent;

        if (left_leaf) {
            ++c.left_slots;
            if (!left_is_a) ++c.xleaf;
            // The pole z-rule: the root stands in for a beta-vertex.
            if (pc.beta[i] || i == t.root())
                ++c.az;
            else
                ++c.ax;
        }
        if (right_leaf) {
            ++c.right_slots;
            if (!right_is_b) {
                ++c.yleaf;
                ++c.ay;
            }
        }
        if (left_leaf && right_leaf && !left_is_a && !right_is_b) ++c.peaks;
        // Proper leaves not paired with a proper leaf sibling.
        if (left_leaf && !left_is_a && !(right_leaf && !right_is_b)) ++c.singles;
        if (right_leaf && !right_is_b && !(left_leaf && !left_is_a)) ++c.singles;
    }
    return c;
}

TreeStats tree_stats(const IncTree& t) {
    const LabelCounts c = label_counts(t);
    return TreeStats{c.peaks, c.xleaf, c.yleaf, c.n_alpha, c.n_beta};
}

namespace {

Monomial base_monomial(int x, int y, int al, int be) {
    Monomial m;
    m.exp[static_cast<int>(Var::X)] = static_cast<std::uint16_t>(x);
    m.exp[static_cast<int>(Var::Y)] = static_cast<std::uint16_t>(y);
    m.exp[static_cast<int>(Var::Alpha)] = static_cast<std::uint16_t>(al);
    m.exp[static_cast<int>(Var::Beta)] = static_cast<std::uint16_t>(be);
    return m;
}

Monomial with_ab(Monomial m) {
    m.exp[static_cast<int>(Var::A)] = 1;
    m.exp[static_cast<int>(Var::B)] = 1;
    return m;
}

// Adds count * (scheme weight for this signature) into acc.
void add_signature(Poly& acc, LabelScheme scheme,
                   const std::array<std::uint16_t, 4>& key, const Rat& count) {
    switch (scheme) {
        case LabelScheme::XY:
            acc.add_term(base_monomial(key[0], key[1], 0, 0), count);
            return;
        case LabelScheme::ABAlphaBeta:
            acc.add_term(with_ab(base_monomial(key[0], key[1], key[2], key[3])), count);
            return;
        case LabelScheme::ABAlpha:
            acc.add_term(with_ab(base_monomial(key[0], key[1], key[2], 0)), count);
            return;
        case LabelScheme::Modified1: {
            // ab (xy)^peaks ((x+y)/2)^singles alpha^i beta^j
            const unsigned peaks = key[0], s = key[1];
            const Rat half_pow = Rat(1, 1) / Rat(Int(1) << s);
            for (unsigned t = 0; t <= s; ++t) {
                Monomial m = with_ab(base_monomial(
                    static_cast<int>(peaks + t), static_cast<int>(peaks + s - t),
                    key[2], key[3]));
                acc.add_term(m, count * half_pow * Rat(binomial(s, t)));
            }
            return;
        }
        case LabelScheme::Modified2: {
            // ab x^xleaf y^yleaf ((alpha+beta)/2)^k
            const unsigned k = key[2];
            const Rat half_pow = Rat(1, 1) / Rat(Int(1) << k);
            for (unsigned t = 0; t <= k; ++t) {
                Monomial m = with_ab(base_monomial(key[0], key[1],
                                                   static_cast<int>(t),
                                                   static_cast<int>(k - t)));
                acc.add_term(m, count * half_pow * Rat(binomial(k, t)));
            }
            return;
        }
        case LabelScheme::AXYZ: {
            Monomial m = base_monomial(key[0], key[1], 0, 0);
            m.exp[static_cast<int>(Var::Z)] = key[2];
            m.exp[static_cast<int>(Var::A)] = 1;
            acc.add_term(m, count);
            return;
        }
    }
}

std::array<std::uint16_t, 4> signature_key(LabelScheme scheme, const LabelCounts& c) {
    auto u16 = [](int v) { return static_cast<std::uint16_t>(v); };
    switch (scheme) {
        case LabelScheme::XY:
            return {u16(c.left_slots), u16(c.right_slots), 0, 0};
        case LabelScheme::ABAlphaBeta:
            return {u16(c.xleaf), u16(c.yleaf), u16(c.n_alpha), u16(c.n_beta)};
        case LabelScheme::ABAlpha:
            return {u16(c.xleaf), u16(c.yleaf), u16(c.n_alpha + c.n_beta), 0};
        case LabelScheme::Modified1:
            return {u16(c.peaks), u16(c.singles), u16(c.n_alpha), u16(c.n_beta)};
        case LabelScheme::Modified2:
            return {u16(c.xleaf), u16(c.yleaf), u16(c.n_alpha + c.n_beta), 0};
        case LabelScheme::AXYZ:
            return {u16(c.ax), u16(c.ay), u16(c.az), 0};
    }
    return {};
}

}  // namespace

Poly scheme_weight(LabelScheme scheme, const LabelCounts& c) {
    Poly w;
    add_signature(w, scheme, signature_key(scheme, c), Rat(1));
    return w;
}

LabeledTree apply_labeling(const IncTree& t, LabelScheme scheme) {
    const PoleClasses pc = pole_classes(t);

    auto leaf_text = [&](int parent, bool right_side) -> std::string {
        const bool is_a = !right_side && parent == pc.a_parent;
        const bool is_b = right_side && parent == pc.b_parent;
        const bool sibling_proper_leaf =
            right_side ? (t.node(parent).left == IncTree::kLeaf && parent != pc.a_parent)
                       : (t.node(parent).right == IncTree::kLeaf && parent != pc.b_parent);
        switch (scheme) {
            case LabelScheme::XY:
                return right_side ? "y" : "x";
            case LabelScheme::ABAlphaBeta:
            case LabelScheme::ABAlpha:
            case LabelScheme::Modified2:
                if (is_a) return "a";
                if (is_b) return "b";
                return right_side ? "y" : "x";
            case LabelScheme::Modified1:
                if (is_a) return "a";
                if (is_b) return "b";
                if (sibling_proper_leaf) return right_side ? "y" : "x";
                return "(x+y)/2";
            case LabelScheme::AXYZ:
                if (is_b) return "a";
                if (!right_side && (pc.beta[parent] || parent == t.root())) return "z";
                return right_side ? "y" : "x";
        }
        return "?";
    };

    auto vertex_text = [&](int idx) -> std::string {
        switch (scheme) {
            case LabelScheme::XY:
            case LabelScheme::AXYZ:
                return "";
            case LabelScheme::ABAlphaBeta:
                if (pc.alpha[idx]) return "alpha";
                if (pc.beta[idx]) return "beta";
                return "";
            case LabelScheme::ABAlpha:
                return pc.alpha[idx] || pc.beta[idx] ? "alpha" : "";
            case LabelScheme::Modified1:
                if (pc.alpha[idx]) return "alpha";
                if (pc.beta[idx]) return "beta";
                return "";
            case LabelScheme::Modified2:
                return pc.alpha[idx] || pc.beta[idx] ? "(alpha+beta)/2" : "";
        }
        return "";
    };

    std::string out;
    auto walk = [&](auto&& self, int idx, int parent, bool right_side) -> void {
        if (idx == IncTree::kLeaf) {
            out += leaf_text(parent, right_side);
            return;
        }
        out += std::to_string(t.node(idx).label);
        const std::string vt = vertex_text(idx);
        if (!vt.empty()) out += "{" + vt + "}";
        out += '(';
        self(self, t.node(idx).left, idx, false);
        out += ',';
        self(self, t.node(idx).right, idx, true);
        out += ')';
    };
    walk(walk, t.root(), -1, false);

    return LabeledTree{scheme, out, scheme_weight(scheme, label_counts(t))};
}

Poly sum_weights(int n, LabelScheme scheme, unsigned threads) {
    if (n < 1) throw std::invalid_argument("sum_weights needs n >= 1");

    using Tally = std::map<std::array<std::uint16_t, 4>, std::uint64_t>;
    std::vector<Tally> per_job(n);
    parallel_for_jobs(n, threads, [&](std::size_t job) {
        for_each_permutation_prefixed(n, static_cast<int>(job) + 1,
                                      [&](const std::vector<int>& w) {
            const LabelCounts c = label_counts(IncTree::from_word(w));
            ++per_job[job][signature_key(scheme, c)];
        });
    });

    Tally total;
    for (const auto& t : per_job)
        for (const auto& [k, v] : t) total[k] += v;

    Poly acc;
    for (const auto& [key, count] : total)
        add_signature(acc, scheme, key, Rat(Int(count)));
    return acc;
}

}  // namespace efl
