#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kricker {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

// Unitrivalent graph with oriented edges labeled by monomials t^k.
// Half-edge 2e is the tail of edge e and 2e+1 its head. Trivalent nodes list
// their half-edges in cyclic order. Legs carry a pair label whose meaning
// depends on the space: (color, 0), (interval, position) or (generator, exponent).
struct Diagram {
    struct Node {
        bool leg = false;
        int a = 0, b = 0;
        std::vector<int> he;
    };
    std::vector<Node> nodes;
    std::vector<int> label;
    std::vector<int> owner;
    std::vector<int> isolated;

    int add_tri();
    int add_leg(int a, int b = 0);
    int add_edge(int from, int to, int k);

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_edges() const { return static_cast<int>(label.size()); }
    int num_tri() const;
    int num_legs() const;
    int i_degree() const { return num_tri() + static_cast<int>(isolated.size()); }
    int tail(int e) const { return owner[2 * e]; }
    int head(int e) const { return owner[2 * e + 1]; }
    // Exponent of the edge of half-edge h read away from the node owning h; flip is k -> m - k.
    int out_label(int h, int m) const { return (h & 1) ? m - label[h / 2] : label[h / 2]; }
    int leg_edge(int v) const { return nodes[v].he[0] / 2; }
    // Node at the other end of a leg's edge.
    int leg_anchor(int v) const { return owner[nodes[v].he[0] ^ 1]; }
    std::vector<int> legs() const;

    // Moves half-edge h into slot `slot` of node v (keeps cyclic order positions explicit).
    void attach(int h, int v, int slot);
    // Removes nodes and edges flagged true, renumbering the rest; removed edges must not be referenced.
    void erase(const std::vector<bool>& dead_nodes, const std::vector<bool>& dead_edges);

    std::vector<Diagram> components() const;
    int num_components() const;
    static Diagram disjoint_union(const Diagram& x, const Diagram& y);
    void check() const;

    std::string str() const;
    static Diagram parse(const std::string& text);
};

// Replaces legs v and w by one edge anchor(v) -> anchor(w) labelled k, occupying the
// cyclic slots of the removed edges. Nodes and edges are only flagged dead; call erase afterwards.
void join_legs_inplace(Diagram& d, int v, int w, int k, std::vector<bool>& dead_nodes, std::vector<bool>& dead_edges);
Diagram join_legs(const Diagram& d, int v, int w, int k);

using Key = std::vector<int>;

struct Canonical {
    Key key;
    int sign = 0;             // 0 when the diagram vanishes by AS/OR symmetry
    std::vector<int> order;   // order[i] = original node with canonical index i
    std::vector<int> odd;     // a second labeling with the opposite sign when sign == 0
};

// Canonical labeling by colour refinement and individualisation over all leaves.
// With gauge set, labels are taken modulo pushing t through trivalent vertices.
// A negative leaf budget uses the process-wide default.
Canonical canonical_form(const Diagram& d, int m = 0, bool gauge = false, long leaf_budget = -1);
void set_default_leaf_budget(long leaves);
long default_leaf_budget();
Diagram decode(const Key& key);
int key_tri(const Key& k);
int key_legs(const Key& k);
int key_isolated(const Key& k);

}  // namespace kricker
