#pragma once

// Brauer trees with cyclic orderings, built from triangulations and mutated
// by Kauer moves.

#include <map>
#include <string>
#include <vector>

#include "nak/disc.hpp"

namespace nak {

enum class Sign { Minus, Plus };

inline const char* sign_name(Sign s) { return s == Sign::Minus ? "minus" : "plus"; }

struct BrauerEdge {
    int label = 0;
    int u = 0, v = 0;

    int other(int w) const { return w == u ? v : u; }
    bool operator==(const BrauerEdge&) const = default;
};

struct BrauerTree {
    int m = 1;
    int exceptional = 0;
    std::vector<int> vertices;
    std::vector<BrauerEdge> edges;
    std::map<int, std::vector<int>> cyclic;  // vertex -> incident edge labels in cyclic order

    const BrauerEdge& edge(int label) const;
    BrauerEdge& edge(int label);
    bool has_edge(int label) const;
    int valency(int v) const;

    /// Throws InvalidInput unless this is a tree with consistent cyclic orders.
    void validate() const;
    /// Rotate each cyclic order to start at its smallest label, orient edges u < v, sort edges.
    void normalize();

    bool operator==(const BrauerTree&) const = default;
};

/// Brauer tree of a triangulation. Edge label k+1 belongs to X.arcs[k].
BrauerTree psi(const Triangulation& X, Sign sign, int m);

/// The label psi gives to arc a of X.
int psi_label(const Triangulation& X, const Arc& a);

/// Kauer move at `label`; the moved edge keeps its label.
BrauerTree kauer_mutate(const BrauerTree& G, int label, Sign sign);

/// Isomorphism up to relabelling, preserving cyclic orders, exceptional vertex and multiplicity.
bool brauer_iso(const BrauerTree& G, const BrauerTree& H);

/// Canonical planar code of G rooted at its exceptional vertex.
std::string brauer_code(const BrauerTree& G);

/// Labels l_1..l_h such that applying `sign` moves at l_1, ..., l_h in turn to
/// the star reaches G. Each l_k is incident to the exceptional vertex when it
/// is mutated. Ties are broken by smallest label.
std::vector<int> star_mutation_sequence(const BrauerTree& G, Sign sign = Sign::Minus);

/// Remove a leaf edge together with its non-exceptional extremal vertex.
BrauerTree prune_leaf(const BrauerTree& G, int label);

/// Graphviz rendering. The exceptional vertex is drawn as a double circle.
std::string to_dot(const BrauerTree& G);

}  // namespace nak
