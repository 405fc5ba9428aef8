#pragma once

// Admissible arcs and triangulations of the punctured regular e-gon.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nak {

/// An admissible arc. Inner arcs are stored as (initial, length); the terminal
/// point initial + length (mod e) is derived. Projective arcs run from the
/// puncture to `terminal`.
struct Arc {
    enum class Kind { Projective, Inner };

    Kind kind = Kind::Projective;
    int terminal_or_initial = 1;  // terminal for projective, initial for inner
    int length = 0;               // 0 for projective

    static Arc projective(int terminal) { return {Kind::Projective, terminal, 0}; }
    static Arc inner(int initial, int length) { return {Kind::Inner, initial, length}; }

    bool is_projective() const { return kind == Kind::Projective; }
    int initial() const { return terminal_or_initial; }  // inner only
    int terminal(int e) const;

    auto operator<=>(const Arc&) const = default;
    bool operator==(const Arc&) const = default;

    std::string to_string(int e) const;
};

void validate_arc(const Arc& a, int e);

/// A triangulation of rank e. Arcs are kept sorted in canonical order.
struct Triangulation {
    int e = 0;
    std::vector<Arc> arcs;

    Triangulation() = default;
    Triangulation(int rank, std::vector<Arc> a);

    bool contains(const Arc& a) const;
    int projective_count() const;

    bool operator==(const Triangulation&) const = default;
    auto operator<=>(const Triangulation&) const = default;
};

std::vector<Arc> all_arcs(int e);
bool compatible(const Arc& a, const Arc& b, int e);
bool is_triangulation(const std::vector<Arc>& arcs, int e);

/// All triangulations of rank e in canonical order. Parallel over the first branching arc.
std::vector<Triangulation> enumerate_triangulations(int e);
/// Single-threaded reference implementation.
std::vector<Triangulation> enumerate_triangulations_serial(int e);

/// The all-projective triangulation {<*,1>,...,<*,e>}.
Triangulation projective_triangulation(int e);

/// The unique other arc completing X \ {a}, if one exists.
std::optional<Arc> exchange_partner(const Triangulation& X, const Arc& a);

/// Flip at `a`: returns the new triangulation and the arc that replaced `a`.
/// Throws InvalidInput if a is not in X or if a has no exchange partner.
std::pair<Triangulation, Arc> flip(const Triangulation& X, const Arc& a);

/// Rotate every vertex index by `k` (mod e).
Arc rotate(const Arc& a, int k, int e);
Triangulation rotate(const Triangulation& X, int k);

/// Lift a rank-e arc to rank n: its n/e rotated copies.
std::vector<Arc> unfold_arc(const Arc& a, int e, int n);
Triangulation unfold(const Triangulation& X, int n);
/// Inverse of unfold. Throws SymmetryFailure if Y is not invariant under rotation by e.
Triangulation fold(const Triangulation& Y, int e);
/// Fold one arc of a symmetric rank-n triangulation down to rank e.
Arc fold_arc(const Arc& a, int e, int n);

}  // namespace nak
