#pragma once

// Two-term complexes of projectives over A_n^ell, worked out over GF(2) in
// the homotopy category.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nak/brauer.hpp"
#include "nak/disc.hpp"
#include "nak/modcat.hpp"

namespace nak {

/// Indecomposable two-term complex. A stalk is P_a in degree `deg` (0 or -1).
/// A differential summand is P_a (degree -1) -> P_b (degree 0) given by the
/// path of length s.
struct Summand {
    enum class Kind { Stalk, Diff };

    Kind kind = Kind::Stalk;
    int a = 1;
    int b = 0;
    int deg = 0;
    int s = 0;

    static Summand stalk(int i, int degree) { return {Kind::Stalk, i, 0, degree, 0}; }
    static Summand diff(int src, int tgt, int len) { return {Kind::Diff, src, tgt, 0, len}; }

    bool is_stalk() const { return kind == Kind::Stalk; }
    auto operator<=>(const Summand&) const = default;
    bool operator==(const Summand&) const = default;
    std::string to_string() const;
};

/// Smallest s >= 1 with a path P_a -> P_b of length s, or -1 if none.
int minimal_path(int a, int b, const Algebra& A);

void validate(const Summand& X, const Algebra& A);

struct TwoTerm {
    Algebra A;
    std::vector<Summand> summands;  // positional; see canonical()

    std::vector<Summand> canonical() const;
    /// Isomorphic as complexes (same multiset of summands).
    bool same(const TwoTerm& o) const { return A == o.A && canonical() == o.canonical(); }
};

/// The algebra as a stalk complex in degree 0 (minus) or -1 (plus).
TwoTerm stalk_complex(const Algebra& A, Sign sign = Sign::Minus);

TwoTerm phi(const Triangulation& X, Sign sign, const Algebra& A);
/// Inverse of phi: the triangulation of rank gcd(n, ell) and the sign read off the stalks.
std::pair<Triangulation, Sign> phi_inverse(const TwoTerm& T);
/// Sign of a complex, decided by the degree of its stalks. Throws if mixed or absent.
Sign complex_sign(const TwoTerm& T);

int hom_summand_dim(const Summand& X, const Summand& Y, int k, const Algebra& A);
/// dim Hom_K(T, U[k]).
int hom_complex_dim(const TwoTerm& T, const TwoTerm& U, int k);

/// Integer class matrix in K_0, one row per summand.
std::vector<std::vector<long long>> class_matrix(const TwoTerm& T);
bool is_silting(const TwoTerm& T);
bool is_tilting(const TwoTerm& T);

Summand nu(const Summand& X, const Algebra& A);
TwoTerm nu_complex(const TwoTerm& T);

/// Positions grouped into nu-orbits. Throws InvalidInput if T is not nu-stable.
std::vector<std::vector<std::size_t>> summand_orbits(const TwoTerm& T);

/// Mutation at the summands in `orbit` (positions). Each mutated summand keeps
/// its position. Returns nullopt when the result leaves degrees {-1, 0}.
std::optional<TwoTerm> two_term_mutate(const TwoTerm& T, const std::vector<std::size_t>& orbit, Sign sign);

/// Arrow counts: arrows[i][j] arrows i -> j.
struct Quiver {
    std::vector<std::vector<int>> arrows;

    std::size_t size() const { return arrows.size(); }
    bool operator==(const Quiver&) const = default;
};

/// Gabriel quiver of End(T). An arrow i -> j records an irreducible map T_j -> T_i,
/// which for T = A gives the quiver of A itself.
Quiver end_quiver(const TwoTerm& T);
/// Quiver of the Brauer tree algebra: vertex k is edge label k+1, arrows follow cyclic orders.
Quiver brauer_quiver(const BrauerTree& G);
Quiver permuted(const Quiver& Q, const std::vector<std::size_t>& perm);

}  // namespace nak
