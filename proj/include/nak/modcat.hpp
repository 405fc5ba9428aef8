#pragma once

// Modules over the self-injective Nakayama algebra A_n^ell, closed-form
// combinatorics, and the stable-category operations built on top of them.

#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace nak {

struct Algebra {
    int n = 1;
    int ell = 1;

    Algebra() = default;
    Algebra(int n_, int ell_);

    int e() const { return std::gcd(n, ell); }
    int wrap(int i) const { return ((i - 1) % n + n) % n + 1; }
    bool operator==(const Algebra&) const = default;
};

/// Uniserial module M_{socle,length}. Composition factors from top to socle:
/// S_{socle-length+1}, ..., S_{socle}.
struct Ind {
    int socle = 1;
    int length = 1;

    int top(const Algebra& A) const { return A.wrap(socle - length + 1); }
    bool is_projective(const Algebra& A) const { return length == A.ell + 1; }
    auto operator<=>(const Ind&) const = default;
    bool operator==(const Ind&) const = default;
    std::string to_string() const;
};

/// A direct sum of indecomposables, kept sorted.
using ModSum = std::vector<Ind>;
ModSum normalized(ModSum s);
ModSum drop_projectives(const ModSum& s, const Algebra& A);

void validate(const Ind& M, const Algebra& A);

std::vector<Ind> all_inds(const Algebra& A);
std::vector<Ind> nonprojective_inds(const Algebra& A);
Ind projective(int i, const Algebra& A);  // P_i, top S_i
std::vector<int> dimension_vector(const ModSum& s, const Algebra& A);

/// Image lengths t of the basis maps M -> N (m_p -> n_{len N - t + p}).
std::vector<int> hom_lengths(const Ind& M, const Ind& N, const Algebra& A);
int hom_dim(const Ind& M, const Ind& N, const Algebra& A);
/// Basis maps that survive modulo maps factoring through projectives.
std::vector<int> stable_hom_lengths(const Ind& M, const Ind& N, const Algebra& A);
int stable_hom_dim(const Ind& M, const Ind& N, const Algebra& A);
/// Image length of (basis map t2 : N -> K) after (basis map t1 : M -> N); 0 if the composite vanishes.
int compose_lengths(int t1, int t2, int len_mid);

Ind omega(const Ind& M, const Algebra& A);
Ind omega_inv(const Ind& M, const Algebra& A);
Ind tau(const Ind& M, const Algebra& A, int k = 1);
Ind nu(const Ind& M, const Algebra& A);
ModSum omega(const ModSum& s, const Algebra& A);
ModSum omega_inv(const ModSum& s, const Algebra& A);

struct ModMapSpec;
/// P_{top M} with its canonical surjection onto M.
std::pair<Ind, ModMapSpec> proj_cover(const Ind& M, const Algebra& A);

/// One component of a map between direct sums: basis map of image length t
/// from source summand `src` to target summand `tgt`, scaled by `coeff`.
struct MapComponent {
    std::size_t src = 0, tgt = 0;
    int t = 1;
    unsigned coeff = 1;
};

/// g : source -> target given componentwise.
struct ModMapSpec {
    ModSum source, target;
    std::vector<MapComponent> components;
};

/// Cone (projective-free) of a stable map, computed over GF(2).
ModSum cone_of_stable_map(const ModMapSpec& g, const Algebra& A);

/// Minimal left approximation of Z into add(closure), closure given by its
/// indecomposables. The result's source is {Z}.
ModMapSpec min_left_approx(const Ind& Z, const std::vector<Ind>& closure, const Algebra& A);
/// Minimal right approximation of W from add(closure). The result's target is {W}.
ModMapSpec min_right_approx(const Ind& W, const std::vector<Ind>& closure, const Algebra& A);

/// Indecomposables of the extension closure of S in the stable category.
/// Throws InternalError if more than `max_objects` are produced.
std::vector<Ind> stable_extension_closure(const std::vector<Ind>& S, const Algebra& A, std::size_t max_objects = 4096);

/// Middle terms E of short exact sequences 0 -> B -> E -> C -> 0 (module category).
std::vector<ModSum> extension_middle_terms(const ModSum& B, const ModSum& C, const Algebra& A);

struct ExtensionClosure {
    std::vector<ModSum> objects;        // all members found, including the zero module
    std::vector<Ind> indecomposables;   // indecomposable members
};
/// Closure of S under extensions in mod-A, restricted to total length <= bound.
ExtensionClosure extension_closure(const std::vector<Ind>& S, const Algebra& A, int bound);

}  // namespace nak
