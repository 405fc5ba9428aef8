#pragma once

// Configurations of ZA_ell / <tau^n>: the point (x, y) stands for the
// uniserial module M_{x,y}.

#include <random>
#include <string>
#include <vector>

#include "nak/brauer.hpp"
#include "nak/modcat.hpp"

namespace nak {

struct Configuration {
    Algebra A;
    std::vector<Ind> points;  // sorted

    Configuration() = default;
    Configuration(Algebra a, std::vector<Ind> p);

    bool contains(const Ind& p) const;
    bool operator==(const Configuration&) const = default;
    bool operator<(const Configuration& o) const { return points < o.points; }
};

enum class PruneType { Bottom, Top };
inline const char* type_name(PruneType t) { return t == PruneType::Bottom ? "bottom" : "top"; }

bool is_configuration(const std::vector<Ind>& points, const Algebra& A);
inline bool is_configuration(const Configuration& C) { return is_configuration(C.points, C.A); }

std::vector<Configuration> enumerate_configurations(const Algebra& A);
std::vector<Configuration> enumerate_configurations_serial(const Algebra& A);

/// Nakayama action on points, (x, y) -> (x - ell, y).
std::vector<Ind> nu_points(const std::vector<Ind>& pts, const Algebra& A);
bool is_nakayama_stable(const std::vector<Ind>& pts, const Algebra& A);

/// Positional sms mutation: entry j of the result replaces entry j of S.
/// K lists positions of the mutated members.
std::vector<Ind> sms_mutate_positional(const std::vector<Ind>& S, const std::vector<std::size_t>& K, Sign sign,
                                       const Algebra& A);
/// Set-level sms mutation with respect to the subset K of C.
Configuration sms_mutate(const Configuration& C, const std::vector<Ind>& K, Sign sign);

/// Minimal Nakayama-stable subsets (the nu-orbits of points of C).
std::vector<std::vector<Ind>> nakayama_orbits(const Configuration& C);

/// Configuration of rank e (ell = e m) to rank e + 1.
Configuration omega_insert(const Configuration& C, int m);
/// Inverse of omega_insert: C of rank e + 1 must contain (e + 1, 1).
Configuration omega_uninsert(const Configuration& C, int m);

/// Bottom/Top type by tree pruning. With an rng the rim point is chosen at random.
PruneType prune_type(const Configuration& C, int m, std::mt19937_64* rng = nullptr);

/// A_e^{em} -> A_e^e, folding both bands onto 1..e.
Configuration tilde(const Configuration& C);
Ind tilde_point(const Ind& p, const Algebra& A);

enum class Shift { Tau, Omega, OmegaInv };
Configuration config_shift(const Configuration& C, Shift op, int k = 1);

/// Graphviz rendering of the stable AR quiver with the points of C filled.
std::string to_dot(const Configuration& C);

/// Simple modules {(i,1)}.
Configuration simples(const Algebra& A);

}  // namespace nak
