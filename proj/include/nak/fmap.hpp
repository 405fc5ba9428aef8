#pragma once

// The map from two-term tilting complexes to configurations, computed by
// transporting mutations from the stalk complex, plus exchange quivers and
// the verification suites.

#include <string>
#include <vector>

#include "nak/complexes.hpp"
#include "nak/json_io.hpp"
#include "nak/smscfg.hpp"

namespace nak {

/// A complex and a point list advanced in lockstep: points[i] belongs to complex.summands[i].
struct Correspondence {
    TwoTerm complex;
    std::vector<Ind> points;

    Configuration configuration() const { return Configuration(complex.A, points); }
};

/// Starting pair: A with the simples (minus) or A[1] with Omega^-1 of the simples (plus).
Correspondence anchor(const Algebra& A, Sign sign);

/// Mutate both sides at `orbit`. Returns false, leaving c unchanged, if the complex leaves the two-term class.
bool transport(Correspondence& c, const std::vector<std::size_t>& orbit, Sign sign);

/// Positions of the stalk complex lying over slot j (1..e): j, j + e, j + 2e, ...
std::vector<std::size_t> slot_orbit(int j, const Algebra& A);

/// Slots j_1..j_h such that mutating the anchor at them in turn reaches T
/// (left mutations for the minus part, right mutations for the plus part).
std::vector<int> canonical_sequence(const TwoTerm& T);

/// Transport along the canonical sequence, then reorder to T's summand order.
Correspondence fmap_correspondence(const TwoTerm& T);
Configuration fmap(const TwoTerm& T);

/// All two-term tilting complexes: phi over T(e), minus part first.
std::vector<TwoTerm> two_term_tilting(const Algebra& A);

/// Transport from the minus anchor along left mutations, breadth first.
/// Entry i belongs to complexes[i] in the order of discovery.
std::vector<Correspondence> breadth_first_transport(const Algebra& A);

struct ExchangeArrow {
    std::size_t from = 0, to = 0;
    std::vector<std::size_t> orbit;  // summand positions (2tilt) or point positions (sms) in `from`
};

struct ExchangeQuiver {
    std::string kind;  // "2tilt" or "sms"
    Algebra A;
    std::vector<TwoTerm> complexes;
    std::vector<Configuration> configurations;
    std::vector<ExchangeArrow> arrows;

    std::size_t size() const { return kind == "2tilt" ? complexes.size() : configurations.size(); }
    Json object_json(std::size_t i) const;
};

ExchangeQuiver exchange_quiver_2tilt(const Algebra& A);
ExchangeQuiver exchange_quiver_sms(const Algebra& A);
Json to_json(const ExchangeQuiver& Q);
/// Graphviz rendering; `notes` (if nonempty) annotates each object.
std::string to_dot(const ExchangeQuiver& Q, const std::vector<std::string>& notes = {});

/// Suites: counts, bijection, mutation-compat, embedding, types, tilde, functors.
/// Status is "pass", "fail", "expected-fail" (surjective but not injective, as
/// predicted when ell = gcd(n, ell)) or "not-applicable".
Json verify(const std::string& suite, const Algebra& A);
const std::vector<std::string>& suite_names();

long long binomial(int n, int k);

}  // namespace nak
