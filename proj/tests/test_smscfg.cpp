#include "doctest.h"

#include <map>
#include <set>

#include "nak/errors.hpp"
#include "nak/smscfg.hpp"

using namespace nak;

namespace {

// Oracle: test every subset of vertices.
std::set<std::vector<Ind>> configurations_bruteforce(const Algebra& A)
{
    auto verts = nonprojective_inds(A);
    std::set<std::vector<Ind>> out;
    for (unsigned long mask = 0; mask < (1ul << verts.size()); ++mask) {
        std::vector<Ind> pts;
        for (std::size_t b = 0; b < verts.size(); ++b)
            if (mask >> b & 1ul) pts.push_back(verts[b]);
        if (is_configuration(pts, A)) out.insert(normalized(pts));
    }
    return out;
}

Ind tilde_point(const Ind& p, int e, int m)
{
    return p.length <= e ? p : Ind{p.socle, p.length - e * (m - 1)};
}

}  // namespace

TEST_CASE("is_configuration examples")
{
    Algebra A(3, 6);
    CHECK(is_configuration({{1, 1}, {2, 1}, {3, 1}}, A));
    CHECK(is_configuration({{1, 1}, {2, 3}, {3, 5}}, A));
    CHECK_FALSE(is_configuration({{1, 1}, {2, 1}}, A));
    CHECK_THROWS_AS(is_configuration({{1, 7}}, A), InvalidInput);
    CHECK_THROWS_AS(is_configuration({{4, 1}}, A), InvalidInput);
}

TEST_CASE("configuration counts")
{
    std::map<std::pair<int, int>, std::size_t> want{{{1, 2}, 2}, {{2, 2}, 2}, {{3, 3}, 5}, {{4, 4}, 14},
                                                    {{2, 4}, 6}, {{3, 6}, 20}, {{4, 2}, 2}, {{4, 6}, 6}};
    for (auto [key, count] : want) {
        Algebra A(key.first, key.second);
        auto cs = enumerate_configurations(A);
        CHECK(cs.size() == count);
        CHECK(cs == enumerate_configurations_serial(A));
        for (auto& c : cs) {
            CHECK(c.points.size() == static_cast<std::size_t>(A.n));
            CHECK(is_configuration(c));
        }
    }
    for (auto A : {Algebra(2, 2), Algebra(3, 3), Algebra(2, 4), Algebra(3, 6), Algebra(4, 2)}) {
        std::set<std::vector<Ind>> got;
        for (auto& c : enumerate_configurations(A)) got.insert(c.points);
        CHECK(got == configurations_bruteforce(A));
    }
}

TEST_CASE("y coordinates lie in the two bands")
{
    for (auto [e, m] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        Algebra A(e, e * m);
        for (auto& c : enumerate_configurations(A))
            for (auto& p : c.points) CHECK((p.length <= e || p.length >= e * (m - 1) + 1));
    }
}

TEST_CASE("sms mutation basics")
{
    Algebra A1(1, 2);
    CHECK(sms_mutate(simples(A1), {{1, 1}}, Sign::Minus).points == std::vector<Ind>{{1, 2}});

    // mutating the simples of A_2^4 at one simple
    Algebra A(2, 4);
    auto S = simples(A);
    auto left1 = sms_mutate(S, {{1, 1}}, Sign::Minus);
    CHECK(left1.points == std::vector<Ind>{{1, 2}, {2, 4}});
    CHECK(is_configuration(left1));
    // the set {(2,4),(1,1)} is not even pairwise orthogonal here
    CHECK(stable_hom_dim({2, 4}, {1, 1}, A) != 0);

    CHECK_THROWS_AS(sms_mutate(S, {{1, 2}}, Sign::Minus), InvalidInput);
    Algebra B(4, 2);
    CHECK_THROWS_AS(sms_mutate(simples(B), {{1, 1}}, Sign::Minus), InvalidInput);
    CHECK_NOTHROW(sms_mutate(simples(B), {{1, 1}, {3, 1}}, Sign::Minus));
}

TEST_CASE("left and right sms mutations are inverse")
{
    for (auto A : {Algebra(3, 6), Algebra(3, 3), Algebra(2, 4), Algebra(4, 2), Algebra(4, 4), Algebra(4, 6)}) {
        auto cs = enumerate_configurations(A);
        std::set<Configuration> all(cs.begin(), cs.end());
        for (auto& C : cs)
            for (auto& K : nakayama_orbits(C)) {
                auto L = sms_mutate(C, K, Sign::Minus);
                CHECK(all.count(L) == 1);
                std::vector<Ind> K2;
                for (auto& k : K) K2.push_back(omega_inv(k, A));
                CHECK(sms_mutate(L, K2, Sign::Plus) == C);
                auto R = sms_mutate(C, K, Sign::Plus);
                std::vector<Ind> K3;
                for (auto& k : K) K3.push_back(omega(k, A));
                CHECK(sms_mutate(R, K3, Sign::Minus) == C);
            }
    }
}

TEST_CASE("every configuration of A_3^6 has three distinct left mutations")
{
    Algebra A(3, 6);
    for (auto& C : enumerate_configurations(A)) {
        auto orbits = nakayama_orbits(C);
        CHECK(orbits.size() == 3);
        std::set<Configuration> out;
        for (auto& K : orbits) out.insert(sms_mutate(C, K, Sign::Minus));
        CHECK(out.size() == 3);
        CHECK(out.count(C) == 0);
    }
}

TEST_CASE("singleton mutation of the simples changes at most three points")
{
    for (auto A : {Algebra(3, 6), Algebra(4, 8), Algebra(3, 3)}) {
        auto S = simples(A);
        for (auto& p : S.points) {
            auto L = sms_mutate_positional(S.points, {static_cast<std::size_t>(p.socle - 1)}, Sign::Minus, A);
            int changed = 0;
            for (std::size_t j = 0; j < L.size(); ++j) changed += L[j] != S.points[j];
            CHECK(changed >= 2);
            CHECK(changed <= 3);
        }
    }
}

TEST_CASE("omega_insert")
{
    Algebra A(1, 2);
    CHECK(omega_insert(Configuration(A, {{1, 1}}), 2).points == std::vector<Ind>{{1, 1}, {2, 1}});
    CHECK(omega_insert(Configuration(A, {{1, 2}}), 2).points == std::vector<Ind>{{1, 3}, {2, 1}});
    CHECK_THROWS_AS(omega_insert(Configuration(Algebra(2, 4), {{1, 1}}), 2), InvalidInput);
    for (auto [e, m] : {std::pair{1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 2}}) {
        Algebra small(e, e * m), big(e + 1, (e + 1) * m);
        auto targets = enumerate_configurations(big);
        std::set<Configuration> with_point;
        for (auto& D : targets)
            if (D.contains({e + 1, 1})) with_point.insert(D);
        std::set<Configuration> images;
        for (auto& C : enumerate_configurations(small)) {
            auto D = omega_insert(C, m);
            CHECK(is_configuration(D));
            CHECK(omega_uninsert(D, m) == C);
            images.insert(D);
        }
        CHECK(images == with_point);
    }
}

TEST_CASE("prune types")
{
    Algebra A(3, 6);
    auto S = simples(A);
    CHECK(prune_type(S, 2) == PruneType::Bottom);
    CHECK(prune_type(config_shift(S, Shift::Omega), 2) == PruneType::Top);
    CHECK(prune_type(Configuration(A, {{1, 1}, {2, 3}, {3, 5}}), 2) == prune_type(Configuration(A, {{1, 1}, {2, 3}, {3, 5}}), 2));
    CHECK_THROWS_AS(prune_type(simples(Algebra(3, 3)), 1), InvalidInput);

    for (auto [e, m] : {std::pair{3, 2}, {2, 2}, {3, 3}, {4, 2}, {2, 3}}) {
        Algebra B(e, e * m);
        auto cs = enumerate_configurations(B);
        int bottom = 0;
        std::mt19937_64 rng(12345);
        for (auto& C : cs) {
            auto t = prune_type(C, m);
            bottom += t == PruneType::Bottom;
            for (int r = 0; r < 20; ++r) CHECK(prune_type(C, m, &rng) == t);
            CHECK(prune_type(config_shift(C, Shift::Omega), m) != t);
        }
        CHECK(2 * bottom == static_cast<int>(cs.size()));
    }
}

TEST_CASE("tilde")
{
    Algebra A(3, 6);
    CHECK(tilde(simples(A)) == simples(Algebra(3, 3)));
    CHECK(tilde(Configuration(A, {{1, 1}, {2, 3}, {3, 5}})).points == std::vector<Ind>{{1, 1}, {2, 3}, {3, 2}});
    std::map<Configuration, int> fibres;
    for (auto& C : enumerate_configurations(A)) {
        auto T = tilde(C);
        CHECK(is_configuration(T));
        ++fibres[T];
    }
    CHECK(fibres.size() == 5);
    int total = 0;
    for (auto& [_, k] : fibres) total += k;
    CHECK(total == 20);

    // tilde commutes with singleton mutations, positionally
    Algebra small(3, 3);
    for (auto& C : enumerate_configurations(A))
        for (std::size_t j = 0; j < 3; ++j)
            for (Sign s : {Sign::Minus, Sign::Plus}) {
                auto big = sms_mutate_positional(C.points, {j}, s, A);
                std::vector<Ind> folded;
                for (auto& p : C.points) folded.push_back(tilde_point(p, 3, 2));
                auto low = sms_mutate_positional(folded, {j}, s, small);
                for (std::size_t i = 0; i < 3; ++i) CHECK(tilde_point(big[i], 3, 2) == low[i]);
            }
}

TEST_CASE("config_shift")
{
    Algebra A(3, 6);
    for (auto& C : enumerate_configurations(A)) {
        CHECK(config_shift(C, Shift::Tau, 3) == C);
        CHECK(config_shift(config_shift(C, Shift::Omega), Shift::OmegaInv) == C);
        CHECK(is_configuration(config_shift(C, Shift::Tau)));
        CHECK(is_configuration(config_shift(C, Shift::Omega)));
    }
}
