#include "doctest.h"

#include <set>

#include "nak/disc.hpp"
#include "nak/errors.hpp"

using namespace nak;

namespace {

long long binom(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// <j,i> in the usual notation: terminal j, initial i.
Arc ji(int j, int i, int e)
{
    int l = ((j - i) % e + e) % e;
    if (l < 2) l += e;
    return Arc::inner(i, l);
}

}  // namespace

TEST_CASE("all_arcs sizes")
{
    CHECK(all_arcs(1).size() == 1);
    CHECK(all_arcs(2).size() == 4);
    CHECK(all_arcs(3).size() == 9);
    CHECK_THROWS_AS(all_arcs(0), InvalidInput);
}

TEST_CASE("compatibility examples")
{
    CHECK(compatible(Arc::projective(1), Arc::projective(2), 2));
    CHECK_FALSE(compatible(Arc::inner(1, 2), Arc::inner(2, 2), 2));
    CHECK(compatible(ji(2, 4, 6), ji(2, 5, 6), 6));
    CHECK_THROWS_AS(compatible(Arc::inner(1, 7), Arc::projective(1), 6), InvalidInput);
    for (int e = 1; e <= 5; ++e)
        for (auto& a : all_arcs(e)) {
            CHECK(compatible(a, a, e));
            for (auto& b : all_arcs(e)) CHECK(compatible(a, b, e) == compatible(b, a, e));
        }
}

TEST_CASE("is_triangulation examples")
{
    CHECK(is_triangulation({Arc::projective(1), Arc::projective(2)}, 2));
    CHECK_FALSE(is_triangulation({Arc::projective(1)}, 2));
    std::vector<Arc> x{Arc::projective(2), ji(4, 2, 6), Arc::projective(4), ji(2, 4, 6), ji(2, 5, 6), ji(2, 6, 6)};
    CHECK(is_triangulation(x, 6));
}

TEST_CASE("triangulation counts match the central binomial halves")
{
    for (int e = 1; e <= 6; ++e) {
        auto ts = enumerate_triangulations(e);
        CHECK(static_cast<long long>(ts.size()) == binom(2 * e, e) / 2);
        std::set<Triangulation> uniq(ts.begin(), ts.end());
        CHECK(uniq.size() == ts.size());
        for (auto& t : ts) {
            CHECK(static_cast<int>(t.arcs.size()) == e);
            CHECK(is_triangulation(t.arcs, e));
        }
        CHECK(std::is_sorted(ts.begin(), ts.end()));
    }
}

TEST_CASE("parallel and serial enumeration agree")
{
    for (int e = 1; e <= 6; ++e) CHECK(enumerate_triangulations(e) == enumerate_triangulations_serial(e));
}

TEST_CASE("flip")
{
    auto X = projective_triangulation(2);
    auto [Y, b] = flip(X, Arc::projective(2));
    CHECK(Y == Triangulation(2, {Arc::projective(1), Arc::inner(1, 2)}));
    CHECK(b == Arc::inner(1, 2));
    CHECK_THROWS_AS(flip(X, Arc::inner(2, 2)), InvalidInput);

    for (int e = 2; e <= 4; ++e) {
        auto ts = enumerate_triangulations(e);
        std::set<Triangulation> all(ts.begin(), ts.end());
        for (auto& t : ts)
            for (auto& a : t.arcs) {
                // oracle: every replacement that yields a triangulation
                std::vector<Arc> found;
                for (auto& c : all_arcs(e)) {
                    if (t.contains(c)) continue;
                    std::vector<Arc> cand;
                    for (auto& x : t.arcs)
                        if (x != a) cand.push_back(x);
                    cand.push_back(c);
                    if (is_triangulation(cand, e)) found.push_back(c);
                }
                CHECK(found.size() <= 1);
                if (found.empty()) {
                    CHECK_THROWS_AS(flip(t, a), InvalidInput);
                    continue;
                }
                auto [u, c] = flip(t, a);
                CHECK(c == found[0]);
                CHECK(all.count(u) == 1);
                auto [back, a2] = flip(u, c);
                CHECK(back == t);
                CHECK(a2 == a);
            }
    }
}

TEST_CASE("flip graph is connected")
{
    for (int e = 1; e <= 5; ++e) {
        auto ts = enumerate_triangulations(e);
        std::set<Triangulation> seen{projective_triangulation(e)};
        std::vector<Triangulation> todo{projective_triangulation(e)};
        while (!todo.empty()) {
            auto t = todo.back();
            todo.pop_back();
            for (auto& a : t.arcs) {
                if (!exchange_partner(t, a)) continue;
                auto u = flip(t, a).first;
                if (seen.insert(u).second) todo.push_back(u);
            }
        }
        CHECK(seen.size() == ts.size());
    }
}

TEST_CASE("unfold and fold")
{
    CHECK(unfold(projective_triangulation(2), 4) == projective_triangulation(4));
    CHECK_THROWS_AS(unfold(projective_triangulation(2), 5), InvalidInput);
    for (auto& x : enumerate_triangulations(2)) {
        auto y = unfold(x, 6);
        CHECK(is_triangulation(y.arcs, 6));
        CHECK(rotate(y, 2) == y);
        CHECK(fold(y, 2) == x);
    }
    for (auto& x : enumerate_triangulations(4)) {
        auto y = unfold(x, 12);
        CHECK(is_triangulation(y.arcs, 12));
        CHECK(rotate(y, 4) == y);
    }

    bool saw_failure = false;
    for (auto& y : enumerate_triangulations(4))
        if (rotate(y, 2) != y) {
            CHECK_THROWS_AS(fold(y, 2), SymmetryFailure);
            saw_failure = true;
        }
    CHECK(saw_failure);

    // symmetric triangulations of rank 4 are exactly the unfolded ones
    int symmetric = 0;
    for (auto& y : enumerate_triangulations(4))
        if (rotate(y, 2) == y) ++symmetric;
    CHECK(symmetric == static_cast<int>(enumerate_triangulations(2).size()));

    // folding commutes with flips along lifted orbits
    for (auto& x : enumerate_triangulations(2))
        for (auto& a : x.arcs) {
            if (!exchange_partner(x, a)) continue;
            auto y = unfold(x, 4);
            for (auto& lift : unfold_arc(a, 2, 4)) y = flip(y, lift).first;
            CHECK(fold(y, 2) == flip(x, a).first);
        }
}
