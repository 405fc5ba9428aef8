#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "nak/errors.hpp"
#include "nak/fmap.hpp"

using namespace nak;

namespace {

Arc ji(int j, int i, int e)
{
    int l = ((j - i) % e + e) % e;
    if (l < 2) l += e;
    return Arc::inner(i, l);
}

std::size_t stalk_pos(const TwoTerm& T, int p)
{
    auto it = std::find(T.summands.begin(), T.summands.end(), Summand::stalk(p, 0));
    REQUIRE(it != T.summands.end());
    return static_cast<std::size_t>(it - T.summands.begin());
}

}  // namespace

TEST_CASE("anchors")
{
    Algebra A(3, 6);
    CHECK(fmap(stalk_complex(A)) == simples(A));
    CHECK(canonical_sequence(stalk_complex(A)).empty());
    auto up = fmap(stalk_complex(A, Sign::Plus));
    CHECK(up == Configuration(A, {{3, 6}, {1, 6}, {2, 6}}));
    CHECK(up == config_shift(simples(A), Shift::OmegaInv));
    CHECK(slot_orbit(2, Algebra(6, 4)) == std::vector<std::size_t>{1, 3, 5});
}

TEST_CASE("canonical sequences replay to the complex")
{
    for (auto [n, ell] : {std::pair{3, 6}, std::pair{2, 4}, std::pair{4, 2}, std::pair{6, 4}, std::pair{4, 8}, std::pair{3, 3}}) {
        Algebra A(n, ell);
        for (const auto& T : two_term_tilting(A)) {
            Sign s = complex_sign(T);
            auto seq = canonical_sequence(T);
            std::size_t diffs = 0;
            for (auto& x : T.summands) diffs += !x.is_stalk();
            CHECK(seq.size() * static_cast<std::size_t>(n / A.e()) == diffs);
            TwoTerm U = stalk_complex(A, s);
            for (int j : seq) {
                auto V = two_term_mutate(U, slot_orbit(j, A), s);
                REQUIRE(V);
                U = *V;
            }
            CHECK(U.same(T));
        }
    }
}

TEST_CASE("rank 6 example: the given sequence and the canonical one agree")
{
    Algebra A(6, 12);
    Triangulation X(6, {Arc::projective(2), ji(4, 2, 6), Arc::projective(4), ji(2, 4, 6), ji(2, 5, 6), ji(2, 6, 6)});
    auto T = phi(X, Sign::Minus, A);
    auto c = anchor(A, Sign::Minus);
    for (int p : {3, 1, 6, 5}) REQUIRE(transport(c, {stalk_pos(c.complex, p)}, Sign::Minus));
    CHECK(c.complex.same(T));
    CHECK(c.configuration() == fmap(T));
}

TEST_CASE("fmap is a bijection when ell > gcd and onto otherwise")
{
    Algebra A(3, 6);
    std::set<Configuration> img;
    for (const auto& T : two_term_tilting(A)) img.insert(fmap(T));
    auto all = enumerate_configurations(A);
    CHECK(img.size() == 20);
    CHECK(img == std::set<Configuration>(all.begin(), all.end()));

    Algebra B(3, 3);
    std::map<Configuration, int> fib;
    for (const auto& T : two_term_tilting(B)) ++fib[fmap(T)];
    CHECK(fib.size() == 5);
    int sum = 0;
    for (auto& [C, k] : fib) sum += k;
    CHECK(sum == 20);
}

TEST_CASE("breadth-first transport agrees with fmap")
{
    for (auto [n, ell] : {std::pair{3, 6}, std::pair{2, 4}, std::pair{4, 2}, std::pair{3, 3}}) {
        Algebra A(n, ell);
        auto found = breadth_first_transport(A);
        CHECK(found.size() == two_term_tilting(A).size());
        for (const auto& c : found) {
            auto d = fmap_correspondence(c.complex);
            CHECK(c.configuration() == d.configuration());
            CHECK(c.points == d.points);
        }
    }
}

TEST_CASE("transport steps change few points and keep the type")
{
    Algebra A(3, 6);
    for (const auto& T : two_term_tilting(A)) {
        Sign s = complex_sign(T);
        auto c = anchor(A, s);
        PruneType t0 = prune_type(c.configuration(), 2);
        CHECK(t0 == (s == Sign::Minus ? PruneType::Bottom : PruneType::Top));
        for (int j : canonical_sequence(T)) {
            auto before = c.points;
            REQUIRE(transport(c, slot_orbit(j, A), s));
            int changed = 0;
            for (std::size_t p = 0; p < before.size(); ++p) changed += before[p] != c.points[p];
            CHECK(changed >= 1);
            CHECK(changed <= 3);
            CHECK(prune_type(c.configuration(), 2) == t0);
        }
    }
}

TEST_CASE("exchange quivers")
{
    auto Q = exchange_quiver_2tilt(Algebra(3, 6));
    CHECK(Q.size() == 20);
    auto S = exchange_quiver_sms(Algebra(3, 6));
    CHECK(S.size() == 20);
    std::vector<int> out(20, 0);
    for (auto& a : S.arrows) ++out[a.from];
    CHECK(std::all_of(out.begin(), out.end(), [](int k) { return k == 3; }));
    CHECK(exchange_quiver_sms(Algebra(3, 3)).size() == 5);

    std::set<std::pair<std::size_t, std::size_t>> e;
    for (auto& a : Q.arrows) {
        CHECK(a.from != a.to);
        e.insert({a.from, a.to});
    }
    CHECK(e.size() == Q.arrows.size());
    auto dot = to_dot(Q);
    CHECK(dot.find("digraph") == 0);
    CHECK(to_json(Q)["objects"].size() == 20);
}

TEST_CASE("verification suites")
{
    Algebra A(3, 6);
    for (const auto& s : suite_names()) {
        auto r = verify(s, A);
        CHECK(r["suite"] == s);
        CHECK(r["status"] == "pass");
        CHECK(r["counterexamples"].empty());
    }
    auto b = verify("bijection", Algebra(3, 3));
    CHECK(b["status"] == "expected-fail");
    int sum = 0;
    for (auto& f : b["summary"]["fibres"]) sum += f["size"].get<int>();
    CHECK(sum == 20);
    CHECK(verify("embedding", Algebra(3, 3))["status"] == "not-applicable");
    CHECK(verify("bijection", Algebra(4, 2))["status"] == "expected-fail");
    CHECK(verify("embedding", Algebra(4, 6))["status"] == "pass");
    CHECK_THROWS_AS(verify("nope", A), InvalidInput);
}

TEST_CASE("binomial")
{
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
}
