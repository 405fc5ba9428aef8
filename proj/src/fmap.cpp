#include "nak/fmap.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "nak/errors.hpp"
#include "nak/modcat_engine.hpp"
#include "nak/parallel.hpp"

namespace nak {

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

using Key = std::vector<Summand>;

Json report(const std::string& suite, const std::string& status, Json counterexamples, Json summary)
{
    if (counterexamples.size() > kMaxCounterexamples) {
        Json cut = Json::array();
        for (std::size_t i = 0; i < kMaxCounterexamples; ++i) cut.push_back(counterexamples[i]);
        counterexamples = cut;
    }
    return Json{{"suite", suite}, {"status", status}, {"counterexamples", counterexamples}, {"summary", summary}};
}

Json not_applicable(const std::string& suite, const std::string& why)
{
    return report(suite, "not-applicable", Json::array(), Json{{"reason", why}});
}

long long catalan(int e) { return binomial(2 * e, e) / (e + 1); }

std::vector<Configuration> fmap_all(const std::vector<TwoTerm>& Ts)
{
    std::vector<Configuration> out(Ts.size());
    parallel_for(Ts.size(), [&](std::size_t i) { out[i] = fmap(Ts[i]); });
    return out;
}

bool symmetric_with_m(const Algebra& A) { return A.n == A.e() && A.ell > A.n; }

Json suite_counts(const Algebra& A)
{
    const int e = A.e();
    auto dom = two_term_tilting(A);
    std::vector<char> ok(dom.size(), 0);
    parallel_for(dom.size(), [&](std::size_t i) { ok[i] = is_tilting(dom[i]) ? 1 : 0; });
    std::set<Key> distinct;
    Json bad = Json::array();
    for (std::size_t i = 0; i < dom.size(); ++i) {
        distinct.insert(dom[i].canonical());
        if (!ok[i]) bad.push_back(Json{{"not_tilting", to_json(dom[i])}});
    }
    long long want_dom = binomial(2 * e, e);
    long long want_cod = A.ell != e ? want_dom : catalan(e);
    auto cod = enumerate_configurations(A);
    if (static_cast<long long>(distinct.size()) != want_dom)
        bad.push_back(Json{{"two_term_tilting", distinct.size()}, {"expected", want_dom}});
    if (static_cast<long long>(cod.size()) != want_cod)
        bad.push_back(Json{{"configurations", cod.size()}, {"expected", want_cod}});
    return report("counts", bad.empty() ? "pass" : "fail", bad,
                  Json{{"two_term_tilting", distinct.size()}, {"configurations", cod.size()}});
}

Json suite_bijection(const Algebra& A)
{
    const int e = A.e();
    auto dom = two_term_tilting(A);
    auto img = fmap_all(dom);
    auto cod = enumerate_configurations(A);
    std::map<Configuration, std::vector<std::size_t>> fibres;
    for (std::size_t i = 0; i < img.size(); ++i) fibres[img[i]].push_back(i);
    std::set<Configuration> all(cod.begin(), cod.end());

    Json cx = Json::array();
    bool surjective = true;
    for (const auto& C : cod)
        if (!fibres.count(C)) {
            surjective = false;
            cx.push_back(Json{{"missing", to_json(C)}});
        }
    for (const auto& [C, f] : fibres)
        if (!all.count(C)) cx.push_back(Json{{"not_enumerated", to_json(C)}});
    const bool injective = fibres.size() == dom.size();

    Json fib = Json::array();
    for (const auto& [C, f] : fibres) fib.push_back(Json{{"configuration", to_json(C)}, {"size", f.size()}});
    Json summary{{"domain", dom.size()}, {"image", fibres.size()}, {"codomain", cod.size()},
                 {"injective", injective}, {"surjective", surjective}};

    if (A.ell != e) {
        if (!injective)
            for (const auto& [C, f] : fibres)
                if (f.size() > 1) {
                    Json cs = Json::array();
                    for (auto i : f) cs.push_back(to_json(dom[i]));
                    cx.push_back(Json{{"collision", to_json(C)}, {"complexes", cs}});
                }
        return report("bijection", cx.empty() && injective && surjective ? "pass" : "fail", cx, summary);
    }
    summary["fibres"] = fib;
    bool expected = cx.empty() && surjective && !injective && static_cast<long long>(fibres.size()) == catalan(e);
    return report("bijection", expected ? "expected-fail" : "fail", cx, summary);
}

Json suite_mutation_compat(const Algebra& A)
{
    auto dom = two_term_tilting(A);
    std::vector<Json> per(dom.size());
    std::vector<std::size_t> edges(dom.size(), 0);
    parallel_for(dom.size(), [&](std::size_t i) {
        per[i] = Json::array();
        auto c = fmap_correspondence(dom[i]);
        for (const auto& orbit : summand_orbits(dom[i])) {
            auto L = two_term_mutate(dom[i], orbit, Sign::Minus);
            if (!L) continue;
            ++edges[i];
            auto direct = sms_mutate_positional(c.points, orbit, Sign::Minus, A);
            Configuration want(A, direct), got = fmap(*L);
            std::size_t changed = 0;
            for (std::size_t p = 0; p < direct.size(); ++p) changed += direct[p] != c.points[p];
            if (!(want == got) || changed > 3 * orbit.size())
                per[i].push_back(Json{{"complex", to_json(dom[i])}, {"orbit", orbit}, {"direct", to_json(want)},
                                      {"transported", to_json(got)}, {"changed", changed}});
        }
    });
    Json cx = Json::array();
    std::size_t total = 0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        total += edges[i];
        for (auto& x : per[i]) cx.push_back(x);
    }
    return report("mutation-compat", cx.empty() ? "pass" : "fail", cx, Json{{"edges", total}});
}

Json suite_embedding(const Algebra& A)
{
    if (A.ell == A.e()) return not_applicable("embedding", "ell = gcd(n, ell)");
    auto Q2 = exchange_quiver_2tilt(A);
    auto Qs = exchange_quiver_sms(A);
    std::map<Configuration, std::size_t> cidx;
    for (std::size_t i = 0; i < Qs.configurations.size(); ++i) cidx[Qs.configurations[i]] = i;
    std::set<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>> sms_arrows;
    for (const auto& a : Qs.arrows) sms_arrows.insert({a.from, a.to, a.orbit});

    std::vector<Correspondence> corr(Q2.size());
    parallel_for(Q2.size(), [&](std::size_t i) { corr[i] = fmap_correspondence(Q2.complexes[i]); });

    Json cx = Json::array();
    std::vector<std::size_t> obj(Q2.size());
    std::set<std::size_t> seen_obj;
    for (std::size_t i = 0; i < Q2.size(); ++i) {
        auto C = corr[i].configuration();
        auto it = cidx.find(C);
        if (it == cidx.end()) {
            cx.push_back(Json{{"unknown_image", to_json(C)}});
            return report("embedding", "fail", cx, Json::object());
        }
        obj[i] = it->second;
        if (!seen_obj.insert(obj[i]).second) cx.push_back(Json{{"object_collision", to_json(C)}});
    }
    std::set<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>> image;
    for (const auto& a : Q2.arrows) {
        const auto& C = Qs.configurations[obj[a.from]];
        std::vector<std::size_t> K;
        for (auto p : a.orbit) {
            const Ind& x = corr[a.from].points[p];
            K.push_back(static_cast<std::size_t>(std::lower_bound(C.points.begin(), C.points.end(), x) - C.points.begin()));
        }
        std::sort(K.begin(), K.end());
        std::tuple<std::size_t, std::size_t, std::vector<std::size_t>> t{obj[a.from], obj[a.to], K};
        if (!sms_arrows.count(t))
            cx.push_back(Json{{"missing_arrow", {{"from", to_json(C)}, {"to", to_json(Qs.configurations[obj[a.to]])}}}});
        if (!image.insert(t).second) cx.push_back(Json{{"arrow_collision", {{"from", to_json(C)}, {"orbit", K}}}});
    }
    return report("embedding", cx.empty() ? "pass" : "fail", cx,
                  Json{{"objects", Q2.size()}, {"arrows", Q2.arrows.size()}, {"sms_objects", Qs.size()},
                       {"sms_arrows", Qs.arrows.size()}});
}

Json suite_types(const Algebra& A)
{
    if (!symmetric_with_m(A)) return not_applicable("types", "needs n = gcd(n, ell) and ell > n");
    const int m = A.ell / A.n;
    auto dom = two_term_tilting(A);
    auto img = fmap_all(dom);
    std::set<Configuration> minus, plus;
    Json cx = Json::array();
    for (std::size_t i = 0; i < dom.size(); ++i) {
        Sign s = complex_sign(dom[i]);
        PruneType t = prune_type(img[i], m);
        PruneType want = s == Sign::Minus ? PruneType::Bottom : PruneType::Top;
        if (t != want)
            cx.push_back(Json{{"complex", to_json(dom[i])}, {"configuration", to_json(img[i])}, {"type", type_name(t)}});
        (s == Sign::Minus ? minus : plus).insert(img[i]);
    }
    std::set<Configuration> bottom, top;
    for (const auto& C : enumerate_configurations(A)) (prune_type(C, m) == PruneType::Bottom ? bottom : top).insert(C);
    if (minus != bottom) cx.push_back(Json{{"minus_image_differs_from_bottom", minus.size()}, {"bottom", bottom.size()}});
    if (plus != top) cx.push_back(Json{{"plus_image_differs_from_top", plus.size()}, {"top", top.size()}});
    return report("types", cx.empty() ? "pass" : "fail", cx,
                  Json{{"bottom", bottom.size()}, {"top", top.size()}});
}

Json suite_tilde(const Algebra& A)
{
    if (!symmetric_with_m(A)) return not_applicable("tilde", "needs n = gcd(n, ell) and ell > n");
    const Algebra B(A.n, A.n);
    auto big = enumerate_configurations(A);
    auto small = enumerate_configurations(B);
    std::map<Configuration, std::size_t> fibre;
    Json cx = Json::array();
    for (const auto& C : big) ++fibre[tilde(C)];
    for (const auto& D : small)
        if (!fibre.count(D)) cx.push_back(Json{{"not_hit", to_json(D)}});
    std::size_t sum = 0;
    for (const auto& [D, k] : fibre) sum += k;
    if (sum != big.size()) cx.push_back(Json{{"fibre_total", sum}});

    std::vector<Json> per(big.size());
    parallel_for(big.size(), [&](std::size_t i) {
        per[i] = Json::array();
        const auto& S = big[i].points;
        std::vector<Ind> low;
        for (const auto& p : S) low.push_back(tilde_point(p, A));
        for (std::size_t k = 0; k < S.size(); ++k)
            for (Sign s : {Sign::Minus, Sign::Plus}) {
                auto up = sms_mutate_positional(S, {k}, s, A);
                auto down = sms_mutate_positional(low, {k}, s, B);
                std::vector<Ind> folded;
                for (const auto& p : up) folded.push_back(tilde_point(p, A));
                if (folded != down)
                    per[i].push_back(Json{{"configuration", to_json(big[i])}, {"position", k}, {"sign", sign_name(s)}});
            }
    });
    for (auto& p : per)
        for (auto& x : p) cx.push_back(x);
    return report("tilde", cx.empty() ? "pass" : "fail", cx,
                  Json{{"source", big.size()}, {"target", small.size()}, {"image", fibre.size()}});
}

Json suite_functors(const Algebra& A)
{
    auto inds = nonprojective_inds(A);
    Json cx = Json::array();
    for (const auto& M : inds) {
        if (omega_inv(omega(M, A), A) != M) cx.push_back(Json{{"omega_inv_omega", M.to_string()}});
        if (omega(omega_inv(M, A), A) != M) cx.push_back(Json{{"omega_omega_inv", M.to_string()}});
        if (tau(M, A) != nu(omega(omega(M, A), A), A)) cx.push_back(Json{{"tau_nu_omega2", M.to_string()}});
    }
    const std::size_t N = inds.size();
    std::vector<Json> per(N * N);
    parallel_for(N * N, [&](std::size_t idx) {
        const Ind& M = inds[idx / N];
        const Ind& L = inds[idx % N];
        int d = stable_hom_dim(M, L, A);
        int d2 = static_cast<int>(stable_hom_dim_matrix<2>(M, L, A));
        int d3 = static_cast<int>(stable_hom_dim_matrix<3>(M, L, A));
        bool ok = d == d2 && d2 == d3 && d == stable_hom_dim(tau(M, A), tau(L, A), A) &&
                  d == stable_hom_dim(omega(M, A), omega(L, A), A);
        if (!ok) per[idx] = Json{{"pair", {M.to_string(), L.to_string()}}, {"closed_form", d}, {"gf2", d2}, {"gf3", d3}};
    });
    for (auto& x : per)
        if (!x.is_null()) cx.push_back(x);
    return report("functors", cx.empty() ? "pass" : "fail", cx, Json{{"indecomposables", N}, {"pairs", N * N}});
}

}  // namespace

long long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Correspondence anchor(const Algebra& A, Sign sign)
{
    Correspondence c{stalk_complex(A, sign), {}};
    for (int i = 1; i <= A.n; ++i) {
        Ind s{i, 1};
        c.points.push_back(sign == Sign::Minus ? s : omega_inv(s, A));
    }
    return c;
}

bool transport(Correspondence& c, const std::vector<std::size_t>& orbit, Sign sign)
{
    auto T = two_term_mutate(c.complex, orbit, sign);
    if (!T) return false;
    c.points = sms_mutate_positional(c.points, orbit, sign, c.complex.A);
    c.complex = *T;
    return true;
}

std::vector<std::size_t> slot_orbit(int j, const Algebra& A)
{
    const int e = A.e();
    if (j < 1 || j > e) throw InvalidInput("slot out of range");
    std::vector<std::size_t> out;
    for (int p = j; p <= A.n; p += e) out.push_back(static_cast<std::size_t>(p - 1));
    return out;
}

std::vector<int> canonical_sequence(const TwoTerm& T)
{
    const Algebra& A = T.A;
    auto [X, sign] = phi_inverse(T);
    const int e = X.e;
    auto seq = star_mutation_sequence(psi(X, sign, std::max(1, A.ell / e)), sign);

    // Walk back to the all-projective triangulation; labels follow the flips.
    std::vector<std::pair<Arc, int>> label;
    for (std::size_t k = 0; k < X.arcs.size(); ++k) label.push_back({X.arcs[k], static_cast<int>(k) + 1});
    Triangulation cur = X;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        auto hit = std::find_if(label.begin(), label.end(), [&](const auto& p) { return p.second == *it; });
        auto [Y, b] = flip(cur, hit->first);
        hit->first = b;
        cur = Y;
    }
    if (!(cur == projective_triangulation(e))) throw InternalError("canonical walk did not reach the star");

    std::vector<int> slots;
    for (int l : seq) {
        auto hit = std::find_if(label.begin(), label.end(), [&](const auto& p) { return p.second == l; });
        slots.push_back(hit->first.terminal_or_initial);
    }
    return slots;
}

Correspondence fmap_correspondence(const TwoTerm& T)
{
    if (!is_tilting(T)) throw InvalidInput("fmap needs a two-term tilting complex");
    Sign sign = complex_sign(T);
    Correspondence c = anchor(T.A, sign);
    for (int j : canonical_sequence(T))
        if (!transport(c, slot_orbit(j, T.A), sign)) throw InternalError("canonical sequence left the two-term class");
    if (!c.complex.same(T)) throw InternalError("canonical sequence did not reach the complex");

    Correspondence out{T, {}};
    for (const auto& X : T.summands) {
        auto it = std::find(c.complex.summands.begin(), c.complex.summands.end(), X);
        out.points.push_back(c.points[static_cast<std::size_t>(it - c.complex.summands.begin())]);
    }
    return out;
}

Configuration fmap(const TwoTerm& T) { return fmap_correspondence(T).configuration(); }

std::vector<TwoTerm> two_term_tilting(const Algebra& A)
{
    auto tri = enumerate_triangulations(A.e());
    std::vector<TwoTerm> out;
    for (Sign s : {Sign::Minus, Sign::Plus})
        for (const auto& X : tri) out.push_back(phi(X, s, A));
    return out;
}

std::vector<Correspondence> breadth_first_transport(const Algebra& A)
{
    std::vector<Correspondence> found{anchor(A, Sign::Minus)};
    std::set<Key> seen{found[0].complex.canonical()};
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (const auto& orbit : summand_orbits(found[head].complex)) {
            Correspondence c = found[head];
            if (!transport(c, orbit, Sign::Minus)) continue;
            if (seen.insert(c.complex.canonical()).second) found.push_back(std::move(c));
        }
    }
    return found;
}

Json ExchangeQuiver::object_json(std::size_t i) const
{
    return kind == "2tilt" ? to_json(complexes[i]) : to_json(configurations[i]);
}

ExchangeQuiver exchange_quiver_2tilt(const Algebra& A)
{
    ExchangeQuiver Q{"2tilt", A, two_term_tilting(A), {}, {}};
    std::map<Key, std::size_t> idx;
    for (std::size_t i = 0; i < Q.complexes.size(); ++i) idx[Q.complexes[i].canonical()] = i;
    std::vector<std::vector<ExchangeArrow>> per(Q.complexes.size());
    parallel_for(Q.complexes.size(), [&](std::size_t i) {
        for (const auto& orbit : summand_orbits(Q.complexes[i])) {
            auto U = two_term_mutate(Q.complexes[i], orbit, Sign::Minus);
            if (!U) continue;
            auto it = idx.find(U->canonical());
            if (it == idx.end()) throw InternalError("mutation left the enumerated complexes");
            per[i].push_back({i, it->second, orbit});
        }
    });
    for (auto& p : per) Q.arrows.insert(Q.arrows.end(), p.begin(), p.end());
    return Q;
}

ExchangeQuiver exchange_quiver_sms(const Algebra& A)
{
    ExchangeQuiver Q{"sms", A, {}, enumerate_configurations(A), {}};
    std::map<Configuration, std::size_t> idx;
    for (std::size_t i = 0; i < Q.configurations.size(); ++i) idx[Q.configurations[i]] = i;
    std::vector<std::vector<ExchangeArrow>> per(Q.configurations.size());
    parallel_for(Q.configurations.size(), [&](std::size_t i) {
        const auto& C = Q.configurations[i];
        for (const auto& K : nakayama_orbits(C)) {
            std::vector<std::size_t> pos;
            for (const auto& p : K)
                pos.push_back(static_cast<std::size_t>(std::lower_bound(C.points.begin(), C.points.end(), p) - C.points.begin()));
            std::sort(pos.begin(), pos.end());
            auto it = idx.find(sms_mutate(C, K, Sign::Minus));
            if (it == idx.end()) throw InternalError("sms mutation left the enumerated configurations");
            per[i].push_back({i, it->second, pos});
        }
    });
    for (auto& p : per) Q.arrows.insert(Q.arrows.end(), p.begin(), p.end());
    return Q;
}

Json to_json(const ExchangeQuiver& Q)
{
    Json objs = Json::array(), arrows = Json::array();
    for (std::size_t i = 0; i < Q.size(); ++i) objs.push_back(Q.object_json(i));
    for (const auto& a : Q.arrows) arrows.push_back(Json{{"from", a.from}, {"to", a.to}, {"orbit", a.orbit}});
    return Json{{"kind", Q.kind}, {"n", Q.A.n}, {"ell", Q.A.ell}, {"objects", objs}, {"arrows", arrows}};
}

std::string to_dot(const ExchangeQuiver& Q, const std::vector<std::string>& notes)
{
    auto esc = [](std::string s) {
        std::string r;
        for (char ch : s) {
            if (ch == '"') r += '\\';
            r += ch;
        }
        return r;
    };
    std::ostringstream os;
    os << "digraph \"" << Q.kind << "\" {\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < Q.size(); ++i) {
        std::string label;
        if (Q.kind == "2tilt") {
            for (const auto& X : Q.complexes[i].canonical()) label += X.to_string() + " ";
        } else {
            for (const auto& p : Q.configurations[i].points) label += p.to_string() + " ";
        }
        if (i < notes.size()) label += "\\n" + notes[i];
        os << "  o" << i << " [label=\"" << esc(label) << "\"];\n";
    }
    for (const auto& a : Q.arrows) {
        std::string lab;
        for (auto p : a.orbit) lab += (lab.empty() ? "" : ",") + std::to_string(p + 1);
        os << "  o" << a.from << " -> o" << a.to << " [label=\"" << lab << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"counts", "bijection", "mutation-compat", "embedding",
                                                "types",  "tilde",     "functors"};
    return names;
}

Json verify(const std::string& suite, const Algebra& A)
{
    if (suite == "counts") return suite_counts(A);
    if (suite == "bijection") return suite_bijection(A);
    if (suite == "mutation-compat") return suite_mutation_compat(A);
    if (suite == "embedding") return suite_embedding(A);
    if (suite == "types") return suite_types(A);
    if (suite == "tilde") return suite_tilde(A);
    if (suite == "functors") return suite_functors(A);
    throw InvalidInput("unknown suite " + suite);
}

}  // namespace nak
