#include "nak/modcat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nak/errors.hpp"
#include "nak/modcat_engine.hpp"

namespace nak {

Algebra::Algebra(int n_, int ell_) : n(n_), ell(ell_)
{
    if (n < 1) throw InvalidInput("n must be at least 1");
    if (ell < 1) throw InvalidInput("ell must be at least 1");
}

std::string Ind::to_string() const { return "M(" + std::to_string(socle) + "," + std::to_string(length) + ")"; }

ModSum normalized(ModSum s)
{
    std::sort(s.begin(), s.end());
    return s;
}

ModSum drop_projectives(const ModSum& s, const Algebra& A)
{
    ModSum out;
    for (const auto& M : s)
        if (!M.is_projective(A)) out.push_back(M);
    return out;
}

void validate(const Ind& M, const Algebra& A)
{
    if (M.socle < 1 || M.socle > A.n) throw InvalidInput("socle out of range 1.." + std::to_string(A.n));
    if (M.length < 1 || M.length > A.ell + 1) throw InvalidInput("length out of range 1.." + std::to_string(A.ell + 1));
}

std::vector<Ind> all_inds(const Algebra& A)
{
    std::vector<Ind> out;
    for (int i = 1; i <= A.n; ++i)
        for (int l = 1; l <= A.ell + 1; ++l) out.push_back({i, l});
    return out;
}

std::vector<Ind> nonprojective_inds(const Algebra& A)
{
    std::vector<Ind> out;
    for (int i = 1; i <= A.n; ++i)
        for (int l = 1; l <= A.ell; ++l) out.push_back({i, l});
    return out;
}

Ind projective(int i, const Algebra& A) { return Ind{A.wrap(i + A.ell), A.ell + 1}; }

std::vector<int> dimension_vector(const ModSum& s, const Algebra& A)
{
    std::vector<int> d(A.n, 0);
    for (const auto& M : s)
        for (int p = 0; p < M.length; ++p) ++d[A.wrap(M.top(A) + p) - 1];
    return d;
}

std::vector<int> hom_lengths(const Ind& M, const Ind& N, const Algebra& A)
{
    validate(M, A);
    validate(N, A);
    std::vector<int> ts;
    int want = ((N.socle - M.socle + M.length) % A.n + A.n) % A.n;
    for (int t = 1; t <= std::min(M.length, N.length); ++t)
        if (t % A.n == want) ts.push_back(t);
    return ts;
}

int hom_dim(const Ind& M, const Ind& N, const Algebra& A) { return static_cast<int>(hom_lengths(M, N, A).size()); }

std::vector<int> stable_hom_lengths(const Ind& M, const Ind& N, const Algebra& A)
{
    if (M.is_projective(A) || N.is_projective(A)) return {};
    // The basis map of image length t factors through a projective exactly
    // when t <= len M + len N - ell - 1.
    int bound = M.length + N.length - A.ell - 1;
    std::vector<int> out;
    for (int t : hom_lengths(M, N, A))
        if (t > bound) out.push_back(t);
    return out;
}

int stable_hom_dim(const Ind& M, const Ind& N, const Algebra& A)
{
    return static_cast<int>(stable_hom_lengths(M, N, A).size());
}

int compose_lengths(int t1, int t2, int len_mid)
{
    int t = t1 + t2 - len_mid;
    return t > 0 ? t : 0;
}

Ind omega(const Ind& M, const Algebra& A)
{
    validate(M, A);
    if (M.is_projective(A)) throw InvalidInput("omega of a projective module");
    return {A.wrap(M.socle + A.ell + 1 - M.length), A.ell + 1 - M.length};
}

Ind omega_inv(const Ind& M, const Algebra& A)
{
    validate(M, A);
    if (M.is_projective(A)) throw InvalidInput("omega_inv of a projective module");
    return {A.wrap(M.socle - M.length), A.ell + 1 - M.length};
}

Ind tau(const Ind& M, const Algebra& A, int k)
{
    validate(M, A);
    if (M.is_projective(A)) throw InvalidInput("tau of a projective module");
    return {A.wrap(M.socle + k), M.length};
}

Ind nu(const Ind& M, const Algebra& A)
{
    validate(M, A);
    return {A.wrap(M.socle - A.ell), M.length};
}

ModSum omega(const ModSum& s, const Algebra& A)
{
    ModSum out;
    for (const auto& M : drop_projectives(s, A)) out.push_back(omega(M, A));
    return normalized(out);
}

ModSum omega_inv(const ModSum& s, const Algebra& A)
{
    ModSum out;
    for (const auto& M : drop_projectives(s, A)) out.push_back(omega_inv(M, A));
    return normalized(out);
}

std::pair<Ind, ModMapSpec> proj_cover(const Ind& M, const Algebra& A)
{
    validate(M, A);
    Ind P = projective(M.top(A), A);
    return {P, ModMapSpec{{P}, {M}, {{0, 0, M.length, 1}}}};
}

ModSum cone_of_stable_map(const ModMapSpec& g, const Algebra& A)
{
    for (const auto& c : g.components) {
        auto ts = hom_lengths(g.source.at(c.src), g.target.at(c.tgt), A);
        if (std::find(ts.begin(), ts.end(), c.t) == ts.end()) throw InvalidInput("component is not a module map");
    }
    return cone<2>(g.source, g.target, assemble<2>(g), A);
}

namespace {

// Image lengths of radical stable maps c -> d.
std::vector<int> radical_lengths(const Ind& c, const Ind& d, const Algebra& A)
{
    auto ts = stable_hom_lengths(c, d, A);
    if (c == d) ts.erase(std::remove(ts.begin(), ts.end(), c.length), ts.end());
    return ts;
}

std::vector<Ind> clean_closure(const std::vector<Ind>& closure, const Algebra& A)
{
    std::set<Ind> s;
    for (const auto& c : closure) {
        validate(c, A);
        if (!c.is_projective(A)) s.insert(c);
    }
    return {s.begin(), s.end()};
}

}  // namespace

ModMapSpec min_left_approx(const Ind& Z, const std::vector<Ind>& closure, const Algebra& A)
{
    auto I = clean_closure(closure, A);
    ModMapSpec g;
    g.source = {Z};
    for (const auto& c : I) {
        auto target = stable_hom_lengths(Z, c, A);
        std::set<int> hit;
        for (const auto& mid : I)
            for (int t1 : stable_hom_lengths(Z, mid, A))
                for (int t2 : radical_lengths(mid, c, A)) {
                    int t = compose_lengths(t1, t2, mid.length);
                    if (t) hit.insert(t);
                }
        for (int t : target) {
            if (hit.count(t)) continue;
            g.components.push_back({0, g.target.size(), t, 1});
            g.target.push_back(c);
        }
    }
    return g;
}

ModMapSpec min_right_approx(const Ind& W, const std::vector<Ind>& closure, const Algebra& A)
{
    auto I = clean_closure(closure, A);
    ModMapSpec g;
    g.target = {W};
    for (const auto& c : I) {
        auto source = stable_hom_lengths(c, W, A);
        std::set<int> hit;
        for (const auto& mid : I)
            for (int t2 : stable_hom_lengths(mid, W, A))
                for (int t1 : radical_lengths(c, mid, A)) {
                    int t = compose_lengths(t1, t2, mid.length);
                    if (t) hit.insert(t);
                }
        for (int t : source) {
            if (hit.count(t)) continue;
            g.components.push_back({g.source.size(), 0, t, 1});
            g.source.push_back(c);
        }
    }
    return g;
}

std::vector<Ind> stable_extension_closure(const std::vector<Ind>& S, const Algebra& A, std::size_t max_objects)
{
    auto K = clean_closure(S, A);
    std::set<Ind> found(K.begin(), K.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Ind> I(found.begin(), found.end());
        for (const auto& s : K) {
            Ind target = omega_inv(s, A);
            // For an indecomposable middle term every copy of c in Y must carry a
            // nonzero and, across copies, distinct component of Y -> Omega^-1 s.
            std::vector<std::pair<Ind, std::vector<int>>> slots;
            for (const auto& c : I) {
                auto ts = stable_hom_lengths(c, target, A);
                if (!ts.empty()) slots.emplace_back(c, ts);
            }
            // choice[k] = bitmask subset of nonzero coefficient vectors for slot k
            std::vector<std::vector<unsigned>> options;
            for (auto& [c, ts] : slots) {
                std::vector<unsigned> masks;
                unsigned nvec = 1u << ts.size();
                // subsets of {1..nvec-1} of size <= ts.size()
                for (unsigned sub = 0; sub < (1u << (nvec - 1)); ++sub)
                    if (static_cast<std::size_t>(__builtin_popcount(sub)) <= ts.size()) masks.push_back(sub);
                options.push_back(std::move(masks));
            }
            std::vector<std::size_t> idx(slots.size(), 0);
            while (true) {
                ModMapSpec h;
                h.target = {target};
                for (std::size_t k = 0; k < slots.size(); ++k) {
                    unsigned sub = options[k][idx[k]];
                    for (unsigned v = 1; v < (1u << slots[k].second.size()); ++v) {
                        if (!(sub >> (v - 1) & 1u)) continue;
                        std::size_t src = h.source.size();
                        h.source.push_back(slots[k].first);
                        for (std::size_t b = 0; b < slots[k].second.size(); ++b)
                            if (v >> b & 1u) h.components.push_back({src, 0, slots[k].second[b], 1});
                    }
                }
                if (!h.source.empty()) {
                    for (const auto& x : omega(cone_of_stable_map(h, A), A))
                        if (found.insert(x).second) grew = true;
                    if (found.size() > max_objects) throw InternalError("extension closure exceeded its object bound");
                }
                std::size_t k = 0;
                while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
                if (k == idx.size()) break;
            }
        }
    }
    return {found.begin(), found.end()};
}

std::vector<ModSum> extension_middle_terms(const ModSum& B, const ModSum& C, const Algebra& A)
{
    for (const auto& M : B) validate(M, A);
    for (const auto& M : C) validate(M, A);
    ModSum proj_part, omega_c;
    for (const auto& M : C) {
        if (M.is_projective(A))
            proj_part.push_back(M);
        else
            omega_c.push_back(omega(M, A));
    }
    // Every extension is the pushout of 0 -> Omega C -> P(C) -> C -> 0 along some phi : Omega C -> B.
    std::vector<MapComponent> basis;
    for (std::size_t k = 0; k < omega_c.size(); ++k)
        for (std::size_t j = 0; j < B.size(); ++j)
            for (int t : hom_lengths(omega_c[k], B[j], A)) basis.push_back({k, j, t, 1});
    if (basis.size() > 20) throw InvalidInput("Hom space too large for exhaustive extension search");
    std::set<ModSum> out;
    for (unsigned long mask = 0; mask < (1ul << basis.size()); ++mask) {
        ModMapSpec phi{omega_c, B, {}};
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (mask >> b & 1ul) phi.components.push_back(basis[b]);
        auto E = decompose(pushout_along_envelope(omega_c, B, assemble<2>(phi), A), A);
        E.insert(E.end(), proj_part.begin(), proj_part.end());
        out.insert(normalized(E));
    }
    return {out.begin(), out.end()};
}

ExtensionClosure extension_closure(const std::vector<Ind>& S, const Algebra& A, int bound)
{
    auto total = [](const ModSum& s) {
        int t = 0;
        for (const auto& M : s) t += M.length;
        return t;
    };
    std::set<ModSum> objs{ModSum{}};
    for (const auto& s : S) {
        validate(s, A);
        if (s.length <= bound) objs.insert(ModSum{s});
    }
    std::set<std::pair<ModSum, ModSum>> done;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ModSum> cur(objs.begin(), objs.end());
        for (const auto& B : cur)
            for (const auto& C : cur) {
                if (B.empty() || C.empty() || total(B) + total(C) > bound) continue;
                if (!done.insert({B, C}).second) continue;
                for (auto& E : extension_middle_terms(B, C, A))
                    if (objs.insert(E).second) grew = true;
            }
    }
    ExtensionClosure res;
    res.objects.assign(objs.begin(), objs.end());
    for (const auto& o : res.objects)
        if (o.size() == 1) res.indecomposables.push_back(o[0]);
    return res;
}

}  // namespace nak
