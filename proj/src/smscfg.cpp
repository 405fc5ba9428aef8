#include "nak/smscfg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nak/errors.hpp"
#include "nak/parallel.hpp"

namespace nak {

namespace {

void check_points(const std::vector<Ind>& pts, const Algebra& A)
{
    for (const auto& p : pts) {
        validate(p, A);
        if (p.is_projective(A)) throw InvalidInput("configuration point " + p.to_string() + " has y = ell + 1");
    }
}

// Precomputed stable Hom support for the enumerator.
struct ConfigSearch {
    Algebra A;
    std::vector<Ind> verts;  // all vertices of the quotient quiver
    std::vector<std::size_t> cand;  // indices of bricks, ordered by (y, x)
    std::vector<std::vector<char>> hom;  // hom[a][b]: stable Hom(verts[a], verts[b]) != 0

    explicit ConfigSearch(const Algebra& a) : A(a)
    {
        for (int y = 1; y <= A.ell; ++y)
            for (int x = 1; x <= A.n; ++x) verts.push_back({x, y});
        hom.assign(verts.size(), std::vector<char>(verts.size(), 0));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < verts.size(); ++j) hom[i][j] = stable_hom_dim(verts[i], verts[j], A) != 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (stable_hom_dim(verts[i], verts[i], A) == 1) cand.push_back(i);
    }

    bool orth(std::size_t a, std::size_t b) const { return !hom[a][b] && !hom[b][a]; }

    bool fits(std::size_t c, const std::vector<std::size_t>& chosen) const
    {
        return std::all_of(chosen.begin(), chosen.end(), [&](auto q) { return orth(c, q); });
    }

    // Every vertex must stay coverable by a chosen point or a later compatible candidate.
    bool coverable(std::size_t k, const std::vector<std::size_t>& chosen) const
    {
        for (std::size_t v = 0; v < verts.size(); ++v) {
            bool ok = std::any_of(chosen.begin(), chosen.end(), [&](auto q) { return hom[v][q]; });
            for (std::size_t r = k; !ok && r < cand.size(); ++r)
                ok = hom[v][cand[r]] && fits(cand[r], chosen);
            if (!ok) return false;
        }
        return true;
    }

    void run(std::size_t k, std::vector<std::size_t>& chosen, std::vector<Configuration>& out) const
    {
        if (!coverable(k, chosen)) return;
        if (k == cand.size()) {
            std::vector<Ind> pts;
            for (auto q : chosen) pts.push_back(verts[q]);
            out.emplace_back(A, std::move(pts));
            return;
        }
        if (fits(cand[k], chosen)) {
            chosen.push_back(cand[k]);
            run(k + 1, chosen, out);
            chosen.pop_back();
        }
        run(k + 1, chosen, out);
    }

    void prefixes(std::size_t k, std::size_t depth, std::vector<std::size_t>& chosen,
                  std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& out) const
    {
        if (!coverable(k, chosen)) return;
        if (k == depth || k == cand.size()) {
            out.emplace_back(k, chosen);
            return;
        }
        if (fits(cand[k], chosen)) {
            chosen.push_back(cand[k]);
            prefixes(k + 1, depth, chosen, out);
            chosen.pop_back();
        }
        prefixes(k + 1, depth, chosen, out);
    }
};

int band(int x, int y, int e, int m)
{
    for (int lam = 0; lam <= m; ++lam)
        if (-lam * e <= x - y && x - y < (1 - lam) * e) return lam;
    throw InternalError("no band for point");
}

int multiplicity_of(const Algebra& A)
{
    if (A.ell % A.n != 0) throw InvalidInput("expected ell to be a multiple of n");
    return A.ell / A.n;
}

}  // namespace

Configuration::Configuration(Algebra a, std::vector<Ind> p) : A(a), points(std::move(p))
{
    check_points(points, A);
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) throw InvalidInput("duplicate configuration point");
}

bool Configuration::contains(const Ind& p) const { return std::binary_search(points.begin(), points.end(), p); }

bool is_configuration(const std::vector<Ind>& points, const Algebra& A)
{
    check_points(points, A);
    for (const auto& p : points)
        for (const auto& q : points)
            if (stable_hom_dim(p, q, A) != (p == q ? 1 : 0)) return false;
    for (const auto& v : nonprojective_inds(A))
        if (std::none_of(points.begin(), points.end(), [&](const Ind& q) { return stable_hom_dim(v, q, A) != 0; }))
            return false;
    return true;
}

std::vector<Configuration> enumerate_configurations_serial(const Algebra& A)
{
    ConfigSearch s(A);
    std::vector<Configuration> out;
    std::vector<std::size_t> chosen;
    s.run(0, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Configuration> enumerate_configurations(const Algebra& A)
{
    ConfigSearch s(A);
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> roots;
    std::vector<std::size_t> start;
    s.prefixes(0, std::min<std::size_t>(s.cand.size(), 10), start, roots);
    std::vector<std::vector<Configuration>> parts(roots.size());
    parallel_for(roots.size(), [&](std::size_t r) {
        auto chosen = roots[r].second;
        s.run(roots[r].first, chosen, parts[r]);
    });
    std::vector<Configuration> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ind> nu_points(const std::vector<Ind>& pts, const Algebra& A)
{
    std::vector<Ind> out;
    for (const auto& p : pts) out.push_back(nu(p, A));
    return out;
}

bool is_nakayama_stable(const std::vector<Ind>& pts, const Algebra& A)
{
    std::set<Ind> a(pts.begin(), pts.end());
    auto moved = nu_points(pts, A);
    return a == std::set<Ind>(moved.begin(), moved.end());
}

std::vector<Ind> sms_mutate_positional(const std::vector<Ind>& S, const std::vector<std::size_t>& K, Sign sign,
                                       const Algebra& A)
{
    check_points(S, A);
    std::vector<Ind> members;
    std::vector<bool> in_k(S.size(), false);
    for (auto k : K) {
        if (k >= S.size()) throw InvalidInput("mutation position out of range");
        in_k[k] = true;
        members.push_back(S[k]);
    }
    if (!is_nakayama_stable(members, A)) throw InvalidInput("mutated subset is not Nakayama-stable");
    auto closure = stable_extension_closure(members, A);
    std::vector<Ind> out(S.size());
    for (std::size_t j = 0; j < S.size(); ++j) {
        if (in_k[j]) {
            out[j] = sign == Sign::Minus ? omega_inv(S[j], A) : omega(S[j], A);
            continue;
        }
        ModSum Y;
        if (sign == Sign::Minus) {
            Y = cone_of_stable_map(min_left_approx(omega(S[j], A), closure, A), A);
        } else {
            Y = omega(cone_of_stable_map(min_right_approx(omega_inv(S[j], A), closure, A), A), A);
        }
        if (Y.size() != 1) throw InternalError("mutation of " + S[j].to_string() + " is not indecomposable");
        out[j] = Y[0];
    }
    if (!is_configuration(out, A)) throw InternalError("sms mutation did not produce a configuration");
    return out;
}

Configuration sms_mutate(const Configuration& C, const std::vector<Ind>& K, Sign sign)
{
    std::vector<std::size_t> pos;
    for (const auto& k : K) {
        auto it = std::lower_bound(C.points.begin(), C.points.end(), k);
        if (it == C.points.end() || *it != k) throw InvalidInput("point " + k.to_string() + " is not in the configuration");
        pos.push_back(static_cast<std::size_t>(it - C.points.begin()));
    }
    return Configuration(C.A, sms_mutate_positional(C.points, pos, sign, C.A));
}

std::vector<std::vector<Ind>> nakayama_orbits(const Configuration& C)
{
    std::set<Ind> seen;
    std::vector<std::vector<Ind>> out;
    for (const auto& p : C.points) {
        if (seen.count(p)) continue;
        std::vector<Ind> orbit;
        for (Ind q = p; !seen.count(q); q = nu(q, C.A)) {
            seen.insert(q);
            orbit.push_back(q);
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(orbit);
    }
    return out;
}

Configuration omega_insert(const Configuration& C, int m)
{
    const int e = C.A.n;
    if (C.A.ell != e * m) throw InvalidInput("configuration is not over A_e^{em}");
    if (!is_configuration(C)) throw InvalidInput("input is not a configuration");
    Algebra B(e + 1, (e + 1) * m);
    std::vector<Ind> pts;
    for (const auto& p : C.points) pts.push_back({p.socle, p.length + band(p.socle, p.length, e, m)});
    pts.push_back({e + 1, 1});
    return Configuration(B, pts);
}

Configuration omega_uninsert(const Configuration& C, int m)
{
    const int e = C.A.n - 1;
    if (e < 1 || C.A.ell != (e + 1) * m) throw InvalidInput("configuration is not over A_{e+1}^{(e+1)m}");
    if (!C.contains({e + 1, 1})) throw InvalidInput("configuration does not contain (e+1, 1)");
    Algebra B(e, e * m);
    std::vector<Ind> pts;
    for (const auto& p : C.points) {
        if (p == Ind{e + 1, 1}) continue;
        std::vector<int> ys;
        for (int lam = 0; lam <= m; ++lam) {
            int y = p.length - lam;
            if (y >= 1 && y <= e * m && p.socle <= e && band(p.socle, y, e, m) == lam) ys.push_back(y);
        }
        if (ys.size() != 1) throw InvalidInput("point " + p.to_string() + " has no unique preimage");
        pts.push_back({p.socle, ys[0]});
    }
    return Configuration(B, pts);
}

PruneType prune_type(const Configuration& C, int m, std::mt19937_64* rng)
{
    if (m <= 1) throw InvalidInput("pruning needs multiplicity m > 1");
    if (C.A.ell != C.A.n * m) throw InvalidInput("configuration is not over A_e^{em}");
    std::vector<Ind> pts = C.points;
    int e = C.A.n;
    while (true) {
        Algebra A(e, e * m);
        const int top = e * m;
        if (std::all_of(pts.begin(), pts.end(), [](const Ind& p) { return p.length == 1; })) return PruneType::Bottom;
        if (std::all_of(pts.begin(), pts.end(), [&](const Ind& p) { return p.length == top; })) return PruneType::Top;
        if (e == 1) throw InternalError("pruning reached rank 1 without a star");
        std::vector<Ind> rims;
        for (const auto& p : pts)
            if (p.length == 1 || p.length == top) rims.push_back(p);
        if (rims.empty()) throw InternalError("no rim point to prune");
        std::sort(rims.begin(), rims.end(), [&](const Ind& a, const Ind& b) {
            return std::pair(a.length != 1, a.socle) < std::pair(b.length != 1, b.socle);
        });
        Ind r = rims.front();
        if (rng) r = rims[std::uniform_int_distribution<std::size_t>(0, rims.size() - 1)(*rng)];
        const bool at_top = r.length == top;
        if (at_top)
            for (auto& p : pts) p = omega_inv(p, A);
        // move the rim point to (e, 1), the slot omega_insert fills
        const int k = e - r.socle;
        for (auto& p : pts) p = tau(p, A, k);
        auto smaller = omega_uninsert(Configuration(A, pts), m);
        --e;
        Algebra B(e, e * m);
        pts = smaller.points;
        for (auto& p : pts) p = tau(p, B, -k);
        if (at_top)
            for (auto& p : pts) p = omega(p, B);
    }
}

Ind tilde_point(const Ind& p, const Algebra& A)
{
    const int e = A.n;
    const int m = multiplicity_of(A);
    if (p.length <= e) return p;
    if (p.length >= e * (m - 1) + 1) return {p.socle, p.length - e * (m - 1)};
    throw InvalidInput("point " + p.to_string() + " lies outside both bands");
}

Configuration tilde(const Configuration& C)
{
    std::vector<Ind> pts;
    for (const auto& p : C.points) pts.push_back(tilde_point(p, C.A));
    return Configuration(Algebra(C.A.n, C.A.n), pts);
}

Configuration config_shift(const Configuration& C, Shift op, int k)
{
    std::vector<Ind> pts;
    for (const auto& p : C.points) {
        switch (op) {
        case Shift::Tau: pts.push_back(tau(p, C.A, k)); break;
        case Shift::Omega: pts.push_back(omega(p, C.A)); break;
        case Shift::OmegaInv: pts.push_back(omega_inv(p, C.A)); break;
        }
    }
    return Configuration(C.A, pts);
}

Configuration simples(const Algebra& A)
{
    std::vector<Ind> pts;
    for (int i = 1; i <= A.n; ++i) pts.push_back({i, 1});
    return Configuration(A, pts);
}

std::string to_dot(const Configuration& C)
{
    const Algebra& A = C.A;
    std::ostringstream os;
    os << "digraph ar {\n  rankdir=BT;\n  node [shape=circle, fontsize=9];\n";
    for (int y = 1; y <= A.ell; ++y)
        for (int x = 1; x <= A.n; ++x) {
            os << "  m" << x << "_" << y << " [label=\"" << x << "," << y << "\"";
            if (C.contains({x, y})) os << ", style=filled, fillcolor=black, fontcolor=white";
            os << "];\n";
        }
    // irreducible maps: socle-preserving inclusions and top-preserving quotients
    for (int y = 1; y <= A.ell; ++y)
        for (int x = 1; x <= A.n; ++x) {
            if (y < A.ell) os << "  m" << x << "_" << y << " -> m" << x << "_" << y + 1 << ";\n";
            if (y > 1) os << "  m" << x << "_" << y << " -> m" << A.wrap(x - 1) << "_" << y - 1 << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace nak
