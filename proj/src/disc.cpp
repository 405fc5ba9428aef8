#include "nak/disc.hpp"

#include <algorithm>
#include <sstream>

#include "nak/errors.hpp"
#include "nak/parallel.hpp"

namespace nak {

namespace {

int wrap(int v, int e) { return ((v - 1) % e + e) % e + 1; }

bool vertex_in_interior(int v, const Arc& inner, int e)
{
    for (int t = 1; t < inner.length; ++t)
        if (wrap(inner.initial() + t, e) == v) return true;
    return false;
}

bool strictly_interleave(int p, int q, int p2, int q2)
{
    return (p < p2 && p2 < q && q < q2) || (p2 < p && p < q2 && q2 < q);
}

struct CompatTable {
    std::vector<Arc> arcs;
    std::vector<char> ok;
    std::size_t n = 0;

    explicit CompatTable(int e) : arcs(all_arcs(e)), n(arcs.size())
    {
        ok.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ok[i * n + j] = compatible(arcs[i], arcs[j], e);
    }
    bool operator()(std::size_t i, std::size_t j) const { return ok[i * n + j]; }
};

// Include/exclude search in canonical arc order. An excluded arc must end up
// incompatible with something chosen, which prunes most exclude branches early.
class TriangulationSearch {
public:
    TriangulationSearch(const CompatTable& t, int e) : t_(t), e_(e) {}

    void run(std::size_t k, std::vector<std::size_t>& chosen, std::vector<std::size_t>& excluded,
             std::vector<Triangulation>& out) const
    {
        for (auto x : excluded)
            if (!killable(x, k, chosen)) return;
        if (k == t_.n) {
            std::vector<Arc> arcs;
            for (auto i : chosen) arcs.push_back(t_.arcs[i]);
            out.emplace_back(e_, std::move(arcs));
            return;
        }
        bool fits = std::all_of(chosen.begin(), chosen.end(), [&](auto c) { return t_(k, c); });
        if (fits) {
            chosen.push_back(k);
            run(k + 1, chosen, excluded, out);
            chosen.pop_back();
        }
        excluded.push_back(k);
        run(k + 1, chosen, excluded, out);
        excluded.pop_back();
    }

    // Walk the first `depth` decisions and collect the live prefixes.
    struct Prefix {
        std::vector<std::size_t> chosen, excluded;
    };
    void prefixes(std::size_t k, std::size_t depth, Prefix& cur, std::vector<Prefix>& out) const
    {
        for (auto x : cur.excluded)
            if (!killable(x, k, cur.chosen)) return;
        if (k == depth || k == t_.n) {
            out.push_back(cur);
            return;
        }
        bool fits = std::all_of(cur.chosen.begin(), cur.chosen.end(), [&](auto c) { return t_(k, c); });
        if (fits) {
            cur.chosen.push_back(k);
            prefixes(k + 1, depth, cur, out);
            cur.chosen.pop_back();
        }
        cur.excluded.push_back(k);
        prefixes(k + 1, depth, cur, out);
        cur.excluded.pop_back();
    }

private:
    bool killable(std::size_t x, std::size_t k, const std::vector<std::size_t>& chosen) const
    {
        for (auto c : chosen)
            if (!t_(x, c)) return true;
        for (std::size_t r = k; r < t_.n; ++r) {
            if (t_(x, r)) continue;
            if (std::all_of(chosen.begin(), chosen.end(), [&](auto c) { return t_(r, c); })) return true;
        }
        return false;
    }

    const CompatTable& t_;
    int e_;
};

void sort_canonical(std::vector<Triangulation>& v) { std::sort(v.begin(), v.end()); }

}  // namespace

int Arc::terminal(int e) const
{
    if (is_projective()) return terminal_or_initial;
    return wrap(terminal_or_initial + length, e);
}

std::string Arc::to_string(int e) const
{
    std::ostringstream os;
    if (is_projective())
        os << "<*," << terminal_or_initial << ">";
    else
        os << "<" << terminal(e) << "," << initial() << ">";
    return os.str();
}

void validate_arc(const Arc& a, int e)
{
    if (e < 1) throw InvalidInput("rank must be positive");
    if (a.terminal_or_initial < 1 || a.terminal_or_initial > e)
        throw InvalidInput("arc vertex out of range 1.." + std::to_string(e));
    if (a.is_projective()) {
        if (a.length != 0) throw InvalidInput("projective arc carries no length");
    } else if (a.length < 2 || a.length > e) {
        throw InvalidInput("inner arc length must lie in 2.." + std::to_string(e));
    }
}

Triangulation::Triangulation(int rank, std::vector<Arc> a) : e(rank), arcs(std::move(a))
{
    std::sort(arcs.begin(), arcs.end());
}

bool Triangulation::contains(const Arc& a) const { return std::binary_search(arcs.begin(), arcs.end(), a); }

int Triangulation::projective_count() const
{
    return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](const Arc& a) { return a.is_projective(); }));
}

std::vector<Arc> all_arcs(int e)
{
    if (e < 1) throw InvalidInput("rank must be positive");
    std::vector<Arc> out;
    for (int j = 1; j <= e; ++j) out.push_back(Arc::projective(j));
    for (int i = 1; i <= e; ++i)
        for (int l = 2; l <= e; ++l) out.push_back(Arc::inner(i, l));
    std::sort(out.begin(), out.end());
    return out;
}

bool compatible(const Arc& a, const Arc& b, int e)
{
    validate_arc(a, e);
    validate_arc(b, e);
    if (a == b) return true;
    if (a.is_projective() && b.is_projective()) return true;
    if (a.is_projective()) return !vertex_in_interior(a.terminal_or_initial, b, e);
    if (b.is_projective()) return !vertex_in_interior(b.terminal_or_initial, a, e);
    // Lengths are at most e, so only neighbouring lifts can interleave.
    for (int k = -1; k <= 1; ++k) {
        int p = a.initial(), q = a.initial() + a.length;
        int p2 = b.initial() + k * e, q2 = b.initial() + b.length + k * e;
        if (strictly_interleave(p, q, p2, q2)) return false;
    }
    return true;
}

bool is_triangulation(const std::vector<Arc>& arcs, int e)
{
    for (const auto& a : arcs) validate_arc(a, e);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            if (arcs[i] == arcs[j]) return false;
            if (!compatible(arcs[i], arcs[j], e)) return false;
        }
    for (const auto& c : all_arcs(e)) {
        if (std::find(arcs.begin(), arcs.end(), c) != arcs.end()) continue;
        if (std::all_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return compatible(a, c, e); })) return false;
    }
    return true;
}

std::vector<Triangulation> enumerate_triangulations_serial(int e)
{
    CompatTable table(e);
    TriangulationSearch search(table, e);
    std::vector<Triangulation> out;
    std::vector<std::size_t> chosen, excluded;
    search.run(0, chosen, excluded, out);
    sort_canonical(out);
    return out;
}

std::vector<Triangulation> enumerate_triangulations(int e)
{
    CompatTable table(e);
    TriangulationSearch search(table, e);
    std::vector<TriangulationSearch::Prefix> roots;
    TriangulationSearch::Prefix start;
    search.prefixes(0, std::min<std::size_t>(table.n, 8), start, roots);

    std::vector<std::vector<Triangulation>> parts(roots.size());
    parallel_for(roots.size(), [&](std::size_t r) {
        auto chosen = roots[r].chosen;
        auto excluded = roots[r].excluded;
        search.run(chosen.size() + excluded.size(), chosen, excluded, parts[r]);
    });
    std::vector<Triangulation> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    sort_canonical(out);
    return out;
}

Triangulation projective_triangulation(int e)
{
    std::vector<Arc> arcs;
    for (int j = 1; j <= e; ++j) arcs.push_back(Arc::projective(j));
    return Triangulation(e, std::move(arcs));
}

std::optional<Arc> exchange_partner(const Triangulation& X, const Arc& a)
{
    if (!X.contains(a)) throw InvalidInput("arc " + a.to_string(X.e) + " is not in the triangulation");
    std::optional<Arc> found;
    for (const auto& c : all_arcs(X.e)) {
        if (c == a || X.contains(c)) continue;
        bool ok = std::all_of(X.arcs.begin(), X.arcs.end(),
                              [&](const Arc& b) { return b == a || compatible(b, c, X.e); });
        if (!ok) continue;
        if (found) throw InternalError("exchange partner is not unique");
        found = c;
    }
    return found;
}

std::pair<Triangulation, Arc> flip(const Triangulation& X, const Arc& a)
{
    auto partner = exchange_partner(X, a);
    if (!partner) throw InvalidInput("arc " + a.to_string(X.e) + " has no exchange partner (self-folded)");
    std::vector<Arc> arcs;
    for (const auto& b : X.arcs)
        if (b != a) arcs.push_back(b);
    arcs.push_back(*partner);
    return {Triangulation(X.e, std::move(arcs)), *partner};
}

Arc rotate(const Arc& a, int k, int e)
{
    Arc r = a;
    r.terminal_or_initial = wrap(a.terminal_or_initial + k, e);
    return r;
}

Triangulation rotate(const Triangulation& X, int k)
{
    std::vector<Arc> arcs;
    for (const auto& a : X.arcs) arcs.push_back(rotate(a, k, X.e));
    return Triangulation(X.e, std::move(arcs));
}

std::vector<Arc> unfold_arc(const Arc& a, int e, int n)
{
    validate_arc(a, e);
    if (n < e || n % e != 0) throw InvalidInput("unfold target rank must be a multiple of " + std::to_string(e));
    std::vector<Arc> out;
    for (int k = 0; k < n / e; ++k) {
        Arc c = a;
        c.terminal_or_initial = a.terminal_or_initial + k * e;
        out.push_back(c);
    }
    return out;
}

Triangulation unfold(const Triangulation& X, int n)
{
    std::vector<Arc> arcs;
    for (const auto& a : X.arcs) {
        auto lifted = unfold_arc(a, X.e, n);
        arcs.insert(arcs.end(), lifted.begin(), lifted.end());
    }
    return Triangulation(n, std::move(arcs));
}

Arc fold_arc(const Arc& a, int e, int n)
{
    validate_arc(a, n);
    if (!a.is_projective() && a.length > e) throw SymmetryFailure("arc longer than the folding rank");
    Arc r = a;
    r.terminal_or_initial = wrap(a.terminal_or_initial, e);
    return r;
}

Triangulation fold(const Triangulation& Y, int e)
{
    if (e < 1 || Y.e % e != 0) throw InvalidInput("fold rank must divide " + std::to_string(Y.e));
    for (const auto& a : Y.arcs) validate_arc(a, Y.e);
    if (rotate(Y, e) != Y) throw SymmetryFailure("triangulation is not invariant under rotation by " + std::to_string(e));
    std::vector<Arc> arcs;
    for (const auto& a : Y.arcs) {
        Arc f = fold_arc(a, e, Y.e);
        if (std::find(arcs.begin(), arcs.end(), f) == arcs.end()) arcs.push_back(f);
    }
    return Triangulation(e, std::move(arcs));
}

}  // namespace nak
