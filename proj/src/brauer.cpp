#include "nak/brauer.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "nak/errors.hpp"

namespace nak {

namespace {

int wrap(int v, int e) { return ((v - 1) % e + e) % e + 1; }

Sign opposite(Sign s) { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }

}  // namespace

const BrauerEdge& BrauerTree::edge(int label) const
{
    for (const auto& x : edges)
        if (x.label == label) return x;
    throw InvalidInput("no edge labelled " + std::to_string(label));
}

BrauerEdge& BrauerTree::edge(int label)
{
    for (auto& x : edges)
        if (x.label == label) return x;
    throw InvalidInput("no edge labelled " + std::to_string(label));
}

bool BrauerTree::has_edge(int label) const
{
    return std::any_of(edges.begin(), edges.end(), [&](const BrauerEdge& x) { return x.label == label; });
}

int BrauerTree::valency(int v) const
{
    auto it = cyclic.find(v);
    return it == cyclic.end() ? 0 : static_cast<int>(it->second.size());
}

void BrauerTree::validate() const
{
    if (m < 1) throw InvalidInput("multiplicity must be at least 1");
    std::set<int> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw InvalidInput("duplicate vertex");
    if (!vs.count(exceptional)) throw InvalidInput("exceptional vertex not in tree");
    if (edges.size() + 1 != vertices.size()) throw InvalidInput("a tree needs |E| = |V| - 1");
    std::set<int> labels;
    std::map<int, std::multiset<int>> incident;
    for (const auto& x : edges) {
        if (!labels.insert(x.label).second) throw InvalidInput("duplicate edge label");
        if (!vs.count(x.u) || !vs.count(x.v)) throw InvalidInput("edge endpoint not a vertex");
        if (x.u == x.v) throw InvalidInput("loops are not allowed");
        incident[x.u].insert(x.label);
        incident[x.v].insert(x.label);
    }
    for (int v : vertices) {
        auto it = cyclic.find(v);
        std::multiset<int> got;
        if (it != cyclic.end()) got.insert(it->second.begin(), it->second.end());
        if (got != incident[v]) throw InvalidInput("cyclic order at vertex " + std::to_string(v) + " is not a permutation of its edges");
    }
    for (const auto& [v, _] : cyclic)
        if (!vs.count(v)) throw InvalidInput("cyclic order for unknown vertex");
    // connectivity
    std::set<int> seen{exceptional};
    std::vector<int> todo{exceptional};
    while (!todo.empty()) {
        int w = todo.back();
        todo.pop_back();
        for (int l : cyclic.count(w) ? cyclic.at(w) : std::vector<int>{}) {
            int o = edge(l).other(w);
            if (seen.insert(o).second) todo.push_back(o);
        }
    }
    if (seen.size() != vs.size()) throw InvalidInput("graph is not connected");
}

void BrauerTree::normalize()
{
    for (auto& x : edges)
        if (x.u > x.v) std::swap(x.u, x.v);
    std::sort(edges.begin(), edges.end(), [](const BrauerEdge& a, const BrauerEdge& b) { return a.label < b.label; });
    std::sort(vertices.begin(), vertices.end());
    for (auto& [_, c] : cyclic)
        if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
}

int psi_label(const Triangulation& X, const Arc& a)
{
    auto it = std::lower_bound(X.arcs.begin(), X.arcs.end(), a);
    if (it == X.arcs.end() || *it != a) throw InvalidInput("arc not in triangulation");
    return static_cast<int>(it - X.arcs.begin()) + 1;
}

BrauerTree psi(const Triangulation& X, Sign sign, int m)
{
    const int e = X.e;
    if (m < 1) throw InvalidInput("multiplicity must be at least 1");
    BrauerTree G;
    G.m = m;
    G.exceptional = 0;
    for (int v = 0; v <= e; ++v) G.vertices.push_back(v);
    for (std::size_t k = 0; k < X.arcs.size(); ++k) {
        const Arc& a = X.arcs[k];
        BrauerEdge x;
        x.label = static_cast<int>(k) + 1;
        if (a.is_projective()) {
            x.u = 0;
            x.v = a.terminal_or_initial;
        } else if (sign == Sign::Minus) {
            x.u = a.initial();
            x.v = wrap(a.terminal(e) - 1, e);
        } else {
            x.u = a.terminal(e);
            x.v = wrap(a.initial() + 1, e);
        }
        G.edges.push_back(x);
    }
    for (int v = 0; v <= e; ++v) {
        std::vector<std::pair<int, int>> keyed;
        for (const auto& x : G.edges) {
            if (x.u != v && x.v != v) continue;
            int o = x.other(v);
            int key = (v != 0 && o == 0) ? v : o;
            keyed.emplace_back(key, x.label);
        }
        std::sort(keyed.begin(), keyed.end());
        if (keyed.empty()) continue;
        auto& c = G.cyclic[v];
        for (auto& [_, l] : keyed) c.push_back(l);
    }
    try {
        G.validate();
    } catch (const InvalidInput& err) {
        throw InternalError(std::string("psi produced an invalid tree: ") + err.what());
    }
    G.normalize();
    return G;
}

BrauerTree kauer_mutate(const BrauerTree& G, int label, Sign sign)
{
    BrauerTree H = G;
    const BrauerEdge old = G.edge(label);

    auto neighbour = [&](int w) -> std::optional<int> {
        const auto& c = G.cyclic.at(w);
        if (c.size() == 1) return std::nullopt;
        auto k = static_cast<std::size_t>(std::find(c.begin(), c.end(), label) - c.begin());
        std::size_t n = c.size();
        return sign == Sign::Minus ? c[(k + n - 1) % n] : c[(k + 1) % n];
    };
    auto j = neighbour(old.u), k = neighbour(old.v);
    int nu = j ? G.edge(*j).other(old.u) : old.u;
    int nv = k ? G.edge(*k).other(old.v) : old.v;

    auto erase = [&](int w) {
        auto& c = H.cyclic[w];
        c.erase(std::find(c.begin(), c.end(), label));
        if (c.empty()) H.cyclic.erase(w);
    };
    erase(old.u);
    erase(old.v);
    H.edge(label).u = nu;
    H.edge(label).v = nv;

    // Left moves go in front of the anchor edge, right moves behind it.
    auto insert = [&](int w, std::optional<int> anchor) {
        auto& c = H.cyclic[w];
        if (!anchor) {
            c.push_back(label);
            return;
        }
        auto pos = std::find(c.begin(), c.end(), *anchor);
        if (sign == Sign::Plus) ++pos;
        c.insert(pos, label);
    };
    insert(nu, j);
    insert(nv, k);
    try {
        H.validate();
    } catch (const InvalidInput& err) {
        throw InternalError(std::string("Kauer move produced an invalid tree: ") + err.what());
    }
    H.normalize();
    return H;
}

std::string brauer_code(const BrauerTree& G)
{
    std::function<std::string(int, std::optional<int>)> enc = [&](int w, std::optional<int> parent) -> std::string {
        auto it = G.cyclic.find(w);
        std::vector<int> c = it == G.cyclic.end() ? std::vector<int>{} : it->second;
        if (!parent) {
            std::vector<std::string> subs;
            for (int l : c) subs.push_back(enc(G.edge(l).other(w), l));
            std::string best;
            for (std::size_t r = 0; r < std::max<std::size_t>(subs.size(), 1); ++r) {
                std::string s;
                for (std::size_t t = 0; t < subs.size(); ++t) s += subs[(r + t) % subs.size()];
                if (r == 0 || s < best) best = s;
            }
            return "(" + best + ")";
        }
        auto k = static_cast<std::size_t>(std::find(c.begin(), c.end(), *parent) - c.begin());
        std::string s = "(";
        for (std::size_t t = 1; t < c.size(); ++t) {
            int l = c[(k + t) % c.size()];
            s += enc(G.edge(l).other(w), l);
        }
        return s + ")";
    };
    return "m" + std::to_string(G.m) + enc(G.exceptional, std::nullopt);
}

bool brauer_iso(const BrauerTree& G, const BrauerTree& H)
{
    if (G.edges.size() != H.edges.size()) return false;
    return brauer_code(G) == brauer_code(H);
}

std::vector<int> star_mutation_sequence(const BrauerTree& G, Sign sign)
{
    G.validate();
    std::vector<int> walk;
    BrauerTree cur = G;
    const int target = static_cast<int>(G.edges.size());
    while (cur.valency(cur.exceptional) < target) {
        std::vector<int> labels;
        for (const auto& x : cur.edges) labels.push_back(x.label);
        std::sort(labels.begin(), labels.end());
        bool moved = false;
        for (int l : labels) {
            const auto& x = cur.edge(l);
            if (x.u == cur.exceptional || x.v == cur.exceptional) continue;
            auto next = kauer_mutate(cur, l, opposite(sign));
            if (next.valency(next.exceptional) == cur.valency(cur.exceptional) + 1) {
                cur = std::move(next);
                walk.push_back(l);
                moved = true;
                break;
            }
        }
        if (!moved) throw InternalError("no move towards the Brauer star");
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

BrauerTree prune_leaf(const BrauerTree& G, int label)
{
    const auto& x = G.edge(label);
    int leaf = -1;
    for (int w : {x.u, x.v})
        if (G.valency(w) == 1 && w != G.exceptional) leaf = w;
    if (leaf < 0) throw InvalidInput("edge " + std::to_string(label) + " is not a leaf at a non-exceptional vertex");
    int keep = x.other(leaf);
    BrauerTree H = G;
    H.edges.erase(std::find(H.edges.begin(), H.edges.end(), x));
    H.vertices.erase(std::find(H.vertices.begin(), H.vertices.end(), leaf));
    H.cyclic.erase(leaf);
    auto& c = H.cyclic[keep];
    c.erase(std::find(c.begin(), c.end(), label));
    if (c.empty()) H.cyclic.erase(keep);
    H.validate();
    H.normalize();
    return H;
}

std::string to_dot(const BrauerTree& G)
{
    std::ostringstream os;
    os << "graph brauer {\n";
    for (int v : G.vertices) {
        os << "  v" << v << " [label=\"" << v;
        if (v == G.exceptional && G.m > 1) os << " (m=" << G.m << ")";
        os << "\"";
        if (v == G.exceptional) os << ", shape=doublecircle";
        auto it = G.cyclic.find(v);
        if (it != G.cyclic.end()) {
            os << ", xlabel=\"";
            for (std::size_t k = 0; k < it->second.size(); ++k) os << (k ? " " : "") << it->second[k];
            os << "\"";
        }
        os << "];\n";
    }
    for (const auto& x : G.edges) os << "  v" << x.u << " -- v" << x.v << " [label=\"" << x.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace nak
