#pragma once

// Explicit representations over GF(P): modules as graded vector spaces with a
// nilpotent arrow operator X, maps as matrices.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "nak/errors.hpp"
#include "nak/gf.hpp"
#include "nak/modcat.hpp"

namespace nak {

template <unsigned P>
struct Module {
    std::vector<int> vertex;  // vertex of each basis vector
    Matrix<P> X;              // column c holds X applied to basis vector c

    std::size_t dim() const { return vertex.size(); }
};

/// Direct sum of uniserials; summand k occupies a block starting at offsets(s)[k],
/// listing m_0 (top) ... m_{l-1} (socle).
inline std::vector<std::size_t> block_offsets(const ModSum& s)
{
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (const auto& M : s) {
        off.push_back(acc);
        acc += static_cast<std::size_t>(M.length);
    }
    off.push_back(acc);
    return off;
}

template <unsigned P>
Module<P> make_module(const ModSum& s, const Algebra& A)
{
    auto off = block_offsets(s);
    Module<P> V;
    V.X = Matrix<P>(off.back(), off.back());
    for (std::size_t k = 0; k < s.size(); ++k) {
        validate(s[k], A);
        int top = s[k].top(A);
        for (int p = 0; p < s[k].length; ++p) {
            V.vertex.push_back(A.wrap(top + p));
            if (p + 1 < s[k].length) V.X(off[k] + p + 1, off[k] + p) = 1;
        }
    }
    return V;
}

/// Matrix (len N x len M) of the basis map of image length t.
template <unsigned P>
Matrix<P> basis_map(const Ind& M, const Ind& N, int t)
{
    Matrix<P> f(N.length, M.length);
    for (int p = 0; p < t; ++p) f(N.length - t + p, p) = 1;
    return f;
}

/// Block matrix of a componentwise map.
template <unsigned P>
Matrix<P> assemble(const ModMapSpec& g)
{
    auto so = block_offsets(g.source), to = block_offsets(g.target);
    Matrix<P> f(to.back(), so.back());
    for (const auto& c : g.components) {
        const Ind& M = g.source.at(c.src);
        const Ind& N = g.target.at(c.tgt);
        auto b = basis_map<P>(M, N, c.t);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t q = 0; q < b.cols(); ++q)
                if (b(r, q))
                    f(to[c.tgt] + r, so[c.src] + q) =
                        Gf<P>::add(f(to[c.tgt] + r, so[c.src] + q), static_cast<std::uint8_t>(c.coeff % P));
    }
    return f;
}

template <unsigned P>
bool is_module(const Module<P>& V, const Algebra& A)
{
    for (std::size_t c = 0; c < V.dim(); ++c)
        for (std::size_t r = 0; r < V.dim(); ++r)
            if (V.X(r, c) && V.vertex[r] != A.wrap(V.vertex[c] + 1)) return false;
    Matrix<P> pw = Matrix<P>::identity(V.dim());
    for (int k = 0; k <= A.ell; ++k) pw = V.X * pw;
    return pw.is_zero();
}

template <unsigned P>
bool is_intertwiner(const Matrix<P>& f, const Module<P>& V, const Module<P>& W)
{
    if (f.rows() != W.dim() || f.cols() != V.dim()) return false;
    for (std::size_t r = 0; r < W.dim(); ++r)
        for (std::size_t c = 0; c < V.dim(); ++c)
            if (f(r, c) && W.vertex[r] != V.vertex[c]) return false;
    return f * V.X == W.X * f;
}

/// Basis of Hom(V, W) by solving f X_V = X_W f on vertex-preserving entries.
template <unsigned P>
std::vector<Matrix<P>> intertwiners(const Module<P>& V, const Module<P>& W)
{
    using F = Gf<P>;
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t r = 0; r < W.dim(); ++r)
        for (std::size_t c = 0; c < V.dim(); ++c)
            if (W.vertex[r] == V.vertex[c]) vars.emplace_back(r, c);
    // One equation per entry (r, c) of f X_V - X_W f.
    Matrix<P> sys(W.dim() * V.dim(), vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) {
        auto [a, b] = vars[k];
        // f X_V: entry (a, c) gets f(a,b) X_V(b,c)
        for (std::size_t c = 0; c < V.dim(); ++c)
            if (V.X(b, c)) sys(a * V.dim() + c, k) = F::add(sys(a * V.dim() + c, k), V.X(b, c));
        // - X_W f: entry (r, b) gets X_W(r,a) f(a,b)
        for (std::size_t r = 0; r < W.dim(); ++r)
            if (W.X(r, a)) sys(r * V.dim() + b, k) = F::sub(sys(r * V.dim() + b, k), W.X(r, a));
    }
    std::vector<Matrix<P>> out;
    for (const auto& v : sys.nullspace()) {
        Matrix<P> f(W.dim(), V.dim());
        for (std::size_t k = 0; k < vars.size(); ++k) f(vars[k].first, vars[k].second) = v[k];
        out.push_back(std::move(f));
    }
    return out;
}

/// Krull-Schmidt decomposition read off from ranks of powers of X between
/// vertex spaces.
template <unsigned P>
ModSum decompose(const Module<P>& V, const Algebra& A)
{
    const int n = A.n, top_len = A.ell + 1;
    std::vector<Matrix<P>> pw{Matrix<P>::identity(V.dim())};
    for (int k = 1; k <= top_len; ++k) pw.push_back(V.X * pw.back());
    auto at = [&](int v) {
        std::vector<std::size_t> idx;
        for (std::size_t b = 0; b < V.dim(); ++b)
            if (V.vertex[b] == A.wrap(v)) idx.push_back(b);
        return idx;
    };
    auto rank_between = [&](int power, int from, int to) -> long {
        if (power > top_len) return 0;
        auto cols = at(from), rows = at(to);
        if (cols.empty() || rows.empty()) return 0;
        return static_cast<long>(pw[power].submatrix(rows, cols).rank());
    };
    // g(t, L): summands with top t and length >= L
    auto g = [&](int t, int L) -> long {
        if (L > top_len) return 0;
        return rank_between(L - 1, t, t + L - 1) - rank_between(L, t - 1, t + L - 1);
    };
    ModSum out;
    std::size_t total = 0;
    for (int t = 1; t <= n; ++t)
        for (int L = 1; L <= top_len; ++L) {
            long c = g(t, L) - g(t, L + 1);
            if (c < 0) throw InternalError("negative multiplicity in decomposition");
            for (long k = 0; k < c; ++k) out.push_back(Ind{A.wrap(t + L - 1), L});
            total += static_cast<std::size_t>(c * L);
        }
    if (total != V.dim()) throw InternalError("decomposition does not account for every basis vector");
    return normalized(out);
}

/// Kernel of an intertwiner f : V -> W as a module.
template <unsigned P>
Module<P> kernel(const Module<P>& V, const Matrix<P>& f)
{
    auto basis = f.nullspace();
    Module<P> K;
    K.X = Matrix<P>(basis.size(), basis.size());
    for (const auto& v : basis) {
        std::size_t b = 0;
        while (!v[b]) ++b;
        K.vertex.push_back(V.vertex[b]);
    }
    // coordinates of X v in the kernel basis: solve [basis^T | Xv]
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Matrix<P> aug(V.dim(), basis.size() + 1);
        for (std::size_t r = 0; r < V.dim(); ++r) {
            for (std::size_t j = 0; j < basis.size(); ++j) aug(r, j) = basis[j][r];
            std::uint8_t acc = 0;
            for (std::size_t c = 0; c < V.dim(); ++c) acc = Gf<P>::add(acc, Gf<P>::mul(V.X(r, c), basis[k][c]));
            aug(r, basis.size()) = acc;
        }
        auto piv = aug.rref();
        if (!piv.empty() && piv.back() == basis.size()) throw InternalError("kernel is not a submodule");
        for (std::size_t i = 0; i < piv.size(); ++i) K.X(piv[i], k) = aug(i, basis.size());
    }
    return K;
}

/// Quotient of V by the submodule spanned by `gens` (each a vector of length dim V).
template <unsigned P>
Module<P> quotient(const Module<P>& V, const std::vector<std::vector<std::uint8_t>>& gens)
{
    Subspace<P> U(V.dim());
    // close under X so the span is a submodule even if gens are not
    std::vector<std::vector<std::uint8_t>> todo = gens;
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        if (!U.add(v)) continue;
        std::vector<std::uint8_t> xv(V.dim(), 0);
        for (std::size_t r = 0; r < V.dim(); ++r)
            for (std::size_t c = 0; c < V.dim(); ++c)
                if (V.X(r, c) && v[c]) xv[r] = Gf<P>::add(xv[r], Gf<P>::mul(V.X(r, c), v[c]));
        todo.push_back(std::move(xv));
    }
    std::vector<bool> pivot(V.dim(), false);
    for (auto p : U.pivots()) pivot[p] = true;
    std::vector<std::size_t> keep, pos(V.dim(), 0);
    for (std::size_t b = 0; b < V.dim(); ++b)
        if (!pivot[b]) {
            pos[b] = keep.size();
            keep.push_back(b);
        }
    Module<P> Q;
    Q.X = Matrix<P>(keep.size(), keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        Q.vertex.push_back(V.vertex[keep[k]]);
        std::vector<std::uint8_t> col(V.dim(), 0);
        for (std::size_t r = 0; r < V.dim(); ++r) col[r] = V.X(r, keep[k]);
        col = U.reduce(col);
        for (std::size_t r = 0; r < V.dim(); ++r)
            if (col[r]) Q.X(pos[r], k) = col[r];
    }
    return Q;
}

/// (I(M) + N) / {(iota x, -g x)} for a module map g : M -> N, where iota
/// embeds each summand of M at the bottom of the projective with the same socle.
template <unsigned P>
Module<P> pushout_along_envelope(const ModSum& M, const ModSum& N, const Matrix<P>& g, const Algebra& A)
{
    ModSum IM;
    for (const auto& X : M) IM.push_back(Ind{X.socle, A.ell + 1});
    ModSum both = IM;
    both.insert(both.end(), N.begin(), N.end());
    auto V = make_module<P>(both, A);
    auto mo = block_offsets(M), io = block_offsets(IM);
    const std::size_t shift = io.back();
    std::vector<std::vector<std::uint8_t>> gens;
    for (std::size_t k = 0; k < M.size(); ++k)
        for (int p = 0; p < M[k].length; ++p) {
            std::vector<std::uint8_t> v(V.dim(), 0);
            v[io[k] + static_cast<std::size_t>(A.ell + 1 - M[k].length + p)] = 1;
            for (std::size_t r = 0; r < g.rows(); ++r) v[shift + r] = Gf<P>::neg(g(r, mo[k] + p));
            gens.push_back(std::move(v));
        }
    return quotient(V, gens);
}

template <unsigned P>
ModSum cone(const ModSum& M, const ModSum& N, const Matrix<P>& g, const Algebra& A)
{
    auto VM = make_module<P>(M, A), VN = make_module<P>(N, A);
    if (!is_intertwiner(g, VM, VN)) throw InvalidInput("map does not commute with the arrow action");
    return drop_projectives(decompose(pushout_along_envelope(M, N, g, A), A), A);
}

/// Oracle for stable Hom: dim Hom(M,N) minus the dimension of the span of
/// all composites M -> Q -> N with Q the sum of all indecomposable projectives.
template <unsigned P>
std::size_t stable_hom_dim_matrix(const Ind& M, const Ind& N, const Algebra& A)
{
    auto VM = make_module<P>({M}, A), VN = make_module<P>({N}, A);
    auto all = intertwiners(VM, VN);
    ModSum Q;
    for (int i = 1; i <= A.n; ++i) Q.push_back(projective(i, A));
    auto VQ = make_module<P>(Q, A);
    auto in = intertwiners(VM, VQ), out = intertwiners(VQ, VN);
    Subspace<P> factoring(VN.dim() * VM.dim());
    for (const auto& a : in)
        for (const auto& b : out) factoring.add((b * a).flat());
    return all.size() - factoring.dim();
}

}  // namespace nak
