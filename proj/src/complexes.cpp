#include "nak/complexes.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "nak/errors.hpp"
#include "nak/gf.hpp"
#include "nak/parallel.hpp"

namespace nak {

namespace {

using Vec = std::vector<std::uint8_t>;
// Coefficients c[s], s = 0..ell, of a map P_a -> P_b; only s = a - b (mod n) may be nonzero.
using Poly = std::vector<std::uint8_t>;

int mod(int x, int n) { return ((x % n) + n) % n; }

bool valid_path(int a, int b, int s, const Algebra& A)
{
    return s >= 0 && s <= A.ell && mod(a - b - s, A.n) == 0;
}

Poly zero_poly(const Algebra& A) { return Poly(A.ell + 1, 0); }

Poly monomial(int s, const Algebra& A)
{
    Poly p = zero_poly(A);
    p[s] = 1;
    return p;
}

bool is_zero(const Poly& p)
{
    return std::all_of(p.begin(), p.end(), [](auto x) { return x == 0; });
}

int valuation(const Poly& p)
{
    for (std::size_t s = 0; s < p.size(); ++s)
        if (p[s]) return static_cast<int>(s);
    return -1;
}

// g after f.
Poly mul(const Poly& g, const Poly& f)
{
    Poly r(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; i + j < f.size(); ++j) r[i + j] ^= static_cast<std::uint8_t>(g[j] & 1);
    }
    return r;
}

void add_into(Poly& acc, const Poly& p)
{
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= p[i];
}

// Inverse of a unit (p[0] = 1) modulo x^{ell+1}.
Poly inverse(const Poly& u)
{
    Poly v(u.size(), 0);
    v[0] = 1;
    for (std::size_t s = 1; s < u.size(); ++s) {
        std::uint8_t acc = 0;
        for (std::size_t j = 1; j <= s; ++j) acc ^= static_cast<std::uint8_t>(u[j] & v[s - j]);
        v[s] = acc;
    }
    return v;
}

// q with q * p = g, where val(g) >= val(p) = v.
Poly divide(const Poly& g, const Poly& p)
{
    const int v = valuation(p);
    const std::size_t L = g.size();
    Poly gs(L, 0), ps(L, 0);
    for (std::size_t k = 0; k + v < L; ++k) {
        gs[k] = g[k + v];
        ps[k] = p[k + v];
    }
    Poly q = mul(gs, inverse(ps));
    for (std::size_t k = L - v; k < L; ++k) q[k] = 0;
    if (mul(q, p) != g) throw InternalError("path division failed");
    return q;
}

// Map between direct sums of projectives; entry (r, c) goes from src[c] to tgt[r].
struct PM {
    std::size_t rows = 0, cols = 0;
    std::vector<Poly> e;

    PM() = default;
    PM(std::size_t r, std::size_t c, const Algebra& A) : rows(r), cols(c), e(r * c, zero_poly(A)) {}

    Poly& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
};

// G after F.
PM compose(const PM& G, const PM& F, const Algebra& A)
{
    PM R(G.rows, F.cols, A);
    for (std::size_t i = 0; i < G.rows; ++i)
        for (std::size_t k = 0; k < G.cols; ++k) {
            const Poly& g = G.at(i, k);
            if (is_zero(g)) continue;
            for (std::size_t j = 0; j < F.cols; ++j) add_into(R.at(i, j), mul(g, F.at(k, j)));
        }
    return R;
}

PM add(PM X, const PM& Y)
{
    for (std::size_t i = 0; i < X.e.size(); ++i) add_into(X.e[i], Y.e[i]);
    return X;
}

PM drop(const PM& M, std::optional<std::size_t> row, std::optional<std::size_t> col, const Algebra& A)
{
    PM R(M.rows - (row ? 1 : 0), M.cols - (col ? 1 : 0), A);
    std::size_t ri = 0;
    for (std::size_t r = 0; r < M.rows; ++r) {
        if (row && r == *row) continue;
        std::size_t ci = 0;
        for (std::size_t c = 0; c < M.cols; ++c) {
            if (col && c == *col) continue;
            R.at(ri, ci++) = M.at(r, c);
        }
        ++ri;
    }
    return R;
}

// Coordinates of Hom(sum src, sum tgt) over GF(2).
struct Coords {
    std::vector<int> src, tgt;
    std::vector<std::size_t> off;  // per (r, c), plus the total at the end
    std::vector<int> first;        // smallest valid s per (r, c)
    Algebra A;

    Coords(std::vector<int> s, std::vector<int> t, const Algebra& alg) : src(std::move(s)), tgt(std::move(t)), A(alg)
    {
        std::size_t acc = 0;
        for (int b : tgt)
            for (int a : src) {
                off.push_back(acc);
                int s0 = mod(a - b, A.n);
                first.push_back(s0);
                if (s0 <= A.ell) acc += static_cast<std::size_t>((A.ell - s0) / A.n + 1);
            }
        off.push_back(acc);
    }

    std::size_t size() const { return off.back(); }

    Vec to_vec(const PM& M) const
    {
        Vec v(size(), 0);
        for (std::size_t r = 0; r < tgt.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c) {
                std::size_t k = r * src.size() + c;
                const Poly& p = M.at(r, c);
                for (std::size_t i = off[k]; i < off[k + 1]; ++i) v[i] = p[first[k] + (i - off[k]) * A.n];
            }
        return v;
    }

    PM from_vec(const Vec& v, std::size_t base = 0) const
    {
        PM M(tgt.size(), src.size(), A);
        for (std::size_t r = 0; r < tgt.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c) {
                std::size_t k = r * src.size() + c;
                Poly& p = M.at(r, c);
                for (std::size_t i = off[k]; i < off[k + 1]; ++i) p[first[k] + (i - off[k]) * A.n] = v[base + i];
            }
        return M;
    }

    // Coordinates holding length-0 coefficients.
    std::vector<std::size_t> constant_coords() const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k + 1 < off.size(); ++k)
            if (first[k] == 0 && off[k + 1] > off[k]) out.push_back(off[k]);
        return out;
    }
};

Vec concat(const Vec& a, const Vec& b)
{
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// A two-term complex lo (degree -1) -> hi (degree 0).
struct Cx {
    std::vector<int> lo, hi;
    PM d;
};

Cx to_cx(const Summand& X, const Algebra& A)
{
    Cx c;
    if (X.is_stalk()) {
        (X.deg == 0 ? c.hi : c.lo).push_back(X.a);
    } else {
        c.lo = {X.a};
        c.hi = {X.b};
    }
    c.d = PM(c.hi.size(), c.lo.size(), A);
    if (!X.is_stalk()) c.d.at(0, 0) = monomial(X.s, A);
    return c;
}

// Chain maps T -> U, stored as (F1 : T.lo -> U.lo, F0 : T.hi -> U.hi), modulo homotopy.
struct HomK {
    Coords c1, c0;
    std::vector<Vec> cycles;
    Subspace<2> boundaries;
    std::vector<Vec> reps;   // representatives of a basis of the quotient
    std::vector<Vec> rad;    // representatives of the radical (maps with zero length-0 part)

    std::size_t size() const { return c1.size() + c0.size(); }
    std::pair<PM, PM> split(const Vec& v) const { return {c1.from_vec(v, 0), c0.from_vec(v, c1.size())}; }
    Vec join(const PM& F1, const PM& F0) const { return concat(c1.to_vec(F1), c0.to_vec(F0)); }
};

HomK hom_k(const Cx& T, const Cx& U, const Algebra& A)
{
    HomK H{Coords(T.lo, U.lo, A), Coords(T.hi, U.hi, A), {}, Subspace<2>(0), {}, {}};
    const std::size_t n1 = H.c1.size(), n0 = H.c0.size(), N = n1 + n0;
    Coords target(T.lo, U.hi, A);

    // Chain condition F0 dT - dU F1 = 0.
    Matrix<2> C(target.size(), N);
    for (std::size_t i = 0; i < N; ++i) {
        Vec b(N, 0);
        b[i] = 1;
        auto [F1, F0] = H.split(b);
        Vec img = target.to_vec(add(compose(F0, T.d, A), compose(U.d, F1, A)));
        for (std::size_t r = 0; r < img.size(); ++r) C(r, i) = img[r];
    }
    H.cycles = C.nullspace();

    H.boundaries = Subspace<2>(N);
    Coords hc(T.hi, U.lo, A);
    for (std::size_t i = 0; i < hc.size(); ++i) {
        Vec b(hc.size(), 0);
        b[i] = 1;
        PM h = hc.from_vec(b);
        H.boundaries.add(H.join(compose(h, T.d, A), compose(U.d, h, A)));
    }

    Subspace<2> span = H.boundaries;
    for (const auto& z : H.cycles)
        if (span.add(z)) H.reps.push_back(z);

    // Radical: cycles whose length-0 coordinates vanish.
    std::vector<std::size_t> cc = H.c1.constant_coords();
    for (auto k : H.c0.constant_coords()) cc.push_back(n1 + k);
    Matrix<2> K(cc.size(), H.cycles.size());
    for (std::size_t j = 0; j < H.cycles.size(); ++j)
        for (std::size_t r = 0; r < cc.size(); ++r) K(r, j) = H.cycles[j][cc[r]];
    Subspace<2> rspan = H.boundaries;
    for (const auto& lam : K.nullspace()) {
        Vec v(N, 0);
        for (std::size_t j = 0; j < lam.size(); ++j)
            if (lam[j])
                for (std::size_t i = 0; i < N; ++i) v[i] ^= H.cycles[j][i];
        if (rspan.add(v)) H.rad.push_back(v);
    }
    return H;
}

// (G after F) for chain maps given in the coordinates of HF : X -> Y and HG : Y -> Z, written in HR : X -> Z.
Vec compose_chain(const HomK& HG, const Vec& g, const HomK& HF, const Vec& f, const HomK& HR, const Algebra& A)
{
    auto [F1, F0] = HF.split(f);
    auto [G1, G0] = HG.split(g);
    return HR.join(compose(G1, F1, A), compose(G0, F0, A));
}

int hom_dim_shift(const Cx& T, const Cx& U, int k, const Algebra& A)
{
    if (k == 0) {
        HomK H = hom_k(T, U, A);
        return static_cast<int>(H.reps.size());
    }
    if (k == 1) {
        Coords f(T.lo, U.hi, A), h0(T.hi, U.hi, A), h1(T.lo, U.lo, A);
        Subspace<2> im(f.size());
        for (std::size_t i = 0; i < h0.size(); ++i) {
            Vec b(h0.size(), 0);
            b[i] = 1;
            im.add(f.to_vec(compose(h0.from_vec(b), T.d, A)));
        }
        for (std::size_t i = 0; i < h1.size(); ++i) {
            Vec b(h1.size(), 0);
            b[i] = 1;
            im.add(f.to_vec(compose(U.d, h1.from_vec(b), A)));
        }
        return static_cast<int>(f.size() - im.dim());
    }
    if (k == -1) {
        Coords f(T.hi, U.lo, A), c1(T.lo, U.lo, A), c2(T.hi, U.hi, A);
        Matrix<2> C(c1.size() + c2.size(), f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            Vec b(f.size(), 0);
            b[i] = 1;
            PM F = f.from_vec(b);
            Vec img = concat(c1.to_vec(compose(F, T.d, A)), c2.to_vec(compose(U.d, F, A)));
            for (std::size_t r = 0; r < img.size(); ++r) C(r, i) = img[r];
        }
        return static_cast<int>(f.size() - C.rank());
    }
    return 0;
}

// Complex in consecutive degrees; d[k] : terms[k] -> terms[k+1].
struct Multi {
    std::vector<std::vector<int>> terms;
    std::vector<PM> d;
};

// Cancel every isomorphism component (Gaussian elimination); the result is minimal.
void eliminate(Multi& C, const Algebra& A)
{
    for (;;) {
        bool found = false;
        for (std::size_t k = 0; k < C.d.size() && !found; ++k) {
            PM& D = C.d[k];
            for (std::size_t r = 0; r < D.rows && !found; ++r)
                for (std::size_t c = 0; c < D.cols && !found; ++c) {
                    if (!D.at(r, c)[0]) continue;
                    found = true;
                    Poly ainv = inverse(D.at(r, c));
                    PM N = D;
                    for (std::size_t r2 = 0; r2 < D.rows; ++r2) {
                        if (r2 == r || is_zero(D.at(r2, c))) continue;
                        Poly g = mul(D.at(r2, c), ainv);
                        for (std::size_t c2 = 0; c2 < D.cols; ++c2)
                            if (c2 != c) add_into(N.at(r2, c2), mul(g, D.at(r, c2)));
                    }
                    C.d[k] = drop(N, r, c, A);
                    if (k > 0) C.d[k - 1] = drop(C.d[k - 1], c, std::nullopt, A);
                    if (k + 1 < C.d.size()) C.d[k + 1] = drop(C.d[k + 1], std::nullopt, r, A);
                    C.terms[k].erase(C.terms[k].begin() + static_cast<long>(c));
                    C.terms[k + 1].erase(C.terms[k + 1].begin() + static_cast<long>(r));
                }
        }
        if (!found) return;
    }
}

// Split a two-term complex into indecomposables by row and column operations.
std::vector<Summand> decompose(Cx X, const Algebra& A)
{
    std::vector<Summand> out;
    for (;;) {
        int best = -1;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = 0; r < X.d.rows; ++r)
            for (std::size_t c = 0; c < X.d.cols; ++c) {
                int v = valuation(X.d.at(r, c));
                if (v >= 0 && (best < 0 || v < best)) {
                    best = v;
                    br = r;
                    bc = c;
                }
            }
        if (best < 0) break;
        const Poly p = X.d.at(br, bc);
        for (std::size_t r = 0; r < X.d.rows; ++r) {
            if (r == br || is_zero(X.d.at(r, bc))) continue;
            Poly q = divide(X.d.at(r, bc), p);
            for (std::size_t c = 0; c < X.d.cols; ++c) add_into(X.d.at(r, c), mul(q, X.d.at(br, c)));
        }
        for (std::size_t c = 0; c < X.d.cols; ++c) {
            if (c == bc || is_zero(X.d.at(br, c))) continue;
            Poly q = divide(X.d.at(br, c), p);
            for (std::size_t r = 0; r < X.d.rows; ++r) add_into(X.d.at(r, c), mul(X.d.at(r, bc), q));
        }
        if (best > 0) out.push_back(Summand::diff(X.lo[bc], X.hi[br], best));
        X.d = drop(X.d, br, bc, A);
        X.lo.erase(X.lo.begin() + static_cast<long>(bc));
        X.hi.erase(X.hi.begin() + static_cast<long>(br));
    }
    for (int b : X.hi) out.push_back(Summand::stalk(b, 0));
    for (int a : X.lo) out.push_back(Summand::stalk(a, -1));
    return out;
}

PM block_diag(const std::vector<const PM*>& blocks, const Algebra& A)
{
    std::size_t R = 0, C = 0;
    for (auto* b : blocks) {
        R += b->rows;
        C += b->cols;
    }
    PM M(R, C, A);
    std::size_t r0 = 0, c0 = 0;
    for (auto* b : blocks) {
        for (std::size_t r = 0; r < b->rows; ++r)
            for (std::size_t c = 0; c < b->cols; ++c) M.at(r0 + r, c0 + c) = b->at(r, c);
        r0 += b->rows;
        c0 += b->cols;
    }
    return M;
}

// Stack [top; bottom] (same columns) or [left | right] (same rows).
PM vstack(const PM& top, const PM& bottom, const Algebra& A)
{
    PM M(top.rows + bottom.rows, top.cols, A);
    for (std::size_t r = 0; r < top.rows; ++r)
        for (std::size_t c = 0; c < top.cols; ++c) M.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows; ++r)
        for (std::size_t c = 0; c < bottom.cols; ++c) M.at(top.rows + r, c) = bottom.at(r, c);
    return M;
}

PM hstack(const PM& left, const PM& right, const Algebra& A)
{
    PM M(left.rows, left.cols + right.cols, A);
    for (std::size_t r = 0; r < left.rows; ++r) {
        for (std::size_t c = 0; c < left.cols; ++c) M.at(r, c) = left.at(r, c);
        for (std::size_t c = 0; c < right.cols; ++c) M.at(r, left.cols + c) = right.at(r, c);
    }
    return M;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct Component {
    std::size_t j;  // index into M
    Vec map;        // in the coordinates of the matching HomK
};

// Mutate the single summand X against add(M). nullopt if out of class.
std::optional<Summand> mutate_one(const Cx& X, const std::vector<Cx>& M, Sign sign, const Algebra& A)
{
    const std::size_t q = M.size();
    const bool left = sign == Sign::Minus;

    // Hom spaces between X and M, and radical maps inside add(M).
    std::vector<HomK> XM;
    for (std::size_t j = 0; j < q; ++j) XM.push_back(left ? hom_k(X, M[j], A) : hom_k(M[j], X, A));
    std::vector<std::vector<HomK>> MM(q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) MM[a].push_back(hom_k(M[a], M[b], A));
    auto radical = [&](std::size_t a, std::size_t b) -> const std::vector<Vec>& {
        return a == b ? MM[a][b].rad : MM[a][b].reps;
    };

    std::vector<Component> comps;
    for (std::size_t j = 0; j < q; ++j) {
        Subspace<2> S = XM[j].boundaries;
        for (std::size_t k = 0; k < q; ++k)
            for (const auto& h : XM[k].reps) {
                if (left) {
                    for (const auto& r : radical(k, j)) S.add(compose_chain(MM[k][j], r, XM[k], h, XM[j], A));
                } else {
                    for (const auto& r : radical(j, k)) S.add(compose_chain(XM[k], h, MM[j][k], r, XM[j], A));
                }
            }
        for (const auto& h : XM[j].reps)
            if (S.add(h)) comps.push_back({j, h});
    }

    // The approximation object M' and the map components.
    std::vector<int> Mlo, Mhi;
    std::vector<const PM*> dblocks;
    for (const auto& c : comps) {
        Mlo = cat(Mlo, M[c.j].lo);
        Mhi = cat(Mhi, M[c.j].hi);
        dblocks.push_back(&M[c.j].d);
    }
    PM dM = block_diag(dblocks, A);

    Multi C;
    if (left) {
        PM F1(Mlo.size(), X.lo.size(), A), F0(Mhi.size(), X.hi.size(), A);
        std::size_t r1 = 0, r0 = 0;
        for (const auto& c : comps) {
            auto [G1, G0] = XM[c.j].split(c.map);
            for (std::size_t r = 0; r < G1.rows; ++r)
                for (std::size_t k = 0; k < G1.cols; ++k) F1.at(r1 + r, k) = G1.at(r, k);
            for (std::size_t r = 0; r < G0.rows; ++r)
                for (std::size_t k = 0; k < G0.cols; ++k) F0.at(r0 + r, k) = G0.at(r, k);
            r1 += G1.rows;
            r0 += G0.rows;
        }
        C.terms = {X.lo, cat(X.hi, Mlo), Mhi};
        C.d = {vstack(X.d, F1, A), hstack(F0, dM, A)};
        eliminate(C, A);
        if (!C.terms[0].empty()) return std::nullopt;
        auto parts = decompose(Cx{C.terms[1], C.terms[2], C.d[1]}, A);
        if (parts.size() != 1) throw InternalError("mutation did not give one indecomposable");
        return parts[0];
    }
    PM F1(X.lo.size(), Mlo.size(), A), F0(X.hi.size(), Mhi.size(), A);
    std::size_t c1 = 0, c0 = 0;
    for (const auto& c : comps) {
        auto [G1, G0] = XM[c.j].split(c.map);
        for (std::size_t r = 0; r < G1.rows; ++r)
            for (std::size_t k = 0; k < G1.cols; ++k) F1.at(r, c1 + k) = G1.at(r, k);
        for (std::size_t r = 0; r < G0.rows; ++r)
            for (std::size_t k = 0; k < G0.cols; ++k) F0.at(r, c0 + k) = G0.at(r, k);
        c1 += G1.cols;
        c0 += G0.cols;
    }
    C.terms = {Mlo, cat(Mhi, X.lo), X.hi};
    C.d = {vstack(dM, F1, A), hstack(F0, X.d, A)};
    eliminate(C, A);
    if (!C.terms[2].empty()) return std::nullopt;
    auto parts = decompose(Cx{C.terms[0], C.terms[1], C.d[0]}, A);
    if (parts.size() != 1) throw InternalError("mutation did not give one indecomposable");
    return parts[0];
}

long long bareiss_det(std::vector<std::vector<long long>> M)
{
    const std::size_t n = M.size();
    if (n == 0) return 1;
    long long prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && M[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(M[p], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace

std::string Summand::to_string() const
{
    if (is_stalk()) return deg == 0 ? "(0->P" + std::to_string(a) + ")" : "(P" + std::to_string(a) + "->0)";
    return "(P" + std::to_string(a) + "->P" + std::to_string(b) + ")";
}

int minimal_path(int a, int b, const Algebra& A)
{
    int s = mod(a - b, A.n);
    if (s == 0) s = A.n;
    return s <= A.ell ? s : -1;
}

void validate(const Summand& X, const Algebra& A)
{
    auto in_range = [&](int i) { return i >= 1 && i <= A.n; };
    if (!in_range(X.a)) throw InvalidInput("projective index out of range: " + X.to_string());
    if (X.is_stalk()) {
        if (X.deg != 0 && X.deg != -1) throw InvalidInput("stalk degree must be 0 or -1");
        return;
    }
    if (!in_range(X.b)) throw InvalidInput("projective index out of range: " + X.to_string());
    if (X.s < 1 || !valid_path(X.a, X.b, X.s, A)) throw InvalidInput("differential must be a nonzero radical map: " + X.to_string());
}

std::vector<Summand> TwoTerm::canonical() const
{
    auto c = summands;
    std::sort(c.begin(), c.end());
    return c;
}

TwoTerm stalk_complex(const Algebra& A, Sign sign)
{
    TwoTerm T{A, {}};
    for (int i = 1; i <= A.n; ++i) T.summands.push_back(Summand::stalk(i, sign == Sign::Minus ? 0 : -1));
    return T;
}

TwoTerm phi(const Triangulation& X, Sign sign, const Algebra& A)
{
    if (X.e != A.e()) throw InvalidInput("triangulation rank must equal gcd(n, ell)");
    Triangulation Y = A.n > X.e ? unfold(X, A.n) : X;
    TwoTerm T{A, {}};
    for (const Arc& arc : Y.arcs) {
        if (arc.is_projective()) {
            T.summands.push_back(Summand::stalk(arc.terminal_or_initial, sign == Sign::Minus ? 0 : -1));
            continue;
        }
        int i = arc.initial(), l = arc.length;
        if (sign == Sign::Minus)
            T.summands.push_back(Summand::diff(A.wrap(i + l - 1), i, l - 1));
        else
            T.summands.push_back(Summand::diff(A.wrap(i + l), A.wrap(i + 1), l - 1));
    }
    return T;
}

Sign complex_sign(const TwoTerm& T)
{
    bool zero = false, minus_one = false;
    for (const auto& X : T.summands)
        if (X.is_stalk()) (X.deg == 0 ? zero : minus_one) = true;
    if (zero == minus_one) throw InvalidInput("complex has no stalks of a single degree");
    return zero ? Sign::Minus : Sign::Plus;
}

std::pair<Triangulation, Sign> phi_inverse(const TwoTerm& T)
{
    const Algebra& A = T.A;
    Sign sign = complex_sign(T);
    std::vector<Arc> arcs;
    for (const auto& X : T.summands) {
        if (X.is_stalk()) {
            arcs.push_back(Arc::projective(X.a));
            continue;
        }
        int l = mod(X.a + 1 - X.b - 2, A.n) + 2;
        int i = sign == Sign::Minus ? X.b : A.wrap(X.b - 1);
        arcs.push_back(Arc::inner(i, l));
    }
    if (!is_triangulation(arcs, A.n)) throw InvalidInput("complex does not come from a triangulation");
    Triangulation Y(A.n, arcs);
    int e = A.e();
    return {A.n > e ? fold(Y, e) : Y, sign};
}

int hom_summand_dim(const Summand& X, const Summand& Y, int k, const Algebra& A)
{
    return hom_dim_shift(to_cx(X, A), to_cx(Y, A), k, A);
}

int hom_complex_dim(const TwoTerm& T, const TwoTerm& U, int k)
{
    if (!(T.A == U.A)) throw InvalidInput("complexes over different algebras");
    if (k < -1 || k > 1) return 0;
    const std::size_t p = T.summands.size(), q = U.summands.size();
    std::vector<int> dims(p * q, 0);
    parallel_for(p * q, [&](std::size_t idx) {
        dims[idx] = hom_summand_dim(T.summands[idx / q], U.summands[idx % q], k, T.A);
    });
    return std::accumulate(dims.begin(), dims.end(), 0);
}

std::vector<std::vector<long long>> class_matrix(const TwoTerm& T)
{
    const int n = T.A.n;
    std::vector<std::vector<long long>> M;
    for (const auto& X : T.summands) {
        std::vector<long long> row(n, 0);
        if (X.is_stalk()) {
            row[X.a - 1] += X.deg == 0 ? 1 : -1;
        } else {
            row[X.b - 1] += 1;
            row[X.a - 1] -= 1;
        }
        M.push_back(std::move(row));
    }
    return M;
}

bool is_silting(const TwoTerm& T)
{
    if (static_cast<int>(T.summands.size()) != T.A.n) return false;
    for (const auto& X : T.summands) {
        try {
            validate(X, T.A);
        } catch (const InvalidInput&) {
            return false;
        }
    }
    auto c = T.canonical();
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return false;
    if (std::llabs(bareiss_det(class_matrix(T))) != 1) return false;
    return hom_complex_dim(T, T, 1) == 0;
}

bool is_tilting(const TwoTerm& T)
{
    return is_silting(T) && nu_complex(T).same(T) && hom_complex_dim(T, T, -1) == 0;
}

Summand nu(const Summand& X, const Algebra& A)
{
    Summand Y = X;
    Y.a = A.wrap(X.a - A.ell);
    if (!X.is_stalk()) Y.b = A.wrap(X.b - A.ell);
    return Y;
}

TwoTerm nu_complex(const TwoTerm& T)
{
    TwoTerm U{T.A, {}};
    for (const auto& X : T.summands) U.summands.push_back(nu(X, T.A));
    return U;
}

std::vector<std::vector<std::size_t>> summand_orbits(const TwoTerm& T)
{
    const auto& S = T.summands;
    std::vector<bool> seen(S.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        Summand X = S[i];
        for (;;) {
            auto it = std::find(S.begin(), S.end(), X);
            if (it == S.end()) throw InvalidInput("complex is not Nakayama-stable");
            auto pos = static_cast<std::size_t>(it - S.begin());
            if (seen[pos]) break;
            seen[pos] = true;
            orbit.push_back(pos);
            X = nu(X, T.A);
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::optional<TwoTerm> two_term_mutate(const TwoTerm& T, const std::vector<std::size_t>& orbit, Sign sign)
{
    const Algebra& A = T.A;
    std::set<std::size_t> K(orbit.begin(), orbit.end());
    if (K.empty() || K.size() != orbit.size() || *K.rbegin() >= T.summands.size())
        throw InvalidInput("bad orbit positions");
    // The orbit must be exactly one nu-orbit inside T.
    {
        std::set<Summand> members;
        for (auto p : K) members.insert(T.summands[p]);
        std::set<Summand> reach;
        Summand X = T.summands[*K.begin()];
        while (reach.insert(X).second) X = nu(X, A);
        if (reach != members) throw InvalidInput("orbit is not a minimal Nakayama-stable summand set");
    }

    std::vector<Cx> M;
    for (std::size_t i = 0; i < T.summands.size(); ++i)
        if (!K.count(i)) M.push_back(to_cx(T.summands[i], A));

    std::vector<std::size_t> pos(K.begin(), K.end());
    std::vector<std::optional<Summand>> res(pos.size());
    parallel_for(pos.size(), [&](std::size_t k) { res[k] = mutate_one(to_cx(T.summands[pos[k]], A), M, sign, A); });

    TwoTerm U = T;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (!res[k]) return std::nullopt;
        U.summands[pos[k]] = *res[k];
    }
    return U;
}

Quiver end_quiver(const TwoTerm& T)
{
    if (!is_tilting(T)) throw InvalidInput("end_quiver needs a tilting complex");
    const Algebra& A = T.A;
    const std::size_t n = T.summands.size();
    std::vector<Cx> C;
    for (const auto& X : T.summands) C.push_back(to_cx(X, A));
    std::vector<HomK> H(n * n, HomK{Coords({}, {}, A), Coords({}, {}, A), {}, Subspace<2>(0), {}, {}});
    parallel_for(n * n, [&](std::size_t idx) { H[idx] = hom_k(C[idx / n], C[idx % n], A); });
    auto hk = [&](std::size_t i, std::size_t j) -> const HomK& { return H[i * n + j]; };
    auto rad = [&](std::size_t i, std::size_t j) -> const std::vector<Vec>& {
        return i == j ? hk(i, j).rad : hk(i, j).reps;
    };

    // irr[i][j] = dim rad(T_i, T_j) / rad^2(T_i, T_j).
    std::vector<int> irr(n * n, 0);
    parallel_for(n * n, [&](std::size_t idx) {
        std::size_t i = idx / n, j = idx % n;
        Subspace<2> S = hk(i, j).boundaries;
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& f : rad(i, k))
                for (const auto& g : rad(k, j)) S.add(compose_chain(hk(k, j), g, hk(i, k), f, hk(i, j), A));
        std::size_t sq = S.dim() - hk(i, j).boundaries.dim();
        irr[idx] = static_cast<int>(rad(i, j).size() - sq);
    });

    Quiver Q;
    Q.arrows.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Q.arrows[i][j] = irr[j * n + i];
    return Q;
}

Quiver brauer_quiver(const BrauerTree& G)
{
    const std::size_t n = G.edges.size();
    Quiver Q;
    Q.arrows.assign(n, std::vector<int>(n, 0));
    for (const auto& [v, cyc] : G.cyclic) {
        const std::size_t k = cyc.size();
        if (k == 1) {
            bool loop = (v == G.exceptional && G.m > 1) ||
                        (n == 1 && G.m == 1 && v == std::min(G.edges[0].u, G.edges[0].v));
            if (loop) Q.arrows[cyc[0] - 1][cyc[0] - 1] += 1;
            continue;
        }
        for (std::size_t t = 0; t < k; ++t) Q.arrows[cyc[t] - 1][cyc[(t + 1) % k] - 1] += 1;
    }
    return Q;
}

Quiver permuted(const Quiver& Q, const std::vector<std::size_t>& perm)
{
    Quiver R;
    R.arrows.assign(Q.size(), std::vector<int>(Q.size(), 0));
    for (std::size_t i = 0; i < Q.size(); ++i)
        for (std::size_t j = 0; j < Q.size(); ++j) R.arrows[perm[i]][perm[j]] = Q.arrows[i][j];
    return R;
}

}  // namespace nak
