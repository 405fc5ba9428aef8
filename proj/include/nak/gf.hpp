#pragma once

// Dense matrices over a prime field GF(P), P small.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nak {

template <unsigned P>
struct Gf {
    static_assert(P >= 2 && P < 256, "small prime fields only");

    static constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a + b) % P); }
    static constexpr std::uint8_t sub(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a + P - b) % P); }
    static constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>((a * b) % P); }
    static constexpr std::uint8_t neg(std::uint8_t a) { return static_cast<std::uint8_t>((P - a) % P); }
    static std::uint8_t inv(std::uint8_t a)
    {
        if (a % P == 0) throw std::domain_error("GF inverse of zero");
        // Fermat: a^(P-2)
        unsigned r = 1, b = a % P, k = P - 2;
        while (k) {
            if (k & 1) r = r * b % P;
            b = b * b % P;
            k >>= 1;
        }
        return static_cast<std::uint8_t>(r);
    }
};

template <unsigned P>
class Matrix {
public:
    using F = Gf<P>;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    bool is_zero() const
    {
        for (auto v : data_)
            if (v) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                auto a = (*this)(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = F::add(r(i, j), F::mul(a, o(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const
    {
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F::add(r.data_[i], o.data_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F::sub(r.data_[i], o.data_[i]);
        return r;
    }

    Matrix scaled(std::uint8_t s) const
    {
        Matrix r = *this;
        for (auto& v : r.data_) v = F::mul(v, s);
        return r;
    }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const
    {
        Matrix r(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) r(i, j) = (*this)(rs[i], cs[j]);
        return r;
    }

    // Flatten row-major into a vector (used to treat maps as points of a Hom space).
    const std::vector<std::uint8_t>& flat() const { return data_; }

    static Matrix from_flat(std::size_t rows, std::size_t cols, const std::vector<std::uint8_t>& v)
    {
        Matrix m(rows, cols);
        m.data_ = v;
        return m;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref()
    {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c) == 0) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            auto iv = F::inv((*this)(r, c));
            for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = F::mul((*this)(r, j), iv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                auto f = (*this)(i, c);
                if (!f) continue;
                for (std::size_t j = 0; j < cols_; ++j)
                    (*this)(i, j) = F::sub((*this)(i, j), F::mul(f, (*this)(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const
    {
        Matrix t = *this;
        return t.rref().size();
    }

    // Basis of {x : A x = 0}, one vector per entry.
    std::vector<std::vector<std::uint8_t>> nullspace() const
    {
        Matrix t = *this;
        auto piv = t.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : piv) is_pivot[c] = true;
        std::vector<std::vector<std::uint8_t>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<std::uint8_t> v(cols_, 0);
            v[free] = 1;
            for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F::neg(t(i, free));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Matrix whose rows are the given vectors.
    static Matrix from_rows(const std::vector<std::vector<std::uint8_t>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

private:
    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> data_;
};

// Incrementally maintained subspace of GF(P)^dim in reduced echelon form.
// Supports membership, reduction of vectors, and quotient coordinates.
template <unsigned P>
class Subspace {
public:
    using F = Gf<P>;
    using Vec = std::vector<std::uint8_t>;

    explicit Subspace(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return dim_; }

    Vec reduce(Vec v) const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            auto f = v[pivots_[i]];
            if (!f) continue;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = F::sub(v[j], F::mul(f, basis_[i][j]));
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    // Returns true if v enlarged the subspace.
    bool add(const Vec& v)
    {
        Vec r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && r[p] == 0) ++p;
        if (p == dim_) return false;
        auto iv = F::inv(r[p]);
        for (auto& x : r) x = F::mul(x, iv);
        for (auto& b : basis_) {
            auto f = b[p];
            if (!f) continue;
            for (std::size_t j = 0; j < dim_; ++j) b[j] = F::sub(b[j], F::mul(f, r[j]));
        }
        basis_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    static bool is_zero(const Vec& v)
    {
        for (auto x : v)
            if (x) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace nak
