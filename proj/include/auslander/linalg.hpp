#pragma once

// Exact dense linear algebra over a prime field F_p.
//
// Matrices act on column vectors. Subspaces are stored by the reduced row
// echelon form of a spanning set, which is unique; two subspaces are equal
// exactly when their bases are bit-identical.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "auslander/error.hpp"

namespace auslander {

using Scalar = std::uint8_t;
using Vec = std::vector<Scalar>;

/// Arithmetic in F_p for a prime p < 256.
class Field {
public:
    Field() = default;
    explicit Field(unsigned p) : p_(p)
    {
        if (p < 2 || p > 251)
            throw InputError("field: modulus " + std::to_string(p) + " out of supported range");
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw InputError("field: modulus " + std::to_string(p) + " is not prime");
    }

    [[nodiscard]] unsigned p() const { return p_; }
    [[nodiscard]] Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((a + b) % p_); }
    [[nodiscard]] Scalar sub(Scalar a, Scalar b) const { return static_cast<Scalar>((a + p_ - b) % p_); }
    [[nodiscard]] Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>((unsigned(a) * b) % p_); }
    [[nodiscard]] Scalar neg(Scalar a) const { return static_cast<Scalar>((p_ - a) % p_); }
    [[nodiscard]] Scalar inv(Scalar a) const
    {
        if (a == 0)
            throw InvariantViolation("field: inverse of zero");
        unsigned r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1)
                r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<Scalar>(r);
    }
    [[nodiscard]] Scalar reduce(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }

    bool operator==(const Field&) const = default;

private:
    unsigned p_ = 2;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(Field f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.a_[i * n + i] = 1;
        return m;
    }

    static Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows, std::size_t cols)
    {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw InputError("matrix: ragged row " + std::to_string(i));
            for (std::size_t j = 0; j < cols; ++j)
                m.a_[i * cols + j] = f.reduce(rows[i][j]);
        }
        return m;
    }

    static Matrix from_row_vectors(Field f, const std::vector<Vec>& rows, std::size_t cols)
    {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        return m;
    }

    static Matrix from_column_vectors(Field f, const std::vector<Vec>& cols, std::size_t rows)
    {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        return m;
    }

    [[nodiscard]] const Field& field() const { return f_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<Scalar>& data() const { return a_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Scalar operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    [[nodiscard]] Vec row(std::size_t i) const
    {
        return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    [[nodiscard]] Vec column(std::size_t j) const
    {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = a_[i * cols_ + j];
        return v;
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(a_.begin(), a_.end(), [](Scalar x) { return x == 0; });
    }

    [[nodiscard]] Matrix transpose() const
    {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Vec apply(const Vec& v) const
    {
        if (v.size() != cols_)
            throw InvariantViolation("matrix: vector length mismatch");
        Vec out(rows_, 0);
        const unsigned p = f_.p();
        for (std::size_t i = 0; i < rows_; ++i) {
            unsigned acc = 0;
            const Scalar* r = &a_[i * cols_];
            for (std::size_t j = 0; j < cols_; ++j)
                acc = (acc + unsigned(r[j]) * v[j]) % p;
            out[i] = static_cast<Scalar>(acc);
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw InvariantViolation("matrix: product shape mismatch " + a.shape() + " * " + b.shape());
        Matrix c(a.f_, a.rows_, b.cols_);
        const unsigned p = a.f_.p();
        std::vector<unsigned> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0u);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const unsigned x = a(i, k);
                if (!x)
                    continue;
                const Scalar* br = &b.a_[k * b.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j)
                    acc[j] += x * br[j];
            }
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) = static_cast<Scalar>(acc[j] % p);
        }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.a_.size(); ++k)
            c.a_[k] = a.f_.add(a.a_[k], b.a_[k]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.a_.size(); ++k)
            c.a_[k] = a.f_.sub(a.a_[k], b.a_[k]);
        return c;
    }

    [[nodiscard]] Matrix scaled(Scalar s) const
    {
        Matrix c = *this;
        for (auto& x : c.a_)
            x = f_.mul(x, s);
        return c;
    }

    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, const Matrix& block)
    {
        for (std::size_t i = 0; i < block.rows_; ++i)
            for (std::size_t j = 0; j < block.cols_; ++j)
                (*this)(r + i, c + j) = block(i, j);
    }

    [[nodiscard]] Matrix block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const
    {
        Matrix m(f_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = (*this)(r + i, c + j);
        return m;
    }

    [[nodiscard]] Matrix select_rows(const std::vector<std::size_t>& idx) const
    {
        Matrix m(f_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = (*this)(idx[i], j);
        return m;
    }

    [[nodiscard]] Matrix select_cols(const std::vector<std::size_t>& idx) const
    {
        Matrix m(f_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_)
            throw InvariantViolation("matrix: hstack row mismatch");
        Matrix m(a.f_, a.rows_, a.cols_ + b.cols_);
        m.set_block(0, 0, a);
        m.set_block(0, a.cols_, b);
        return m;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.cols_)
            throw InvariantViolation("matrix: vstack column mismatch");
        Matrix m(a.f_, a.rows_ + b.rows_, a.cols_);
        m.set_block(0, 0, a);
        m.set_block(a.rows_, 0, b);
        return m;
    }

    static Matrix block_diag(Field f, const std::vector<Matrix>& blocks)
    {
        std::size_t r = 0, c = 0;
        for (const auto& b : blocks) {
            r += b.rows_;
            c += b.cols_;
        }
        Matrix m(f, r, c);
        r = c = 0;
        for (const auto& b : blocks) {
            m.set_block(r, c, b);
            r += b.rows_;
            c += b.cols_;
        }
        return m;
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && f_ == o.f_;
    }

    [[nodiscard]] std::string shape() const
    {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? "," : "") << unsigned(m(i, j));
            os << ']';
        }
        return os << ']';
    }

private:
    void require_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw InvariantViolation("matrix: shape mismatch " + shape() + " vs " + b.shape());
    }

    Field f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form; zero rows are kept at the bottom so R has M's shape.
inline Echelon row_reduce(Matrix m)
{
    const Field& f = m.field();
    const unsigned p = f.p();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(r, j));
        const Scalar inv = f.inv(m(r, c));
        if (inv != 1)
            for (std::size_t j = c; j < m.cols(); ++j)
                m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const unsigned factor = p - m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = static_cast<Scalar>((m(i, j) + factor * m(r, j)) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

/// Some x with A x = b, free variables set to zero; nullopt when inconsistent.
inline std::optional<Vec> solve_linear(const Matrix& a, const Vec& b)
{
    if (b.size() != a.rows())
        throw InvariantViolation("solve_linear: right-hand side has length " + std::to_string(b.size()) +
                                 ", expected " + std::to_string(a.rows()));
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        aug(i, a.cols()) = b[i];
    auto ech = row_reduce(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols())
        return std::nullopt;
    Vec x(a.cols(), 0);
    for (std::size_t k = 0; k < ech.pivots.size(); ++k)
        x[ech.pivots[k]] = ech.reduced(k, a.cols());
    return x;
}

class Subspace {
public:
    Subspace() = default;

    /// Zero subspace of F_p^n.
    Subspace(Field f, std::size_t ambient) : f_(f), ambient_(ambient), basis_(f, 0, ambient) {}

    /// Row span of `rows` (any spanning set, zero rows allowed).
    static Subspace row_span(const Matrix& rows)
    {
        auto ech = row_reduce(rows);
        Subspace s(rows.field(), rows.cols());
        std::vector<std::size_t> keep(ech.rank());
        for (std::size_t i = 0; i < keep.size(); ++i)
            keep[i] = i;
        s.basis_ = ech.reduced.select_rows(keep);
        s.pivots_ = std::move(ech.pivots);
        return s;
    }

    static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors)
    {
        return row_span(Matrix::from_row_vectors(f, vectors, ambient));
    }

    /// Column space of `m`.
    static Subspace image(const Matrix& m) { return row_span(m.transpose()); }

    static Subspace full(Field f, std::size_t n) { return row_span(Matrix::identity(f, n)); }

    [[nodiscard]] const Field& field() const { return f_; }
    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    [[nodiscard]] std::vector<Vec> vectors() const
    {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < dim(); ++i)
            out.push_back(basis_.row(i));
        return out;
    }

    /// v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
    [[nodiscard]] Vec reduce(Vec v) const
    {
        check_ambient(v.size());
        const unsigned p = f_.p();
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const Scalar c = v[pivots_[k]];
            if (!c)
                continue;
            const unsigned factor = p - c;
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = static_cast<Scalar>((v[j] + factor * basis_(k, j)) % p);
        }
        return v;
    }

    [[nodiscard]] bool contains(const Vec& v) const
    {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; });
    }

    [[nodiscard]] bool contains(const Subspace& w) const
    {
        check_ambient(w.ambient_);
        for (std::size_t i = 0; i < w.dim(); ++i)
            if (!contains(w.basis_.row(i)))
                return false;
        return true;
    }

    /// Coordinates of v in the RREF basis, or nullopt when v is not in the subspace.
    [[nodiscard]] std::optional<Vec> coordinates(const Vec& v) const
    {
        if (!contains(v))
            return std::nullopt;
        Vec c(dim());
        for (std::size_t k = 0; k < pivots_.size(); ++k)
            c[k] = v[pivots_[k]];
        return c;
    }

    /// Linear combination of the basis rows.
    [[nodiscard]] Vec combine(const Vec& coords) const
    {
        if (coords.size() != dim())
            throw InvariantViolation("subspace: coordinate length mismatch");
        return basis_.transpose().apply(coords);
    }

    /// Non-pivot columns; the unit vectors on them represent a basis of ambient/U.
    [[nodiscard]] std::vector<std::size_t> free_columns() const
    {
        std::vector<std::size_t> out;
        std::size_t k = 0;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (k < pivots_.size() && pivots_[k] == j)
                ++k;
            else
                out.push_back(j);
        }
        return out;
    }

    [[nodiscard]] std::size_t codim() const { return ambient_ - dim(); }

    /// Coordinates of the class of v in ambient/U with respect to quotient_reps().
    [[nodiscard]] Vec quotient_coordinates(const Vec& v) const
    {
        auto r = reduce(v);
        auto fc = free_columns();
        Vec out(fc.size());
        for (std::size_t k = 0; k < fc.size(); ++k)
            out[k] = r[fc[k]];
        return out;
    }

    /// Unit vectors on the free columns, one per row.
    [[nodiscard]] Matrix quotient_reps() const
    {
        auto fc = free_columns();
        Matrix m(f_, fc.size(), ambient_);
        for (std::size_t k = 0; k < fc.size(); ++k)
            m(k, fc[k]) = 1;
        return m;
    }

    /// Matrix of the projection ambient -> ambient/U in quotient coordinates.
    [[nodiscard]] Matrix quotient_map() const
    {
        auto fc = free_columns();
        Matrix m(f_, fc.size(), ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) {
            Vec e(ambient_, 0);
            e[j] = 1;
            auto q = quotient_coordinates(e);
            for (std::size_t k = 0; k < fc.size(); ++k)
                m(k, j) = q[k];
        }
        return m;
    }

    /// {x : <u, x> = 0 for all u in U}.
    [[nodiscard]] Subspace annihilator() const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator<(const Subspace& o) const
    {
        if (ambient_ != o.ambient_)
            return ambient_ < o.ambient_;
        if (dim() != o.dim())
            return dim() < o.dim();
        return basis_.data() < o.basis_.data();
    }

    friend std::ostream& operator<<(std::ostream& os, const Subspace& s)
    {
        return os << "span" << s.basis_;
    }

private:
    void check_ambient(std::size_t n) const
    {
        if (n != ambient_)
            throw InvariantViolation("subspace: ambient dimension mismatch (" + std::to_string(n) + " vs " +
                                     std::to_string(ambient_) + ")");
    }

    Field f_;
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {x : A x = 0} as a canonical subspace of F_p^{cols}.
inline Subspace kernel_basis(const Matrix& a)
{
    const Field& f = a.field();
    auto ech = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivots)
        is_pivot[c] = true;
    std::vector<Vec> vecs;
    for (std::size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc])
            continue;
        Vec v(a.cols(), 0);
        v[fc] = 1;
        for (std::size_t k = 0; k < ech.pivots.size(); ++k)
            v[ech.pivots[k]] = f.neg(ech.reduced(k, fc));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(f, a.cols(), vecs);
}

inline Subspace Subspace::annihilator() const { return kernel_basis(basis_); }

inline Subspace subspace_sum(const Subspace& u, const Subspace& w)
{
    if (u.ambient_dim() != w.ambient_dim())
        throw InvariantViolation("subspace_sum: ambient mismatch");
    return Subspace::row_span(Matrix::vstack(u.basis(), w.basis()));
}

inline Subspace subspace_intersection(const Subspace& u, const Subspace& w)
{
    if (u.ambient_dim() != w.ambient_dim())
        throw InvariantViolation("subspace_intersection: ambient mismatch");
    auto au = u.annihilator();
    auto aw = w.annihilator();
    return kernel_basis(Matrix::vstack(au.basis(), aw.basis()));
}

struct SubspaceAlgebra {
    Subspace sum;
    Subspace intersection;
    bool contains = false;  // W inside U
    Matrix quotient_reps;   // rows represent a basis of ambient/U
};

inline SubspaceAlgebra subspace_algebra(const Subspace& u, const Subspace& w)
{
    return {subspace_sum(u, w), subspace_intersection(u, w), u.contains(w), u.quotient_reps()};
}

/// Image of a subspace under a linear map.
inline Subspace map_subspace(const Matrix& m, const Subspace& s)
{
    if (s.dim() == 0)
        return Subspace(m.field(), m.rows());
    return Subspace::image(m * s.basis().transpose());
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    auto ech = row_reduce(Matrix::hstack(m, Matrix::identity(m.field(), n)));
    if (ech.rank() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
        return std::nullopt;
    return ech.reduced.block(0, n, n, n);
}

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

inline Vec vec_add(const Field& f, Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = f.add(a[i], b[i]);
    return a;
}

inline Vec vec_scale(const Field& f, Vec a, Scalar s)
{
    for (auto& x : a)
        x = f.mul(x, s);
    return a;
}

inline Scalar dot(const Field& f, const Vec& a, const Vec& b)
{
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = (acc + unsigned(a[i]) * b[i]) % f.p();
    return static_cast<Scalar>(acc);
}

inline bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

/// Calls fn(v) for every vector of F_p^n in lexicographic order; caller enforces caps.
template <class Fn>
void for_each_vector(const Field& f, std::size_t n, Fn&& fn)
{
    Vec v(n, 0);
    while (true) {
        fn(static_cast<const Vec&>(v));
        std::size_t i = 0;
        while (i < n) {
            if (++v[i] < f.p())
                break;
            v[i] = 0;
            ++i;
        }
        if (i == n)
            return;
    }
}

/// p^n, saturating at `limit + 1` so callers can compare against caps without overflow.
inline unsigned long long bounded_power(unsigned p, std::size_t n, unsigned long long limit)
{
    unsigned long long r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= p;
        if (r > limit)
            return limit + 1;
    }
    return r;
}

}  // namespace auslander
