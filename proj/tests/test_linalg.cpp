#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace auslander;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng)
{
    Matrix m(f, r, c);
    std::uniform_int_distribution<unsigned> d(0, f.p() - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<Scalar>(d(rng));
    return m;
}

}  // namespace

TEST(RowReduce, ZeroMatrix)
{
    Field f(2);
    auto e = row_reduce(Matrix(f, 1, 1));
    EXPECT_TRUE(e.reduced.is_zero());
    EXPECT_TRUE(e.pivots.empty());
}

TEST(RowReduce, IdentityIsFixed)
{
    Field f(3);
    auto e = row_reduce(Matrix::identity(f, 2));
    EXPECT_EQ(e.reduced, Matrix::identity(f, 2));
    EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(RowReduce, HandExample)
{
    Field f(2);
    auto e = row_reduce(Matrix::from_rows(f, {{1, 1}, {1, 1}}, 2));
    EXPECT_EQ(e.reduced, Matrix::from_rows(f, {{1, 1}, {0, 0}}, 2));
    EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0}));
}

TEST(SolveLinear, Examples)
{
    Field f(2);
    EXPECT_EQ(solve_linear(Matrix::identity(f, 2), Vec{1, 0}), (Vec{1, 0}));
    EXPECT_EQ(solve_linear(Matrix::from_rows(f, {{1, 1}}, 2), Vec{1}), (Vec{1, 0}));
    EXPECT_FALSE(solve_linear(Matrix::from_rows(f, {{0, 0}}, 2), Vec{1}).has_value());
    EXPECT_THROW(solve_linear(Matrix::identity(f, 2), Vec{1}), InvariantViolation);
}

TEST(KernelBasis, Examples)
{
    Field f2(2), f3(3);
    EXPECT_EQ(kernel_basis(Matrix::identity(f2, 3)).dim(), 0u);
    auto k = kernel_basis(Matrix::from_rows(f2, {{1, 1}}, 2));
    EXPECT_EQ(k, Subspace::span(f2, 2, {Vec{1, 1}}));
    EXPECT_EQ(kernel_basis(Matrix(f3, 2, 2)), Subspace::full(f3, 2));
}

TEST(SubspaceAlgebra, Examples)
{
    Field f(2);
    auto full = Subspace::full(f, 2);
    auto s = subspace_algebra(full, full);
    EXPECT_EQ(s.sum, full);
    EXPECT_EQ(s.intersection, full);
    EXPECT_TRUE(s.contains);

    auto x = Subspace::span(f, 2, {Vec{1, 0}});
    auto y = Subspace::span(f, 2, {Vec{0, 1}});
    s = subspace_algebra(x, y);
    EXPECT_EQ(s.sum, full);
    EXPECT_EQ(s.intersection.dim(), 0u);
    EXPECT_FALSE(s.contains);

    auto u = Subspace::span(f, 2, {Vec{1, 1}});
    s = subspace_algebra(u, x);
    EXPECT_EQ(s.sum.dim() + s.intersection.dim(), 2u);
    EXPECT_EQ(s.quotient_reps.rows(), 1u);
}

TEST(SubspaceAlgebra, AmbientMismatchThrows)
{
    Field f(2);
    EXPECT_THROW(subspace_algebra(Subspace::full(f, 2), Subspace::full(f, 3)), InvariantViolation);
}

TEST(LinalgProperties, RandomMatrices)
{
    std::mt19937 rng(7);
    for (unsigned p : {2u, 3u, 5u}) {
        Field f(p);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t r = rng() % 6, c = rng() % 6;
            auto a = random_matrix(f, r, c, rng);
            auto e = row_reduce(a);
            EXPECT_EQ(row_reduce(e.reduced).reduced, e.reduced);
            auto k = kernel_basis(a);
            EXPECT_EQ(k.dim() + e.rank(), c);
            for (const auto& v : k.vectors())
                EXPECT_TRUE(is_zero(a.apply(v)));

            Vec b(r);
            for (auto& x : b)
                x = static_cast<Scalar>(rng() % p);
            auto x = solve_linear(a, b);
            if (x)
                EXPECT_EQ(a.apply(*x), b);
            else
                EXPECT_GT(rank(Matrix::hstack(a, Matrix::from_column_vectors(f, {b}, r))), e.rank());

            auto u = Subspace::row_span(random_matrix(f, rng() % 4, c, rng));
            auto w = Subspace::row_span(random_matrix(f, rng() % 4, c, rng));
            auto s = subspace_algebra(u, w);
            EXPECT_EQ(s.sum.dim() + s.intersection.dim(), u.dim() + w.dim());
            EXPECT_TRUE(s.sum.contains(u) && s.sum.contains(w));
            EXPECT_TRUE(u.contains(s.intersection) && w.contains(s.intersection));
        }
    }
}

TEST(Field, RejectsNonPrimes)
{
    EXPECT_THROW(Field(4), InputError);
    EXPECT_THROW(Field(1), InputError);
    EXPECT_NO_THROW(Field(5));
}
