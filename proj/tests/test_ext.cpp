#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace auslander;
using fixtures::A2;
using fixtures::A3;

namespace {

Vec random_vec(const Field& f, std::size_t n, std::mt19937& rng)
{
    Vec v(n);
    for (auto& x : v)
        x = static_cast<Scalar>(rng() % f.p());
    return v;
}

RepMorphism random_hom(const Representation& x, const Representation& y, std::mt19937& rng)
{
    auto hs = hom_space(x, y);
    return hs.element(random_vec(x.field(), hs.dim(), rng));
}

}  // namespace

TEST(Presentation, Examples)
{
    A2 a;
    auto pp = min_proj_presentation(a.P1);
    EXPECT_TRUE(pp.p1.object.is_zero());
    EXPECT_TRUE(pp.d0.is_iso());

    auto ps = min_proj_presentation(a.S1);
    EXPECT_EQ(ps.p1.object, a.S2);
    EXPECT_EQ(ps.p0.object, a.P1);

    A3 b;
    auto p2 = min_proj_presentation(b.S2);
    EXPECT_EQ(p2.p1.object, b.P3);
    EXPECT_EQ(p2.p0.object, b.P2);
}

TEST(ExtSpace, A2Dimensions)
{
    A2 a;
    EXPECT_EQ(ext_space(a.S1, a.S2).dim(), 1u);
    EXPECT_EQ(ext_space(a.P1, a.S2).dim(), 0u);
    EXPECT_EQ(ext_space(a.S1, a.S1).dim(), 0u);
}

TEST(ExtSpace, EulerForm)
{
    A3 a;
    std::vector<Representation> xs{a.S1, a.S2, a.S3, a.P1, a.P2, injective_rep(a.q, a.f, 1),
                                   direct_sum({a.S1, a.S2}).object};
    for (const auto& y : xs)
        for (const auto& z : xs) {
            long long lhs = static_cast<long long>(hom_space(y, z).dim()) - static_cast<long long>(ext_space(y, z).dim());
            EXPECT_EQ(lhs, euler_form(*a.q, y.dims(), z.dims()));
        }
}

TEST(Realize, A2Sequences)
{
    A2 a;
    auto e = ext_space(a.S1, a.S2);
    auto split = realize_ext(e, Vec{0});
    EXPECT_TRUE(is_isomorphic(split.middle, direct_sum({a.S2, a.S1}).object));
    auto ar = realize_ext(e, Vec{1});
    EXPECT_TRUE(is_isomorphic(ar.middle, a.P1));
    EXPECT_EQ(ses_to_class(e, ar), (Vec{1}));
    EXPECT_EQ(ses_to_class(e, split), (Vec{0}));
}

TEST(Realize, RoundTripAndPushoutIdentity)
{
    A3 a;
    std::mt19937 rng(3);
    auto y = direct_sum({a.S1, a.S2}).object;
    auto z = direct_sum({a.S2, a.S3, a.S3}).object;
    auto e = ext_space(y, z);
    ASSERT_GT(e.dim(), 0u);
    for (int t = 0; t < 30; ++t) {
        auto x = random_vec(a.f, e.dim(), rng);
        auto xi = realize_ext(e, x);
        EXPECT_EQ(ses_to_class(e, xi), x);
        EXPECT_EQ(ses_to_class(e, pushout_ext(RepMorphism::identity(z), xi)), x);
        EXPECT_EQ(ses_to_class(e, pushout_ext(RepMorphism::zero(z, z), xi)), Vec(e.dim(), 0));
        EXPECT_EQ(ses_to_class(e, pullback_ext(xi, RepMorphism::identity(y))), x);
        EXPECT_EQ(ses_to_class(e, pullback_ext(xi, RepMorphism::zero(y, y))), Vec(e.dim(), 0));
    }
}

TEST(Realize, CokernelMustBeLiterallyEqual)
{
    A2 a;
    auto xi = realize_ext(ext_space(a.S1, a.S2), Vec{1});
    EXPECT_THROW(ses_to_class(ext_space(a.P1, a.S2), xi), InputError);
    EXPECT_THROW(ses_to_class(ext_space(a.S1, a.S1), xi), InputError);
}

TEST(Yoneda, BilinearityAndFunctoriality)
{
    A3 a;
    std::mt19937 rng(5);
    auto y = direct_sum({a.S1, a.S2}).object;
    auto k = direct_sum({a.S2, a.S3}).object;
    auto z = direct_sum({a.S3, a.S2}).object;
    auto w = direct_sum({a.S3, a.P3}).object;
    auto eyk = ext_space(y, k);
    auto eyz = ext_space(y, z);
    auto eyw = ext_space(y, w);
    for (int t = 0; t < 20; ++t) {
        auto xi = realize_ext(eyk, random_vec(a.f, eyk.dim(), rng));
        auto u1 = random_hom(k, z, rng), u2 = random_hom(k, z, rng);
        auto v = random_hom(z, w, rng);
        auto c = [&](const ExtSpace& e, const ShortExactSeq& s) { return ses_to_class(e, s); };
        EXPECT_EQ(c(eyz, pushout_ext(u1 + u2, xi)),
                  vec_add(a.f, c(eyz, pushout_ext(u1, xi)), c(eyz, pushout_ext(u2, xi))));
        EXPECT_EQ(c(eyw, pushout_ext(v * u1, xi)), c(eyw, pushout_ext(v, pushout_ext(u1, xi))));

        auto s = random_hom(a.S2, y, rng);
        auto es = ext_space(a.S2, k);
        auto ezs = ext_space(a.S2, z);
        auto t1 = random_hom(a.S2, y, rng);
        EXPECT_EQ(c(es, pullback_ext(xi, s + t1)),
                  vec_add(a.f, c(es, pullback_ext(xi, s)), c(es, pullback_ext(xi, t1))));
        // mixed: (u.xi).s = u.(xi.s)
        EXPECT_EQ(c(ezs, pullback_ext(pushout_ext(u1, xi), s)), c(ezs, pushout_ext(u1, pullback_ext(xi, s))));
    }
}

TEST(Connecting, A2Examples)
{
    A2 a;
    auto e = ext_space(a.S1, a.S2);
    auto ar = realize_ext(e, Vec{1});
    auto split = realize_ext(e, Vec{0});

    auto cr = connecting_right(ar, a.S2);
    EXPECT_EQ(cr.matrix, Matrix::identity(a.f, 1));
    EXPECT_TRUE(connecting_right(split, a.S2).matrix.is_zero());

    auto cl = connecting_left(a.S1, ar);
    EXPECT_EQ(cl.kernel.dim(), 0u);
    EXPECT_TRUE(connecting_left(a.S1, split).matrix.is_zero());
}

TEST(Connecting, KernelOfLeftIsImageOfHom)
{
    A3 a;
    std::mt19937 rng(9);
    auto y = direct_sum({a.S1, a.S2, a.P2}).object;
    auto k = direct_sum({a.S2, a.S3}).object;
    auto eyk = ext_space(y, k);
    for (int t = 0; t < 15; ++t) {
        auto xi = realize_ext(eyk, random_vec(a.f, eyk.dim(), rng));
        for (const auto& z : {a.S1, a.S2, a.P1, injective_rep(a.q, a.f, 1)}) {
            auto cl = connecting_left(z, xi);
            auto hzy = hom_space(z, y);
            auto hzx = hom_space(z, xi.middle);
            std::vector<RepMorphism> imgs;
            for (const auto& g : hzx.basis())
                imgs.push_back(xi.alpha * g);
            EXPECT_EQ(cl.kernel, hzy.span_of(imgs));
        }
    }
}
