#pragma once

// Auslander-Reiten translation through the Nakayama functor, stable Hom, and the
// bilinear form Ext^1(Y, tau C) x stable Hom(C, Y) -> k realizing AR duality.

#include <optional>
#include <vector>

#include "auslander/algebra.hpp"
#include "auslander/decompose.hpp"
#include "auslander/ext.hpp"

namespace auslander {

/// I(socles[0]) + I(socles[1]) + ... in dual path bases.
struct StdInjective {
    Representation object;
    std::vector<std::size_t> socles;
    DirectSum sum;
};

inline StdInjective standard_injective(QuiverPtr q, Field f, std::vector<std::size_t> socles)
{
    std::vector<Representation> parts;
    for (auto i : socles)
        parts.push_back(injective_rep(q, f, i));
    auto sum = direct_sum(q, f, parts);
    return {sum.object, std::move(socles), std::move(sum)};
}

inline StdInjective nakayama(const StdProjective& p)
{
    return standard_injective(p.object.quiver(), p.object.field(), p.tops);
}

namespace detail {

/// Offset of summand k's block at vertex j inside a direct sum.
inline std::size_t block_offset(const DirectSum& s, std::size_t k, std::size_t j)
{
    std::size_t off = 0;
    for (std::size_t m = 0; m < k; ++m)
        off += s.injections[m].source().dim(j);
    return off;
}

}  // namespace detail

/// nu(g): nu P -> nu P' for g: P -> P' between standard projectives.
/// The path map f_s: P(i) -> P(l), e_i |-> s (s: l -> i), goes to t* |-> t'* when t = t' s, else 0.
inline RepMorphism nakayama(const RepMorphism& g, const StdProjective& p, const StdProjective& pp,
                            const StdInjective& np, const StdInjective& npp)
{
    ensure(g.source() == p.object && g.target() == pp.object, "nakayama: morphism does not match projectives");
    const auto& q = p.object.quiver();
    const Field& f = g.field();
    const std::size_t n = q->vertex_count();
    std::vector<Matrix> comps;
    for (std::size_t x = 0; x < n; ++x)
        comps.emplace_back(f, npp.object.dim(x), np.object.dim(x));
    auto tops = images_of_tops(p, g);
    for (std::size_t k = 0; k < p.tops.size(); ++k) {
        const std::size_t i = p.tops[k];
        for (std::size_t l = 0; l < pp.tops.size(); ++l) {
            const std::size_t src = pp.tops[l];
            const auto& spaths = q->paths_between(src, i);
            const std::size_t soff = detail::block_offset(pp.sum, l, i);
            for (std::size_t si = 0; si < spaths.size(); ++si) {
                const Scalar c = tops[k][soff + si];
                if (!c)
                    continue;
                const auto& s = q->paths()[spaths[si]].arrows;
                for (std::size_t x = 0; x < n; ++x) {
                    const auto& ts = q->paths_between(x, i);
                    const std::size_t coff = detail::block_offset(np.sum, k, x);
                    const std::size_t roff = detail::block_offset(npp.sum, l, x);
                    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
                        const auto& t = q->paths()[ts[ti]].arrows;
                        if (t.size() < s.size() || !std::equal(s.begin(), s.end(), t.end() - static_cast<std::ptrdiff_t>(s.size())))
                            continue;
                        std::vector<std::size_t> prefix(t.begin(), t.end() - static_cast<std::ptrdiff_t>(s.size()));
                        const std::size_t r = q->path_position(x, src, prefix);
                        auto& m = comps[x];
                        m(roff + r, coff + ti) = f.add(m(roff + r, coff + ti), c);
                    }
                }
            }
        }
    }
    return RepMorphism(np.object, npp.object, std::move(comps));
}

/// Trace form on Hom(Q, nu Q): sum over summands of the e_i* coefficient of theta(e_i).
inline Scalar trace_pairing(const RepMorphism& theta, const StdProjective& p, const StdInjective& np)
{
    const Field& f = theta.field();
    Scalar t = 0;
    for (std::size_t k = 0; k < p.tops.size(); ++k) {
        const std::size_t i = p.tops[k];
        // the trivial path is the only path i -> i, so it opens summand k's block
        t = f.add(t, theta.component(i)(detail::block_offset(np.sum, k, i), p.top_position(k)));
    }
    return t;
}

struct TauData {
    std::shared_ptr<const ProjPresentation> pres;  // of X
    StdInjective nu1, nu0;
    RepMorphism nu_d1;                             // nu P1 -> nu P0
    SubRepresentation tau;                         // Ker(nu d1) with inclusion into nu P1
};

inline TauData tau_data(std::shared_ptr<const ProjPresentation> pres)
{
    auto nu1 = nakayama(pres->p1);
    auto nu0 = nakayama(pres->p0);
    auto nd1 = nakayama(pres->d1, pres->p1, pres->p0, nu1, nu0);
    auto k = kernel(nd1);
    return {std::move(pres), std::move(nu1), std::move(nu0), std::move(nd1), std::move(k)};
}

inline TauData tau_data(const Representation& x)
{
    return tau_data(std::make_shared<const ProjPresentation>(min_proj_presentation(x)));
}

inline Representation tau(const Representation& x) { return tau_data(x).tau.object; }

/// tau(g): tau X -> tau X' by lifting g to the presentations and applying nu.
inline RepMorphism tau_morphism(const RepMorphism& g, const TauData& tx, const TauData& ty)
{
    ensure(g.source() == tx.pres->y && g.target() == ty.pres->y, "tau_morphism: endpoints do not match");
    auto g0 = factor_through(g * tx.pres->d0, ty.pres->d0);
    ensure(g0.has_value(), "tau_morphism: no lift to the projective covers");
    auto g1 = factor_through_mono(*g0 * tx.pres->d1, ty.pres->d1);
    auto ng1 = nakayama(g1, tx.pres->p1, ty.pres->p1, tx.nu1, ty.nu1);
    return factor_through_mono(ng1 * tx.tau.inclusion, ty.tau.inclusion);
}

inline RepMorphism tau_morphism(const RepMorphism& g)
{
    return tau_morphism(g, tau_data(g.source()), tau_data(g.target()));
}

/// tau^{-1} X = D tau_{Q^op} D X.
inline Representation tau_inverse(const Representation& x)
{
    auto op = x.quiver()->opposite();
    return dual(tau(dual(x, op)), x.quiver());
}

/// P(C, Y) = Im Hom(C, pi) for the projective cover pi: P -> Y, in Hom(C, Y) coordinates.
inline Subspace projectively_trivial_subspace(const HomSpace& hom, const RepMorphism& pi)
{
    std::vector<Vec> rows;
    for (const auto& g : hom_basis(hom.source(), pi.source()))
        rows.push_back(hom.coordinates(pi * g));
    return Subspace::span(hom.source().field(), hom.dim(), rows);
}

inline Subspace projectively_trivial_subspace(const Representation& c, const Representation& y)
{
    return projectively_trivial_subspace(hom_space(c, y), projective_cover(y).pi);
}

/// Sum over vertices of Im(Hom(P(i), Y) o Hom(C, P(i))); an independent description of P(C, Y).
inline Subspace projectively_trivial_by_vertices(const Representation& c, const Representation& y)
{
    auto hom = hom_space(c, y);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < c.vertex_count(); ++i) {
        auto p = projective_rep(c.quiver(), c.field(), i);
        for (const auto& a : hom_basis(c, p))
            for (const auto& b : hom_basis(p, y))
                rows.push_back(hom.coordinates(b * a));
    }
    return Subspace::span(c.field(), hom.dim(), rows);
}

class StableHomSpace {
public:
    StableHomSpace() = default;
    StableHomSpace(HomSpace hom, Subspace trivial) : hom_(std::move(hom)), trivial_(std::move(trivial))
    {
        free_ = trivial_.free_columns();
    }

    [[nodiscard]] const HomSpace& hom() const { return hom_; }
    [[nodiscard]] const Subspace& trivial() const { return trivial_; }
    [[nodiscard]] std::size_t dim() const { return free_.size(); }
    [[nodiscard]] const Representation& source() const { return hom_.source(); }
    [[nodiscard]] const Representation& target() const { return hom_.target(); }

    [[nodiscard]] RepMorphism representative(std::size_t k) const { return hom_.basis(free_.at(k)); }

    [[nodiscard]] RepMorphism representative(const Vec& c) const
    {
        ensure(c.size() == dim(), "stable hom: coordinate length mismatch");
        Vec full(hom_.dim(), 0);
        for (std::size_t k = 0; k < c.size(); ++k)
            full[free_[k]] = c[k];
        return hom_.element(full);
    }

    [[nodiscard]] Vec class_of(const RepMorphism& f) const { return class_of_coordinates(hom_.coordinates(f)); }
    [[nodiscard]] Vec class_of_coordinates(const Vec& c) const { return trivial_.quotient_coordinates(c); }

    /// Image in stable coordinates of a subspace of Hom(C, Y).
    [[nodiscard]] Subspace image_of(const Subspace& s) const
    {
        std::vector<Vec> rows;
        for (const auto& v : s.vectors())
            rows.push_back(class_of_coordinates(v));
        return Subspace::span(hom_.source().field(), dim(), rows);
    }

private:
    HomSpace hom_;
    Subspace trivial_;
    std::vector<std::size_t> free_;
};

inline StableHomSpace stable_hom(const Representation& c, const Representation& y)
{
    auto hom = hom_space(c, y);
    auto triv = projectively_trivial_subspace(hom, projective_cover(y).pi);
    return StableHomSpace(std::move(hom), std::move(triv));
}

/// Stable Hom(C, Y) as a left End(C)^op-module: g acts by f |-> f o g.
struct StableHomModule {
    EndoAlgebra gamma;  // End(C); the module is over its opposite
    StableHomSpace space;
    FDModule module;
};

inline StableHomModule stablehom_as_gammaop_module(StableHomSpace sh, EndoAlgebra gamma)
{
    ensure(gamma.object == sh.source(), "stablehom module: algebra is not End of the source");
    const Field& f = sh.source().field();
    for (const auto& g : gamma.hom.basis())
        for (const auto& t : sh.trivial().vectors())
            ensure(sh.trivial().contains(sh.hom().coordinates(sh.hom().element(t) * g)),
                   "stablehom module: projectively trivial maps are not closed under precomposition");
    std::vector<Matrix> action;
    for (const auto& g : gamma.hom.basis()) {
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < sh.dim(); ++k)
            cols.push_back(sh.class_of(sh.representative(k) * g));
        action.push_back(Matrix::from_column_vectors(f, cols, sh.dim()));
    }
    FDModule m(gamma.algebra.opposite(), sh.dim(), std::move(action));
    return {std::move(gamma), std::move(sh), std::move(m)};
}

inline StableHomModule stablehom_as_gammaop_module(const Representation& c, const Representation& y)
{
    return stablehom_as_gammaop_module(stable_hom(c, y), endo_algebra(c));
}

/// B[x, f] = eps_C([xi_x . f]) on Ext^1(Y, tau C) x stable Hom(C, Y).
class PairingForm {
public:
    PairingForm(TauData tc, ExtSpace ext, StableHomSpace sh) : tc_(std::move(tc)), ext_(std::move(ext)), sh_(std::move(sh))
    {
        ensure(ext_.z() == tc_.tau.object && sh_.source() == tc_.pres->y && sh_.target() == ext_.y(),
               "pairing: spaces do not match C, Y and tau C");
        lift_.emplace(tc_.pres->p0.object, ext_.presentation().d0);
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < sh_.dim(); ++k)
            cols.push_back(column(sh_.representative(k)));
        b_ = Matrix::from_column_vectors(ext_.field(), cols, ext_.dim());
    }

    [[nodiscard]] const Matrix& matrix() const { return b_; }
    [[nodiscard]] const ExtSpace& ext() const { return ext_; }
    [[nodiscard]] const StableHomSpace& stable() const { return sh_; }
    [[nodiscard]] const TauData& tau_c() const { return tc_; }
    [[nodiscard]] const Representation& c() const { return tc_.pres->y; }
    [[nodiscard]] const Representation& y() const { return ext_.y(); }
    [[nodiscard]] const Representation& k() const { return tc_.tau.object; }

    /// eps_C on a representative h: Q1 -> tau C of a class in Ext^1(C, tau C).
    [[nodiscard]] Scalar epsilon(const RepMorphism& h) const
    {
        return trace_pairing(tc_.tau.inclusion * h, tc_.pres->p1, tc_.nu1);
    }

    /// The map Q1 -> P1 induced on presentations by f: C -> Y.
    [[nodiscard]] RepMorphism lift_to_syzygy(const RepMorphism& f) const
    {
        const auto& q = *tc_.pres;
        const auto& p = ext_.presentation();
        auto g0 = (*lift_)(f * q.d0);
        ensure(g0.has_value(), "pairing: projective cover does not lift");
        return factor_through_mono(*g0 * q.d1, p.d1);
    }

    /// (B[e_0, f], ..., B[e_{n-1}, f]) for any f in Hom(C, Y).
    [[nodiscard]] Vec column(const RepMorphism& f) const
    {
        auto g1 = lift_to_syzygy(f);
        Vec out(ext_.dim());
        for (std::size_t k = 0; k < ext_.dim(); ++k)
            out[k] = epsilon(ext_.representative(k) * g1);
        return out;
    }

    [[nodiscard]] Scalar value(const Vec& x, const Vec& fbar) const { return dot(ext_.field(), x, b_.apply(fbar)); }

    /// L^perp inside stable Hom(C, Y).
    [[nodiscard]] Subspace perp(const Subspace& l) const
    {
        std::vector<Vec> rows;
        Matrix bt = b_.transpose();
        for (const auto& x : l.vectors())
            rows.push_back(bt.apply(x));
        return kernel_basis(Matrix::from_row_vectors(ext_.field(), rows, sh_.dim()));
    }

    /// H^perp inside Ext^1(Y, tau C).
    [[nodiscard]] Subspace perp_ext(const Subspace& h) const
    {
        std::vector<Vec> rows;
        for (const auto& v : h.vectors())
            rows.push_back(b_.apply(v));
        return kernel_basis(Matrix::from_row_vectors(ext_.field(), rows, ext_.dim()));
    }

private:
    TauData tc_;
    ExtSpace ext_;
    StableHomSpace sh_;
    std::optional<Factorizer> lift_;
    Matrix b_;
};

/// Checks the identities the form must satisfy; throws InvariantViolation on failure.
inline void check_pairing(const PairingForm& b, const EndoAlgebra& gamma_c)
{
    const Field& f = b.ext().field();
    const auto& m = b.matrix();
    ensure(m.rows() == m.cols(), "pairing: dim Ext^1(Y, tau C) differs from dim stable Hom(C, Y)");
    ensure(rank(m) == m.rows(), "pairing: form is degenerate");
    const auto& sh = b.stable();
    for (const auto& t : sh.trivial().vectors())
        ensure(is_zero(b.column(sh.hom().element(t))), "pairing: does not vanish on projectively trivial maps");
    // balance: B[tau(g) . x, f] = B[x, f o g]
    auto tc = b.tau_c();
    for (const auto& g : gamma_c.hom.basis()) {
        auto tg = tau_morphism(g, tc, tc);
        Matrix act(f, b.ext().dim(), b.ext().dim());
        for (std::size_t k = 0; k < b.ext().dim(); ++k) {
            auto col = b.ext().class_of(tg * b.ext().representative(k));
            for (std::size_t r = 0; r < col.size(); ++r)
                act(r, k) = col[r];
        }
        for (std::size_t j = 0; j < sh.dim(); ++j) {
            Vec lhs = act.transpose().apply(m.column(j));
            Vec rhs = b.column(sh.representative(j) * g);
            ensure(lhs == rhs, "pairing: Gamma-balance fails");
        }
    }
}

struct PairingOptions {
    DecomposeOptions decompose;
    bool check = true;
};

inline PairingForm ar_pairing(const Representation& c, const Representation& y, const PairingOptions& opt = {})
{
    require_same_category(c, y, "ar_pairing");
    auto d = decompose(c, opt.decompose);
    for (const auto& s : d.summands)
        if (is_projective(s.object))
            throw InputError("ar_pairing: C has a projective direct summand");
    auto tc = tau_data(c);
    auto ext = ext_space(y, tc.tau.object);
    PairingForm b(std::move(tc), std::move(ext), stable_hom(c, y));
    if (opt.check)
        check_pairing(b, endo_algebra(c));
    return b;
}

}  // namespace auslander
