#pragma once

// Ext^1 over a hereditary path algebra, computed from minimal projective
// presentations 0 -> P1 -> P0 -> Y -> 0. A class in Ext^1(Y, Z) is the coset of
// some h: P1 -> Z modulo the maps that extend over P0; the matching short exact
// sequence is the pushout of the presentation along h.

#include <memory>
#include <optional>
#include <vector>

#include "auslander/decompose.hpp"
#include "auslander/quiver.hpp"

namespace auslander {

/// Solves alpha o g = t for fixed alpha and source object; reuses the Hom basis across calls.
class Factorizer {
public:
    Factorizer(const Representation& source, RepMorphism alpha)
        : alpha_(std::move(alpha)), hs_(hom_space(source, alpha_.source()))
    {
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < hs_.dim(); ++k)
            cols.push_back((alpha_ * hs_.basis(k)).flatten());
        std::size_t len = 0;
        for (std::size_t i = 0; i < source.vertex_count(); ++i)
            len += alpha_.target().dim(i) * source.dim(i);
        a_ = Matrix::from_column_vectors(source.field(), cols, len);
    }

    [[nodiscard]] std::optional<RepMorphism> operator()(const RepMorphism& t) const
    {
        auto sol = solve_linear(a_, t.flatten());
        if (!sol)
            return std::nullopt;
        return hs_.element(*sol);
    }

    /// Image of Hom(source, alpha) inside the flattened Hom(source, target) coordinates.
    [[nodiscard]] const Matrix& columns() const { return a_; }
    [[nodiscard]] const HomSpace& domain() const { return hs_; }

private:
    RepMorphism alpha_;
    HomSpace hs_;
    Matrix a_;
};

struct ProjPresentation {
    Representation y;
    StdProjective p1;
    StdProjective p0;
    RepMorphism d1;  // P1 -> P0, mono
    RepMorphism d0;  // P0 -> Y, epi (projective cover)
};

inline ProjPresentation min_proj_presentation(const Representation& y)
{
    auto cover0 = projective_cover(y);
    auto ker = kernel(cover0.pi);
    auto cover1 = projective_cover(ker.object);
    // kQ is hereditary: the kernel of a projective cover is projective.
    ensure(cover1.pi.is_iso(), "min_proj_presentation: syzygy is not projective (quiver with relations?)");
    RepMorphism d1 = ker.inclusion * cover1.pi;
    ensure((cover0.pi * d1).is_zero() && d1.is_mono(), "min_proj_presentation: not exact");
    return {y, std::move(cover1.projective), std::move(cover0.projective), std::move(d1), std::move(cover0.pi)};
}

class ExtSpace {
public:
    ExtSpace() = default;
    ExtSpace(std::shared_ptr<const ProjPresentation> pres, Representation z) : pres_(std::move(pres)), z_(std::move(z))
    {
        require_same_category(pres_->y, z_, "ext_space");
        hom_p1_ = hom_space(pres_->p1.object, z_);
        auto hom_p0 = hom_space(pres_->p0.object, z_);
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < hom_p0.dim(); ++k)
            rows.push_back(hom_p1_.coordinates(hom_p0.basis(k) * pres_->d1));
        extendable_ = Subspace::span(z_.field(), hom_p1_.dim(), rows);
        reps_ = extendable_.free_columns();
        hom_y_dim_ = hom_space(pres_->y, z_).dim();
        // hereditary long exact sequence 0 -> Hom(Y,Z) -> Hom(P0,Z) -> Hom(P1,Z) -> Ext(Y,Z) -> 0
        ensure(dim() == hom_p1_.dim() - hom_p0.dim() + hom_y_dim_, "ext_space: dimension count fails");
    }

    [[nodiscard]] const Representation& y() const { return pres_->y; }
    [[nodiscard]] const Representation& z() const { return z_; }
    [[nodiscard]] const ProjPresentation& presentation() const { return *pres_; }
    [[nodiscard]] const std::shared_ptr<const ProjPresentation>& presentation_ptr() const { return pres_; }
    [[nodiscard]] std::size_t dim() const { return reps_.size(); }
    [[nodiscard]] const Field& field() const { return z_.field(); }
    [[nodiscard]] std::size_t hom_dim() const { return hom_y_dim_; }

    /// Representative P1 -> Z of the k-th basis class.
    [[nodiscard]] RepMorphism representative(std::size_t k) const { return hom_p1_.basis(reps_.at(k)); }

    [[nodiscard]] RepMorphism representative(const Vec& coords) const
    {
        ensure(coords.size() == dim(), "ext: coordinate length mismatch");
        Vec full(hom_p1_.dim(), 0);
        for (std::size_t k = 0; k < coords.size(); ++k)
            full[reps_[k]] = coords[k];
        return hom_p1_.element(full);
    }

    /// Class of h: P1 -> Z.
    [[nodiscard]] Vec class_of(const RepMorphism& h) const
    {
        return extendable_.quotient_coordinates(hom_p1_.coordinates(h));
    }

private:
    std::shared_ptr<const ProjPresentation> pres_;
    Representation z_;
    HomSpace hom_p1_;
    Subspace extendable_;  // image of Hom(P0, Z) in Hom(P1, Z) coordinates
    std::vector<std::size_t> reps_;
    std::size_t hom_y_dim_ = 0;
};

inline ExtSpace ext_space(const Representation& y, const Representation& z)
{
    return ExtSpace(std::make_shared<const ProjPresentation>(min_proj_presentation(y)), z);
}

struct ShortExactSeq {
    Representation kernel;
    Representation middle;
    Representation cokernel;
    RepMorphism iota;   // kernel -> middle
    RepMorphism alpha;  // middle -> cokernel

    void validate() const
    {
        ensure(iota.source() == kernel && iota.target() == middle && alpha.source() == middle &&
                   alpha.target() == cokernel,
               "short exact sequence: endpoints mismatch");
        ensure(iota.is_mono(), "short exact sequence: first map is not mono");
        ensure(alpha.is_epi(), "short exact sequence: second map is not epi");
        ensure((alpha * iota).is_zero(), "short exact sequence: composite is nonzero");
        ensure(kernel.total_dim() + cokernel.total_dim() == middle.total_dim(),
               "short exact sequence: not exact in the middle");
    }
};

/// 0 -> Ker(alpha) -> X -> Y -> 0 for an epimorphism alpha.
inline ShortExactSeq sequence_of_epi(const RepMorphism& alpha)
{
    if (!alpha.is_epi())
        throw InputError("sequence_of_epi: morphism is not an epimorphism");
    auto k = kernel(alpha);
    ShortExactSeq xi{k.object, alpha.source(), alpha.target(), k.inclusion, alpha};
    xi.validate();
    return xi;
}

struct Pushout {
    Representation object;
    RepMorphism from_z;  // Z -> E
    RepMorphism from_b;  // B -> E
};

/// Pushout of iota: A -> B along u: A -> Z, built as (Z + B)/{(u a, -iota a)}.
inline Pushout pushout(const RepMorphism& iota, const RepMorphism& u)
{
    ensure(iota.source() == u.source(), "pushout: maps do not share a source");
    auto sum = direct_sum(iota.source().quiver(), iota.field(), {u.target(), iota.target()});
    RepMorphism rel = sum.injections[0] * u - sum.injections[1] * iota;
    std::vector<Subspace> img;
    for (std::size_t i = 0; i < sum.object.vertex_count(); ++i)
        img.push_back(Subspace::image(rel.component(i)));
    auto q = quotient(sum.object, img);
    return {q.object, q.projection * sum.injections[0], q.projection * sum.injections[1]};
}

/// u.xi for u: K' -> Z.
inline ShortExactSeq pushout_ext(const RepMorphism& u, const ShortExactSeq& xi)
{
    if (!(u.source() == xi.kernel))
        throw InputError("pushout_ext: map does not start at the kernel of the sequence");
    auto sum = direct_sum(u.source().quiver(), u.field(), {u.target(), xi.middle});
    RepMorphism rel = sum.injections[0] * u - sum.injections[1] * xi.iota;
    std::vector<Subspace> img;
    for (std::size_t i = 0; i < sum.object.vertex_count(); ++i)
        img.push_back(Subspace::image(rel.component(i)));
    auto q = quotient(sum.object, img);
    RepMorphism to_y = induced_from_quotient(q, xi.alpha * sum.projections[1]);
    ShortExactSeq out{u.target(), q.object, xi.cokernel, q.projection * sum.injections[0], to_y};
    out.validate();
    return out;
}

/// xi.t for t: T -> Y, built as the kernel of (alpha, -t): X + T -> Y.
inline ShortExactSeq pullback_ext(const ShortExactSeq& xi, const RepMorphism& t)
{
    if (!(t.target() == xi.cokernel))
        throw InputError("pullback_ext: map does not end at the cokernel of the sequence");
    auto sum = direct_sum(t.source().quiver(), t.field(), {xi.middle, t.source()});
    RepMorphism rel = xi.alpha * sum.projections[0] - t * sum.projections[1];
    auto k = kernel(rel);
    RepMorphism iota = factor_through_mono(sum.injections[0] * xi.iota, k.inclusion);
    ShortExactSeq out{xi.kernel, k.object, t.source(), iota, sum.projections[1] * k.inclusion};
    out.validate();
    return out;
}

/// Sequence with class `coords`: the pushout of the presentation of Y along the representative.
inline ShortExactSeq realize_ext(const ExtSpace& space, const Vec& coords)
{
    const auto& pres = space.presentation();
    auto h = space.representative(coords);
    auto po = pushout(pres.d1, h);
    // E -> Y induced by (0, d0) on Z + P0.
    auto sum = direct_sum(h.source().quiver(), h.field(), {h.target(), pres.p0.object});
    RepMorphism rel = sum.injections[0] * h - sum.injections[1] * pres.d1;
    std::vector<Subspace> img;
    for (std::size_t i = 0; i < sum.object.vertex_count(); ++i)
        img.push_back(Subspace::image(rel.component(i)));
    auto q = quotient(sum.object, img);
    RepMorphism to_y = induced_from_quotient(q, pres.d0 * sum.projections[1]);
    ShortExactSeq xi{space.z(), q.object, space.y(), q.projection * sum.injections[0], to_y};
    xi.validate();
    return xi;
}

/// h: P1 -> K' with xi = h.(presentation); needs xi.cokernel to be literally pres.y.
inline RepMorphism class_representative(const ProjPresentation& pres, const ShortExactSeq& xi)
{
    if (!(xi.cokernel == pres.y))
        throw InputError("ses_to_class: the sequence ends at a different object than the presentation");
    auto g = factor_through(pres.d0, xi.alpha);
    ensure(g.has_value(), "ses_to_class: no lift of the projective cover (sequence not exact)");
    return factor_through_mono(*g * pres.d1, xi.iota);
}

inline Vec ses_to_class(const ExtSpace& space, const ShortExactSeq& xi)
{
    if (!(xi.kernel == space.z()))
        throw InputError("ses_to_class: the sequence starts at a different object than the Ext space");
    return space.class_of(class_representative(space.presentation(), xi));
}

/// A linear map between coordinate spaces with the bases it is written in.
struct ConnectingMap {
    Matrix matrix;     // rows: target coordinates, cols: source coordinates
    Subspace image;    // in target coordinates
    Subspace kernel;   // in source coordinates
};

inline ConnectingMap make_connecting_map(const Field& f, std::size_t rows, const std::vector<Vec>& cols)
{
    Matrix m = Matrix::from_column_vectors(f, cols, rows);
    return {m, Subspace::image(m), kernel_basis(m)};
}

/// c(xi, Z): Hom(K', Z) -> Ext^1(Y, Z), u |-> [u.xi]. `ext` must be Ext^1(xi.cokernel, Z).
inline ConnectingMap connecting_right(const ShortExactSeq& xi, const ExtSpace& ext)
{
    auto h = class_representative(ext.presentation(), xi);
    auto hom = hom_space(xi.kernel, ext.z());
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < hom.dim(); ++k)
        cols.push_back(ext.class_of(hom.basis(k) * h));
    return make_connecting_map(ext.field(), ext.dim(), cols);
}

inline ConnectingMap connecting_right(const ShortExactSeq& xi, const Representation& z)
{
    return connecting_right(xi, ext_space(xi.cokernel, z));
}

/// c(Z, xi): Hom(Z, Y) -> Ext^1(Z, K'), t |-> [xi.t]. `ext` must be Ext^1(Z, xi.kernel).
inline ConnectingMap connecting_left(const ExtSpace& ext, const ShortExactSeq& xi)
{
    const auto& pres = ext.presentation();
    ensure(ext.z() == xi.kernel, "connecting_left: Ext space does not end at the kernel of the sequence");
    auto hom = hom_space(pres.y, xi.cokernel);
    Factorizer lift(pres.p0.object, xi.alpha);
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < hom.dim(); ++k) {
        auto g = lift(hom.basis(k) * pres.d0);
        ensure(g.has_value(), "connecting_left: projective does not lift");
        cols.push_back(ext.class_of(factor_through_mono(*g * pres.d1, xi.iota)));
    }
    return make_connecting_map(ext.field(), ext.dim(), cols);
}

inline ConnectingMap connecting_left(const Representation& z, const ShortExactSeq& xi)
{
    return connecting_left(ext_space(z, xi.kernel), xi);
}

/// <d, e> = sum d_i e_i - sum over arrows a: i -> j of d_i e_j.
inline long long euler_form(const Quiver& q, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e)
{
    long long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += static_cast<long long>(d[i] * e[i]);
    for (const auto& a : q.arrows())
        s -= static_cast<long long>(d[a.source] * e[a.target]);
    return s;
}

}  // namespace auslander
