#pragma once

// Krull-Schmidt decomposition by Fitting-lemma splitting, isomorphism tests
// and membership in add K.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "auslander/quiver.hpp"

namespace auslander {

struct DecomposeOptions {
    /// Largest End(X) size p^{dim End} that may be enumerated exhaustively.
    unsigned long long max_enumeration = 1ull << 16;
};

struct Summand {
    Representation object;
    RepMorphism inclusion;   // summand -> X
    RepMorphism projection;  // X -> summand
};

struct IsoClass {
    std::size_t representative;  // index into summands
    std::size_t multiplicity;
};

struct Decomposition {
    std::vector<Summand> summands;
    std::vector<IsoClass> classes;
    std::vector<std::size_t> class_of;  // summand index -> class index
};

inline RepMorphism power(const RepMorphism& u, std::size_t n)
{
    RepMorphism result = RepMorphism::identity(u.source());
    RepMorphism base = u;
    while (n) {
        if (n & 1)
            result = base * result;
        base = base * base;
        n >>= 1;
    }
    return result;
}

namespace detail {

/// Splits X = Ker(u^N) + Im(u^N) when u is neither nilpotent nor invertible.
inline std::optional<std::pair<Summand, Summand>> fitting_split(const RepMorphism& u)
{
    const auto& x = u.source();
    auto un = power(u, x.total_dim());
    if (un.is_zero() || un.is_iso())
        return std::nullopt;
    std::vector<Subspace> ker, im;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        ker.push_back(kernel_basis(un.component(i)));
        im.push_back(Subspace::image(un.component(i)));
    }
    auto k = subrepresentation(x, ker);
    auto m = subrepresentation(x, im);
    std::vector<Matrix> pk, pm;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        auto inv = inverse(Matrix::hstack(k.inclusion.component(i), m.inclusion.component(i)));
        ensure(inv.has_value(), "fitting_split: kernel and image are not complementary");
        pk.push_back(inv->block(0, 0, ker[i].dim(), x.dim(i)));
        pm.push_back(inv->block(ker[i].dim(), 0, im[i].dim(), x.dim(i)));
    }
    return std::make_pair(Summand{k.object, k.inclusion, RepMorphism(x, k.object, std::move(pk))},
                          Summand{m.object, m.inclusion, RepMorphism(x, m.object, std::move(pm))});
}

inline std::optional<std::pair<Summand, Summand>> find_split(const Representation& x, const DecomposeOptions& opt)
{
    auto end = hom_space(x, x);
    const std::size_t d = end.dim();
    if (d <= 1)
        return std::nullopt;
    auto basis = end.basis();
    for (const auto& b : basis)
        if (auto s = fitting_split(b))
            return s;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (auto s = fitting_split(basis[i] + basis[j]))
                return s;
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<unsigned> coin(0, x.field().p() - 1);
    for (int trial = 0; trial < 64; ++trial) {
        Vec c(d);
        for (auto& v : c)
            v = static_cast<Scalar>(coin(rng));
        if (auto s = fitting_split(end.element(c)))
            return s;
    }
    if (bounded_power(x.field().p(), d, opt.max_enumeration) > opt.max_enumeration)
        throw CapExceeded("decomposition cap: |End(X)| = " + std::to_string(x.field().p()) + "^" + std::to_string(d) +
                          " exceeds the enumeration limit");
    std::optional<std::pair<Summand, Summand>> found;
    for_each_vector(x.field(), d, [&](const Vec& c) {
        if (!found && !is_zero(c))
            found = fitting_split(end.element(c));
    });
    return found;
}

inline void split_recursive(const Summand& piece, const DecomposeOptions& opt, std::vector<Summand>& out)
{
    if (piece.object.is_zero())
        return;
    auto s = find_split(piece.object, opt);
    if (!s) {
        out.push_back(piece);
        return;
    }
    for (const auto& part : {s->first, s->second})
        split_recursive({part.object, piece.inclusion * part.inclusion, part.projection * piece.projection}, opt, out);
}

}  // namespace detail

/// An isomorphism X -> Y between indecomposables, if one exists.
inline std::optional<RepMorphism> indecomposable_isomorphism(const Representation& x, const Representation& y)
{
    if (x.dims() != y.dims())
        return std::nullopt;
    if (x == y)
        return RepMorphism::identity(x);
    auto fs = hom_basis(x, y);
    auto gs = hom_basis(y, x);
    // End(X) is local, so some basis product g o f lies outside the radical iff X and Y are isomorphic.
    for (const auto& f : fs)
        for (const auto& g : gs)
            if ((g * f).is_iso())
                return f;
    return std::nullopt;
}

inline Decomposition decompose(const Representation& x, const DecomposeOptions& opt = {})
{
    Decomposition d;
    detail::split_recursive({x, RepMorphism::identity(x), RepMorphism::identity(x)}, opt, d.summands);
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        std::size_t cls = d.classes.size();
        for (std::size_t c = 0; c < d.classes.size(); ++c)
            if (indecomposable_isomorphism(d.summands[d.classes[c].representative].object, d.summands[k].object)) {
                cls = c;
                break;
            }
        if (cls == d.classes.size())
            d.classes.push_back({k, 0});
        ++d.classes[cls].multiplicity;
        d.class_of.push_back(cls);
    }
    // X = sum of summands: the inclusions and projections form mutually inverse maps.
    RepMorphism total = RepMorphism::zero(x, x);
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        total = total + d.summands[k].inclusion * d.summands[k].projection;
        for (std::size_t l = 0; l < d.summands.size(); ++l) {
            auto pi = d.summands[l].projection * d.summands[k].inclusion;
            ensure(k == l ? pi == RepMorphism::identity(d.summands[k].object) : pi.is_zero(),
                   "decompose: summand projections are not orthogonal");
        }
    }
    ensure(total == RepMorphism::identity(x), "decompose: summands do not reassemble X");
    return d;
}

inline bool is_indecomposable(const Representation& x, const DecomposeOptions& opt = {})
{
    return !x.is_zero() && !detail::find_split(x, opt);
}

/// An explicit isomorphism X -> Y, matched summand by summand.
inline std::optional<RepMorphism> find_isomorphism(const Representation& x, const Representation& y,
                                                   const DecomposeOptions& opt = {})
{
    require_same_category(x, y, "is_isomorphic");
    if (x.dims() != y.dims())
        return std::nullopt;
    if (x == y)
        return RepMorphism::identity(x);
    auto dx = decompose(x, opt);
    auto dy = decompose(y, opt);
    if (dx.summands.size() != dy.summands.size())
        return std::nullopt;
    std::vector<bool> used(dy.summands.size(), false);
    RepMorphism iso = RepMorphism::zero(x, y);
    for (const auto& sx : dx.summands) {
        bool matched = false;
        for (std::size_t l = 0; l < dy.summands.size() && !matched; ++l) {
            if (used[l])
                continue;
            if (auto f = indecomposable_isomorphism(sx.object, dy.summands[l].object)) {
                iso = iso + dy.summands[l].inclusion * *f * sx.projection;
                used[l] = matched = true;
            }
        }
        if (!matched)
            return std::nullopt;
    }
    ensure(iso.is_iso(), "find_isomorphism: assembled map is not invertible");
    return iso;
}

inline bool is_isomorphic(const Representation& x, const Representation& y, const DecomposeOptions& opt = {})
{
    return find_isomorphism(x, y, opt).has_value();
}

inline bool is_injective(const Representation& x)
{
    auto op = x.quiver()->opposite();
    return is_projective(dual(x, op));
}

/// Every indecomposable summand of X (projective ones skipped when asked) is isomorphic to a summand of K.
inline bool in_add(const Representation& x, const Representation& k, bool strip_projectives = false,
                   const DecomposeOptions& opt = {})
{
    require_same_category(x, k, "in_add");
    auto dx = decompose(x, opt);
    auto dk = decompose(k, opt);
    for (const auto& cls : dx.classes) {
        const auto& s = dx.summands[cls.representative].object;
        if (strip_projectives && is_projective(s))
            continue;
        bool found = false;
        for (const auto& kc : dk.classes)
            if (indecomposable_isomorphism(s, dk.summands[kc.representative].object)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

/// Direct sum of the non-projective summands of X, with the split inclusion and projection.
inline Summand strip_projective_summands(const Representation& x, const DecomposeOptions& opt = {})
{
    auto d = decompose(x, opt);
    std::vector<const Summand*> keep;
    for (const auto& s : d.summands)
        if (!is_projective(s.object))
            keep.push_back(&s);
    if (keep.size() == d.summands.size())
        return {x, RepMorphism::identity(x), RepMorphism::identity(x)};
    std::vector<Representation> parts;
    for (auto* s : keep)
        parts.push_back(s->object);
    auto sum = direct_sum(x.quiver(), x.field(), parts);
    RepMorphism inc = RepMorphism::zero(sum.object, x);
    RepMorphism proj = RepMorphism::zero(x, sum.object);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        inc = inc + keep[k]->inclusion * sum.projections[k];
        proj = proj + sum.injections[k] * keep[k]->projection;
    }
    return {sum.object, inc, proj};
}

}  // namespace auslander
