#pragma once

// Finite-dimensional algebras given by structure constants, left modules over
// them, the Jacobson radical, submodule lattices, and projective covers of
// submodules of Ext^1(Y, K) over End(K).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "auslander/decompose.hpp"
#include "auslander/ext.hpp"

namespace auslander {

/// Associative unital algebra; mult[i][j] holds the coordinates of b_i b_j.
class FDAlgebra {
public:
    FDAlgebra() = default;
    FDAlgebra(Field f, std::vector<std::vector<Vec>> mult, Vec unit)
        : f_(f), n_(unit.size()), mult_(std::move(mult)), unit_(std::move(unit))
    {
        ensure(mult_.size() == n_, "algebra: structure constants have the wrong size");
        for (const auto& row : mult_) {
            ensure(row.size() == n_, "algebra: structure constants have the wrong size");
            for (const auto& v : row)
                ensure(v.size() == n_, "algebra: structure constants have the wrong size");
        }
        for (std::size_t i = 0; i < n_; ++i) {
            ensure(multiply(unit_, basis(i)) == basis(i) && multiply(basis(i), unit_) == basis(i),
                   "algebra: unit law fails");
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    ensure(multiply(mult_[i][j], basis(k)) == multiply(basis(i), mult_[j][k]),
                           "algebra: associativity fails");
        }
    }

    [[nodiscard]] const Field& field() const { return f_; }
    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] const Vec& unit() const { return unit_; }
    [[nodiscard]] const Vec& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }

    [[nodiscard]] Vec basis(std::size_t i) const
    {
        Vec v(n_, 0);
        v[i] = 1;
        return v;
    }

    [[nodiscard]] Vec multiply(const Vec& a, const Vec& b) const
    {
        Vec out(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (!a[i])
                continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!b[j])
                    continue;
                Scalar c = f_.mul(a[i], b[j]);
                const auto& m = mult_[i][j];
                for (std::size_t k = 0; k < n_; ++k)
                    if (m[k])
                        out[k] = f_.add(out[k], f_.mul(c, m[k]));
            }
        }
        return out;
    }

    /// Matrix of x |-> a x on coordinate columns.
    [[nodiscard]] Matrix left_multiplication(const Vec& a) const
    {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < n_; ++j)
            cols.push_back(multiply(a, basis(j)));
        return Matrix::from_column_vectors(f_, cols, n_);
    }

    [[nodiscard]] FDAlgebra opposite() const
    {
        std::vector<std::vector<Vec>> m(n_, std::vector<Vec>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                m[i][j] = mult_[j][i];
        return FDAlgebra(f_, std::move(m), unit_);
    }

private:
    Field f_;
    std::size_t n_ = 0;
    std::vector<std::vector<Vec>> mult_;
    Vec unit_;
};

/// Left module: action[i] is the matrix of b_i on carrier columns.
class FDModule {
public:
    FDModule() = default;
    FDModule(FDAlgebra a, std::size_t dim, std::vector<Matrix> action)
        : a_(std::move(a)), dim_(dim), action_(std::move(action))
    {
        ensure(action_.size() == a_.dim(), "module: one action matrix per basis element expected");
        for (const auto& m : action_)
            ensure(m.rows() == dim_ && m.cols() == dim_, "module: action matrix has the wrong shape");
        ensure(act(a_.unit()) == Matrix::identity(a_.field(), dim_), "module: unit does not act as identity");
        for (std::size_t i = 0; i < a_.dim(); ++i)
            for (std::size_t j = 0; j < a_.dim(); ++j)
                ensure(action_[i] * action_[j] == act(a_.product(i, j)), "module: action is not multiplicative");
    }

    [[nodiscard]] const FDAlgebra& algebra() const { return a_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Field& field() const { return a_.field(); }
    [[nodiscard]] const std::vector<Matrix>& action() const { return action_; }

    [[nodiscard]] Matrix act(const Vec& a) const
    {
        Matrix m(a_.field(), dim_, dim_);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i])
                m = m + action_[i].scaled(a[i]);
        return m;
    }

    [[nodiscard]] bool is_stable(const Subspace& s) const
    {
        for (const auto& m : action_)
            for (const auto& v : s.vectors())
                if (!s.contains(m.apply(v)))
                    return false;
        return true;
    }

    /// Submodule generated by the given vectors.
    [[nodiscard]] Subspace generated(const std::vector<Vec>& vs) const
    {
        std::vector<Vec> out;
        for (const auto& v : vs)
            for (const auto& m : action_)
                out.push_back(m.apply(v));
        return Subspace::span(field(), dim_, out);
    }

private:
    FDAlgebra a_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

/// End(X) as an algebra in Hom-basis coordinates; the product is composition.
struct EndoAlgebra {
    Representation object;
    HomSpace hom;
    FDAlgebra algebra;

    [[nodiscard]] RepMorphism element(const Vec& c) const { return hom.element(c); }
    [[nodiscard]] Vec coordinates(const RepMorphism& g) const { return hom.coordinates(g); }
};

inline EndoAlgebra endo_algebra(const Representation& k)
{
    auto hom = hom_space(k, k);
    auto basis = hom.basis();
    const std::size_t n = basis.size();
    std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mult[i][j] = hom.coordinates(basis[i] * basis[j]);
    Vec unit = hom.coordinates(RepMorphism::identity(k));
    return {k, hom, FDAlgebra(k.field(), std::move(mult), std::move(unit))};
}

namespace detail {

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, long long mod)
{
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (!a[i][k])
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % mod;
        }
    return c;
}

/// Tr(lift(M)^e) mod `mod`.
inline long long lifted_trace_power(const Matrix& m, unsigned long long e, long long mod)
{
    const std::size_t n = m.rows();
    IntMatrix base(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            base[i][j] = m(i, j) % mod;
    IntMatrix acc(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        acc[i][i] = 1 % mod;
    while (e) {
        if (e & 1)
            acc = int_mul(acc, base, mod);
        e >>= 1;
        if (e)
            base = int_mul(base, base, mod);
    }
    long long t = 0;
    for (std::size_t i = 0; i < n; ++i)
        t = (t + acc[i][i]) % mod;
    return t;
}

}  // namespace detail

/// Jacobson radical over F_p by the trace-power method on the left regular representation.
inline Subspace radical(const FDAlgebra& a)
{
    const Field& f = a.field();
    const std::size_t n = a.dim();
    const long long p = f.p();
    Subspace ideal = Subspace::full(f, n);
    if (n == 0)
        return ideal;
    std::size_t levels = 0;
    for (unsigned long long q = static_cast<unsigned long long>(p); q <= n; q *= static_cast<unsigned long long>(p))
        ++levels;  // levels = floor(log_p n)
    unsigned long long pi = 1;  // p^i
    for (std::size_t i = 0; i <= levels; ++i, pi *= static_cast<unsigned long long>(p)) {
        const long long mod = static_cast<long long>(pi) * p;
        auto g = [&](const Vec& x) -> Scalar {
            long long t = detail::lifted_trace_power(a.left_multiplication(x), pi, mod);
            ensure(t % static_cast<long long>(pi) == 0, "radical: trace power not divisible as expected");
            return static_cast<Scalar>((t / static_cast<long long>(pi)) % p);
        };
        auto basis = ideal.vectors();
        if (basis.empty())
            break;
        // x |-> g_i(x b_j) is linear on the previous ideal; collect its values on the ideal basis.
        std::vector<Vec> rows;
        for (std::size_t j = 0; j < n; ++j) {
            Vec row(basis.size());
            for (std::size_t k = 0; k < basis.size(); ++k)
                row[k] = g(a.multiply(basis[k], a.basis(j)));
            rows.push_back(row);
        }
        auto ker = kernel_basis(Matrix::from_row_vectors(f, rows, basis.size()));
        std::vector<Vec> next;
        for (const auto& c : ker.vectors()) {
            Vec v(n, 0);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (c[k])
                    v = vec_add(f, v, vec_scale(f, basis[k], c[k]));
            next.push_back(v);
        }
        ideal = Subspace::span(f, n, next);
    }
    return ideal;
}

/// rad(A) M.
inline Subspace radical_of_module(const FDModule& m, const Subspace& rad)
{
    std::vector<Vec> out;
    for (const auto& r : rad.vectors()) {
        Matrix act = m.act(r);
        for (std::size_t j = 0; j < m.dim(); ++j)
            out.push_back(act.column(j));
    }
    return Subspace::span(m.field(), m.dim(), out);
}

inline Subspace radical_of_module(const FDModule& m) { return radical_of_module(m, radical(m.algebra())); }

/// rad(A) S for a submodule S.
inline Subspace radical_of_submodule(const FDModule& m, const Subspace& rad, const Subspace& s)
{
    std::vector<Vec> out;
    for (const auto& r : rad.vectors()) {
        Matrix act = m.act(r);
        for (const auto& v : s.vectors())
            out.push_back(act.apply(v));
    }
    return Subspace::span(m.field(), m.dim(), out);
}

struct LatticeOptions {
    unsigned long long max_vectors = 1ull << 20;
    std::size_t max_members = 1u << 16;
};

/// All submodules, sorted by (dimension, basis); `leq(i, j)` is inclusion.
struct SubmoduleLattice {
    std::vector<Subspace> members;
    std::vector<std::vector<bool>> inclusion;  // inclusion[i][j]: members[i] inside members[j]

    [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return inclusion[i][j]; }

    [[nodiscard]] std::optional<std::size_t> index_of(const Subspace& s) const
    {
        auto it = std::lower_bound(members.begin(), members.end(), s, [](const Subspace& a, const Subspace& b) {
            return std::make_pair(a.dim(), a) < std::make_pair(b.dim(), b);
        });
        if (it != members.end() && *it == s)
            return static_cast<std::size_t>(it - members.begin());
        return std::nullopt;
    }

    /// Cover relations of the inclusion order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j || !inclusion[i][j])
                    continue;
                bool cover = true;
                for (std::size_t k = 0; k < members.size() && cover; ++k)
                    if (k != i && k != j && inclusion[i][k] && inclusion[k][j])
                        cover = false;
                if (cover)
                    out.emplace_back(i, j);
            }
        return out;
    }

    /// Over a finite field every submodule is finitely generated.
    [[nodiscard]] static constexpr bool finitely_generated(std::size_t) { return true; }
};

inline SubmoduleLattice submodule_lattice(const FDModule& m, const LatticeOptions& opt = {})
{
    const Field& f = m.field();
    const std::size_t d = m.dim();
    if (bounded_power(f.p(), d, opt.max_vectors) > opt.max_vectors)
        throw CapExceeded("lattice cap: carrier has " + std::to_string(f.p()) + "^" + std::to_string(d) +
                          " vectors, above the enumeration limit");
    // one spanning vector per line suffices for the cyclic submodules
    std::set<Subspace> cyclic;
    for_each_vector(f, d, [&](const Vec& v) {
        auto lead = std::find_if(v.begin(), v.end(), [](Scalar x) { return x != 0; });
        if (lead != v.end() && *lead == 1)
            cyclic.insert(m.generated({v}));
    });
    std::set<Subspace> seen{Subspace(f, d)};
    std::vector<Subspace> queue{Subspace(f, d)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& c : cyclic) {
            if (queue[head].contains(c))
                continue;
            auto s = subspace_sum(queue[head], c);
            if (seen.insert(s).second) {
                if (seen.size() > opt.max_members)
                    throw CapExceeded("lattice cap: more than " + std::to_string(opt.max_members) + " submodules");
                queue.push_back(s);
            }
        }
    }
    SubmoduleLattice lat;
    lat.members.assign(seen.begin(), seen.end());
    std::stable_sort(lat.members.begin(), lat.members.end(), [](const Subspace& a, const Subspace& b) {
        return std::make_pair(a.dim(), a) < std::make_pair(b.dim(), b);
    });
    const std::size_t n = lat.members.size();
    lat.inclusion.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lat.inclusion[i][j] = lat.members[j].contains(lat.members[i]);
    for (const auto& s : lat.members)
        ensure(m.is_stable(s), "submodule_lattice: unstable member");
    return lat;
}

/// Every subspace of F_p^d, enumerated through reduced row echelon forms.
inline std::vector<Subspace> all_subspaces(const Field& f, std::size_t d)
{
    std::vector<Subspace> out;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < d; ++c)
            if (mask & (1u << c))
                piv.push_back(c);
        // free slots: row r, non-pivot column right of pivot r
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t c = piv[r] + 1; c < d; ++c)
                if (!(mask & (1u << c)))
                    slots.emplace_back(r, c);
        for_each_vector(f, slots.size(), [&](const Vec& fill) {
            std::vector<Vec> rows(piv.size(), Vec(d, 0));
            for (std::size_t r = 0; r < piv.size(); ++r)
                rows[r][piv[r]] = 1;
            for (std::size_t s = 0; s < slots.size(); ++s)
                rows[slots[s].first][slots[s].second] = fill[s];
            out.push_back(Subspace::span(f, d, rows));
        });
    }
    return out;
}

/// Ext^1(Y, K) as a left End(K)-module: g acts by pushout, [g.xi].
struct ExtModule {
    EndoAlgebra gamma;
    ExtSpace ext;
    FDModule module;
};

inline ExtModule ext_as_gamma_module(const ExtSpace& ext, EndoAlgebra gamma)
{
    ensure(gamma.object == ext.z(), "ext_as_gamma_module: algebra is not End of the Ext target");
    std::vector<Matrix> action;
    for (const auto& g : gamma.hom.basis()) {
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < ext.dim(); ++k)
            cols.push_back(ext.class_of(g * ext.representative(k)));
        action.push_back(Matrix::from_column_vectors(ext.field(), cols, ext.dim()));
    }
    FDModule m(gamma.algebra, ext.dim(), std::move(action));
    return {std::move(gamma), ext, std::move(m)};
}

inline ExtModule ext_as_gamma_module(const Representation& y, const Representation& k)
{
    return ext_as_gamma_module(ext_space(y, k), endo_algebra(k));
}

/// Projective cover Hom(K', K) -> L of a submodule L of Ext^1(Y, K), K' in add K.
struct GammaCover {
    Representation kprime;
    DirectSum sum;                       // K' as a direct sum of summands of K
    std::vector<std::size_t> summand_of; // part -> index into the decomposition of K
    std::vector<Vec> generators;         // v_j in e_{i_j} L
    HomSpace hom;                        // Hom(K', K)
    Matrix cover;                        // Ext coordinates x Hom(K', K) coordinates
};

inline GammaCover gamma_projective_cover(const ExtModule& em, const Subspace& l, const Decomposition& dk)
{
    const auto& gamma = em.gamma;
    const auto& m = em.module;
    const Field& f = m.field();
    if (!m.is_stable(l))
        throw InputError("gamma_projective_cover: subspace is not a submodule");
    auto rad = radical(gamma.algebra);
    auto rl = radical_of_submodule(m, rad, l);

    std::vector<std::size_t> summand_of;
    std::vector<Vec> gens;
    Subspace image(f, m.dim());
    for (std::size_t i = 0; i < dk.summands.size(); ++i) {
        const auto& s = dk.summands[i];
        Matrix e = m.act(gamma.coordinates(s.inclusion * s.projection));
        std::vector<Vec> el;
        for (const auto& v : l.vectors())
            el.push_back(e.apply(v));
        auto eil = Subspace::span(f, m.dim(), el);
        for (;;) {
            auto covered = subspace_sum(image, rl);
            const auto cand = eil.vectors();
            auto missing = std::find_if(cand.begin(), cand.end(), [&](const Vec& v) { return !covered.contains(v); });
            if (missing == cand.end())
                break;
            summand_of.push_back(i);
            gens.push_back(*missing);
            image = subspace_sum(image, m.generated({*missing}));
        }
    }
    ensure(image == l, "gamma_projective_cover: generators do not reach L");

    std::vector<Representation> parts;
    for (auto i : summand_of)
        parts.push_back(dk.summands[i].object);
    auto sum = direct_sum(em.ext.z().quiver(), f, parts);
    auto hom = hom_space(sum.object, gamma.object);
    std::vector<Vec> cols;
    for (const auto& u : hom.basis()) {
        Vec c(m.dim(), 0);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            auto g = u * sum.injections[j] * dk.summands[summand_of[j]].projection;
            c = vec_add(f, c, m.act(gamma.coordinates(g)).apply(gens[j]));
        }
        cols.push_back(c);
    }
    Matrix cover = Matrix::from_column_vectors(f, cols, m.dim());
    ensure(Subspace::image(cover) == l, "gamma_projective_cover: image differs from L");

    // kernel inside rad(Gamma) Hom(K', K); Gamma acts on Hom(K', K) by composition
    std::vector<Matrix> act;
    for (const auto& g : gamma.hom.basis()) {
        std::vector<Vec> c2;
        for (const auto& u : hom.basis())
            c2.push_back(hom.coordinates(g * u));
        act.push_back(Matrix::from_column_vectors(f, c2, hom.dim()));
    }
    FDModule hm(gamma.algebra, hom.dim(), std::move(act));
    auto rad_hom = radical_of_module(hm, rad);
    ensure(rad_hom.contains(kernel_basis(cover)), "gamma_projective_cover: kernel is not superfluous");
    return {sum.object, sum, std::move(summand_of), std::move(gens), hom, cover};
}

inline GammaCover gamma_projective_cover(const ExtModule& em, const Subspace& l, const DecomposeOptions& opt = {})
{
    return gamma_projective_cover(em, l, decompose(em.gamma.object, opt));
}

/// Brute-force radical {x : 1 - a x invertible for all a}; only for tiny algebras.
inline Subspace radical_bruteforce(const FDAlgebra& a)
{
    const Field& f = a.field();
    std::vector<Vec> all;
    for_each_vector(f, a.dim(), [&](const Vec& v) { all.push_back(v); });
    std::vector<Vec> rad;
    for (const auto& x : all) {
        bool ok = true;
        for (const auto& y : all) {
            Vec t = vec_add(f, a.unit(), vec_scale(f, a.multiply(y, x), f.neg(1)));
            if (!is_invertible(a.left_multiplication(t))) {
                ok = false;
                break;
            }
        }
        if (ok)
            rad.push_back(x);
    }
    return Subspace::span(f, a.dim(), rad);
}

}  // namespace auslander
