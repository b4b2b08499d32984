#pragma once

// Finite acyclic quivers, their representations over F_p and morphisms
// between them. Arrow maps act on column vectors, so a map for a: i -> j is a
// (dim_j x dim_i) matrix and composition g o f is the matrix product G * F.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "auslander/error.hpp"
#include "auslander/linalg.hpp"

namespace auslander {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
    bool operator==(const Arrow&) const = default;
};

/// A path, arrows listed in the order they are traversed. Trivial paths have no arrows.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;
    bool operator==(const Path&) const = default;
};

class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows))
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < vertices_.size(); ++j)
                if (vertices_[i] == vertices_[j])
                    throw InputError("quiver: duplicate vertex '" + vertices_[i] + "'");
        for (std::size_t a = 0; a < arrows_.size(); ++a) {
            if (arrows_[a].source >= vertices_.size() || arrows_[a].target >= vertices_.size())
                throw InputError("quiver: arrow '" + arrows_[a].name + "' has an unknown endpoint");
            for (std::size_t b = a + 1; b < arrows_.size(); ++b)
                if (arrows_[a].name == arrows_[b].name)
                    throw InputError("quiver: duplicate arrow name '" + arrows_[a].name + "'");
        }
        compute_topological_order();
        enumerate_paths();
    }

    /// Builds a quiver from vertex labels and (name, from-label, to-label) triples.
    static std::shared_ptr<const Quiver> make(std::vector<std::string> vertices,
                                              const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
    {
        std::vector<Arrow> as;
        for (const auto& [name, from, to] : arrows) {
            auto find = [&](const std::string& label) {
                auto it = std::find(vertices.begin(), vertices.end(), label);
                if (it == vertices.end())
                    throw InputError("quiver: arrow '" + name + "' refers to unknown vertex '" + label + "'");
                return static_cast<std::size_t>(it - vertices.begin());
            };
            as.push_back({name, find(from), find(to)});
        }
        return std::make_shared<const Quiver>(std::move(vertices), std::move(as));
    }

    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return vertices_.at(i); }
    [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
    [[nodiscard]] const std::vector<std::size_t>& topological_order() const { return topo_; }

    [[nodiscard]] std::size_t vertex_index(const std::string& label) const
    {
        auto it = std::find(vertices_.begin(), vertices_.end(), label);
        if (it == vertices_.end())
            throw InputError("quiver: unknown vertex '" + label + "'");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    [[nodiscard]] std::size_t arrow_index(const std::string& name) const
    {
        for (std::size_t a = 0; a < arrows_.size(); ++a)
            if (arrows_[a].name == name)
                return a;
        throw InputError("quiver: unknown arrow '" + name + "'");
    }

    /// All paths, ordered by (length, arrow names).
    [[nodiscard]] const std::vector<Path>& paths() const { return paths_; }

    /// Paths from `i` to `j` in the global path order.
    [[nodiscard]] const std::vector<std::size_t>& paths_between(std::size_t i, std::size_t j) const
    {
        return between_[i * vertices_.size() + j];
    }

    [[nodiscard]] std::size_t path_position(std::size_t i, std::size_t j, const std::vector<std::size_t>& arrows) const
    {
        const auto& ids = paths_between(i, j);
        for (std::size_t k = 0; k < ids.size(); ++k)
            if (paths_[ids[k]].arrows == arrows)
                return k;
        throw InvariantViolation("quiver: path not found");
    }

    [[nodiscard]] std::shared_ptr<const Quiver> opposite() const
    {
        std::vector<Arrow> rev;
        for (const auto& a : arrows_)
            rev.push_back({a.name, a.target, a.source});
        return std::make_shared<const Quiver>(vertices_, std::move(rev));
    }

    bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

private:
    void compute_topological_order()
    {
        const std::size_t n = vertices_.size();
        std::vector<std::size_t> indeg(n, 0);
        for (const auto& a : arrows_)
            ++indeg[a.target];
        std::vector<std::size_t> ready;
        for (std::size_t i = 0; i < n; ++i)
            if (!indeg[i])
                ready.push_back(i);
        while (!ready.empty()) {
            auto v = ready.front();
            ready.erase(ready.begin());
            topo_.push_back(v);
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0)
                    ready.push_back(a.target);
        }
        if (topo_.size() != n)
            throw InputError("quiver: acyclicity violated (directed cycle present)");
    }

    void enumerate_paths()
    {
        const std::size_t n = vertices_.size();
        std::vector<Path> frontier;
        for (std::size_t i = 0; i < n; ++i)
            frontier.push_back({i, i, {}});
        while (!frontier.empty()) {
            std::vector<Path> next;
            for (const auto& pth : frontier) {
                paths_.push_back(pth);
                for (std::size_t a = 0; a < arrows_.size(); ++a)
                    if (arrows_[a].source == pth.target) {
                        Path q = pth;
                        q.arrows.push_back(a);
                        q.target = arrows_[a].target;
                        next.push_back(std::move(q));
                    }
            }
            frontier = std::move(next);
        }
        auto name_seq = [this](const Path& p) {
            std::vector<std::string> s;
            for (auto a : p.arrows)
                s.push_back(arrows_[a].name);
            return s;
        };
        std::stable_sort(paths_.begin(), paths_.end(), [&](const Path& x, const Path& y) {
            if (x.arrows.size() != y.arrows.size())
                return x.arrows.size() < y.arrows.size();
            if (x.arrows.empty())
                return x.source < y.source;
            return name_seq(x) < name_seq(y);
        });
        between_.assign(n * n, {});
        for (std::size_t k = 0; k < paths_.size(); ++k)
            between_[paths_[k].source * n + paths_[k].target].push_back(k);
    }

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> topo_;
    std::vector<Path> paths_;
    std::vector<std::vector<std::size_t>> between_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// Immutable representation; copies share storage.
class Representation {
public:
    Representation() = default;

    Representation(QuiverPtr q, Field f, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    {
        if (!q)
            throw InputError("representation: null quiver");
        if (dims.size() != q->vertex_count())
            throw InputError("representation: expected " + std::to_string(q->vertex_count()) + " dimensions");
        if (maps.size() != q->arrows().size())
            throw InputError("representation: expected " + std::to_string(q->arrows().size()) + " arrow maps");
        for (std::size_t a = 0; a < maps.size(); ++a) {
            const auto& arr = q->arrows()[a];
            if (maps[a].rows() != dims[arr.target] || maps[a].cols() != dims[arr.source])
                throw InputError("representation: map for arrow '" + arr.name + "' has shape " + maps[a].shape() +
                                 ", expected " + std::to_string(dims[arr.target]) + "x" +
                                 std::to_string(dims[arr.source]));
            if (!(maps[a].field() == f))
                throw InputError("representation: map for arrow '" + arr.name + "' over a different field");
        }
        d_ = std::make_shared<const Data>(Data{std::move(q), f, std::move(dims), std::move(maps)});
    }

    static Representation zero(QuiverPtr q, Field f)
    {
        std::vector<Matrix> maps;
        for (std::size_t a = 0; a < q->arrows().size(); ++a)
            maps.emplace_back(f, 0, 0);
        return Representation(q, f, std::vector<std::size_t>(q->vertex_count(), 0), std::move(maps));
    }

    [[nodiscard]] const QuiverPtr& quiver() const { return d_->q; }
    [[nodiscard]] const Field& field() const { return d_->f; }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return d_->dims; }
    [[nodiscard]] std::size_t dim(std::size_t i) const { return d_->dims[i]; }
    [[nodiscard]] const Matrix& map(std::size_t a) const { return d_->maps[a]; }
    [[nodiscard]] const std::vector<Matrix>& maps() const { return d_->maps; }
    [[nodiscard]] std::size_t vertex_count() const { return d_->dims.size(); }
    [[nodiscard]] bool valid() const { return static_cast<bool>(d_); }

    [[nodiscard]] std::size_t total_dim() const
    {
        std::size_t s = 0;
        for (auto d : d_->dims)
            s += d;
        return s;
    }

    [[nodiscard]] bool is_zero() const { return total_dim() == 0; }

    /// Linear map along a path (identity for trivial paths).
    [[nodiscard]] Matrix path_map(const Path& p) const
    {
        Matrix m = Matrix::identity(field(), dim(p.source));
        for (auto a : p.arrows)
            m = map(a) * m;
        return m;
    }

    [[nodiscard]] bool same_category(const Representation& o) const
    {
        return field() == o.field() && (quiver() == o.quiver() || *quiver() == *o.quiver());
    }

    /// Literal equality (same quiver, dims and matrices), not isomorphism.
    bool operator==(const Representation& o) const
    {
        if (d_ == o.d_)
            return true;
        return same_category(o) && dims() == o.dims() && maps() == o.maps();
    }

private:
    struct Data {
        QuiverPtr q;
        Field f;
        std::vector<std::size_t> dims;
        std::vector<Matrix> maps;
    };
    std::shared_ptr<const Data> d_;
};

inline void require_same_category(const Representation& x, const Representation& y, const char* where)
{
    if (!x.same_category(y))
        throw InputError(std::string(where) + ": representations over different quivers or fields");
}

class RepMorphism {
public:
    RepMorphism() = default;

    /// Checks shapes and the commuting squares f_j X_a = Y_a f_i.
    RepMorphism(Representation src, Representation tgt, std::vector<Matrix> comps)
        : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps))
    {
        require_same_category(src_, tgt_, "morphism");
        ensure(comps_.size() == src_.vertex_count(), "morphism: wrong number of components");
        for (std::size_t i = 0; i < comps_.size(); ++i)
            ensure(comps_[i].rows() == tgt_.dim(i) && comps_[i].cols() == src_.dim(i),
                   "morphism: component shape mismatch at vertex " + std::to_string(i));
        const auto& arrows = src_.quiver()->arrows();
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            const auto& arr = arrows[a];
            if (!(comps_[arr.target] * src_.map(a) == tgt_.map(a) * comps_[arr.source]))
                throw InvariantViolation("morphism: commuting square fails for arrow '" + arr.name + "'");
        }
    }

    static RepMorphism zero(const Representation& src, const Representation& tgt)
    {
        std::vector<Matrix> comps;
        for (std::size_t i = 0; i < src.vertex_count(); ++i)
            comps.emplace_back(src.field(), tgt.dim(i), src.dim(i));
        return RepMorphism(src, tgt, std::move(comps));
    }

    static RepMorphism identity(const Representation& x)
    {
        std::vector<Matrix> comps;
        for (std::size_t i = 0; i < x.vertex_count(); ++i)
            comps.push_back(Matrix::identity(x.field(), x.dim(i)));
        return RepMorphism(x, x, std::move(comps));
    }

    [[nodiscard]] const Representation& source() const { return src_; }
    [[nodiscard]] const Representation& target() const { return tgt_; }
    [[nodiscard]] const Matrix& component(std::size_t i) const { return comps_[i]; }
    [[nodiscard]] const std::vector<Matrix>& components() const { return comps_; }
    [[nodiscard]] const Field& field() const { return src_.field(); }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return m.is_zero(); });
    }
    [[nodiscard]] bool is_mono() const
    {
        return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return rank(m) == m.cols(); });
    }
    [[nodiscard]] bool is_epi() const
    {
        return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return rank(m) == m.rows(); });
    }
    [[nodiscard]] bool is_iso() const
    {
        return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return is_invertible(m); });
    }

    /// Components concatenated vertex by vertex, each row-major.
    [[nodiscard]] Vec flatten() const
    {
        Vec v;
        for (const auto& c : comps_)
            v.insert(v.end(), c.data().begin(), c.data().end());
        return v;
    }

    static RepMorphism unflatten(const Representation& src, const Representation& tgt, const Vec& v)
    {
        std::vector<Matrix> comps;
        std::size_t off = 0;
        for (std::size_t i = 0; i < src.vertex_count(); ++i) {
            Matrix m(src.field(), tgt.dim(i), src.dim(i));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m(r, c) = v.at(off++);
            comps.push_back(std::move(m));
        }
        ensure(off == v.size(), "morphism: flattened length mismatch");
        return RepMorphism(src, tgt, std::move(comps));
    }

    [[nodiscard]] RepMorphism scaled(Scalar s) const
    {
        RepMorphism r = *this;
        for (auto& c : r.comps_)
            c = c.scaled(s);
        return r;
    }

    friend RepMorphism operator+(const RepMorphism& f, const RepMorphism& g)
    {
        f.require_parallel(g);
        RepMorphism r = f;
        for (std::size_t i = 0; i < r.comps_.size(); ++i)
            r.comps_[i] = f.comps_[i] + g.comps_[i];
        return r;
    }

    friend RepMorphism operator-(const RepMorphism& f, const RepMorphism& g)
    {
        f.require_parallel(g);
        RepMorphism r = f;
        for (std::size_t i = 0; i < r.comps_.size(); ++i)
            r.comps_[i] = f.comps_[i] - g.comps_[i];
        return r;
    }

    /// g * f is the composite g o f.
    friend RepMorphism operator*(const RepMorphism& g, const RepMorphism& f)
    {
        if (!(f.tgt_ == g.src_))
            throw InvariantViolation("morphism: composing non-composable morphisms");
        RepMorphism r;
        r.src_ = f.src_;
        r.tgt_ = g.tgt_;
        for (std::size_t i = 0; i < f.comps_.size(); ++i)
            r.comps_.push_back(g.comps_[i] * f.comps_[i]);
        return r;
    }

    bool operator==(const RepMorphism& o) const
    {
        return src_ == o.src_ && tgt_ == o.tgt_ && comps_ == o.comps_;
    }

private:
    void require_parallel(const RepMorphism& g) const
    {
        if (!(src_ == g.src_ && tgt_ == g.tgt_))
            throw InvariantViolation("morphism: adding non-parallel morphisms");
    }

    Representation src_;
    Representation tgt_;
    std::vector<Matrix> comps_;
};

/// Hom(X, Y) as a canonical subspace of the flattened component space.
class HomSpace {
public:
    HomSpace() = default;
    HomSpace(Representation x, Representation y, Subspace space)
        : x_(std::move(x)), y_(std::move(y)), space_(std::move(space))
    {
    }

    [[nodiscard]] const Representation& source() const { return x_; }
    [[nodiscard]] const Representation& target() const { return y_; }
    [[nodiscard]] const Subspace& space() const { return space_; }
    [[nodiscard]] std::size_t dim() const { return space_.dim(); }

    [[nodiscard]] RepMorphism basis(std::size_t k) const
    {
        return RepMorphism::unflatten(x_, y_, space_.basis().row(k));
    }

    [[nodiscard]] std::vector<RepMorphism> basis() const
    {
        std::vector<RepMorphism> out;
        for (std::size_t k = 0; k < dim(); ++k)
            out.push_back(basis(k));
        return out;
    }

    [[nodiscard]] Vec coordinates(const RepMorphism& f) const
    {
        auto c = space_.coordinates(f.flatten());
        ensure(c.has_value(), "hom space: morphism has the wrong endpoints");
        return *c;
    }

    [[nodiscard]] RepMorphism element(const Vec& coords) const
    {
        return RepMorphism::unflatten(x_, y_, space_.combine(coords));
    }

    /// Span of the given morphisms as a subspace of hom coordinates.
    [[nodiscard]] Subspace span_of(const std::vector<RepMorphism>& fs) const
    {
        std::vector<Vec> rows;
        for (const auto& f : fs)
            rows.push_back(coordinates(f));
        return Subspace::span(x_.field(), dim(), rows);
    }

private:
    Representation x_;
    Representation y_;
    Subspace space_;
};

inline HomSpace hom_space(const Representation& x, const Representation& y)
{
    require_same_category(x, y, "hom_basis");
    const Field& f = x.field();
    const std::size_t n = x.vertex_count();
    std::vector<std::size_t> off(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        off[i + 1] = off[i] + y.dim(i) * x.dim(i);
    const auto& arrows = x.quiver()->arrows();
    std::size_t eqs = 0;
    for (const auto& a : arrows)
        eqs += y.dim(a.target) * x.dim(a.source);
    Matrix sys(f, eqs, off[n]);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
        const auto& a = arrows[ai];
        const std::size_t i = a.source, j = a.target;
        const Matrix& xa = x.map(ai);
        const Matrix& ya = y.map(ai);
        // (f_j X_a - Y_a f_i)(r, c) = 0
        for (std::size_t r = 0; r < y.dim(j); ++r)
            for (std::size_t c = 0; c < x.dim(i); ++c, ++row) {
                for (std::size_t k = 0; k < x.dim(j); ++k)
                    if (xa(k, c))
                        sys(row, off[j] + r * x.dim(j) + k) = f.add(sys(row, off[j] + r * x.dim(j) + k), xa(k, c));
                for (std::size_t k = 0; k < y.dim(i); ++k)
                    if (ya(r, k))
                        sys(row, off[i] + k * x.dim(i) + c) = f.sub(sys(row, off[i] + k * x.dim(i) + c), ya(r, k));
            }
    }
    return HomSpace(x, y, kernel_basis(sys));
}

inline std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y)
{
    return hom_space(x, y).basis();
}

/// Some g with alpha o g = t, or nullopt.
inline std::optional<RepMorphism> factor_through(const RepMorphism& t, const RepMorphism& alpha)
{
    if (!(t.target() == alpha.target()))
        throw InvariantViolation("factor_through: targets differ");
    auto hs = hom_space(t.source(), alpha.source());
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < hs.dim(); ++k)
        cols.push_back((alpha * hs.basis(k)).flatten());
    auto target = t.flatten();
    Matrix a = Matrix::from_column_vectors(t.field(), cols, target.size());
    auto sol = solve_linear(a, target);
    if (!sol)
        return std::nullopt;
    return hs.element(*sol);
}

/// The unique h with mono o h = f; throws when Im f is not inside Im mono.
inline RepMorphism factor_through_mono(const RepMorphism& f, const RepMorphism& mono)
{
    if (!(f.target() == mono.target()))
        throw InvariantViolation("factor_through_mono: targets differ");
    std::vector<Matrix> comps;
    for (std::size_t i = 0; i < f.source().vertex_count(); ++i) {
        const Matrix& m = mono.component(i);
        Matrix h(f.field(), m.cols(), f.source().dim(i));
        for (std::size_t c = 0; c < h.cols(); ++c) {
            auto sol = solve_linear(m, f.component(i).column(c));
            ensure(sol.has_value(), "factor_through_mono: image not contained in the monomorphism's image");
            for (std::size_t r = 0; r < h.rows(); ++r)
                h(r, c) = (*sol)[r];
        }
        comps.push_back(std::move(h));
    }
    return RepMorphism(f.source(), mono.source(), std::move(comps));
}

struct SubRepresentation {
    Representation object;
    RepMorphism inclusion;
};

/// Subrepresentation spanned by per-vertex subspaces; coordinates are the RREF bases.
inline SubRepresentation subrepresentation(const Representation& x, const std::vector<Subspace>& u)
{
    ensure(u.size() == x.vertex_count(), "subrepresentation: wrong number of subspaces");
    const auto& arrows = x.quiver()->arrows();
    std::vector<Matrix> maps;
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
        const auto& a = arrows[ai];
        Matrix img = x.map(ai) * u[a.source].basis().transpose();
        Matrix m(x.field(), u[a.target].dim(), u[a.source].dim());
        for (std::size_t c = 0; c < img.cols(); ++c) {
            auto coords = u[a.target].coordinates(img.column(c));
            ensure(coords.has_value(), "subrepresentation: subspaces not stable under arrow '" + a.name + "'");
            for (std::size_t r = 0; r < m.rows(); ++r)
                m(r, c) = (*coords)[r];
        }
        maps.push_back(std::move(m));
    }
    std::vector<std::size_t> dims;
    std::vector<Matrix> inc;
    for (const auto& s : u) {
        dims.push_back(s.dim());
        inc.push_back(s.basis().transpose());
    }
    Representation sub(x.quiver(), x.field(), std::move(dims), std::move(maps));
    return {sub, RepMorphism(sub, x, std::move(inc))};
}

struct QuotientRepresentation {
    Representation object;
    RepMorphism projection;
    std::vector<Subspace> kernel;
};

/// X / U using quotient_reps coordinates at each vertex.
inline QuotientRepresentation quotient(const Representation& x, const std::vector<Subspace>& u)
{
    ensure(u.size() == x.vertex_count(), "quotient: wrong number of subspaces");
    const auto& arrows = x.quiver()->arrows();
    std::vector<Matrix> qmaps;
    for (const auto& s : u)
        qmaps.push_back(s.quotient_map());
    std::vector<Matrix> maps;
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
        const auto& a = arrows[ai];
        // stability: X_a U_i inside U_j
        for (std::size_t k = 0; k < u[a.source].dim(); ++k)
            ensure(u[a.target].contains(x.map(ai).apply(u[a.source].basis().row(k))),
                   "quotient: subspaces not stable under arrow '" + a.name + "'");
        maps.push_back(qmaps[a.target] * x.map(ai) * u[a.source].quotient_reps().transpose());
    }
    std::vector<std::size_t> dims;
    for (const auto& s : u)
        dims.push_back(s.codim());
    Representation q(x.quiver(), x.field(), std::move(dims), std::move(maps));
    return {q, RepMorphism(x, q, std::move(qmaps)), u};
}

/// The map X/U -> W induced by f: X -> W, which must vanish on U.
inline RepMorphism induced_from_quotient(const QuotientRepresentation& q, const RepMorphism& f)
{
    ensure(f.source() == q.projection.source(), "induced_from_quotient: source mismatch");
    std::vector<Matrix> comps;
    for (std::size_t i = 0; i < q.kernel.size(); ++i) {
        for (std::size_t k = 0; k < q.kernel[i].dim(); ++k)
            ensure(is_zero(f.component(i).apply(q.kernel[i].basis().row(k))),
                   "induced_from_quotient: map does not vanish on the kernel");
        comps.push_back(f.component(i) * q.kernel[i].quotient_reps().transpose());
    }
    return RepMorphism(q.object, f.target(), std::move(comps));
}

struct Factorization {
    SubRepresentation kernel;
    SubRepresentation image;
    RepMorphism epi_part;  // X -> Im f
    QuotientRepresentation cokernel;
};

inline Factorization morphism_factorization(const RepMorphism& f)
{
    const auto& x = f.source();
    const auto& y = f.target();
    std::vector<Subspace> ker, im;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        ker.push_back(kernel_basis(f.component(i)));
        im.push_back(Subspace::image(f.component(i)));
    }
    auto k = subrepresentation(x, ker);
    auto m = subrepresentation(y, im);
    std::vector<Matrix> epi;
    for (std::size_t i = 0; i < x.vertex_count(); ++i)
        epi.push_back(f.component(i).select_rows(im[i].pivots()));
    RepMorphism e(x, m.object, std::move(epi));
    ensure(m.inclusion * e == f, "morphism_factorization: f != inclusion o epi");
    return {k, m, e, quotient(y, im)};
}

inline SubRepresentation kernel(const RepMorphism& f) { return morphism_factorization(f).kernel; }

struct DirectSum {
    Representation object;
    std::vector<RepMorphism> injections;
    std::vector<RepMorphism> projections;
};

inline DirectSum direct_sum(QuiverPtr q, Field f, const std::vector<Representation>& parts)
{
    const std::size_t n = q->vertex_count();
    std::vector<std::size_t> dims(n, 0);
    for (const auto& x : parts)
        for (std::size_t i = 0; i < n; ++i)
            dims[i] += x.dim(i);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q->arrows().size(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& x : parts)
            blocks.push_back(x.map(a));
        maps.push_back(Matrix::block_diag(f, blocks));
    }
    Representation sum(q, f, dims, std::move(maps));
    DirectSum out{sum, {}, {}};
    std::vector<std::size_t> off(n, 0);
    for (const auto& x : parts) {
        std::vector<Matrix> inj, proj;
        for (std::size_t i = 0; i < n; ++i) {
            Matrix in(f, dims[i], x.dim(i));
            Matrix pr(f, x.dim(i), dims[i]);
            for (std::size_t k = 0; k < x.dim(i); ++k) {
                in(off[i] + k, k) = 1;
                pr(k, off[i] + k) = 1;
            }
            inj.push_back(std::move(in));
            proj.push_back(std::move(pr));
            off[i] += x.dim(i);
        }
        out.injections.emplace_back(x, sum, std::move(inj));
        out.projections.emplace_back(sum, x, std::move(proj));
    }
    return out;
}

inline DirectSum direct_sum(const std::vector<Representation>& parts)
{
    ensure(!parts.empty(), "direct_sum: empty list needs an explicit quiver");
    return direct_sum(parts.front().quiver(), parts.front().field(), parts);
}

/// Direct sum of morphisms f_k: X_k -> Y_k as a block-diagonal morphism.
inline RepMorphism direct_sum_map(const DirectSum& src, const DirectSum& tgt, const std::vector<RepMorphism>& fs)
{
    ensure(fs.size() == src.injections.size() && fs.size() == tgt.injections.size(),
           "direct_sum_map: arity mismatch");
    RepMorphism total = RepMorphism::zero(src.object, tgt.object);
    for (std::size_t k = 0; k < fs.size(); ++k)
        total = total + tgt.injections[k] * fs[k] * src.projections[k];
    return total;
}

/// P(i): basis of P(i)_j is the paths from i to j.
inline Representation projective_rep(QuiverPtr q, Field f, std::size_t i)
{
    const std::size_t n = q->vertex_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t j = 0; j < n; ++j)
        dims[j] = q->paths_between(i, j).size();
    std::vector<Matrix> maps;
    for (std::size_t ai = 0; ai < q->arrows().size(); ++ai) {
        const auto& a = q->arrows()[ai];
        Matrix m(f, dims[a.target], dims[a.source]);
        const auto& from = q->paths_between(i, a.source);
        for (std::size_t c = 0; c < from.size(); ++c) {
            auto arrows = q->paths()[from[c]].arrows;
            arrows.push_back(ai);
            m(q->path_position(i, a.target, arrows), c) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Representation(q, f, std::move(dims), std::move(maps));
}

/// I(i): basis of I(i)_j is (the dual of) the paths from j to i.
inline Representation injective_rep(QuiverPtr q, Field f, std::size_t i)
{
    const std::size_t n = q->vertex_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t j = 0; j < n; ++j)
        dims[j] = q->paths_between(j, i).size();
    std::vector<Matrix> maps;
    for (std::size_t ai = 0; ai < q->arrows().size(); ++ai) {
        const auto& a = q->arrows()[ai];
        Matrix m(f, dims[a.target], dims[a.source]);
        const auto& from = q->paths_between(a.source, i);
        for (std::size_t c = 0; c < from.size(); ++c) {
            const auto& arrows = q->paths()[from[c]].arrows;
            if (arrows.empty() || arrows.front() != ai)
                continue;
            std::vector<std::size_t> rest(arrows.begin() + 1, arrows.end());
            m(q->path_position(a.target, i, rest), c) = 1;
        }
        maps.push_back(std::move(m));
    }
    return Representation(q, f, std::move(dims), std::move(maps));
}

inline Representation simple_rep(QuiverPtr q, Field f, std::size_t i)
{
    std::vector<std::size_t> dims(q->vertex_count(), 0);
    dims[i] = 1;
    std::vector<Matrix> maps;
    for (const auto& a : q->arrows())
        maps.emplace_back(f, dims[a.target], dims[a.source]);
    return Representation(q, f, std::move(dims), std::move(maps));
}

struct StandardObjects {
    Representation projective;
    Representation injective;
    Representation simple;
};

inline StandardObjects standard_objects(QuiverPtr q, Field f, std::size_t i)
{
    if (i >= q->vertex_count())
        throw InputError("standard_objects: unknown vertex index " + std::to_string(i));
    return {projective_rep(q, f, i), injective_rep(q, f, i), simple_rep(q, f, i)};
}

/// A direct sum of indecomposable projectives P(tops[0]) + P(tops[1]) + ... in path bases.
struct StdProjective {
    Representation object;
    std::vector<std::size_t> tops;
    DirectSum sum;

    /// Coordinate of the trivial path of summand k at its top vertex.
    [[nodiscard]] std::size_t top_position(std::size_t k) const
    {
        std::size_t off = 0;
        for (std::size_t m = 0; m < k; ++m)
            off += sum.injections[m].source().dim(tops[k]);
        return off;
    }
};

inline StdProjective standard_projective(QuiverPtr q, Field f, std::vector<std::size_t> tops)
{
    std::vector<Representation> parts;
    for (auto i : tops)
        parts.push_back(projective_rep(q, f, i));
    auto sum = direct_sum(q, f, parts);
    return {sum.object, std::move(tops), std::move(sum)};
}

/// The morphism P -> X sending the trivial path of summand k to images[k] in X_{tops[k]}.
inline RepMorphism morphism_from_projective(const StdProjective& p, const Representation& x,
                                            const std::vector<Vec>& images)
{
    const auto& q = x.quiver();
    const std::size_t n = q->vertex_count();
    std::vector<Matrix> comps;
    for (std::size_t j = 0; j < n; ++j)
        comps.emplace_back(x.field(), x.dim(j), p.object.dim(j));
    for (std::size_t k = 0; k < p.tops.size(); ++k) {
        const std::size_t i = p.tops[k];
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t off = 0;
            for (std::size_t m = 0; m < k; ++m)
                off += p.sum.injections[m].source().dim(j);
            const auto& ids = q->paths_between(i, j);
            for (std::size_t c = 0; c < ids.size(); ++c) {
                auto col = x.path_map(q->paths()[ids[c]]).apply(images[k]);
                for (std::size_t r = 0; r < col.size(); ++r)
                    comps[j](r, off + c) = col[r];
            }
        }
    }
    return RepMorphism(p.object, x, std::move(comps));
}

/// Radical of X at each vertex: the sum of the images of the incoming arrows.
inline std::vector<Subspace> radical_subspaces(const Representation& x)
{
    std::vector<Subspace> rad;
    for (std::size_t i = 0; i < x.vertex_count(); ++i)
        rad.emplace_back(x.field(), x.dim(i));
    const auto& arrows = x.quiver()->arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        rad[arrows[a].target] = subspace_sum(rad[arrows[a].target], Subspace::image(x.map(a)));
    return rad;
}

struct ProjectiveCover {
    StdProjective projective;
    RepMorphism pi;
};

/// P = sum of P(i)^{dim top(X)_i}; tops ordered by vertex, then by quotient_reps of the radical.
inline ProjectiveCover projective_cover(const Representation& x)
{
    auto rad = radical_subspaces(x);
    std::vector<std::size_t> tops;
    std::vector<Vec> images;
    for (std::size_t i = 0; i < x.vertex_count(); ++i) {
        auto reps = rad[i].quotient_reps();
        for (std::size_t k = 0; k < reps.rows(); ++k) {
            tops.push_back(i);
            images.push_back(reps.row(k));
        }
    }
    auto p = standard_projective(x.quiver(), x.field(), tops);
    auto pi = morphism_from_projective(p, x, images);
    ensure(pi.is_epi(), "projective_cover: cover map is not surjective");
    return {std::move(p), std::move(pi)};
}

inline bool is_projective(const Representation& x)
{
    return projective_cover(x).projective.object.total_dim() == x.total_dim();
}

/// The image of the trivial path of each summand under g: P -> X.
inline std::vector<Vec> images_of_tops(const StdProjective& p, const RepMorphism& g)
{
    std::vector<Vec> out;
    for (std::size_t k = 0; k < p.tops.size(); ++k)
        out.push_back(g.component(p.tops[k]).column(p.top_position(k)));
    return out;
}

/// Dual representation over the opposite quiver: vertex spaces dualized, arrow maps transposed.
inline Representation dual(const Representation& x, QuiverPtr opposite)
{
    std::vector<Matrix> maps;
    for (const auto& m : x.maps())
        maps.push_back(m.transpose());
    return Representation(std::move(opposite), x.field(), x.dims(), std::move(maps));
}

inline RepMorphism dual(const RepMorphism& f, const Representation& dual_source, const Representation& dual_target)
{
    // D f : D target -> D source
    std::vector<Matrix> comps;
    for (const auto& c : f.components())
        comps.push_back(c.transpose());
    return RepMorphism(dual_target, dual_source, std::move(comps));
}

}  // namespace auslander
