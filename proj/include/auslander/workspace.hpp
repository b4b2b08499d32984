#pragma once

// JSON workspaces: a field, an acyclic quiver and named modules (optionally
// named morphisms), plus helpers that turn results into JSON documents.
//
// {"field":{"p":2},
//  "quiver":{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]},
//  "modules":{"S1":{"dims":{"1":1,"2":0},"maps":{"a":[]}}},
//  "morphisms":{"pi":{"source":"P1","target":"S1","maps":{"1":[[1]],"2":[]}}},
//  "config":{"max_enum":65536,"universe":["S1","S2"]}}

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "auslander/quiver.hpp"
#include "auslander/triangle.hpp"
#include "json.hpp"

namespace auslander {

using Json = nlohmann::ordered_json;

struct WorkspaceConfig {
    std::optional<unsigned long long> max_enum;
    std::optional<std::vector<std::string>> universe;
};

struct Workspace {
    Field field{2};
    QuiverPtr quiver;
    std::map<std::string, Representation> modules;
    std::map<std::string, RepMorphism> morphisms;
    WorkspaceConfig config;

    [[nodiscard]] const Representation& module(const std::string& name) const
    {
        auto it = modules.find(name);
        if (it == modules.end())
            throw InputError("workspace: unknown module '" + name + "'");
        return it->second;
    }

    [[nodiscard]] const RepMorphism& morphism(const std::string& name) const
    {
        auto it = morphisms.find(name);
        if (it == morphisms.end())
            throw InputError("workspace: unknown morphism '" + name + "'");
        return it->second;
    }
};

namespace detail {

inline const Json& member(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

inline std::string as_label(const Json& j, const std::string& where)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw InputError(where + ": expected a label");
}

/// Reads a list of rows; `rows` x `cols` is the expected shape.
inline Matrix read_matrix(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": matrix must be a list of rows");
    // zero-dimensional sides give empty lists
    if (rows == 0 || cols == 0) {
        const bool ok = j.empty() || (rows == j.size() && std::all_of(j.begin(), j.end(), [](const Json& r) {
                                          return r.is_array() && r.empty();
                                      }));
        if (!ok)
            throw InputError(where + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " matrix, got " + std::to_string(j.size()) + " rows");
        return Matrix(f, rows, cols);
    }
    if (j.size() != rows)
        throw InputError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw InputError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer())
                throw InputError(where + ": entries must be integers");
            auto v = row[c].get<long long>();
            if (v < 0 || v >= static_cast<long long>(f.p()))
                throw InputError(where + ": entry " + std::to_string(v) + " outside [0," + std::to_string(f.p()) + ")");
            m(r, c) = static_cast<Scalar>(v);
        }
    }
    return m;
}

inline Representation read_module(const Json& j, const std::string& name, const QuiverPtr& q, const Field& f)
{
    const std::string where = "module '" + name + "'";
    std::vector<std::size_t> dims(q->vertex_count(), 0);
    const auto& d = member(j, "dims", where);
    if (!d.is_object())
        throw InputError(where + ": \"dims\" must be an object");
    for (const auto& [v, n] : d.items()) {
        std::size_t i;
        try {
            i = q->vertex_index(v);
        } catch (const InputError&) {
            throw InputError(where + ": unknown vertex '" + v + "'");
        }
        if (!n.is_number_integer() || n.get<long long>() < 0)
            throw InputError(where + ": dimension at vertex '" + v + "' must be a non-negative integer");
        dims[i] = n.get<std::size_t>();
    }
    Json maps = j.contains("maps") ? j.at("maps") : Json::object();
    if (!maps.is_object())
        throw InputError(where + ": \"maps\" must be an object");
    for (const auto& [a, _] : maps.items())
        if (std::none_of(q->arrows().begin(), q->arrows().end(), [&](const Arrow& x) { return x.name == a; }))
            throw InputError(where + ": unknown arrow '" + a + "'");
    std::vector<Matrix> ms;
    for (const auto& arr : q->arrows()) {
        const auto rows = dims[arr.target], cols = dims[arr.source];
        const std::string at = where + ", arrow '" + arr.name + "'";
        if (!maps.contains(arr.name)) {
            if (rows && cols)
                throw InputError(at + ": map missing");
            ms.emplace_back(f, rows, cols);
            continue;
        }
        ms.push_back(read_matrix(maps.at(arr.name), f, rows, cols, at));
    }
    return Representation(q, f, std::move(dims), std::move(ms));
}

inline RepMorphism read_morphism(const Json& j, const std::string& name, const Workspace& ws)
{
    const std::string where = "morphism '" + name + "'";
    auto src = ws.module(as_label(member(j, "source", where), where));
    auto tgt = ws.module(as_label(member(j, "target", where), where));
    const auto& maps = member(j, "maps", where);
    const auto& q = *ws.quiver;
    std::vector<Matrix> comps;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        const std::string at = where + ", vertex '" + q.label(i) + "'";
        if (!maps.contains(q.label(i))) {
            if (src.dim(i) && tgt.dim(i))
                throw InputError(at + ": component missing");
            comps.emplace_back(ws.field, tgt.dim(i), src.dim(i));
            continue;
        }
        comps.push_back(read_matrix(maps.at(q.label(i)), ws.field, tgt.dim(i), src.dim(i), at));
    }
    try {
        return RepMorphism(src, tgt, std::move(comps));
    } catch (const InvariantViolation& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace detail

inline Workspace parse_workspace(const Json& j)
{
    Workspace ws;
    const auto& fj = detail::member(j, "field", "workspace");
    const auto& pj = detail::member(fj, "p", "field");
    if (!pj.is_number_integer() || pj.get<long long>() < 2 || pj.get<long long>() > 255)
        throw InputError("field: p must be a prime below 256");
    ws.field = Field(pj.get<unsigned>());

    const auto& qj = detail::member(j, "quiver", "workspace");
    std::vector<std::string> vertices;
    for (const auto& v : detail::member(qj, "vertices", "quiver"))
        vertices.push_back(detail::as_label(v, "quiver vertices"));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    if (qj.contains("relations") && !qj.at("relations").empty())
        throw InputError("quiver: relations are not supported (path algebras only)");
    for (const auto& a : qj.value("arrows", Json::array())) {
        auto name = detail::as_label(detail::member(a, "name", "arrow"), "arrow");
        arrows.emplace_back(name, detail::as_label(detail::member(a, "from", "arrow '" + name + "'"), "arrow"),
                            detail::as_label(detail::member(a, "to", "arrow '" + name + "'"), "arrow"));
    }
    ws.quiver = Quiver::make(std::move(vertices), arrows);

    const auto& mj = detail::member(j, "modules", "workspace");
    if (!mj.is_object())
        throw InputError("workspace: \"modules\" must be an object");
    for (const auto& [name, body] : mj.items())
        ws.modules.emplace(name, detail::read_module(body, name, ws.quiver, ws.field));
    if (j.contains("morphisms"))
        for (const auto& [name, body] : j.at("morphisms").items())
            ws.morphisms.emplace(name, detail::read_morphism(body, name, ws));

    if (j.contains("config")) {
        const auto& c = j.at("config");
        if (c.contains("max_enum"))
            ws.config.max_enum = c.at("max_enum").get<unsigned long long>();
        if (c.contains("universe")) {
            std::vector<std::string> names;
            for (const auto& n : c.at("universe")) {
                names.push_back(n.get<std::string>());
                (void)ws.module(names.back());
            }
            ws.config.universe = names;
        }
    }
    return ws;
}

inline Workspace load_workspace(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("workspace: cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
        return parse_workspace(j);
    } catch (const Json::exception& e) {
        throw InputError("workspace: parse error in '" + path + "': " + e.what());
    }
}

// ---- machine-readable output ------------------------------------------------

inline Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const Vec& v)
{
    Json out = Json::array();
    for (auto x : v)
        out.push_back(x);
    return out;
}

/// A subspace as its RREF basis rows; re-parse with `parse_subspace`.
inline Json to_json(const Subspace& s)
{
    Json rows = Json::array();
    for (const auto& v : s.vectors())
        rows.push_back(to_json(v));
    return rows;
}

inline Json to_json(const Representation& x)
{
    const auto& q = *x.quiver();
    Json dims = Json::object(), maps = Json::object();
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        dims[q.label(i)] = x.dim(i);
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
        maps[q.arrows()[a].name] = to_json(x.map(a));
    return Json{{"dims", dims}, {"maps", maps}};
}

inline Json to_json(const RepMorphism& g)
{
    const auto& q = *g.source().quiver();
    Json maps = Json::object();
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        maps[q.label(i)] = to_json(g.component(i));
    return maps;
}

/// Parses "[[1,0],[0,1]]" (rows spanning the subspace) inside F_p^n.
inline Subspace parse_subspace(const std::string& text, const Field& f, std::size_t n)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("subspace: ") + e.what());
    }
    if (!j.is_array())
        throw InputError("subspace: expected a list of rows");
    auto m = detail::read_matrix(j, f, j.size(), n, "subspace");
    return Subspace::row_span(m);
}

/// Parses "1,0,1" or "[1,0,1]" as a vector in F_p^n.
inline Vec parse_vector(const std::string& text, const Field& f, std::size_t n)
{
    const std::string s = !text.empty() && text.front() == '[' ? "[" + text + "]" : "[[" + text + "]]";
    Json j;
    try {
        j = Json::parse(s);
    } catch (const Json::exception& e) {
        throw InputError(std::string("vector: ") + e.what());
    }
    return detail::read_matrix(j, f, 1, n, "vector").row(0);
}

inline std::string dims_string(const Representation& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.vertex_count(); ++i)
        s += (i ? "," : "") + std::to_string(x.dim(i));
    return s + ")";
}

inline std::string subspace_string(const Subspace& s)
{
    if (s.dim() == 0)
        return "0";
    std::string out = "<";
    bool first = true;
    for (const auto& v : s.vectors()) {
        out += first ? "" : ", ";
        first = false;
        for (auto x : v)
            out += std::to_string(x);
    }
    return out + ">";
}

}  // namespace auslander
