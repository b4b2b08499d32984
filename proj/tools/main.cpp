// auslander: command-line front end over a JSON workspace.
// Exit codes: 0 all checks pass, 1 a verification failed, 2 input or usage error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "auslander/auslander.hpp"

using namespace auslander;

namespace {

struct Args {
    std::string workspace;
    bool json = false;
    std::optional<unsigned long long> max_enum;
    std::vector<std::string> universe;
    std::string x, y, z, c, k, cprime, alpha, l, theta;
    bool inverse = false;
};

struct Report {
    std::vector<std::string> lines;
    Json doc = Json::object();
    bool pass = true;

    void line(std::string s) { lines.push_back(std::move(s)); }
};

std::string need(const std::string& value, const char* flag)
{
    if (value.empty())
        throw InputError(std::string("missing required option --") + flag);
    return value;
}

struct Context {
    const Workspace& ws;
    const Args& args;
    DecomposeOptions dec;
    LatticeOptions lat;
    unsigned long long cap = 1ull << 16;

    Context(const Workspace& w, const Args& a) : ws(w), args(a)
    {
        auto m = a.max_enum ? a.max_enum : w.config.max_enum;
        if (m) {
            dec.max_enumeration = *m;
            lat.max_vectors = *m;
            cap = *m;
        }
    }

    [[nodiscard]] const Representation& mod(const std::string& value, const char* flag) const
    {
        return ws.module(need(value, flag));
    }

    /// Universe for the determinedness oracle: --universe, the workspace default, or
    /// all indecomposables when the quiver is Dynkin.
    [[nodiscard]] std::optional<std::vector<Representation>> universe(std::string& source) const
    {
        const auto* names = !args.universe.empty() ? &args.universe : ws.config.universe ? &*ws.config.universe : nullptr;
        if (names) {
            std::vector<Representation> out;
            for (const auto& n : *names)
                out.push_back(ws.module(n));
            source = "named modules";
            return out;
        }
        if (dynkin_type(*ws.quiver)) {
            source = "all indecomposables";
            return indecomposables(ws.quiver, ws.field, dec);
        }
        source = "none (quiver is not Dynkin)";
        return std::nullopt;
    }

    [[nodiscard]] TriangleOptions triangle_options(Report& r) const
    {
        TriangleOptions opt;
        opt.decompose = dec;
        opt.lattice = lat;
        opt.oracle_cap = cap;
        std::string src;
        opt.universe = universe(src);
        r.line("determinedness universe: " + src);
        r.doc["universe"] = src;
        return opt;
    }
};

std::string hom_line(const char* what, std::size_t n) { return std::string(what) + " dimension " + std::to_string(n); }

void cmd_hom(const Context& cx, Report& r)
{
    const auto& x = cx.mod(cx.args.x, "X");
    const auto& y = cx.mod(cx.args.y, "Y");
    auto h = hom_space(x, y);
    r.line(hom_line("Hom(X, Y):", h.dim()));
    Json basis = Json::array();
    for (std::size_t k = 0; k < h.dim(); ++k) {
        basis.push_back(to_json(h.basis(k)));
        std::string s = "  f" + std::to_string(k) + ":";
        for (std::size_t i = 0; i < x.vertex_count(); ++i)
            s += " " + x.quiver()->label(i) + "=" + to_json(h.basis(k).component(i)).dump();
        r.line(s);
    }
    r.doc["dimension"] = h.dim();
    r.doc["basis"] = basis;
}

void cmd_ext(const Context& cx, Report& r)
{
    const auto& y = cx.mod(cx.args.y, "Y");
    const auto& z = cx.mod(cx.args.z, "Z");
    auto e = ext_space(y, z);
    r.line(hom_line("Ext^1(Y, Z):", e.dim()));
    Json classes = Json::array();
    for (std::size_t k = 0; k < e.dim(); ++k) {
        Vec v(e.dim(), 0);
        v[k] = 1;
        auto seq = realize_ext(e, v);
        r.line("  e" + std::to_string(k) + ": middle term " + dims_string(seq.middle));
        classes.push_back(Json{{"middle", to_json(seq.middle)}, {"alpha", to_json(seq.alpha)}});
    }
    r.doc["dimension"] = e.dim();
    r.doc["hom_dimension"] = e.hom_dim();
    r.doc["basis_extensions"] = classes;
}

void cmd_tau(const Context& cx, Report& r)
{
    const auto& x = cx.mod(cx.args.x, "X");
    auto t = cx.args.inverse ? tau_inverse(x) : tau(x);
    const char* name = cx.args.inverse ? "tau^-1 X" : "tau X";
    if (t.total_dim() == 0)
        r.line(std::string(name) + " is the zero object");
    else
        r.line(std::string(name) + " has dimension vector " + dims_string(t));
    r.doc["zero"] = t.total_dim() == 0;
    r.doc["object"] = to_json(t);
}

void cmd_stablehom(const Context& cx, Report& r)
{
    const auto& c = cx.mod(cx.args.c, "C");
    const auto& y = cx.mod(cx.args.y, "Y");
    auto sh = stable_hom(c, y);
    r.line("Hom(C, Y): dimension " + std::to_string(sh.hom().dim()));
    r.line("maps factoring through projectives: dimension " + std::to_string(sh.trivial().dim()));
    r.line(hom_line("stable Hom(C, Y):", sh.dim()));
    r.doc["dimension"] = sh.dim();
    r.doc["hom_dimension"] = sh.hom().dim();
    r.doc["projectively_trivial"] = to_json(sh.trivial());
}

void cmd_pairing(const Context& cx, Report& r)
{
    const auto& c = cx.mod(cx.args.c, "C");
    const auto& y = cx.mod(cx.args.y, "Y");
    auto b = ar_pairing(c, y, {cx.dec, true});
    r.line("tau C = " + dims_string(b.k()));
    r.line("pairing Ext^1(Y, tau C) x stable Hom(C, Y) -> k, " + std::to_string(b.matrix().rows()) + "x" +
           std::to_string(b.matrix().cols()));
    for (std::size_t i = 0; i < b.matrix().rows(); ++i) {
        std::string s = " ";
        for (std::size_t j = 0; j < b.matrix().cols(); ++j)
            s += " " + std::to_string(b.matrix()(i, j));
        r.line(s);
    }
    r.line("non-degenerate, descends to the stable category, End(C)-balanced");
    r.doc["tau_c"] = to_json(b.k());
    r.doc["matrix"] = to_json(b.matrix());
    r.doc["checks"] = "pass";
}

void print_lattice(const SubmoduleLattice& lat, Report& r)
{
    r.line(std::to_string(lat.members.size()) + " submodules");
    Json members = Json::array();
    for (std::size_t i = 0; i < lat.members.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "  [%zu] dim %-3zu ", i, lat.members[i].dim());
        r.line(buf + subspace_string(lat.members[i]));
        members.push_back(to_json(lat.members[i]));
    }
    Json edges = Json::array();
    std::string s = "covers:";
    for (auto [a, b] : lat.hasse_edges()) {
        s += " " + std::to_string(a) + "<" + std::to_string(b);
        edges.push_back(Json::array({a, b}));
    }
    r.line(s);
    r.doc["members"] = members;
    r.doc["covers"] = edges;
}

void cmd_lattice(const Context& cx, Report& r)
{
    const auto& y = cx.mod(cx.args.y, "Y");
    if (!cx.args.k.empty()) {
        auto em = ext_as_gamma_module(y, cx.mod(cx.args.k, "K"));
        r.line("End(K)-submodules of Ext^1(Y, K), dimension " + std::to_string(em.ext.dim()));
        r.doc["module"] = "ext";
        print_lattice(submodule_lattice(em.module, cx.lat), r);
    } else {
        auto sm = stablehom_as_gammaop_module(cx.mod(cx.args.c, "C or --K"), y);
        r.line("End(C)^op-submodules of stable Hom(C, Y), dimension " + std::to_string(sm.space.dim()));
        r.doc["module"] = "stable_hom";
        print_lattice(submodule_lattice(sm.module, cx.lat), r);
    }
}

Subspace read_l(const Context& cx, const ExtModule& em)
{
    auto l = cx.args.l.empty() ? Subspace::full(em.ext.field(), em.ext.dim())
                               : parse_subspace(cx.args.l, em.ext.field(), em.ext.dim());
    if (!em.module.is_stable(l))
        throw InputError("L = " + subspace_string(l) + " is not an End(K)-submodule");
    return l;
}

void cmd_universal(const Context& cx, Report& r)
{
    const auto& y = cx.mod(cx.args.y, "Y");
    const auto& k = cx.mod(cx.args.k, "K");
    auto em = ext_as_gamma_module(y, k);
    auto l = read_l(cx, em);
    auto ue = universal_extension(em, l, decompose(k, cx.dec));
    const bool minimal = is_right_minimal(ue.seq.alpha);
    const bool back = delta(ue.seq.alpha, em) == l;
    r.line("L = " + subspace_string(l));
    r.line("0 -> " + dims_string(ue.seq.kernel) + " -> " + dims_string(ue.seq.middle) + " -> " +
           dims_string(ue.seq.cokernel) + " -> 0");
    r.line(std::string("right minimal: ") + (minimal ? "yes" : "no"));
    r.line(std::string("delta recovers L: ") + (back ? "yes" : "no"));
    r.pass = minimal && back;
    r.doc["L"] = to_json(l);
    r.doc["kernel"] = to_json(ue.seq.kernel);
    r.doc["middle"] = to_json(ue.seq.middle);
    r.doc["iota"] = to_json(ue.seq.iota);
    r.doc["alpha"] = to_json(ue.seq.alpha);
    r.doc["right_minimal"] = minimal;
    r.doc["delta_roundtrip"] = back;
}

void cmd_delta(const Context& cx, Report& r)
{
    const auto& a = cx.ws.morphism(need(cx.args.alpha, "alpha"));
    auto k = cx.args.k.empty() ? kernel(a).object : cx.mod(cx.args.k, "K");
    auto em = ext_as_gamma_module(a.target(), k);
    auto d = delta(a, em);
    r.line("delta(alpha) in Ext^1(Y, K) (dimension " + std::to_string(em.ext.dim()) + "): " + subspace_string(d));
    r.doc["ext_dimension"] = em.ext.dim();
    r.doc["delta"] = to_json(d);
}

void cmd_gamma(const Context& cx, Report& r)
{
    const auto& c = cx.mod(cx.args.c, "C");
    const auto& y = cx.mod(cx.args.y, "Y");
    auto b = ar_pairing(c, y, {cx.dec, false});
    auto em = ext_as_gamma_module(b.ext(), endo_algebra(b.k()));
    auto l = read_l(cx, em);
    auto g = gamma(b, l);
    r.line("L = " + subspace_string(l) + " in Ext^1(Y, tau C)");
    r.line("gamma(L) = " + subspace_string(g) + " in stable Hom(C, Y)");
    r.doc["L"] = to_json(l);
    r.doc["gamma"] = to_json(g);
}

void cmd_eta(const Context& cx, Report& r)
{
    const auto& c = cx.mod(cx.args.c, "C");
    const auto& a = cx.ws.morphism(need(cx.args.alpha, "alpha"));
    auto sh = stable_hom(c, a.target());
    auto e = eta(sh, a);
    r.line("eta(alpha) = " + subspace_string(e) + " in stable Hom(C, Y) (dimension " + std::to_string(sh.dim()) + ")");
    r.doc["eta"] = to_json(e);
    r.doc["stable_dimension"] = sh.dim();
}

void cmd_minimal(const Context& cx, Report& r)
{
    const auto& a = cx.ws.morphism(need(cx.args.alpha, "alpha"));
    const bool minimal = is_right_minimal(a);
    r.line(std::string("right minimal: ") + (minimal ? "yes" : "no"));
    r.doc["right_minimal"] = minimal;
    if (a.is_epi()) {
        auto mv = right_minimal_version(a, cx.dec);
        r.line("right minimal version: " + dims_string(mv.alpha.source()) + " -> " + dims_string(mv.alpha.target()));
        r.doc["minimal_version"] = Json{{"source", to_json(mv.alpha.source())}, {"alpha", to_json(mv.alpha)}};
    }
}

void cmd_determined(const Context& cx, Report& r)
{
    const auto& a = cx.ws.morphism(need(cx.args.alpha, "alpha"));
    const auto& c = cx.mod(cx.args.c, "C");
    const bool crit = kernel_criterion(a, c, cx.dec);
    r.line(std::string("kernel criterion (tau^-1 Ker alpha in add C): ") + (crit ? "determined" : "not determined"));
    r.doc["kernel_criterion"] = crit;
    std::string src;
    auto u = cx.universe(src);
    r.line("universe: " + src);
    if (u) {
        auto d = determined_oracle(a, c, *u, cx.cap);
        r.line(std::string("oracle: ") + (d.determined ? "determined" : "not determined"));
        r.doc["oracle"] = d.determined;
        r.pass = d.determined == crit;
    }
}

void cmd_triangle(const Context& cx, Report& r)
{
    const auto& c = cx.mod(cx.args.c, "C");
    const auto& y = cx.mod(cx.args.y, "Y");
    auto rep = verify_triangle(c, y, cx.triangle_options(r));
    for (const auto& n : rep.notes)
        r.line("note: " + n);
    r.line("tau C = " + dims_string(rep.k) + ", dim Ext^1(Y, tau C) = " + std::to_string(rep.ext_dim) +
           ", dim stable Hom(C, Y) = " + std::to_string(rep.stable_dim));
    r.line(std::to_string(rep.records.size()) + " submodules L");
    char buf[256];
    std::snprintf(buf, sizeof buf, "  %-16s %-12s %-12s %-6s %-8s %-6s %-10s %s", "L", "X_L", "K_L", "delta", "minimal",
                  "add K", "determined", "eta=gamma");
    r.line(buf);
    Json rows = Json::array();
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    for (const auto& rec : rep.records) {
        std::snprintf(buf, sizeof buf, "  %-16s %-12s %-12s %-6s %-8s %-6s %-10s %s", subspace_string(rec.l).c_str(),
                      dims_string(rec.middle).c_str(), dims_string(rec.kernel).c_str(), yn(rec.delta_roundtrip),
                      yn(rec.right_minimal), yn(rec.kernel_in_add), rec.determined ? yn(*rec.determined) : "-",
                      yn(rec.eta_equals_gamma));
        r.line(buf);
        if (!rec.pass())
            r.line("    FAILED at L = " + to_json(rec.l).dump());
        Json row{{"L", to_json(rec.l)},         {"middle", to_json(rec.middle)}, {"kernel_dims", dims_string(rec.kernel)},
                 {"eta", to_json(rec.eta)},     {"gamma", to_json(rec.gamma)},   {"delta_roundtrip", rec.delta_roundtrip},
                 {"right_minimal", rec.right_minimal}, {"kernel_in_add", rec.kernel_in_add},
                 {"eta_equals_gamma", rec.eta_equals_gamma}};
        if (rec.determined)
            row["determined"] = *rec.determined;
        rows.push_back(row);
    }
    r.line(std::string("order reversal: ") + yn(rep.order_reversal) + ", gamma order: " + yn(rep.gamma_order) +
           ", eta order: " + yn(rep.eta_order) + ", gamma onto lattice: " + yn(rep.gamma_onto_lattice));
    for (const auto& f : rep.failures)
        r.line("failure: " + f);
    r.pass = rep.pass();
    r.doc["tau_c"] = to_json(rep.k);
    r.doc["pairing"] = to_json(rep.pairing);
    r.doc["ext_dimension"] = rep.ext_dim;
    r.doc["stable_dimension"] = rep.stable_dim;
    r.doc["stable_lattice_size"] = rep.stable_lattice_size;
    r.doc["records"] = rows;
    r.doc["order_reversal"] = rep.order_reversal;
    r.doc["gamma_order"] = rep.gamma_order;
    r.doc["eta_order"] = rep.eta_order;
    r.doc["gamma_onto_lattice"] = rep.gamma_onto_lattice;
    r.doc["failures"] = rep.failures;
}

void cmd_ringel(const Context& cx, Report& r)
{
    const auto& c = cx.mod(cx.args.c, "C");
    const auto& y = cx.mod(cx.args.y, "Y");
    const auto& c1 = cx.args.cprime.empty() ? c : cx.mod(cx.args.cprime, "Cprime");
    if (!in_add(c1, c, false, cx.dec))
        throw InputError("C' must lie in add C");
    auto b = ar_pairing(c1, y, {cx.dec, false});
    auto sm = stablehom_as_gammaop_module(c, y);
    auto theta = parse_vector(need(cx.args.theta, "theta"), y.field(), b.stable().dim());
    auto lat = submodule_lattice(sm.module, cx.lat);
    auto res = ringel_F(b, sm.space, theta, lat);
    r.line("F(theta) via pairing and eta: " + subspace_string(res.composite));
    r.line("F(theta) by formula:          " + subspace_string(res.formula));
    if (res.largest_in_kernel)
        r.line("largest submodule in Ker theta: " + subspace_string(*res.largest_in_kernel));
    r.line(std::string("agree: ") + (res.agree ? "yes" : "no"));
    r.pass = res.agree;
    r.doc["composite"] = to_json(res.composite);
    r.doc["formula"] = to_json(res.formula);
    if (res.largest_in_kernel)
        r.doc["largest_in_kernel"] = to_json(*res.largest_in_kernel);
    r.doc["agree"] = res.agree;
}

void cmd_present(const Context& cx, Report& r)
{
    const auto& c = cx.mod(cx.args.c, "C");
    const auto& y = cx.mod(cx.args.y, "Y");
    TriangleOptions opt;
    opt.decompose = cx.dec;
    opt.lattice = cx.lat;
    auto rep = present_objects_check(c, y, opt);
    r.line("Xbar = " + dims_string(rep.xbar) + ", n = " + std::to_string(rep.n));
    Json rows = Json::array();
    for (const auto& rec : rep.records) {
        r.line("  L = " + subspace_string(rec.l) + "  X_L = " + dims_string(rec.middle) +
               (rec.certified ? "  quotient of Xbar + K^n" : "  NOT certified"));
        rows.push_back(Json{{"L", to_json(rec.l)}, {"middle", to_json(rec.middle)}, {"certified", rec.certified}});
    }
    r.line(std::to_string(rep.present.size()) + " present objects up to isomorphism");
    r.pass = rep.pass();
    r.doc["xbar"] = to_json(rep.xbar);
    r.doc["n"] = rep.n;
    r.doc["records"] = rows;
}

void cmd_indecomposables(const Context& cx, Report& r)
{
    auto all = indecomposables(cx.ws.quiver, cx.ws.field, cx.dec);
    r.line(std::to_string(all.size()) + " indecomposables");
    Json out = Json::array();
    for (const auto& x : all) {
        std::string name;
        for (const auto& [n, m] : cx.ws.modules)
            if (name.empty() && is_isomorphic(m, x, cx.dec))
                name = n;
        r.line("  " + dims_string(x) + (is_projective(x) ? " projective" : "") + (is_injective(x) ? " injective" : "") +
               (name.empty() ? "" : "  = " + name));
        out.push_back(to_json(x));
    }
    r.doc["indecomposables"] = out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quiver representations over F_p: Ext, tau, determined morphisms"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Args a;
    app.add_option("--workspace", a.workspace, "workspace JSON file")->required();
    app.add_flag("--json", a.json, "machine-readable output");
    app.add_option("--max-enum", a.max_enum, "cap on exhaustive enumerations");
    app.add_option("--universe", a.universe, "modules forming the determinedness universe")->delimiter(',');
    app.add_option("--X", a.x, "module X");
    app.add_option("--Y", a.y, "module Y");
    app.add_option("--Z", a.z, "module Z");
    app.add_option("--C", a.c, "module C");
    app.add_option("--K", a.k, "module K");
    app.add_option("--Cprime", a.cprime, "module C' in add C");
    app.add_option("--alpha", a.alpha, "named morphism");
    app.add_option("--L", a.l, "subspace as rows, e.g. [[1,0]]");
    app.add_option("--theta", a.theta, "functional coordinates, e.g. 1,0");
    app.add_flag("--inverse", a.inverse, "tau: compute the inverse translate");

    using Handler = void (*)(const Context&, Report&);
    const std::vector<std::pair<std::string, Handler>> commands{
        {"hom", cmd_hom},
        {"ext", cmd_ext},
        {"tau", cmd_tau},
        {"stablehom", cmd_stablehom},
        {"pairing", cmd_pairing},
        {"lattice", cmd_lattice},
        {"universal-ext", cmd_universal},
        {"delta", cmd_delta},
        {"gamma", cmd_gamma},
        {"eta", cmd_eta},
        {"minimal", cmd_minimal},
        {"determined", cmd_determined},
        {"triangle", cmd_triangle},
        {"ringel", cmd_ringel},
        {"present", cmd_present},
        {"indecomposables", cmd_indecomposables},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, _] : commands)
        subs[name] = app.add_subcommand(name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        auto ws = load_workspace(a.workspace);
        Context cx(ws, a);
        Report r;
        std::string which;
        for (const auto& [name, fn] : commands)
            if (subs[name]->parsed()) {
                which = name;
                fn(cx, r);
            }
        if (a.json) {
            Json out{{"command", which}, {"verdict", r.pass ? "pass" : "fail"}};
            out.update(r.doc);
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& l : r.lines)
                std::cout << l << "\n";
            std::cout << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
        }
        return r.pass ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << " (raise --max-enum)\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
}
