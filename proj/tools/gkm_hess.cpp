#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

#include "gkm/cell.hpp"
#include "gkm/chromatic.hpp"
#include "gkm/decomposition.hpp"
#include "gkm/verify.hpp"

using json = nlohmann::json;
using namespace gkm;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string qstr(const Q& q) { return q.get_str(); }

json perms_json(const std::vector<Perm>& v) {
    json a = json::array();
    for (auto& p : v) a.push_back(p.str());
    return a;
}

json class_json(const EquivariantClass& c) {
    json o = json::object();
    for (auto& v : c.support()) o[v.str()] = c(v).str();
    return o;
}

json expansion_json(const Expansion& e) {
    json o = json::object();
    for (auto& [p, c] : e)
        if (!c.is_zero()) o[p.str()] = c.str();
    return o;
}

json matrix_json(const QMat& m) {
    json a = json::array();
    for (auto& row : m) {
        json r = json::array();
        for (auto& x : row) r.push_back(qstr(x));
        a.push_back(r);
    }
    return a;
}

json symfunc_json(const SymFunc& f) {
    json o = json::object();
    for (auto& [lam, v] : f.c) {
        std::string key;
        for (std::size_t i = 0; i < lam.size(); ++i) key += (i ? "," : "") + std::to_string(lam[i]);
        o[key] = qstr(v);
    }
    return o;
}

json suite_json(const SuiteResult& r) {
    json checks = json::array();
    for (auto& c : r.checks) {
        json j{{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}, {"skipped", c.skipped}};
        if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(j);
    }
    json o{{"suite", r.suite}, {"module", r.module}, {"statement", r.statement}, {"ok", r.ok()}, {"checks", checks}};
    if (const Check* f = r.first_failure())
        o["first_failure"] = {{"check", f->name}, {"instance", f->counterexample}};
    return o;
}

void print_table(const json& j, const std::string& prefix = "") {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) print_table(v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        std::cout << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

Hess need_hess(const std::string& spec, int n) {
    if (spec.empty()) throw UsageError("--h is required");
    return Hess::parse(spec, n);
}

Perm need_perm(const std::string& s, int n) {
    if (s.empty()) throw UsageError("--w is required");
    Perm w = Perm::parse(s, n);
    if (w.n() != n) throw UsageError("permutation size does not match n");
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant cohomology of regular semisimple Hessenberg varieties"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);
    app.fallthrough();
    int n = 0, k = -1;
    std::string hs, ws, us, eig, basis_name = "h", format = "json";
    std::uint64_t seed = 1;
    bool emit_basis = false;
    app.add_option("--seed", seed, "root random seed")->capture_default_str();
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    auto with_nh = [&](CLI::App* s, bool need_w) {
        s->add_option("--n", n, "number of flags")->required();
        s->add_option("--h", hs, "Hessenberg function: 3,3,4,5,5 | permutohedral | fullflag");
        if (need_w) s->add_option("--w", ws, "permutation in one-line notation");
    };
    auto* graph = app.add_subcommand("gkm-graph", "GKM graph, or the edges at one vertex");
    with_nh(graph, true);
    auto* support = app.add_subcommand("support", "support A_{w,h} of sigma_{w,h}");
    with_nh(support, true);
    auto* chart = app.add_subcommand("cell-chart", "symbolic chart of the minus cell");
    with_nh(chart, true);
    chart->add_option("--eigen,--eigenvalues", eig, "c_1,...,c_n (default: first primes)");
    auto* cls = app.add_subcommand("class", "the basis class sigma_{w,h}");
    with_nh(cls, true);
    auto* expand = app.add_subcommand("expand", "expand u . sigma_{w,h} in the flow-up basis");
    with_nh(expand, true);
    expand->add_option("--u", us, "group element (default identity)");
    auto* dotc = app.add_subcommand("dot", "the class u . sigma_{w,h}");
    with_nh(dotc, true);
    dotc->add_option("--u", us, "group element")->required();
    auto* am = app.add_subcommand("action-matrix", "matrix of u on H^{2k}");
    with_nh(am, false);
    am->add_option("--k", k, "degree")->required();
    am->add_option("--u", us, "group element")->required();
    auto* dec = app.add_subcommand("decompose", "permutation-module decomposition of H^{2k} (permutohedral)");
    dec->add_option("--n", n, "number of flags")->required();
    dec->add_option("--k", k, "degree")->required();
    dec->add_flag("--emit-basis", emit_basis, "print the basis v . sigma^_w");
    auto* chrom = app.add_subcommand("chromatic", "chromatic quasisymmetric function of G(h)");
    with_nh(chrom, false);
    chrom->add_option("--basis", basis_name, "m, e, h, p or s")->capture_default_str();
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(names));
    ver->add_option("--n", n, "size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    json out{{"schema", 1}};
    int status = 0;
    try {
        if (n < 1 || n > 8) throw UsageError("--n must be in 1..8");
        if (*graph) {
            Hess h = need_hess(hs, n);
            out["command"] = "gkm-graph";
            out["h"] = h.str();
            json edges = json::array();
            std::vector<Perm> verts = ws.empty() ? all_perms(n) : std::vector<Perm>{need_perm(ws, n)};
            for (auto& w : verts)
                for (auto& e : gkm_edges(w, h))
                    if (!ws.empty() || w < e.dst)
                        edges.push_back({{"from", w.str()}, {"to", e.dst.str()}, {"label", e.label_str()},
                                         {"oriented_down", e.down}});
            out["edges"] = edges;
            out["poincare"] = poincare_polynomial(h);
        } else if (*support) {
            Hess h = need_hess(hs, n);
            Perm w = need_perm(ws, n);
            out["command"] = "support";
            out["support"] = perms_json(support_A(w, h));
        } else if (*chart) {
            Hess h = need_hess(hs, n);
            Perm w = need_perm(ws, n);
            Eigenvalues c = eig.empty() ? Eigenvalues::primes(n) : Eigenvalues::parse(eig);
            CellChart ch(w, h, c);
            auto namer = [&](int v) { return ch.var_name(v); };
            out["command"] = "cell-chart";
            json vars = json::array();
            for (int v = 0; v < static_cast<int>(ch.free_vars().size()); ++v) vars.push_back(ch.var_name(v));
            out["free_variables"] = vars;
            json entries = json::object();
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j < i; ++j)
                    if (!ch.entry(i, j).is_zero())
                        entries["x[" + std::to_string(i) + "," + std::to_string(j) + "]"] = ch.entry(i, j).str(namer);
            out["entries"] = entries;
        } else if (*cls) {
            Hess h = need_hess(hs, n);
            Perm w = need_perm(ws, n);
            BasisProvider b(h);
            out["command"] = "class";
            out["values"] = class_json(b(w));
            out["unique"] = b.unique(w);
        } else if (*expand || *dotc) {
            Hess h = need_hess(hs, n);
            Perm w = need_perm(ws, n);
            Perm u = us.empty() ? Perm::identity(n) : need_perm(us, n);
            BasisProvider b(h);
            EquivariantClass img = dot(u, b(w));
            if (*dotc) {
                out["command"] = "dot";
                out["values"] = class_json(img);
            } else {
                out["command"] = "expand";
                out["expansion"] = expansion_json(expand_in_basis(img, b));
            }
        } else if (*am) {
            Hess h = need_hess(hs, n);
            Perm u = need_perm(us, n);
            if (k < 0 || k > h.edge_count()) throw UsageError("--k out of range");
            PermSiAction act(n, false);
            BasisProvider b(h);
            out["command"] = "action-matrix";
            out["basis"] = perms_json(degree_basis(h, k));
            out["matrix"] = matrix_json(action_matrix(u, k, h, &act, &b));
        } else if (*dec) {
            if (k < 0 || k >= n) throw UsageError("--k out of range");
            auto rep = verify_decomposition(n, k);
            out["command"] = "decompose";
            json gens = json::array();
            for (auto& m : rep.modules) {
                json g{{"w", m.gen.w.str()},
                       {"composition", m.gen.a.str()},
                       {"module_type", m.gen.a_hat.str()},
                       {"dim", m.dim},
                       {"expected_dim", m.expected_dim},
                       {"stabilizer_exact", m.stabilizer_exact}};
                json sh = json::object();
                for (std::size_t r = 0; r < m.sigma_hat.size(); ++r)
                    if (m.sigma_hat[r] != 0) sh[rep.degree_basis[r].str()] = qstr(m.sigma_hat[r]);
                g["sigma_hat"] = sh;
                if (emit_basis) {
                    json bl = json::array();
                    for (std::size_t t = 0; t < m.basis.size(); ++t) {
                        json v = json::object();
                        for (std::size_t r = 0; r < m.basis[t].size(); ++r)
                            if (m.basis[t][r] != 0) v[rep.degree_basis[r].str()] = qstr(m.basis[t][r]);
                        bl.push_back({{"v", m.basis_reps[t].str()}, {"vector", v}});
                    }
                    g["basis"] = bl;
                }
                gens.push_back(g);
            }
            out["generators"] = gens;
            out["checks"] = {{"dims", rep.dims_ok},           {"stabilizers", rep.stabilizers_ok},
                             {"eulerian_total", rep.total_ok}, {"direct_sum", rep.direct_sum},
                             {"leading_terms", rep.leading_ok}, {"young_types", rep.young_types.partition_level}};
            out["total_rank"] = rep.total_rank;
            if (!rep.ok()) status = 1;
        } else if (*chrom) {
            Hess h = need_hess(hs, n);
            Basis b = parse_basis(basis_name);
            auto X = chromatic_qsym(h);
            out["command"] = "chromatic";
            out["basis"] = std::string(1, basis_letter(b));
            json coeffs = json::array();
            json text = json::array();
            for (auto& f : X.X) {
                auto g = convert(f, b);
                coeffs.push_back(symfunc_json(g));
                text.push_back(g.str());
            }
            out["coefficients"] = coeffs;
            out["text"] = text;
            out["symmetric"] = X.symmetric;
            if (!X.symmetric) status = 1;
        } else if (*ver) {
            out["command"] = "verify";
            std::vector<std::string> run = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            json results = json::array();
            bool ok = true;
            for (auto& s : run) {
                auto r = run_suite(s, n, seed);
                std::fprintf(stderr, "%s: %s (%.1fs)\n", s.c_str(), r.ok() ? "ok" : "FAILED", r.seconds);
                if (const Check* f = r.first_failure())
                    std::fprintf(stderr, "  module %s, %s: %s failed at %s\n", r.module.c_str(), r.statement.c_str(),
                                 f->name.c_str(), f->counterexample.c_str());
                ok = ok && r.ok();
                results.push_back(suite_json(r));
            }
            out["n"] = n;
            out["seed"] = seed;
            out["results"] = results;
            out["ok"] = ok;
            if (!ok) status = 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (format == "table") print_table(out);
    else std::cout << out.dump(2) << "\n";
    return status;
}
