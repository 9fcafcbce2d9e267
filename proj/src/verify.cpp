#include "gkm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "gkm/cell.hpp"
#include "gkm/chromatic.hpp"
#include "gkm/decomposition.hpp"
#include "gkm/util.hpp"

namespace gkm {

void Check::record(bool pass, const std::function<std::string()>& instance) {
    ++cases;
    if (!pass && ok) {
        ok = false;
        counterexample = instance();
    }
}

bool SuiteResult::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const Check* SuiteResult::first_failure() const {
    for (auto& c : checks)
        if (!c.ok) return &c;
    return nullptr;
}

namespace {

class Timer {
public:
    explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    SuiteResult& r_;
    std::chrono::steady_clock::time_point start_;
};

std::string inst(const Perm& w, const Hess& h) { return "w=" + w.str() + " h=" + h.str(); }

std::string list(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
}

Perm random_perm(int n, Rng& rng) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Perm(v);
}

std::vector<int> random_subset(int n, int k, Rng& rng) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(k);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

SuiteResult verify_supports(int n, int random_n, int random_count, int seeds, std::uint64_t seed) {
    SuiteResult r{"supports", "reachability", "support of sigma_{w,h} equals the fixed points of the closed minus cell", {}};
    Timer timer(r);
    Check exh{"exhaustive n=" + std::to_string(n)}, rnd{"random n=" + std::to_string(random_n)};
    int resamples = 0;
    auto one = [&](const Perm& w, const Hess& h, Rng& rng, Check& c) {
        auto A = support_A(w, h);
        for (int s = 0; s < seeds; ++s) {
            Eigenvalues ev = s == 0 ? Eigenvalues::primes(h.n()) : Eigenvalues::random(h.n(), rng, 1000);
            auto o = fixed_point_oracle(w, h, ev, rng);
            resamples += o.resamples;
            c.record(o.support == A, [&] { return inst(w, h) + " eigen-seed " + std::to_string(s); });
        }
    };
    long idx = 0;
    for (auto& h : all_hessenberg(n))
        for (auto& w : all_perms(n)) {
            Rng rng = make_rng(seed, "supports", idx++);
            one(w, h, rng, exh);
        }
    auto hs = all_hessenberg(random_n);
    Rng pick = make_rng(seed, "supports-random");
    for (int t = 0; t < random_count; ++t) {
        Hess h = hs[pick() % hs.size()];
        Perm w = random_perm(random_n, pick);
        Rng rng = make_rng(seed, "supports-random", t + 1);
        one(w, h, rng, rnd);
    }
    exh.note = rnd.note = "point resamples " + std::to_string(resamples);
    r.checks = {exh, rnd};
    return r;
}

SuiteResult verify_minors(int n, int random_n, int random_count, std::uint64_t seed) {
    SuiteResult r{"minors", "minus_cell", "a minor of the cell chart is nonzero iff A is reachable from B", {}};
    Timer timer(r);
    Check exh{"exhaustive n=" + std::to_string(n)}, rnd{"random n=" + std::to_string(random_n)};
    Check viol{"reachability violations"};
    long eig = 0, pts = 0;
    auto one = [&](const Perm& w, const Hess& h, const std::vector<int>& A, const std::vector<int>& B, Rng& rng,
                   Check& c) {
        auto cert = minor_reachability_certificate(w, h, Eigenvalues::primes(h.n()), A, B, rng, false);
        eig += cert.eigen_resamples;
        pts += cert.point_resamples;
        auto what = [&] { return inst(w, h) + " A=" + list(A) + " B=" + list(B); };
        c.record(cert.agree, what);
        viol.record(!cert.reachability_violation, what);
    };
    Rng rng = make_rng(seed, "minors");
    for (auto& h : all_hessenberg(n))
        for (auto& w : all_perms(n))
            for (int k = 1; k <= n; ++k) {
                auto S = subsets(n, k);
                for (auto& A : S)
                    for (auto& B : S) one(w, h, A, B, rng, exh);
            }
    auto hs = all_hessenberg(random_n);
    Rng pick = make_rng(seed, "minors-random");
    for (int t = 0; t < random_count; ++t) {
        Hess h = hs[pick() % hs.size()];
        Perm w = random_perm(random_n, pick);
        int k = 1 + static_cast<int>(pick() % random_n);
        auto A = random_subset(random_n, k, pick), B = random_subset(random_n, k, pick);
        one(w, h, A, B, pick, rnd);
    }
    viol.note = "eigenvalue resamples " + std::to_string(eig) + ", point resamples " + std::to_string(pts);
    r.checks = {exh, rnd, viol};
    return r;
}

SuiteResult verify_cell_chart(int nmax) {
    SuiteResult r{"cell-chart", "minus_cell", "chart entries solve the defining equations; minimal paths have the closed-form coefficient", {}};
    Timer timer(r);
    Check eq{"defining equations vanish"}, zero{"entry nonzero iff reachable"}, coef{"minimal-path coefficients"};
    for (int n = 2; n <= nmax; ++n) {
        auto c = Eigenvalues::primes(n);
        for (auto& h : all_hessenberg(n))
            for (auto& w : all_perms(n)) {
                CellChart ch(w, h, c);
                for (int b = 1; b <= n; ++b)
                    for (int a = h(b) + 1; a <= n; ++a)
                        eq.record(defining_equation(ch, a, b).is_zero(),
                                  [&] { return inst(w, h) + " f_" + std::to_string(a) + "," + std::to_string(b); });
                for (int j = 1; j <= n; ++j)
                    for (int i = j + 1; i <= n; ++i) {
                        zero.record(ch.entry(i, j).is_zero() == !ch.graph().reachable(j, i),
                                    [&] { return inst(w, h) + " x_" + std::to_string(i) + "," + std::to_string(j); });
                        for (auto& path : long_paths(ch.graph(), i, j)) {
                            if (!is_minimal_path(ch.graph(), path)) continue;
                            Mono m;
                            for (std::size_t l = 0; l + 1 < path.size(); ++l)
                                m = m * Mono::var(ch.var_index(path[l], path[l + 1]));
                            coef.record(ch.entry(i, j).coefficient(m) == minimal_path_coefficient(path, w, h, c),
                                        [&] { return inst(w, h) + " path " + list(path); });
                        }
                    }
            }
    }
    r.checks = {eq, zero, coef};
    return r;
}

SuiteResult verify_permutohedral(int nmax) {
    SuiteResult r{"permutohedral", "classes", "explicit permutohedral classes: GKM, support, top value, smooth-point formula", {}};
    Timer timer(r);
    Check gkm{"gkm condition"}, supp{"support is the block orbit of w"}, top{"value at w"}, smooth{"smooth-point product"};
    for (int n = 1; n <= nmax; ++n) {
        Hess h = Hess::permutohedral(n);
        std::vector<std::vector<Check>> slots(factorial(n), std::vector<Check>(4));
        const auto& perms = all_perms(n);
        parallel_for(perms.size(), [&](std::size_t t) {
            const Perm& w = perms[t];
            auto& s = slots[t];
            auto what = [&] { return inst(w, h); };
            auto c = permutohedral_class(w);
            s[0].record(!gkm_check(c, h), what);
            auto D = w.descents();
            std::vector<Perm> orbit;
            for (auto& v : perms) {
                bool same = true;
                std::vector<int> a, b;
                for (int p = 1; p <= n && same; ++p) {
                    a.push_back(v(p));
                    b.push_back(w(p));
                    if (D.count(p) || p == n) {
                        std::sort(a.begin(), a.end());
                        std::sort(b.begin(), b.end());
                        same = a == b;
                        a.clear();
                        b.clear();
                    }
                }
                if (same) orbit.push_back(v);
            }
            s[1].record(c.support() == orbit, what);
            s[2].record(c(w) == top_value(w, h), what);
            bool ok = true;
            for (auto& v : orbit) {
                MultiPoly prod = MultiPoly::constant(1);
                for (auto& e : gkm_edges(v, h))
                    if (c(e.dst).is_zero()) prod = prod * e.label;
                ok = ok && c(v) == prod;
            }
            s[3].record(ok, what);
        });
        Check* dst[4] = {&gkm, &supp, &top, &smooth};
        for (auto& s : slots)
            for (int q = 0; q < 4; ++q) {
                dst[q]->cases += s[q].cases;
                if (!s[q].ok && dst[q]->ok) {
                    dst[q]->ok = false;
                    dst[q]->counterexample = s[q].counterexample;
                }
            }
    }
    r.checks = {gkm, supp, top, smooth};
    return r;
}

SuiteResult verify_poincare(int nmax) {
    SuiteResult r{"poincare", "hessenberg_gkm", "l_h distribution equals out-degree distribution; permutohedral Betti numbers are Eulerian", {}};
    Timer timer(r);
    Check dist{"l_h = out-degree distribution"}, eul{"permutohedral = Eulerian"}, lit{"literal values n=4,5"};
    for (int n = 1; n <= nmax; ++n)
        for (auto& h : all_hessenberg(n)) {
            GkmGraph g(h);
            int top = h.edge_count();
            std::vector<long> a(top + 1, 0), b(top + 1, 0);
            bool pointwise = true;
            for (auto& w : all_perms(n)) {
                ++a[l_h(w, h)];
                ++b[g.out_degree(w)];
                pointwise = pointwise && l_h(w, h) == g.out_degree(w);
            }
            dist.record(a == b && pointwise && poincare_polynomial(h) == a, [&] { return "h=" + h.str(); });
            if (h.is_permutohedral()) {
                std::vector<long> e;
                for (int k = 0; k < n; ++k) e.push_back(eulerian(n, k));
                eul.record(poincare_polynomial(h) == e, [&] { return "n=" + std::to_string(n); });
                if (n == 4) lit.record(poincare_polynomial(h) == std::vector<long>{1, 11, 11, 1}, [] { return "n=4"; });
                if (n == 5)
                    lit.record(poincare_polynomial(h) == std::vector<long>{1, 26, 66, 26, 1}, [] { return "n=5"; });
            }
        }
    r.checks = {dist, eul, lit};
    return r;
}

namespace {

Expansion parse_expansion(const std::vector<std::pair<const char*, const char*>>& terms) {
    Expansion e;
    for (auto& [w, c] : terms) e[Perm::parse(w)] += MultiPoly::parse(c);
    return e;
}

}  // namespace

SuiteResult verify_dot_rules(int n_sigma, int n_dashed, int n_full) {
    SuiteResult r{"dot", "dot_action", "s_i-rules for the dot action on the flow-up basis", {}};
    Timer timer(r);
    Check sig{"(t_{i+1}-t_i) sigma_{s_i w} = s_i.sigma^(i) - sigma^(i)"}, worked{"worked expansions"};
    Check dashed{"dashed edges: s_i.sigma_w = sigma_{s_i w}"}, full{"full flag rule"};
    for (int n = 2; n <= n_sigma; ++n)
        for (auto& w : all_perms(n))
            for (int i = 1; i < n; ++i) {
                if (w.inverse()(i + 1) + 1 != w.inverse()(i)) continue;
                auto s = build_sigma_w_i(w, i);
                sig.record(dot(Perm::simple(n, i), s) - s ==
                               permutohedral_class(w.left_simple(i)) * MultiPoly::t_diff(i + 1, i),
                           [&] { return "w=" + w.str() + " i=" + std::to_string(i); });
            }
    PermSiAction a4(4, true), a5(5, true);
    worked.record(a4.act(Perm::parse("1324"), 2) ==
                      parse_expansion({{"1234", "t3-t2"}, {"1324", "1"}, {"1342", "1"}, {"3412", "1"},
                                       {"3124", "1"}, {"1243", "-1"}, {"2413", "-1"}, {"2134", "-1"}}),
                  [] { return "s_2 . sigma_1324"; });
    worked.record(a5.act(Perm::parse("13245"), 2) ==
                      parse_expansion({{"12345", "t3-t2"}, {"13245", "1"}, {"13452", "1"}, {"13425", "1"},
                                       {"13524", "1"}, {"34512", "1"}, {"34125", "1"}, {"35124", "1"},
                                       {"31245", "1"}, {"12453", "-1"}, {"12435", "-1"}, {"12534", "-1"},
                                       {"24513", "-1"}, {"24135", "-1"}, {"25134", "-1"}, {"21345", "-1"}}),
                  [] { return "s_2 . sigma_13245"; });
    for (auto& h : all_hessenberg(n_dashed)) {
        BasisProvider b(h);
        for (auto& w : all_perms(n_dashed))
            for (int i = 1; i < n_dashed; ++i) {
                if (edge_kind(w, i, h) != EdgeKind::Dashed) continue;
                if (!b.unique(w) || !b.unique(w.left_simple(i))) {
                    ++dashed.skipped;
                    continue;
                }
                dashed.record(dashed_rule_check(w, i, b),
                              [&] { return inst(w, h) + " i=" + std::to_string(i); });
            }
    }
    dashed.note = "skipped cases have a non-unique interpolated class";
    for (int n = 2; n <= n_full; ++n) {
        BasisProvider b(Hess::full_flag(n));
        for (auto& w : all_perms(n))
            for (int i = 1; i < n; ++i)
                full.record(full_flag_si_rule_check(w, i, b),
                            [&] { return "w=" + w.str() + " i=" + std::to_string(i); });
    }
    r.checks = {sig, worked, dashed, full};
    return r;
}

SuiteResult verify_coxeter(int nmax) {
    SuiteResult r{"coxeter", "dot_action", "generator matrices satisfy the Coxeter relations on every degree", {}};
    Timer timer(r);
    Check inv{"s_i^2 = 1"}, braid{"braid relation"}, comm{"far commutation"};
    for (int n = 2; n <= nmax; ++n) {
        Hess h = Hess::permutohedral(n);
        PermSiAction act(n, false);
        for (int k = 0; k < n; ++k) {
            int d = static_cast<int>(degree_basis(h, k).size());
            std::vector<SparseMat> g(n);
            for (int i = 1; i < n; ++i) g[i] = SparseMat::from_dense(generator_matrix(i, k, h, &act));
            auto what = [&](int i, int j) {
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                       " j=" + std::to_string(j);
            };
            for (int i = 1; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    bool ok = true;
                    for (int c = 0; c < d && ok; ++c) {
                        QVec e(d, 0);
                        e[c] = 1;
                        if (j == i) ok = g[i].apply(g[i].apply(e)) == e;
                        else if (j == i + 1)
                            ok = g[i].apply(g[j].apply(g[i].apply(e))) == g[j].apply(g[i].apply(g[j].apply(e)));
                        else ok = g[i].apply(g[j].apply(e)) == g[j].apply(g[i].apply(e));
                    }
                    Check& target = j == i ? inv : j == i + 1 ? braid : comm;
                    target.record(ok, [&] { return what(i, j); });
                }
        }
    }
    r.checks = {inv, braid, comm};
    return r;
}

SuiteResult verify_decomposition_suite(int nmax) {
    SuiteResult r{"decomposition", "decomposition", "H^{2k} of the permutohedral variety is the direct sum of the modules M(w), w in G_k", {}};
    Timer timer(r);
    Check dims{"dim M(w) = n!/|S_w|"}, stab{"stabilizer is exactly S_w"}, total{"totals are Eulerian"};
    Check direct{"direct sum"}, worked{"worked data"};
    for (int n = 1; n <= nmax; ++n) {
        PermSiAction act(n, false);
        for (int k = 0; k < n; ++k) {
            auto rep = verify_decomposition(n, k, &act);
            auto what = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
            dims.record(rep.dims_ok, what);
            stab.record(rep.stabilizers_ok, what);
            total.record(rep.total_ok, what);
            direct.record(rep.direct_sum, what);
        }
    }
    // the n=5, k=2 table
    PermSiAction act5(5, false);
    auto rep = verify_decomposition(5, 2, &act5);
    std::vector<std::string> gens, types;
    std::vector<int> dimv;
    for (auto& m : rep.modules) {
        gens.push_back(m.gen.w.str());
        types.push_back(m.gen.a_hat.str());
        dimv.push_back(m.dim);
    }
    worked.record(gens == std::vector<std::string>{"54123", "53412", "52341", "45312", "45231", "34521"},
                  [] { return "G_2 for n=5"; });
    worked.record(types == std::vector<std::string>{"(5)", "(3,2)", "(4,1)", "(2,3)", "(2,2,1)", "(3,2)"},
                  [] { return "erasures for n=5, k=2"; });
    worked.record(dimv == std::vector<int>{1, 10, 5, 10, 30, 10} && rep.total_rank == 66,
                  [] { return "dimensions for n=5, k=2"; });
    PermSiAction act4(4, false);
    auto B = degree_basis(Hess::permutohedral(4), 2);
    auto vec = [&](const std::vector<std::pair<const char*, int>>& terms) {
        QVec x(B.size(), 0);
        for (auto& [s, c] : terms) x[std::find(B.begin(), B.end(), Perm::parse(s)) - B.begin()] = c;
        return x;
    };
    worked.record(sigma_hat_ordinary(Perm::parse("4312"), act4) ==
                      vec({{"4312", 2}, {"4213", 4}, {"3214", 6}, {"4231", 2}, {"4132", -2}, {"3241", 4},
                           {"3142", -2}, {"2143", -2}, {"3421", 2}, {"2431", -2}}),
                  [] { return "sigma^_4312"; });
    worked.record(sigma_hat_ordinary(Perm::parse("3421"), act4) == vec({{"3421", 2}}), [] { return "sigma^_3421"; });
    r.checks = {dims, stab, total, direct, worked};
    return r;
}

SuiteResult verify_young_types(int nmax) {
    SuiteResult r{"young-types", "decomposition", "erasure types over G_k match the generating function t^{m-1} prod [k_i-1]_t", {}};
    Timer timer(r);
    Check comp{"composition level (k_1,...,k_m - 1)"}, part{"partition level (k_1 - 1,k_2,...,k_m)"};
    for (int n = 1; n <= nmax; ++n) {
        auto p = young_type_check(n);
        comp.record(p.composition_level, [&] { return "n=" + std::to_string(n); });
        part.record(p.partition_level, [&] { return "n=" + std::to_string(n); });
    }
    r.checks = {comp, part};
    return r;
}

SuiteResult verify_sw_suite(int n_sw, int n_closed) {
    SuiteResult r{"shareshian-wachs", "chromatic", "omega X_{G(h)}(x,t) = sum_k ch H^{2k} t^k; closed module expansion", {}};
    Timer timer(r);
    Check perm{"permutohedral"}, full{"full flag"}, closed{"closed expansion"}, chars{"characters match generators"};
    for (int n = 1; n <= n_sw; ++n) {
        auto what = [&] { return "n=" + std::to_string(n); };
        auto a = verify_shareshian_wachs(Hess::permutohedral(n));
        perm.record(a.ok, what);
        auto b = verify_shareshian_wachs(Hess::full_flag(n));
        full.record(b.ok, what);
        if (!a.ok && a.mirror_ok) perm.note = "passes only with the descent statistic";
    }
    for (int n = 1; n <= n_closed; ++n) {
        auto c = verify_closed_expansion(n);
        closed.record(c.generators_match && c.total_dim == factorial(n), [&] { return "n=" + std::to_string(n); });
        chars.record(c.characters_match, [&] { return "n=" + std::to_string(n); });
    }
    perm.note = perm.note.empty() ? "ascent statistic kappa(j) < kappa(i), j < i" : perm.note;
    r.checks = {perm, full, closed, chars};
    return r;
}

SuiteResult verify_wz_suite(int n_wz, int n_leading) {
    SuiteResult r{"wz", "decomposition", "graphs G(a) capture the composition-a terms of sigma^_w with positive leading coefficients", {}};
    Timer timer(r);
    Check comp{"w_z completeness"}, adj{"edge adjacency"}, lead{"leading expansion"};
    for (int n = 1; n <= n_wz; ++n)
        for (auto& a : compositions(n)) {
            auto w = verify_wz(a);
            comp.record(w.graph_equals_cosets && w.graph_equals_support, [&] { return "a=" + a.str(); });
            adj.record(w.adjacency, [&] { return "a=" + a.str(); });
        }
    for (int n = 1; n <= n_leading; ++n) {
        PermSiAction act(n, false);
        for (int k = 0; k < n; ++k) {
            auto rep = verify_decomposition(n, k, &act);
            for (auto& m : rep.modules) lead.record(m.leading, [&] { return "w=" + m.gen.w.str(); });
        }
    }
    r.checks = {comp, adj, lead};
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"supports", "minors",        "cell-chart",  "permutohedral",
                                                "poincare", "dot",           "coxeter",     "decomposition",
                                                "young-types", "shareshian-wachs", "wz"};
    return names;
}

SuiteResult run_suite(const std::string& name, int n, std::uint64_t seed) {
    if (n < 1 || n > 8) throw std::invalid_argument("n must be in 1..8");
    int small = std::min(n, 4);
    if (name == "supports") return verify_supports(small, small + 1, 200, 3, seed);
    if (name == "minors") return verify_minors(small, small + 1, 500, seed);
    if (name == "cell-chart") return verify_cell_chart(std::min(n, 5));
    if (name == "permutohedral") return verify_permutohedral(std::min(n, 6));
    if (name == "poincare") return verify_poincare(std::min(n, 6));
    if (name == "dot") return verify_dot_rules(std::min(n, 5), small, small);
    if (name == "coxeter") return verify_coxeter(std::min(n, 6));
    if (name == "decomposition") return verify_decomposition_suite(std::min(n, 6));
    if (name == "young-types") return verify_young_types(n);
    if (name == "shareshian-wachs") return verify_sw_suite(std::min(n, 5), std::min(n, 6));
    if (name == "wz") return verify_wz_suite(std::min(n, 6), std::min(n, 5));
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace gkm
