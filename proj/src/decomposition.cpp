#include "gkm/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "gkm/util.hpp"

namespace gkm {

std::set<int> erase(const std::set<int>& D) {
    std::set<int> e;
    for (int d : D)
        if (d != 1 && !D.count(d - 1)) e.insert(d);
    return e;
}

Composition erased_composition(const Perm& w) { return Composition::from_set(w.n(), erase(w.descents())); }

Perm w_of_composition(const Composition& a) {
    int n = a.n();
    std::vector<int> img;
    int top = n;
    for (int p : a.parts) {
        for (int v = top - p + 1; v <= top; ++v) img.push_back(v);
        top -= p;
    }
    return Perm(img);
}

std::vector<Perm> g_set(int n, int k) {
    std::vector<Perm> out;
    for (auto& a : compositions(n, k + 1)) out.push_back(w_of_composition(a));
    return out;
}

long eulerian(int n, int k) {
    long c = 0;
    for (auto& u : all_perms(n))
        if (u.des() == k) ++c;
    return c;
}

namespace {

std::vector<std::vector<int>> value_blocks(const Perm& w, const std::set<int>& cuts) {
    std::vector<std::vector<int>> out(1);
    for (int p = 1; p <= w.n(); ++p) {
        out.back().push_back(w(p));
        if (cuts.count(p)) out.emplace_back();
    }
    for (auto& b : out) std::sort(b.begin(), b.end());
    return out;
}

bool increasing_on(const Perm& u, const std::vector<int>& block) {
    for (std::size_t a = 1; a < block.size(); ++a)
        if (u(block[a - 1]) > u(block[a])) return false;
    return true;
}

}  // namespace

GeneratorData generator_data(const Perm& w) {
    GeneratorData g;
    g.w = w;
    g.a = Composition::of(w);
    g.a_hat = erased_composition(w);
    g.hat_blocks = value_blocks(w, erase(w.descents()));
    g.run_blocks = value_blocks(w, w.descents());
    for (auto& b : g.hat_blocks) g.order_Sw *= factorial(static_cast<int>(b.size()));
    for (auto& u : all_perms(w.n())) {
        if (!in_Sw(g, u)) continue;
        bool ok = true;
        for (auto& b : g.run_blocks) ok = ok && increasing_on(u, b);
        if (ok) g.coset_reps.push_back(u);
    }
    return g;
}

bool in_Sw(const GeneratorData& g, const Perm& u) {
    for (auto& b : g.hat_blocks) {
        std::vector<int> img;
        for (int v : b) img.push_back(u(v));
        std::sort(img.begin(), img.end());
        if (img != b) return false;
    }
    return true;
}

Perm min_rep(const GeneratorData& g, const Perm& u) {
    std::vector<int> img(u.n());
    for (auto& b : g.hat_blocks) {
        std::vector<int> vals;
        for (int v : b) vals.push_back(u(v));
        std::sort(vals.begin(), vals.end());
        for (std::size_t a = 0; a < b.size(); ++a) img[b[a] - 1] = vals[a];
    }
    return Perm(img);
}

EquivariantClass sigma_hat(const Perm& w) {
    auto g = generator_data(w);
    EquivariantClass r(w.n());
    for (auto& v : g.coset_reps) r += run_class(v * w, w.descents());
    return r;
}

bool sigma_hat_sum_check(const Perm& w) {
    auto cls = sigma_hat(w);
    auto A = permutohedral_class(w_of_composition(erased_composition(w))).support();
    if (cls.support() != A) return false;
    for (auto& u : A) {
        MultiPoly p = MultiPoly::constant(1);
        for (int d : w.descents()) p = p * MultiPoly::t_diff(u(d + 1), u(d));
        if (cls(u) != p) return false;
    }
    return true;
}

std::vector<Composition> admissible_decomposition(const Composition& a) {
    std::vector<Composition> out;
    Composition cur;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        if (a.parts[i] == 1 && i > 0 && a.parts[i - 1] > 1) {
            out.push_back(cur);
            cur.parts.clear();
        }
        cur.parts.push_back(a.parts[i]);
    }
    out.push_back(cur);
    return out;
}

int CompositionGraph::index(const std::vector<int>& z) const {
    auto it = std::find(vertices.begin(), vertices.end(), z);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

namespace {

// weakly decreasing tuples bound >= z_1 >= ... >= z_m >= 0
void block_vertices(int m, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? bound : cur.back();
    for (int z = 0; z <= hi; ++z) {
        cur.push_back(z);
        block_vertices(m, bound, cur, out);
        cur.pop_back();
    }
}

int coord_offset(const CompositionGraph& g, int block) {
    int o = 0;
    for (int b = 0; b < block; ++b) o += g.ones[b];
    return o;
}

int edge_label(const CompositionGraph& g, int block, int j, int zj) {
    int nb = g.blocks[block].n();
    return nb - g.ones[block] + (j - 1) - zj + g.value_offset[block];
}

}  // namespace

CompositionGraph composition_graph(const Composition& a) {
    CompositionGraph g;
    g.a = a;
    g.blocks = admissible_decomposition(a);
    int n = a.n(), pos = 0;
    for (auto& b : g.blocks) {
        g.block_start.push_back(pos);
        pos += b.n();
        g.value_offset.push_back(n - pos);
        int m = 0;
        while (m < static_cast<int>(b.parts.size()) && b.parts[m] == 1) ++m;
        g.ones.push_back(m);
        g.bound.push_back(m < static_cast<int>(b.parts.size()) ? b.parts[m] - 1 : 0);
    }
    std::vector<std::vector<int>> verts{{}};
    for (std::size_t b = 0; b < g.blocks.size(); ++b) {
        std::vector<std::vector<int>> local, cur_list;
        std::vector<int> cur;
        block_vertices(g.ones[b], g.bound[b], cur, local);
        for (auto& v : verts)
            for (auto& l : local) {
                auto z = v;
                z.insert(z.end(), l.begin(), l.end());
                cur_list.push_back(z);
            }
        verts = std::move(cur_list);
    }
    g.vertices = verts;
    for (int f = 0; f < static_cast<int>(g.vertices.size()); ++f)
        for (std::size_t b = 0; b < g.blocks.size(); ++b) {
            int off = coord_offset(g, static_cast<int>(b));
            for (int j = 1; j <= g.ones[b]; ++j) {
                auto z = g.vertices[f];
                ++z[off + j - 1];
                int t = g.index(z);
                if (t >= 0)
                    g.edges.push_back({f, t, edge_label(g, static_cast<int>(b), j, g.vertices[f][off + j - 1]),
                                       static_cast<int>(b), j});
            }
        }
    return g;
}

Perm w_z(const CompositionGraph& g, const std::vector<int>& z) {
    if (g.index(z) < 0) throw std::invalid_argument("not a vertex of G(a)");
    Perm w = w_of_composition(g.a);
    for (std::size_t b = 0; b < g.blocks.size(); ++b) {
        int off = coord_offset(g, static_cast<int>(b));
        // raise z_1 first, then z_2, ...; every step stays in V
        for (int j = 1; j <= g.ones[b]; ++j)
            for (int s = 0; s < z[off + j - 1]; ++s) w = w.left_simple(edge_label(g, static_cast<int>(b), j, s));
    }
    return w;
}

WzReport verify_wz(const Composition& a) {
    WzReport r;
    int n = a.n();
    auto g = composition_graph(a);
    Perm w = w_of_composition(a);
    std::set<Perm> cls, supp, graph, cosets;
    for (auto& u : all_perms(n))
        if (Composition::of(u) == a) cls.insert(u);
    for (auto& u : permutohedral_class(w_of_composition(erased_composition(w))).support())
        if (Composition::of(u) == a) supp.insert(u);
    std::vector<Perm> wz;
    for (auto& z : g.vertices) {
        wz.push_back(w_z(g, z));
        graph.insert(wz.back());
    }
    for (auto& v : generator_data(w).coset_reps) {
        Perm u = v * w;
        if (Composition::of(u) == a) cosets.insert(u);
    }
    r.vertices = static_cast<int>(g.vertices.size());
    r.class_size = static_cast<int>(cls.size());
    r.support_class_size = static_cast<int>(supp.size());
    bool distinct = graph.size() == g.vertices.size();
    r.graph_equals_cosets = distinct && graph == cosets;
    r.graph_equals_support = distinct && graph == supp;
    r.graph_equals_class = distinct && graph == cls;
    r.adjacency = true;
    for (auto& e : g.edges) {
        const Perm& lo = wz[e.from];
        int i = e.label, m = g.ones[e.block], start = g.block_start[e.block];
        Perm inv = lo.inverse();
        bool ok = wz[e.to] == lo.left_simple(i) && inv(i + 1) == start + m - e.coord + 1 && inv(i) > start + m &&
                  inv(i) <= start + m + g.bound[e.block] + 1;
        r.adjacency = r.adjacency && ok;
    }
    return r;
}

QVec sigma_hat_ordinary(const Perm& w, PermSiAction& act) {
    auto g = generator_data(w);
    Expansion e;
    for (auto& v : g.coset_reps)
        for (auto& [p, c] : act.act_perm(v, Expansion{{w, MultiPoly::constant(1)}})) e[p] += c;
    return reduce_to_ordinary(e, degree_basis(Hess::permutohedral(w.n()), w.des()));
}

namespace {

std::map<std::vector<int>, long> young_type_targets(int n, bool composition_level) {
    // key: module type followed by k
    std::map<std::vector<int>, long> out;
    for (auto& c : compositions(n + 1)) {
        if (*std::min_element(c.parts.begin(), c.parts.end()) < 2) continue;
        int m = static_cast<int>(c.parts.size());
        std::vector<long> poly{1};  // t^{m-1} prod [k_i - 1]_t
        for (int p : c.parts) {
            std::vector<long> next(poly.size() + p - 2, 0);
            for (std::size_t a = 0; a < poly.size(); ++a)
                for (int b = 0; b < p - 1; ++b) next[a + b] += poly[a];
            poly = next;
        }
        std::vector<int> type = c.parts;
        if (composition_level) {
            type.back() -= 1;
        } else {
            type.front() -= 1;
            std::sort(type.rbegin(), type.rend());
        }
        for (std::size_t e = 0; e < poly.size(); ++e) {
            if (!poly[e]) continue;
            auto key = type;
            key.push_back(static_cast<int>(e) + m - 1);
            out[key] += poly[e];
        }
    }
    return out;
}

}  // namespace

YoungTypeReport young_type_check(int n) {
    std::map<std::vector<int>, long> comp, part;
    for (int k = 0; k < n; ++k)
        for (auto& w : g_set(n, k)) {
            auto key = erased_composition(w).parts;
            auto pkey = key;
            std::sort(pkey.rbegin(), pkey.rend());
            key.push_back(k);
            pkey.push_back(k);
            ++comp[key];
            ++part[pkey];
        }
    return {comp == young_type_targets(n, true), part == young_type_targets(n, false)};
}

DecompositionReport verify_decomposition(int n, int k, PermSiAction* act) {
    if (k < 0 || k >= n) throw std::invalid_argument("degree out of range");
    PermSiAction own(n, false);
    if (!act) act = &own;
    DecompositionReport rep;
    rep.n = n;
    rep.k = k;
    rep.degree_basis = degree_basis(Hess::permutohedral(n), k);
    std::map<Perm, int> index;
    for (std::size_t r = 0; r < rep.degree_basis.size(); ++r) index[rep.degree_basis[r]] = static_cast<int>(r);
    std::vector<SparseMat> gens(n);
    for (int i = 1; i < n; ++i) gens[i] = SparseMat::from_dense(generator_matrix(i, k, Hess::permutohedral(n), act));

    auto G = g_set(n, k);
    rep.modules.resize(G.size());
    for (std::size_t t = 0; t < G.size(); ++t) rep.modules[t].sigma_hat = sigma_hat_ordinary(G[t], *act);

    parallel_for(G.size(), [&](std::size_t t) {
        ModuleReport& mr = rep.modules[t];
        mr.gen = generator_data(G[t]);
        mr.expected_dim = factorial(n) / mr.gen.order_Sw;
        const QVec& x = mr.sigma_hat;

        // span of the orbit, closed under the generators
        EchelonBasis span(static_cast<int>(x.size()));
        std::deque<QVec> queue;
        if (span.insert(x)) queue.push_back(x);
        while (!queue.empty()) {
            QVec y = std::move(queue.front());
            queue.pop_front();
            for (int i = 1; i < n; ++i) {
                QVec z = gens[i].apply(y);
                if (span.insert(z)) queue.push_back(std::move(z));
            }
        }
        mr.dim = span.rank();

        // orbit of x itself, remembering one group element per point
        std::map<QVec, Perm> orbit{{x, Perm::identity(n)}};
        std::deque<QVec> oq{x};
        while (!oq.empty()) {
            QVec y = oq.front();
            oq.pop_front();
            Perm u = orbit[y];
            for (int i = 1; i < n; ++i) {
                QVec z = gens[i].apply(y);
                if (!orbit.count(z)) {
                    orbit.emplace(z, u.left_simple(i));
                    oq.push_back(std::move(z));
                }
            }
        }
        mr.orbit_size = static_cast<int>(orbit.size());
        mr.Sw_fixes = true;
        for (int i = 1; i < n; ++i)
            if (in_Sw(mr.gen, Perm::simple(n, i))) mr.Sw_fixes = mr.Sw_fixes && gens[i].apply(x) == x;
        mr.stabilizer_exact = mr.Sw_fixes && mr.orbit_size == mr.expected_dim;

        std::map<Perm, QVec> by_rep;
        for (auto& [vec, u] : orbit) by_rep[min_rep(mr.gen, u)] = vec;
        for (auto& [u, vec] : by_rep) {
            mr.basis_reps.push_back(u);
            mr.basis.push_back(vec);
        }

        auto g = composition_graph(mr.gen.a);
        std::set<Perm> wz;
        for (auto& z : g.vertices) wz.insert(w_z(g, z));
        mr.leading = true;
        for (auto& u : wz) mr.leading = mr.leading && index.count(u) && x[index.at(u)] > 0;
        for (std::size_t r = 0; r < x.size(); ++r) {
            if (x[r] == 0 || wz.count(rep.degree_basis[r])) continue;
            mr.leading = mr.leading && mr.gen.a < Composition::of(rep.degree_basis[r]);
        }
    });

    rep.eulerian_count = static_cast<long>(rep.degree_basis.size());
    EchelonBasis all(static_cast<int>(rep.degree_basis.size()));
    long sum = 0;
    rep.dims_ok = rep.stabilizers_ok = rep.leading_ok = true;
    for (auto& mr : rep.modules) {
        rep.dims_ok = rep.dims_ok && mr.dim == mr.expected_dim;
        rep.stabilizers_ok = rep.stabilizers_ok && mr.stabilizer_exact;
        rep.leading_ok = rep.leading_ok && mr.leading;
        sum += mr.dim;
        for (auto& v : mr.basis) all.insert(v);
    }
    rep.total_rank = all.rank();
    rep.total_ok = sum == eulerian(n, k) && rep.eulerian_count == eulerian(n, k);
    rep.direct_sum = rep.total_rank == sum;
    rep.young_types = young_type_check(n);
    return rep;
}

}  // namespace gkm
