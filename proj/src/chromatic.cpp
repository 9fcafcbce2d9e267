#include "gkm/chromatic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "gkm/decomposition.hpp"
#include "gkm/util.hpp"

namespace gkm {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::e: return 'e';
        case Basis::h: return 'h';
        case Basis::p: return 'p';
        case Basis::s: return 's';
    }
    return '?';
}

Basis parse_basis(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "e") return Basis::e;
    if (s == "h") return Basis::h;
    if (s == "p") return Basis::p;
    if (s == "s") return Basis::s;
    throw std::invalid_argument("unknown basis: " + s);
}

SymFunc SymFunc::single(int n, Basis b, const Partition& lam, const Q& coef) {
    SymFunc f(n, b);
    f.add(lam, coef);
    return f;
}

Q SymFunc::operator[](const Partition& lam) const {
    auto it = c.find(lam);
    return it == c.end() ? Q(0) : it->second;
}

void SymFunc::add(const Partition& lam, const Q& v) {
    Q& x = c[lam];
    x += v;
    if (x == 0) c.erase(lam);
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    for (auto& [lam, v] : convert(o, basis).c) r.add(lam, v);
    return r;
}

SymFunc SymFunc::operator*(const Q& s) const {
    SymFunc r(n, basis);
    if (s == 0) return r;
    for (auto& [lam, v] : c) r.c[lam] = v * s;
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return n == o.n && convert(*this, Basis::m).c == convert(o, Basis::m).c;
}

std::string SymFunc::str() const {
    if (c.empty()) return "0";
    std::string out;
    auto parts = partitions(n);
    for (auto& lam : parts) {
        auto it = c.find(lam);
        if (it == c.end()) continue;
        Q v = it->second;
        if (v < 0) {
            out += "-";
            v = -v;
        } else if (!out.empty()) {
            out += "+";
        }
        if (v != 1) out += v.get_str();
        out += basis_letter(basis);
        bool wide = std::any_of(lam.begin(), lam.end(), [](int p) { return p > 9; });
        for (std::size_t i = 0; i < lam.size(); ++i) {
            if (wide && i) out += ",";
            out += std::to_string(lam[i]);
        }
    }
    return out;
}

namespace {

struct Tables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::map<Basis, QMat> to_m, from_m;
};

MultiPoly elementary(int n, int k) {
    MultiPoly s;
    for (auto& sub : subsets(n, k)) {
        MultiPoly t = MultiPoly::constant(1);
        for (int v : sub) t = t * MultiPoly::var(v - 1);
        s += t;
    }
    return s;
}

MultiPoly complete(int n, int k, int start = 1) {
    if (k == 0) return MultiPoly::constant(1);
    MultiPoly s;
    for (int v = start; v <= n; ++v) s += MultiPoly::var(v - 1) * complete(n, k - 1, v);
    return s;
}

MultiPoly power_sum(int n, int k) {
    MultiPoly s;
    for (int v = 1; v <= n; ++v) {
        MultiPoly t = MultiPoly::constant(1);
        for (int r = 0; r < k; ++r) t = t * MultiPoly::var(v - 1);
        s += t;
    }
    return s;
}

QVec monomial_row(const MultiPoly& f, const Tables& T) {
    QVec row(T.parts.size(), 0);
    for (std::size_t j = 0; j < T.parts.size(); ++j) {
        Mono m;
        for (std::size_t i = 0; i < T.parts[j].size(); ++i) m = m * Mono::var(static_cast<int>(i), T.parts[j][i]);
        row[j] = f.coefficient(m);
    }
    return row;
}

Tables build_tables(int n) {
    Tables T;
    T.parts = partitions(n);
    for (std::size_t i = 0; i < T.parts.size(); ++i) T.index[T.parts[i]] = static_cast<int>(i);
    int d = static_cast<int>(T.parts.size());
    using Gen = MultiPoly (*)(int, int);
    std::vector<std::pair<Basis, Gen>> gens{{Basis::e, elementary},
                                            {Basis::h, [](int n_, int k) { return complete(n_, k); }},
                                            {Basis::p, power_sum}};
    for (auto& [b, gen] : gens) {
        std::vector<MultiPoly> single(n + 1);
        for (int k = 1; k <= n; ++k) single[k] = gen(n, k);
        QMat M(d);
        for (int r = 0; r < d; ++r) {
            MultiPoly f = MultiPoly::constant(1);
            for (int p : T.parts[r]) f = f * single[p];
            M[r] = monomial_row(f, T);
        }
        T.to_m[b] = M;
    }
    T.to_m[Basis::m] = identity_matrix(d);
    // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}) expanded in the h basis
    QMat S(d, QVec(d, 0));
    for (int r = 0; r < d; ++r) {
        const Partition& lam = T.parts[r];
        int l = static_cast<int>(lam.size());
        for (auto& sigma : all_perms(l)) {
            Partition mu;
            bool ok = true;
            for (int i = 1; i <= l && ok; ++i) {
                int idx = lam[i - 1] - i + sigma(i);
                if (idx < 0) ok = false;
                else if (idx > 0) mu.push_back(idx);
            }
            if (!ok) continue;
            std::sort(mu.rbegin(), mu.rend());
            S[r][T.index.at(mu)] += (sigma.length() % 2 ? -1 : 1);
        }
    }
    T.to_m[Basis::s] = matmul(S, T.to_m[Basis::h]);
    for (auto& [b, M] : T.to_m) T.from_m[b] = inverse(M);
    return T;
}

const Tables& tables(int n) {
    static std::mutex mu;
    static std::map<int, Tables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
    return it->second;
}

}  // namespace

const QMat& transition_to_monomial(int n, Basis b) { return tables(n).to_m.at(b); }

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis == target) return f;
    const Tables& T = tables(f.n);
    int d = static_cast<int>(T.parts.size());
    QVec row(d, 0);
    for (auto& [lam, v] : f.c) row[T.index.at(lam)] = v;
    QVec mrow(d, 0), out(d, 0);
    const QMat& A = T.to_m.at(f.basis);
    for (int r = 0; r < d; ++r)
        if (row[r] != 0)
            for (int j = 0; j < d; ++j) mrow[j] += row[r] * A[r][j];
    const QMat& B = T.from_m.at(target);
    for (int r = 0; r < d; ++r)
        if (mrow[r] != 0)
            for (int j = 0; j < d; ++j) out[j] += mrow[r] * B[r][j];
    SymFunc g(f.n, target);
    for (int j = 0; j < d; ++j)
        if (out[j] != 0) g.c[T.parts[j]] = out[j];
    return g;
}

SymFunc omega(const SymFunc& f) {
    SymFunc e = convert(f, Basis::e);
    e.basis = Basis::h;
    return convert(e, f.basis);
}

long z_mu(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu) ++mult[p];
    long z = 1;
    for (auto& [p, m] : mult) {
        for (int r = 0; r < m; ++r) z *= p;
        z *= factorial(m);
    }
    return z;
}

Perm cycle_type_rep(const Partition& mu) {
    int n = 0;
    for (int p : mu) n += p;
    std::vector<int> img(n);
    int start = 1;
    for (int p : mu) {
        for (int i = 0; i < p; ++i) img[start + i - 1] = start + (i + 1) % p;
        start += p;
    }
    return Perm(img);
}

ChromaticResult chromatic_qsym(const Hess& h, bool descending) {
    int n = h.n();
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j <= n; ++j)
        for (int i = j + 1; i <= h(j); ++i) edges.push_back({j, i});
    int maxk = static_cast<int>(edges.size());
    using Counts = std::map<std::vector<int>, std::vector<long>>;
    std::vector<Counts> part(n);
    std::vector<long> found(n, 0);
    parallel_for(n, [&](std::size_t first) {
        std::vector<int> kappa(n + 1, 0);
        kappa[1] = static_cast<int>(first) + 1;
        Counts& counts = part[first];
        // colour vertices 2..n in order; a vertex only meets earlier ones through edges j<i
        auto rec = [&](auto&& self, int v) -> void {
            if (v > n) {
                std::vector<int> content(n, 0);
                for (int i = 1; i <= n; ++i) ++content[kappa[i] - 1];
                int asc = 0;
                for (auto& [j, i] : edges)
                    if (descending ? kappa[j] > kappa[i] : kappa[j] < kappa[i]) ++asc;
                auto& slot = counts[content];
                if (slot.empty()) slot.assign(maxk + 1, 0);
                ++slot[asc];
                ++found[first];
                return;
            }
            for (int col = 1; col <= n; ++col) {
                bool ok = true;
                for (int j = 1; j < v && ok; ++j)
                    if (h(j) >= v && kappa[j] == col) ok = false;
                if (!ok) continue;
                kappa[v] = col;
                self(self, v + 1);
            }
        };
        rec(rec, 2);
    });
    Counts counts;
    ChromaticResult res;
    for (int f = 0; f < n; ++f) {
        res.colorings += found[f];
        for (auto& [content, v] : part[f]) {
            auto& slot = counts[content];
            if (slot.empty()) slot.assign(maxk + 1, 0);
            for (int k = 0; k <= maxk; ++k) slot[k] += v[k];
        }
    }
    res.symmetric = true;
    for (auto& [content, v] : counts) {
        auto sorted = content;
        std::sort(sorted.rbegin(), sorted.rend());
        auto it = counts.find(sorted);
        if (it == counts.end() || it->second != v) res.symmetric = false;
    }
    res.X.assign(maxk + 1, SymFunc(n, Basis::m));
    for (auto& lam : partitions(n)) {
        auto padded = lam;
        padded.resize(n, 0);
        auto it = counts.find(padded);
        if (it == counts.end()) continue;
        for (int k = 0; k <= maxk; ++k)
            if (it->second[k]) res.X[k].add(lam, it->second[k]);
    }
    return res;
}

SymFunc frobenius_of_degree(const Hess& h, int k, PermSiAction* perm, BasisProvider* basis) {
    int n = h.n();
    PermSiAction own_perm(n, false);
    BasisProvider own_basis(h);
    if (!perm) perm = &own_perm;
    if (!basis) basis = &own_basis;
    int d = static_cast<int>(degree_basis(h, k).size());
    std::vector<SparseMat> gens(n);
    for (int i = 1; i < n; ++i) gens[i] = SparseMat::from_dense(generator_matrix(i, k, h, perm, basis));
    SymFunc ch(n, Basis::p);
    for (auto& mu : partitions(n)) {
        auto word = cycle_type_rep(mu).reduced_word();
        Q trace = 0;
        for (int c = 0; c < d; ++c) {
            QVec v(d, 0);
            v[c] = 1;
            for (auto it = word.rbegin(); it != word.rend(); ++it) v = gens[*it].apply(v);
            trace += v[c];
        }
        ch.add(mu, trace / z_mu(mu));
    }
    return convert(ch, Basis::h);
}

SwReport verify_shareshian_wachs(const Hess& h) {
    SwReport r;
    int n = h.n();
    auto X = chromatic_qsym(h);
    r.symmetric = X.symmetric;
    PermSiAction perm(n, false);
    BasisProvider basis(h);
    r.ok = X.symmetric;
    for (std::size_t k = 0; k < X.X.size(); ++k) {
        r.omega_x.push_back(convert(omega(X.X[k]), Basis::h));
        r.frobenius.push_back(frobenius_of_degree(h, static_cast<int>(k), &perm, &basis));
        r.degree_ok.push_back(r.omega_x.back().c == r.frobenius.back().c);
        r.ok = r.ok && r.degree_ok.back();
    }
    if (!r.ok) {
        auto Y = chromatic_qsym(h, true);
        r.mirror_ok = Y.symmetric;
        for (std::size_t k = 0; k < Y.X.size(); ++k)
            r.mirror_ok = r.mirror_ok && convert(omega(Y.X[k]), Basis::h).c == r.frobenius[k].c;
    }
    return r;
}

ClosedExpansionReport verify_closed_expansion(int n, PermSiAction* perm) {
    ClosedExpansionReport r;
    PermSiAction own(n, false);
    if (!perm) perm = &own;
    Hess hp = Hess::permutohedral(n);
    r.from_generators.assign(n, SymFunc(n, Basis::h));
    r.closed_form.assign(n, SymFunc(n, Basis::h));
    for (int k = 0; k < n; ++k)
        for (auto& w : g_set(n, k)) {
            Partition lam = erased_composition(w).parts;
            std::sort(lam.rbegin(), lam.rend());
            r.from_generators[k].add(lam, 1);
            long dim = factorial(n);
            for (int p : lam) dim /= factorial(p);
            r.total_dim += dim;
        }
    for (auto& c : compositions(n + 1)) {
        if (*std::min_element(c.parts.begin(), c.parts.end()) < 2) continue;
        std::vector<long> poly{1};
        for (int p : c.parts) {
            std::vector<long> next(poly.size() + p - 2, 0);
            for (std::size_t a = 0; a < poly.size(); ++a)
                for (int b = 0; b < p - 1; ++b) next[a + b] += poly[a];
            poly = next;
        }
        Partition lam = c.parts;
        lam.front() -= 1;
        std::sort(lam.rbegin(), lam.rend());
        int shift = static_cast<int>(c.parts.size()) - 1;
        for (std::size_t e = 0; e < poly.size(); ++e)
            if (poly[e]) r.closed_form[e + shift].add(lam, poly[e]);
    }
    r.generators_match = true;
    r.characters_match = true;
    for (int k = 0; k < n; ++k) {
        r.frobenius.push_back(frobenius_of_degree(hp, k, perm));
        r.generators_match = r.generators_match && r.from_generators[k].c == r.closed_form[k].c;
        r.characters_match = r.characters_match && r.frobenius[k].c == r.from_generators[k].c;
    }
    return r;
}

}  // namespace gkm
