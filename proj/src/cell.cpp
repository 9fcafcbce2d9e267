#include "gkm/cell.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gkm {

Eigenvalues Eigenvalues::primes(int n) {
    Eigenvalues e;
    for (long p : first_primes(n)) e.c.emplace_back(p);
    return e;
}

Eigenvalues Eigenvalues::random(int n, Rng& rng, long range) {
    std::uniform_int_distribution<long> d(1, range);
    Eigenvalues e;
    std::set<long> seen;
    while (static_cast<int>(e.c.size()) < n) {
        long v = d(rng);
        if (seen.insert(v).second) e.c.emplace_back(v);
    }
    return e;
}

Eigenvalues Eigenvalues::parse(const std::string& s) {
    Eigenvalues e;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Q q(tok);
        q.canonicalize();
        e.c.push_back(q);
    }
    return e;
}

bool Eigenvalues::distinct() const {
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (c[a] == c[b]) return false;
    return true;
}

CellChart::CellChart(const Perm& w, const Hess& h, const Eigenvalues& c) : w_(w), h_(h), c_(c), g_(w, h) {
    int n = w.n();
    if (static_cast<int>(c.c.size()) != n) throw std::invalid_argument("eigenvalue vector has wrong length");
    if (!c.distinct()) throw std::invalid_argument("degenerate eigenvalues: c_i must be pairwise distinct");
    for (int j = 1; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i)
            if (g_.has_edge(j, i)) {
                index_[{i, j}] = static_cast<int>(free_.size());
                free_.push_back({i, j});
            }
    if (static_cast<int>(free_.size()) > kMaxVars) throw std::length_error("too many cell variables");

    x_.assign(n + 1, std::vector<MultiPoly>(n + 1));
    for (int i = 1; i <= n; ++i) x_[i][i] = MultiPoly::constant(1);
    // P[i][g]: sum over chains i > g_1 > ... > g_t = g of (-1)^t x_{i,g_1} ... x_{g_{t-1},g}
    std::vector<std::vector<MultiPoly>> P(n + 1, std::vector<MultiPoly>(n + 1));
    std::vector<std::vector<bool>> have(n + 1, std::vector<bool>(n + 1, false));
    auto chainsum = [&](int i, int gam) -> const MultiPoly& {
        if (!have[i][gam]) {
            MultiPoly s = -x_[i][gam];
            for (int d = gam + 1; d < i; ++d)
                if (!x_[d][gam].is_zero() && !P[i][d].is_zero()) s -= P[i][d] * x_[d][gam];
            P[i][gam] = std::move(s);
            have[i][gam] = true;
        }
        return P[i][gam];
    };
    for (int dist = 1; dist < n; ++dist) {
        for (int j = 1; j + dist <= n; ++j) {
            int i = j + dist;
            if (g_.has_edge(j, i)) {
                x_[i][j] = MultiPoly::var(index_[{i, j}]);
                continue;
            }
            if (!g_.reachable(j, i)) continue;
            for (int gam = i - 1; gam > j; --gam) chainsum(i, gam);
            MultiPoly s;
            for (int gam = j + 1; gam < i; ++gam) {
                if (x_[gam][j].is_zero() || P[i][gam].is_zero()) continue;
                s += P[i][gam] * x_[gam][j] * (c(w(gam)) - c(w(j)));
            }
            x_[i][j] = s * (Q(-1) / (c(w(i)) - c(w(j))));
        }
    }
}

int CellChart::var_index(int i, int j) const {
    auto it = index_.find({i, j});
    return it == index_.end() ? -1 : it->second;
}

std::string CellChart::var_name(int k) const {
    return "x[" + std::to_string(free_[k].first) + "," + std::to_string(free_[k].second) + "]";
}

QMat CellChart::evaluate(const std::vector<Q>& point) const {
    int n = w_.n();
    QMat m(n, QVec(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) m[i - 1][j - 1] = x_[i][j].evaluate(point);
    return m;
}

bool is_minimal_path(const CellDigraph& g, const std::vector<int>& path) {
    int len = static_cast<int>(path.size());
    if (len < 3) return false;
    for (int l = 0; l + 1 < len; ++l)
        if (!g.has_edge(path[l + 1], path[l])) return false;
    for (int a = 0; a < len; ++a)
        for (int b = a + 2; b < len; ++b)
            if (g.has_edge(path[b], path[a])) return false;
    return true;
}

Q minimal_path_coefficient(const std::vector<int>& path, const Perm& w, const Hess& h, const Eigenvalues& c) {
    CellDigraph g(w, h);
    if (!is_minimal_path(g, path)) throw std::invalid_argument("not a minimal path");
    int t = static_cast<int>(path.size()) - 2;
    auto cw = [&](int idx) { return c(w(path[idx])); };
    Q num = 1, den = 1;
    for (int l = 1; l <= t; ++l) num *= cw(l) - cw(l + 1);
    for (int m = t + 1; m >= 2; --m) den *= cw(0) - cw(m);
    return num / den;
}

std::vector<std::vector<int>> long_paths(const CellDigraph& g, int i, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{i};
    std::function<void(int)> rec = [&](int top) {
        for (int prev = top - 1; prev >= j; --prev) {
            if (!g.has_edge(prev, top)) continue;
            cur.push_back(prev);
            if (prev == j) {
                if (cur.size() >= 3) out.push_back(cur);
            } else if (g.reachable(j, prev)) {
                rec(prev);
            }
            cur.pop_back();
        }
    };
    rec(i);
    return out;
}

MultiPoly path_monomial(const CellChart& chart, const std::vector<int>& path) {
    MultiPoly m = MultiPoly::constant(1);
    for (std::size_t l = 0; l + 1 < path.size(); ++l) m = m * chart.entry(path[l], path[l + 1]);
    return m;
}

MultiPoly defining_equation(const CellChart& ch, int a, int b) {
    const Perm& w = ch.w();
    const Eigenvalues& c = ch.eigenvalues();
    MultiPoly f = ch.entry(a, b) * (c(w(a)) - c(w(b)));
    int depth = 0;
    std::function<void(int, const MultiPoly&)> rec = [&](int top, const MultiPoly& prod) {
        for (int g = top - 1; g > b; --g) {
            MultiPoly p = prod * ch.entry(top, g);
            if (p.is_zero()) continue;
            ++depth;
            MultiPoly term = p * ch.entry(g, b) * (c(w(g)) - c(w(b)));
            if (depth % 2) f -= term;
            else f += term;
            rec(g, p);
            --depth;
        }
    };
    rec(a, MultiPoly::constant(1));
    return f;
}

MultiPoly minor(const CellChart& chart, const std::vector<int>& A, const std::vector<int>& B) {
    if (A.size() != B.size()) throw std::invalid_argument("minor: size mismatch");
    int k = static_cast<int>(A.size());
    // Laplace expansion along rows with memo on the used-column mask
    std::map<std::pair<int, unsigned>, MultiPoly> memo;
    std::function<MultiPoly(int, unsigned)> rec = [&](int r, unsigned used) -> MultiPoly {
        if (r == k) return MultiPoly::constant(1);
        auto key = std::make_pair(r, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        MultiPoly s;
        int sign = 1;
        for (int col = 0; col < k; ++col) {
            if (used >> col & 1) continue;
            const MultiPoly& e = A[r] >= B[col] ? chart.entry(A[r], B[col]) : MultiPoly();
            if (!e.is_zero()) {
                MultiPoly sub = rec(r + 1, used | (1u << col));
                if (!sub.is_zero()) {
                    if (sign > 0) s += e * sub;
                    else s -= e * sub;
                }
            }
            sign = -sign;
        }
        memo[key] = s;
        return s;
    };
    return rec(0, 0);
}

std::vector<Q> random_point(const CellChart& chart, Rng& rng) {
    std::uniform_int_distribution<long> d(1, 1000000);
    std::vector<Q> p(kMaxVars, 0);
    for (std::size_t k = 0; k < chart.free_vars().size(); ++k) p[k] = d(rng);
    return p;
}

namespace {

Q submatrix_det(const QMat& x, const std::vector<int>& A, const std::vector<int>& B) {
    QMat s(A.size(), QVec(B.size()));
    for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b) s[a][b] = x[A[a] - 1][B[b] - 1];
    return bareiss_det(s);
}

bool minor_nonzero(const CellChart& chart, const std::vector<int>& A, const std::vector<int>& B, Rng& rng,
                   bool symbolic, int& point_resamples) {
    if (!symbolic) {
        for (int attempt = 0; attempt < 5; ++attempt) {
            if (attempt) ++point_resamples;
            QMat x = chart.evaluate(random_point(chart, rng));
            if (submatrix_det(x, A, B) != 0) return true;
        }
    }
    return !minor(chart, A, B).is_zero();
}

}  // namespace

MinorCertificate minor_reachability_certificate(const Perm& w, const Hess& h, const Eigenvalues& c,
                                                const std::vector<int>& A, const std::vector<int>& B,
                                                Rng& rng, bool symbolic) {
    MinorCertificate cert;
    CellDigraph g(w, h);
    cert.reachable = set_reachable(g, B, A);
    Eigenvalues ev = c;
    long range = 100;
    for (int attempt = 0; attempt < 6; ++attempt) {
        CellChart chart(w, h, ev);
        cert.nonzero = minor_nonzero(chart, A, B, rng, symbolic, cert.point_resamples);
        if (cert.nonzero == cert.reachable) {
            cert.agree = true;
            return cert;
        }
        if (cert.nonzero && !cert.reachable) {
            cert.reachability_violation = true;
            return cert;
        }
        ++cert.eigen_resamples;
        range *= 10;
        ev = Eigenvalues::random(w.n(), rng, range);
    }
    return cert;
}

std::vector<std::set<std::vector<int>>> plucker_pattern(const QMat& x, const Perm& w) {
    int n = w.n();
    Perm wi = w.inverse();
    // row r of g = w x is row w^{-1}(r) of x
    QMat g(n, QVec(n));
    for (int r = 1; r <= n; ++r) g[r - 1] = x[wi(r) - 1];
    std::vector<std::set<std::vector<int>>> L(n + 1);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> cols(j);
        for (int k = 0; k < j; ++k) cols[k] = k + 1;
        for (auto& rows : subsets(n, j))
            if (submatrix_det(g, rows, cols) != 0) L[j].insert(rows);
    }
    return L;
}

OracleResult fixed_point_oracle(const Perm& w, const Hess& h, const Eigenvalues& c, Rng& rng) {
    int n = w.n();
    CellChart chart(w, h, c);
    OracleResult res;
    // the nonvanishing pattern is maximal at generic points; keep the larger of two samples
    auto best = plucker_pattern(chart.evaluate(random_point(chart, rng)), w);
    auto other = plucker_pattern(chart.evaluate(random_point(chart, rng)), w);
    for (int j = 1; j <= n; ++j)
        if (other[j] != best[j]) {
            ++res.resamples;
            best[j].insert(other[j].begin(), other[j].end());
        }
    for (auto& u : all_perms(n)) {
        bool ok = true;
        for (int j = 1; j <= n && ok; ++j) ok = best[j].count(u.prefix_sorted(j)) > 0;
        if (ok) res.support.push_back(u);
    }
    return res;
}

}  // namespace gkm
