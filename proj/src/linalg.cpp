#include "gkm/linalg.hpp"

#include <stdexcept>

namespace gkm {

QMat identity_matrix(int n) {
    QMat m(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat matmul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

QVec matvec(const QMat& a, const QVec& x) {
    QVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) r[i] += a[i][j] * x[j];
    return r;
}

bool is_zero(const QVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

Q bareiss_det(QMat m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // clear denominators row by row so the elimination stays integral
    Q scale = 1;
    for (auto& row : m) {
        mpz_class l = 1;
        for (auto& x : row) {
            x.canonicalize();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        for (auto& x : row) x *= l;
        scale *= l;
    }
    int sign = 1;
    Q prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1] / scale;
}

int rank(QMat m) {
    int rows = static_cast<int>(m.size());
    if (!rows) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

QMat inverse(QMat m) {
    int d = static_cast<int>(m.size());
    QMat inv = identity_matrix(d);
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (piv < d && m[piv][c] == 0) ++piv;
        if (piv == d) throw std::domain_error("singular matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Q s = 1 / m[c][c];
        for (int j = 0; j < d; ++j) {
            m[c][j] *= s;
            inv[c][j] *= s;
        }
        for (int r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Q f = m[r][c];
            for (int j = 0; j < d; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

SparseMat SparseMat::from_dense(const QMat& m) {
    SparseMat s;
    int d = static_cast<int>(m.size());
    s.cols.resize(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (m[r][c] != 0) s.cols[c].push_back({r, m[r][c]});
    return s;
}

QVec SparseMat::apply(const QVec& x) const {
    QVec y(x.size(), 0);
    for (std::size_t c = 0; c < x.size(); ++c) {
        if (x[c] == 0) continue;
        for (auto& [r, v] : cols[c]) y[r] += v * x[c];
    }
    return y;
}

void EchelonBasis::reduce(QVec& v) const {
    for (auto& [p, row] : rows_) {
        if (v[p] == 0) continue;
        Q f = v[p];
        for (int j = p; j < dim_; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
}

bool EchelonBasis::insert(QVec v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("echelon: dimension mismatch");
    reduce(v);
    int p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    Q inv = 1 / v[p];
    for (int j = p; j < dim_; ++j) v[j] *= inv;
    // keep rows fully reduced so reduce() needs one pass in pivot order
    for (auto& [q, row] : rows_) {
        if (row[p] == 0) continue;
        Q f = row[p];
        for (int j = p; j < dim_; ++j)
            if (v[j] != 0) row[j] -= f * v[j];
    }
    rows_.emplace(p, std::move(v));
    return true;
}

bool EchelonBasis::contains(QVec v) const {
    reduce(v);
    return is_zero(v);
}

void SparseSystem::add_equation(Row lhs, Q rhs) {
    for (auto it = lhs.begin(); it != lhs.end();) {
        if (it->second == 0) it = lhs.erase(it);
        else ++it;
    }
    if (lhs.empty() && rhs == 0) return;
    eqs_.emplace_back(std::move(lhs), std::move(rhs));
}

SparseSystem::Solution SparseSystem::solve() const {
    // pivot rows keyed by their leading (smallest) column, each reduced against earlier pivots
    std::map<int, std::pair<Row, Q>> piv;
    Solution sol;
    for (auto [row, rhs] : eqs_) {
        while (!row.empty()) {
            auto it = piv.find(row.begin()->first);
            if (it == piv.end()) break;
            Q f = row.begin()->second;  // pivot rows are normalized to leading 1
            for (auto& [c, a] : it->second.first) {
                Q& slot = row[c];
                slot -= f * a;
                if (slot == 0) row.erase(c);
            }
            rhs -= f * it->second.second;
        }
        if (row.empty()) {
            if (rhs != 0) return sol;  // infeasible
            continue;
        }
        Q inv = 1 / row.begin()->second;
        for (auto& kv : row) kv.second *= inv;
        rhs *= inv;
        int lead = row.begin()->first;
        piv.emplace(lead, std::make_pair(std::move(row), std::move(rhs)));
    }
    sol.feasible = true;
    sol.nullity = nvars_ - static_cast<int>(piv.size());
    sol.x.assign(nvars_, 0);
    // back substitution from the largest pivot column down
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        auto& [row, rhs] = it->second;
        Q v = rhs;
        for (auto& [c, a] : row)
            if (c != it->first) v -= a * sol.x[c];
        sol.x[it->first] = v;
    }
    return sol;
}

}  // namespace gkm
