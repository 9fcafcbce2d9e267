#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkm/linalg.hpp"
#include "gkm/reach.hpp"
#include "gkm/util.hpp"

namespace gkm {

// c_1..c_n, indexed by value (c[k-1] = c_k)
struct Eigenvalues {
    std::vector<Q> c;

    static Eigenvalues primes(int n);
    static Eigenvalues random(int n, Rng& rng, long range);
    static Eigenvalues parse(const std::string& s);
    const Q& operator()(int k) const { return c[k - 1]; }
    bool distinct() const;
};

class CellChart {
public:
    CellChart(const Perm& w, const Hess& h, const Eigenvalues& c);

    const Perm& w() const { return w_; }
    const Hess& hess() const { return h_; }
    const Eigenvalues& eigenvalues() const { return c_; }
    const CellDigraph& graph() const { return g_; }
    int n() const { return w_.n(); }

    // free pairs (i, j) with j -> i an edge, in variable order
    const std::vector<std::pair<int, int>>& free_vars() const { return free_; }
    int var_index(int i, int j) const;  // -1 if not free
    const MultiPoly& entry(int i, int j) const { return x_[i][j]; }
    std::string var_name(int k) const;

    // x evaluated at an assignment of the free variables
    QMat evaluate(const std::vector<Q>& point) const;

private:
    Perm w_;
    Hess h_;
    Eigenvalues c_;
    CellDigraph g_;
    std::vector<std::pair<int, int>> free_;
    std::map<std::pair<int, int>, int> index_;
    std::vector<std::vector<MultiPoly>> x_;  // 1-based
};

// path given as gamma_0 = i, gamma_1, ..., gamma_{t+1} = j
bool is_minimal_path(const CellDigraph& g, const std::vector<int>& path);
Q minimal_path_coefficient(const std::vector<int>& path, const Perm& w, const Hess& h, const Eigenvalues& c);
// all paths of length > 1 from j up to i, in the same orientation
std::vector<std::vector<int>> long_paths(const CellDigraph& g, int i, int j);
MultiPoly path_monomial(const CellChart& chart, const std::vector<int>& path);

// f_{a,b}: (c_{w(a)} - c_{w(b)}) x_{ab} + sum over chains a > g_1 > ... > g_t > b of
// (-1)^t (c_{w(g_t)} - c_{w(b)}) x_{a,g_1} ... x_{g_t,b}; vanishes identically on the chart
MultiPoly defining_equation(const CellChart& chart, int a, int b);

MultiPoly minor(const CellChart& chart, const std::vector<int>& A, const std::vector<int>& B);

struct MinorCertificate {
    bool reachable = false;
    bool nonzero = false;
    bool agree = false;
    bool reachability_violation = false;
    int eigen_resamples = 0;
    int point_resamples = 0;
};

MinorCertificate minor_reachability_certificate(const Perm& w, const Hess& h, const Eigenvalues& c,
                                                const std::vector<int>& A, const std::vector<int>& B,
                                                Rng& rng, bool symbolic);

// L_j for j = 1..n (index 0 unused): nonzero Pluecker coordinates of g = w x
std::vector<std::set<std::vector<int>>> plucker_pattern(const QMat& x, const Perm& w);
std::vector<Q> random_point(const CellChart& chart, Rng& rng);

struct OracleResult {
    std::vector<Perm> support;
    int resamples = 0;
};
OracleResult fixed_point_oracle(const Perm& w, const Hess& h, const Eigenvalues& c, Rng& rng);

}  // namespace gkm
