#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkm/dot.hpp"

namespace gkm {

using Partition = std::vector<int>;

enum class Basis { m, e, h, p, s };
char basis_letter(Basis b);
Basis parse_basis(const std::string& s);

struct SymFunc {
    int n = 0;
    Basis basis = Basis::m;
    std::map<Partition, Q> c;  // zero coefficients are never stored

    SymFunc() = default;
    SymFunc(int n_, Basis b) : n(n_), basis(b) {}
    static SymFunc single(int n, Basis b, const Partition& lam, const Q& coef = 1);

    Q operator[](const Partition& lam) const;
    void add(const Partition& lam, const Q& v);
    SymFunc operator+(const SymFunc& o) const;  // converts o to this basis
    SymFunc operator*(const Q& s) const;
    bool operator==(const SymFunc& o) const;   // compares in the m basis
    bool is_zero() const { return c.empty(); }
    std::string str() const;                   // "h5+3h32+h41+h221"
};

SymFunc convert(const SymFunc& f, Basis target);
SymFunc omega(const SymFunc& f);
// rows: basis element lambda expanded in monomials, columns in partitions(n) order
const QMat& transition_to_monomial(int n, Basis b);

long z_mu(const Partition& mu);
// canonical representative with increasing cycles (1..mu_1)(mu_1+1..) ...
Perm cycle_type_rep(const Partition& mu);

using GradedSymFunc = std::vector<SymFunc>;  // index k is the coefficient of t^k

struct ChromaticResult {
    GradedSymFunc X;  // monomial basis
    bool symmetric = false;
    long colorings = 0;
};
// asc: edges {j,i}, j<i<=h(j), kappa(j) < kappa(i); descending = true counts kappa(j) > kappa(i)
ChromaticResult chromatic_qsym(const Hess& h, bool descending = false);

// ch H^{2k} from traces of the action matrices, in the h basis
SymFunc frobenius_of_degree(const Hess& h, int k, PermSiAction* perm = nullptr, BasisProvider* basis = nullptr);

struct SwReport {
    GradedSymFunc omega_x;    // h basis
    GradedSymFunc frobenius;  // h basis
    std::vector<bool> degree_ok;
    bool symmetric = false;
    bool ok = false;
    bool mirror_ok = false;  // descent convention, checked only when ok fails
};
SwReport verify_shareshian_wachs(const Hess& h);

struct ClosedExpansionReport {
    GradedSymFunc from_generators;  // sum over G_k of h_{a^(w)}
    GradedSymFunc closed_form;      // sum of h_{(k_1-1,k_2,...)} t^{m-1} prod [k_i-1]_t
    GradedSymFunc frobenius;        // characters of the dot action
    bool generators_match = false;
    bool characters_match = false;
    long total_dim = 0;
    bool ok() const { return generators_match && characters_match; }
};
ClosedExpansionReport verify_closed_expansion(int n, PermSiAction* perm = nullptr);

}  // namespace gkm
