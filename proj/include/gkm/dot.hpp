#pragma once

#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "gkm/classes.hpp"

namespace gkm {

// (u.p)(v) = u(p(u^-1 v))
EquivariantClass dot(const Perm& u, const EquivariantClass& p);

struct SigmaTerm {
    std::vector<int> P, Q;
    Perm w_tilde;
    std::set<int> cuts;     // {d_a : a != l} plus the new descent
    Perm w_pq, u;           // u . sigma_{w_pq} = run_class(w_tilde, cuts), D(w_pq) = cuts
    bool swap_rule = true;  // u is the single/double swap correction

    std::vector<int> cuts_with_end(int n) const {
        std::vector<int> c(cuts.begin(), cuts.end());
        c.push_back(n);
        return c;
    }
};
// requires w^-1(i+1) + 1 == w^-1(i)
std::vector<SigmaTerm> sigma_w_i_terms(const Perm& w, int i);
EquivariantClass build_sigma_w_i(const Perm& w, int i);

// s_i . sigma_w for the permutohedral basis.  Ordinary mode keeps only constant
// coefficients after every step.
class PermSiAction {
public:
    PermSiAction(int n, bool equivariant) : n_(n), equivariant_(equivariant) {}
    int n() const { return n_; }
    bool equivariant() const { return equivariant_; }

    Expansion act(const Perm& w, int i);
    Expansion act(const Expansion& e, int i);
    // word r acts as s_{r0} s_{r1} ... : generators applied from the back
    Expansion act_word(const std::vector<int>& word, Expansion e);
    Expansion act_perm(const Perm& u, const Expansion& e) { return act_word(u.reduced_word(), e); }

private:
    Expansion compute(const Perm& w, int i);
    void prune(Expansion& e) const;

    int n_;
    bool equivariant_;
    std::recursive_mutex mu_;
    std::map<std::pair<Perm, int>, Expansion> memo_;
    std::set<std::pair<Perm, int>> active_;
};

// full flag rule: difference is 0 or (t_{i+1}-t_i) sigma_{s_i w}
bool full_flag_si_rule_check(const Perm& w, int i, BasisProvider& basis);
// dashed edge: s_i . sigma_w == sigma_{s_i w}
bool dashed_rule_check(const Perm& w, int i, BasisProvider& basis);

// matrix of s_i (columns = images of basis vectors) on degree k
QMat generator_matrix(int i, int k, const Hess& h, PermSiAction* perm = nullptr, BasisProvider* basis = nullptr);
QMat action_matrix(const Perm& u, int k, const Hess& h, PermSiAction* perm = nullptr, BasisProvider* basis = nullptr);

}  // namespace gkm
