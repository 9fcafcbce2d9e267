#pragma once

#include <map>
#include <set>
#include <vector>

#include "gkm/dot.hpp"

namespace gkm {

// e(D) = {d in D : d != 1, d-1 not in D}
std::set<int> erase(const std::set<int>& D);
Composition erased_composition(const Perm& w);

// value blocks n-a_1+1..n | ... | 1..a_{k+1}, increasing inside each block
Perm w_of_composition(const Composition& a);
std::vector<Perm> g_set(int n, int k);
long eulerian(int n, int k);

struct GeneratorData {
    Perm w;
    Composition a, a_hat;
    std::vector<std::vector<int>> hat_blocks;  // value sets J^_t of S_w
    std::vector<std::vector<int>> run_blocks;  // value sets J_s
    std::vector<Perm> coset_reps;              // minimal representatives of S_w / (S_J1 x ... )
    long order_Sw = 1;
};
GeneratorData generator_data(const Perm& w);
bool in_Sw(const GeneratorData& g, const Perm& u);
// minimal representative of u S_w
Perm min_rep(const GeneratorData& g, const Perm& u);

EquivariantClass sigma_hat(const Perm& w);
// supp = A_{w(a^)} and the product formula over D(w)
bool sigma_hat_sum_check(const Perm& w);

struct CompositionGraph {
    Composition a;
    std::vector<Composition> blocks;
    std::vector<int> block_start;   // first position of each block minus one
    std::vector<int> value_offset;  // n_{i+1} + ... + n_beta
    std::vector<int> ones;          // m for each block
    std::vector<int> bound;         // a_{m+1} - 1, or 0 when the block has no large part
    std::vector<std::vector<int>> vertices;  // concatenated z of all blocks
    struct Edge {
        int from, to, label;
        int block, coord;  // coordinate j (1-based) raised inside the block
    };
    std::vector<Edge> edges;

    int index(const std::vector<int>& z) const;  // -1 if not a vertex
};

std::vector<Composition> admissible_decomposition(const Composition& a);
CompositionGraph composition_graph(const Composition& a);
// throws std::invalid_argument for a non-vertex
Perm w_z(const CompositionGraph& g, const std::vector<int>& z);

struct WzReport {
    bool graph_equals_cosets = false;   // {w_z} = {vw : v in M_w, a(vw) = a}
    bool graph_equals_support = false;  // {w_z} = {u in supp sigma^_w : a(u) = a}
    bool graph_equals_class = false;    // {w_z} = {u : a(u) = a}; only for a = (1,...,1,n-m)
    // w_z = s_i w_z', w_z'^-1(i+1) = d_{m-j+1}, w_z'^-1(i) in the large block
    bool adjacency = false;
    int vertices = 0;
    int class_size = 0;
    int support_class_size = 0;
};
WzReport verify_wz(const Composition& a);
inline bool verify_wz_completeness(const Composition& a) {
    auto r = verify_wz(a);
    return r.graph_equals_cosets && r.graph_equals_support;
}

// ordinary coefficient vector of sigma^_w over degree_basis(permutohedral, k)
QVec sigma_hat_ordinary(const Perm& w, PermSiAction& act);

struct ModuleReport {
    GeneratorData gen;
    QVec sigma_hat;
    int dim = 0;
    long expected_dim = 0;
    int orbit_size = 0;
    bool Sw_fixes = false;
    bool stabilizer_exact = false;
    bool leading = false;  // positive on w_z, remaining terms have larger composition
    std::vector<Perm> basis_reps;
    std::vector<QVec> basis;  // v . sigma^_w for minimal v in S_n / S_w
};

struct YoungTypeReport {
    bool composition_level = false;  // a^ = (k_1, ..., k_m - 1)
    bool partition_level = false;    // sorted (k_1 - 1, k_2, ..., k_m)
};
YoungTypeReport young_type_check(int n);

struct DecompositionReport {
    int n = 0, k = 0;
    std::vector<Perm> degree_basis;
    std::vector<ModuleReport> modules;
    int total_rank = 0;
    long eulerian_count = 0;
    bool dims_ok = false, stabilizers_ok = false, total_ok = false, direct_sum = false;
    bool leading_ok = false;
    YoungTypeReport young_types;
    bool ok() const {
        return dims_ok && stabilizers_ok && total_ok && direct_sum && leading_ok && young_types.composition_level &&
               young_types.partition_level;
    }
};
DecompositionReport verify_decomposition(int n, int k, PermSiAction* act = nullptr);

}  // namespace gkm
