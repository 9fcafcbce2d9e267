#pragma once

#include <string>
#include <vector>

#include "gkm/perm.hpp"
#include "gkm/poly.hpp"

namespace gkm {

class Hess {
public:
    Hess() = default;
    explicit Hess(std::vector<int> values);

    static Hess permutohedral(int n);
    static Hess full_flag(int n);
    static Hess parse(const std::string& spec, int n = 0);  // "3,3,4,5,5" | permutohedral | fullflag

    int n() const { return static_cast<int>(h_.size()); }
    int operator()(int j) const { return h_[j - 1]; }
    const std::vector<int>& values() const { return h_; }
    bool is_permutohedral() const;
    bool is_full_flag() const;
    int edge_count() const;  // sum_j (h(j) - j)
    std::string str() const;
    bool operator==(const Hess& o) const { return h_ == o.h_; }
    bool operator<(const Hess& o) const { return h_ < o.h_; }

private:
    std::vector<int> h_;
};

std::vector<Hess> all_hessenberg(int n);

struct GkmEdge {
    Perm dst;
    int j, i;           // dst = w * s_{j,i}, j < i <= h(j)
    MultiPoly label;    // t_{w(i)} - t_{w(j)}
    bool down;          // edge of the oriented subgraph: l(w) > l(dst)
    int a, b;           // label = t_a - t_b

    std::string label_str() const { return "t" + std::to_string(a) + "-t" + std::to_string(b); }
};

class GkmGraph {
public:
    explicit GkmGraph(const Hess& h);
    const Hess& hess() const { return h_; }
    int n() const { return h_.n(); }
    const std::vector<GkmEdge>& edges(const Perm& w) const { return adj_[perm_rank(w)]; }
    int out_degree(const Perm& w) const;  // in the oriented subgraph

private:
    Hess h_;
    std::vector<std::vector<GkmEdge>> adj_;
};

// edges at one vertex without materializing the graph
std::vector<GkmEdge> gkm_edges(const Perm& w, const Hess& h);

int l_h(const Perm& w, const Hess& h);
std::vector<long> poincare_polynomial(const Hess& h);

enum class EdgeKind { SolidDown, SolidUp, Dashed };
// SolidDown: s_i w -> w;  SolidUp: w -> s_i w
EdgeKind edge_kind(const Perm& w, int i, const Hess& h);
const char* edge_kind_name(EdgeKind k);

}  // namespace gkm
