#pragma once

#include <set>
#include <utility>
#include <vector>

#include "gkm/hessenberg.hpp"

namespace gkm {

// edges j -> i with j < i <= h(j) and w(j) < w(i)
class CellDigraph {
public:
    CellDigraph(const Perm& w, const Hess& h);
    CellDigraph(int n, const std::set<std::pair<int, int>>& edges);

    int n() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int j, int i) const { return edges_.count({j, i}) > 0; }
    bool reachable(int j, int i) const { return closure_[j][i]; }  // i from j

private:
    void close();
    int n_;
    std::set<std::pair<int, int>> edges_;
    std::vector<std::vector<bool>> closure_;
};

bool vertex_reachable(const CellDigraph& g, int j, int i);
// A reachable from B: a perfect matching b -> a with a reachable from b
bool set_reachable(const CellDigraph& g, const std::vector<int>& B, const std::vector<int>& A);

std::vector<std::vector<int>> j_family(const Perm& w, const Hess& h, int j);
std::vector<Perm> support_A(const Perm& w, const Hess& h);

}  // namespace gkm
