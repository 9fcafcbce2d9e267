#include "gkm/reach.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gkm {

CellDigraph::CellDigraph(const Perm& w, const Hess& h) : n_(w.n()) {
    for (int j = 1; j <= n_; ++j)
        for (int i = j + 1; i <= h(j); ++i)
            if (w(j) < w(i)) edges_.insert({j, i});
    close();
}

CellDigraph::CellDigraph(int n, const std::set<std::pair<int, int>>& edges) : n_(n), edges_(edges) { close(); }

void CellDigraph::close() {
    closure_.assign(n_ + 1, std::vector<bool>(n_ + 1, false));
    // edges increase the index, so sweep sources from the top down
    for (int j = n_; j >= 1; --j) {
        closure_[j][j] = true;
        for (auto& [a, b] : edges_)
            if (a == j)
                for (int i = b; i <= n_; ++i)
                    if (closure_[b][i]) closure_[j][i] = true;
    }
}

bool vertex_reachable(const CellDigraph& g, int j, int i) { return g.reachable(j, i); }

namespace {

void require_sorted(const std::vector<int>& v) {
    if (!std::is_sorted(v.begin(), v.end()) || std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("index sets must be strictly increasing");
}

}  // namespace

bool set_reachable(const CellDigraph& g, const std::vector<int>& B, const std::vector<int>& A) {
    if (A.size() != B.size()) throw std::invalid_argument("set_reachable: size mismatch");
    require_sorted(A);
    require_sorted(B);
    int k = static_cast<int>(A.size());
    std::vector<int> match_a(k, -1);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int b, std::vector<bool>& seen) {
        for (int a = 0; a < k; ++a) {
            if (seen[a] || !g.reachable(B[b], A[a])) continue;
            seen[a] = true;
            if (match_a[a] < 0 || augment(match_a[a], seen)) {
                match_a[a] = b;
                return true;
            }
        }
        return false;
    };
    for (int b = 0; b < k; ++b) {
        std::vector<bool> seen(k, false);
        if (!augment(b, seen)) return false;
    }
    return true;
}

std::vector<std::vector<int>> j_family(const Perm& w, const Hess& h, int j) {
    CellDigraph g(w, h);
    std::vector<int> first(j);
    for (int k = 0; k < j; ++k) first[k] = k + 1;
    std::vector<std::vector<int>> out;
    for (auto& s : subsets(w.n(), j))
        if (set_reachable(g, first, s)) out.push_back(s);
    return out;
}

std::vector<Perm> support_A(const Perm& w, const Hess& h) {
    int n = w.n();
    CellDigraph g(w, h);
    Perm wi = w.inverse();
    std::vector<Perm> out;
    std::vector<int> img(n);
    std::vector<bool> used(n + 1, false);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            out.emplace_back(img);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            img[j] = v;
            std::vector<int> pos(j + 1), first(j + 1);
            for (int k = 0; k <= j; ++k) {
                pos[k] = wi(img[k]);
                first[k] = k + 1;
            }
            std::sort(pos.begin(), pos.end());
            if (!set_reachable(g, first, pos)) continue;
            used[v] = true;
            rec(j + 1);
            used[v] = false;
        }
    };
    rec(0);
    return out;
}

}  // namespace gkm
