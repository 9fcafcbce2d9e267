#include "gkm/hessenberg.hpp"

#include <sstream>
#include <stdexcept>

namespace gkm {

Hess::Hess(std::vector<int> values) : h_(std::move(values)) {
    int n = static_cast<int>(h_.size());
    for (int j = 1; j <= n; ++j) {
        if (h_[j - 1] < j || h_[j - 1] > n) throw std::invalid_argument("invalid Hessenberg function: " + str());
        if (j > 1 && h_[j - 1] < h_[j - 2]) throw std::invalid_argument("invalid Hessenberg function: " + str());
    }
}

Hess Hess::permutohedral(int n) {
    std::vector<int> v(n);
    for (int j = 1; j <= n; ++j) v[j - 1] = std::min(j + 1, n);
    return Hess(v);
}

Hess Hess::full_flag(int n) { return Hess(std::vector<int>(n, n)); }

Hess Hess::parse(const std::string& spec, int n) {
    if (spec == "permutohedral" || spec == "fullflag") {
        if (n <= 0) throw std::invalid_argument("--n is required with h=" + spec);
        return spec == "permutohedral" ? permutohedral(n) : full_flag(n);
    }
    std::vector<int> v;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    if (n && static_cast<int>(v.size()) != n) throw std::invalid_argument("h has wrong length: " + spec);
    return Hess(v);
}

bool Hess::is_permutohedral() const { return *this == permutohedral(n()); }
bool Hess::is_full_flag() const { return *this == full_flag(n()); }

int Hess::edge_count() const {
    int s = 0;
    for (int j = 1; j <= n(); ++j) s += h_[j - 1] - j;
    return s;
}

std::string Hess::str() const {
    std::string s;
    for (std::size_t i = 0; i < h_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h_[i]);
    }
    return s;
}

std::vector<Hess> all_hessenberg(int n) {
    std::vector<Hess> out;
    std::vector<int> v(n);
    auto rec = [&](auto&& self, int j) -> void {
        if (j > n) {
            out.emplace_back(v);
            return;
        }
        int lo = std::max(j, j > 1 ? v[j - 2] : 1);
        for (int x = lo; x <= n; ++x) {
            v[j - 1] = x;
            self(self, j + 1);
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<GkmEdge> gkm_edges(const Perm& w, const Hess& h) {
    std::vector<GkmEdge> out;
    for (int j = 1; j <= h.n(); ++j)
        for (int i = j + 1; i <= h(j); ++i)
            out.push_back({w.swap_positions(j, i), j, i, MultiPoly::t_diff(w(i), w(j)), w(j) > w(i), w(i), w(j)});
    return out;
}

GkmGraph::GkmGraph(const Hess& h) : h_(h) {
    const auto& perms = all_perms(h.n());
    adj_.resize(perms.size());
    for (std::size_t r = 0; r < perms.size(); ++r) adj_[r] = gkm_edges(perms[r], h);
}

int GkmGraph::out_degree(const Perm& w) const {
    int d = 0;
    for (auto& e : edges(w))
        if (e.down) ++d;
    return d;
}

int l_h(const Perm& w, const Hess& h) {
    int c = 0;
    for (int j = 1; j <= h.n(); ++j)
        for (int i = j + 1; i <= h(j); ++i)
            if (w(j) > w(i)) ++c;
    return c;
}

std::vector<long> poincare_polynomial(const Hess& h) {
    std::vector<long> c(h.edge_count() + 1, 0);
    for (auto& w : all_perms(h.n())) ++c[l_h(w, h)];
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

EdgeKind edge_kind(const Perm& w, int i, const Hess& h) {
    Perm wi = w.inverse();
    int j = wi(i + 1), k = wi(i);
    if (j < k) {
        // l(w) > l(s_i w)
        return k <= h(j) ? EdgeKind::SolidUp : EdgeKind::Dashed;
    }
    return j <= h(k) ? EdgeKind::SolidDown : EdgeKind::Dashed;
}

const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::SolidDown: return "solid_down";
        case EdgeKind::SolidUp: return "solid_up";
        case EdgeKind::Dashed: return "dashed";
    }
    return "?";
}

}  // namespace gkm
