#include "gkm/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "gkm/reach.hpp"

namespace gkm {

std::vector<Perm> EquivariantClass::support() const {
    std::vector<Perm> out;
    auto& all = all_perms(n_);
    for (std::size_t k = 0; k < v_.size(); ++k)
        if (!v_[k].is_zero()) out.push_back(all[k]);
    return out;
}

bool EquivariantClass::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

EquivariantClass EquivariantClass::operator+(const EquivariantClass& o) const {
    EquivariantClass r = *this;
    r += o;
    return r;
}

EquivariantClass EquivariantClass::operator-(const EquivariantClass& o) const {
    EquivariantClass r = *this;
    for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] -= o.v_[k];
    return r;
}

EquivariantClass EquivariantClass::operator*(const MultiPoly& f) const {
    EquivariantClass r = *this;
    for (auto& p : r.v_)
        if (!p.is_zero()) p = p * f;
    return r;
}

EquivariantClass& EquivariantClass::operator+=(const EquivariantClass& o) {
    if (n_ != o.n_) throw std::invalid_argument("class size mismatch");
    for (std::size_t k = 0; k < v_.size(); ++k)
        if (!o.v_[k].is_zero()) v_[k] += o.v_[k];
    return *this;
}

std::optional<GkmViolation> gkm_check(const EquivariantClass& p, const Hess& h) {
    for (auto& v : all_perms(h.n()))
        for (auto& e : gkm_edges(v, h)) {
            if (e.dst < v) continue;
            MultiPoly d = p(v) - p(e.dst);
            if (!d.identify(e.a, e.b).is_zero()) return GkmViolation{v, e.dst, e.label};
        }
    return std::nullopt;
}

EquivariantClass permutohedral_class(const Perm& w) { return run_class(w, w.descents()); }

EquivariantClass run_class(const Perm& w, const std::set<int>& cut_set) {
    int n = w.n();
    EquivariantClass cls(n);
    std::vector<int> cuts{0};
    for (int d : cut_set) cuts.push_back(d);
    cuts.push_back(n);
    // support: permute the values within each block
    std::vector<int> img = w.images();
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s + 1 == cuts.size()) {
            Perm v(img);
            MultiPoly val = MultiPoly::constant(1);
            for (std::size_t k = 1; k + 1 < cuts.size(); ++k) val = val * MultiPoly::t_diff(v(cuts[k] + 1), v(cuts[k]));
            cls.set(v, std::move(val));
            return;
        }
        auto b = img.begin() + cuts[s], e = img.begin() + cuts[s + 1];
        std::sort(b, e);
        do rec(s + 1);
        while (std::next_permutation(b, e));
    };
    rec(0);
    return cls;
}

MultiPoly top_value(const Perm& w, const Hess& h) {
    MultiPoly p = MultiPoly::constant(1);
    for (auto& e : gkm_edges(w, h))
        if (e.down) p = p * e.label;
    return p;
}

namespace {

void monomials(int n, int deg, int from, Mono& cur, std::vector<Mono>& out) {
    if (from == n - 1) {
        Mono m = cur;
        m.e[from] = static_cast<std::uint8_t>(deg);
        m.deg = static_cast<std::uint8_t>(m.deg + deg);
        out.push_back(m);
        return;
    }
    for (int p = deg; p >= 0; --p) {
        cur.e[from] = static_cast<std::uint8_t>(p);
        cur.deg = static_cast<std::uint8_t>(cur.deg + p);
        monomials(n, deg - p, from + 1, cur, out);
        cur.deg = static_cast<std::uint8_t>(cur.deg - p);
        cur.e[from] = 0;
    }
}

bool len_lex(const Perm& a, const Perm& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
}

Mono identify_mono(Mono m, int a, int b) {
    m.e[b - 1] = static_cast<std::uint8_t>(m.e[b - 1] + m.e[a - 1]);
    m.e[a - 1] = 0;
    return m;
}

}  // namespace

Interpolation interpolate_class(const Perm& w, const Hess& h) {
    int n = w.n();
    auto supp = support_A(w, h);
    std::sort(supp.begin(), supp.end(), len_lex);
    MultiPoly top = top_value(w, h);
    int deg = l_h(w, h);
    std::vector<Mono> mons;
    Mono cur;
    monomials(n, deg, 0, cur, mons);
    int M = static_cast<int>(mons.size());
    std::map<Mono, int, GrLex> mono_index;
    for (int k = 0; k < M; ++k) mono_index[mons[k]] = k;

    // supp[0] == w; unknown block for supp[s] starts at (s - 1) * M
    std::map<Perm, int> point;
    for (std::size_t s = 0; s < supp.size(); ++s) point[supp[s]] = static_cast<int>(s);
    int nvars = static_cast<int>(supp.size() - 1) * M;
    SparseSystem sys(nvars);

    for (auto& v : supp)
        for (auto& e : gkm_edges(v, h)) {
            auto other = point.find(e.dst);
            if (other != point.end() && e.dst < v) continue;  // pair handled once
            // identify(a,b)(p(v) - p(dst)) == 0, collected per image monomial
            std::map<Mono, std::pair<SparseSystem::Row, Q>, GrLex> eq;
            auto add_point = [&](int s, int sign) {
                if (s == 0) {
                    for (auto& [m, c] : top.terms()) eq[identify_mono(m, e.a, e.b)].second -= sign * c;
                    return;
                }
                for (int k = 0; k < M; ++k) {
                    Q& slot = eq[identify_mono(mons[k], e.a, e.b)].first[(s - 1) * M + k];
                    slot += sign;
                }
            };
            add_point(point[v], 1);
            if (other != point.end()) add_point(other->second, -1);
            for (auto& [m, rowrhs] : eq) {
                auto& [row, rhs] = rowrhs;
                for (auto it = row.begin(); it != row.end();)
                    it = it->second == 0 ? row.erase(it) : std::next(it);
                if (row.empty() && rhs == 0) continue;
                sys.add_equation(std::move(row), rhs);
            }
        }

    auto sol = sys.solve();
    if (!sol.feasible) throw std::logic_error("interpolation system infeasible for " + w.str() + " h=" + h.str());
    Interpolation res;
    res.cls = EquivariantClass(n);
    res.cls.set(w, top);
    for (std::size_t s = 1; s < supp.size(); ++s) {
        MultiPoly p;
        for (int k = 0; k < M; ++k) p.add_term(mons[k], sol.x[(s - 1) * M + k]);
        res.cls.set(supp[s], std::move(p));
    }
    res.nullity = sol.nullity;
    res.unique = sol.nullity == 0;
    res.unknowns = nvars;
    return res;
}

bool is_flow_up(const EquivariantClass& p, const Perm& w, const Hess& h) {
    if (gkm_check(p, h) || p(w) != top_value(w, h)) return false;
    auto A = support_A(w, h);
    int deg = l_h(w, h);
    for (auto& v : p.support()) {
        if (!std::binary_search(A.begin(), A.end(), v)) return false;
        if (!p(v).is_homogeneous() || p(v).degree() != deg) return false;
    }
    return true;
}

const BasisProvider::Entry& BasisProvider::get(const Perm& v) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = cache_.find(v); it != cache_.end()) return it->second;
    }
    Entry e;
    if (h_.is_permutohedral()) {
        e = {permutohedral_class(v), true};
    } else {
        auto r = interpolate_class(v, h_);
        e = {std::move(r.cls), r.unique};
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(v, std::move(e)).first->second;
}

const EquivariantClass& BasisProvider::operator()(const Perm& v) { return get(v).cls; }
bool BasisProvider::unique(const Perm& v) { return get(v).unique; }

Expansion expand_in_basis(const EquivariantClass& p, BasisProvider& basis) {
    Expansion out;
    EquivariantClass rem = p;
    for (;;) {
        auto supp = rem.support();
        if (supp.empty()) break;
        Perm v = *std::min_element(supp.begin(), supp.end(), len_lex);
        const EquivariantClass& b = basis(v);
        auto q = rem(v).divide_exact(b(v));
        if (!q) throw std::domain_error("class is not in the span of the basis (at " + v.str() + ")");
        rem = rem - b * *q;
        if (!rem(v).is_zero()) throw std::logic_error("basis is not triangular at " + v.str());
        out[v] = std::move(*q);
    }
    return out;
}

EquivariantClass resum(const Expansion& e, BasisProvider& basis) {
    EquivariantClass r(basis.hess().n());
    for (auto& [v, c] : e) r += basis(v) * c;
    return r;
}

std::vector<Perm> degree_basis(const Hess& h, int k) {
    std::vector<Perm> out;
    for (auto& v : all_perms(h.n()))
        if (l_h(v, h) == k) out.push_back(v);
    return out;
}

QVec reduce_to_ordinary(const Expansion& e, const std::vector<Perm>& degree_k) {
    QVec out(degree_k.size(), 0);
    for (std::size_t r = 0; r < degree_k.size(); ++r)
        if (auto it = e.find(degree_k[r]); it != e.end()) out[r] = it->second.constant_term();
    return out;
}

}  // namespace gkm
