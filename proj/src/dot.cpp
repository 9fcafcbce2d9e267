#include "gkm/dot.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gkm {

EquivariantClass dot(const Perm& u, const EquivariantClass& p) {
    EquivariantClass r(p.n());
    auto& all = all_perms(p.n());
    for (std::size_t k = 0; k < all.size(); ++k)
        if (!p.at(k).is_zero()) r.set(u * all[k], p.at(k).substitute(u));
    return r;
}

std::vector<SigmaTerm> sigma_w_i_terms(const Perm& w, int i) {
    int n = w.n();
    Perm wi = w.inverse();
    if (i < 1 || i >= n || wi(i + 1) + 1 != wi(i)) throw std::invalid_argument("sigma_w_i: i+1 must sit directly before i");
    std::vector<int> d{0};
    for (int x : w.descents()) d.push_back(x);
    d.push_back(n);
    int pos = wi(i + 1);
    int l = static_cast<int>(std::find(d.begin(), d.end(), pos) - d.begin());
    int lo = d[l - 1], hi = d[l + 1];
    std::vector<int> Pt, Qt;
    for (int j = lo + 1; j < pos; ++j) Pt.push_back(w(j));
    for (int j = pos + 2; j <= hi; ++j) Qt.push_back(w(j));

    std::vector<SigmaTerm> out;
    for (unsigned pm = 0; pm < (1u << Pt.size()); ++pm)
        for (unsigned qm = 0; qm < (1u << Qt.size()); ++qm) {
            SigmaTerm t;
            std::vector<int> rest{i};
            for (std::size_t k = 0; k < Pt.size(); ++k) (pm >> k & 1 ? t.P : rest).push_back(Pt[k]);
            for (std::size_t k = 0; k < Qt.size(); ++k) (qm >> k & 1 ? t.Q : rest).push_back(Qt[k]);
            std::sort(rest.begin(), rest.end());
            std::vector<int> img;
            for (int j = 1; j <= lo; ++j) img.push_back(w(j));
            img.insert(img.end(), t.P.begin(), t.P.end());
            img.push_back(i + 1);
            img.insert(img.end(), t.Q.begin(), t.Q.end());
            img.insert(img.end(), rest.begin(), rest.end());
            for (int j = hi + 1; j <= n; ++j) img.push_back(w(j));
            t.w_tilde = Perm(img);
            for (int a = 1; a + 1 < static_cast<int>(d.size()); ++a)
                if (a != l) t.cuts.insert(d[a]);
            t.cuts.insert(lo + static_cast<int>(t.P.size() + t.Q.size()) + 1);
            t.u = Perm::identity(n);
            auto dt = t.w_tilde.descents();
            for (int c : {lo, hi})
                if (c != 0 && c != n && !dt.count(c))
                    t.u = Perm::transposition(n, t.w_tilde(c), t.w_tilde(c + 1)) * t.u;
            t.w_pq = t.u * t.w_tilde;
            if (t.w_pq.descents() != t.cuts) {
                // the swap broke a neighbouring descent; pick the shortest u instead
                t.swap_rule = false;
                std::optional<std::pair<Perm, Perm>> best;
                for (auto& v : all_perms(n)) {
                    if (v.descents() != t.cuts) continue;
                    std::vector<int> map(n + 1);
                    int start = 1;
                    for (int c : t.cuts_with_end(n)) {
                        std::vector<int> a, b;
                        for (int q = start; q <= c; ++q) a.push_back(v(q)), b.push_back(t.w_tilde(q));
                        std::sort(a.begin(), a.end());
                        std::sort(b.begin(), b.end());
                        for (std::size_t k = 0; k < a.size(); ++k) map[a[k]] = b[k];
                        start = c + 1;
                    }
                    Perm u(std::vector<int>(map.begin() + 1, map.end()));
                    if (!best || u.length() < best->first.length()) best = std::make_pair(u, v);
                }
                t.u = best->first;
                t.w_pq = best->second;
            }
            out.push_back(std::move(t));
        }
    return out;
}

EquivariantClass build_sigma_w_i(const Perm& w, int i) {
    EquivariantClass s(w.n());
    for (auto& t : sigma_w_i_terms(w, i)) s += run_class(t.w_tilde, t.cuts);
    return s;
}

void PermSiAction::prune(Expansion& e) const {
    for (auto it = e.begin(); it != e.end();) {
        if (!equivariant_ && !it->second.is_constant()) it->second = MultiPoly::constant(it->second.constant_term());
        it = it->second.is_zero() ? e.erase(it) : std::next(it);
    }
}

Expansion PermSiAction::act(const Perm& w, int i) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(w, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) throw std::logic_error("s_i recursion cycles at " + w.str());
    if (active_.size() > static_cast<std::size_t>(factorial(n_)))
        throw std::logic_error("s_i recursion depth exceeded at " + w.str());
    Expansion r;
    try {
        r = compute(w, i);
    } catch (...) {
        active_.erase(key);
        throw;
    }
    active_.erase(key);
    memo_[key] = r;
    return r;
}

Expansion PermSiAction::act(const Expansion& e, int i) {
    Perm s = Perm::simple(n_, i);
    Expansion out;
    for (auto& [v, c] : e) {
        MultiPoly sc = equivariant_ ? c.substitute(s) : c;
        for (auto& [x, d] : act(v, i)) out[x] += sc * d;
    }
    prune(out);
    return out;
}

Expansion PermSiAction::act_word(const std::vector<int>& word, Expansion e) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = act(e, *it);
    return e;
}

Expansion PermSiAction::compute(const Perm& w, int i) {
    Perm wi = w.inverse();
    int p = wi(i), q = wi(i + 1);
    Expansion r;
    if (q + 1 == p) {
        // descent between i+1 and i
        Perm sw = w.left_simple(i);
        for (auto& t : sigma_w_i_terms(w, i)) {
            if (t.w_pq == w && t.u == Perm::identity(n_)) {
                r[w] += MultiPoly::constant(1);
                continue;
            }
            Expansion term{{t.w_pq, MultiPoly::constant(1)}};
            // sigma^(i) contribution minus s_i applied to it
            for (auto& [v, c] : act_perm(t.u, term)) r[v] += c;
            for (auto& [v, c] : act_perm(Perm::simple(n_, i) * t.u, term)) r[v] -= c;
        }
        r[sw] += MultiPoly::t_diff(i + 1, i);
    } else if (p + 1 == q) {
        r[w] = MultiPoly::constant(1);
    } else {
        r[w.left_simple(i)] = MultiPoly::constant(1);
    }
    prune(r);
    return r;
}

bool full_flag_si_rule_check(const Perm& w, int i, BasisProvider& basis) {
    EquivariantClass diff = dot(Perm::simple(w.n(), i), basis(w)) - basis(w);
    Perm sw = w.left_simple(i);
    if (sw.length() < w.length()) return diff == basis(sw) * MultiPoly::t_diff(i + 1, i);
    return diff.is_zero();
}

bool dashed_rule_check(const Perm& w, int i, BasisProvider& basis) {
    return dot(Perm::simple(w.n(), i), basis(w)) == basis(w.left_simple(i));
}

QMat generator_matrix(int i, int k, const Hess& h, PermSiAction* perm, BasisProvider* basis) {
    auto B = degree_basis(h, k);
    int d = static_cast<int>(B.size());
    std::map<Perm, int> index;
    for (int r = 0; r < d; ++r) index[B[r]] = r;
    QMat m(d, QVec(d, 0));
    if (h.is_full_flag()) return identity_matrix(d);
    for (int c = 0; c < d; ++c) {
        Expansion e;
        if (h.is_permutohedral()) {
            if (!perm) throw std::invalid_argument("permutohedral action needs a PermSiAction");
            e = perm->act(B[c], i);
        } else {
            if (!basis) throw std::invalid_argument("general h action needs a basis");
            e = expand_in_basis(dot(Perm::simple(h.n(), i), (*basis)(B[c])), *basis);
        }
        QVec col = reduce_to_ordinary(e, B);
        for (int r = 0; r < d; ++r) m[r][c] = col[r];
    }
    return m;
}

QMat action_matrix(const Perm& u, int k, const Hess& h, PermSiAction* perm, BasisProvider* basis) {
    auto B = degree_basis(h, k);
    QMat m = identity_matrix(static_cast<int>(B.size()));
    std::map<int, QMat> gens;
    for (int i : u.reduced_word()) {
        if (!gens.count(i)) gens[i] = generator_matrix(i, k, h, perm, basis);
        m = matmul(m, gens[i]);
    }
    return m;
}

}  // namespace gkm
