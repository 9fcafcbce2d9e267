#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "gkm/hessenberg.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

// values on all of S_n, indexed by perm_rank
class EquivariantClass {
public:
    EquivariantClass() = default;
    explicit EquivariantClass(int n) : n_(n), v_(factorial(n)) {}

    int n() const { return n_; }
    const MultiPoly& operator()(const Perm& v) const { return v_[perm_rank(v)]; }
    const MultiPoly& at(std::size_t rank) const { return v_[rank]; }
    void set(const Perm& v, MultiPoly p) { v_[perm_rank(v)] = std::move(p); }
    std::vector<Perm> support() const;
    bool is_zero() const;

    EquivariantClass operator+(const EquivariantClass& o) const;
    EquivariantClass operator-(const EquivariantClass& o) const;
    EquivariantClass operator*(const MultiPoly& f) const;
    EquivariantClass& operator+=(const EquivariantClass& o);
    bool operator==(const EquivariantClass& o) const { return n_ == o.n_ && v_ == o.v_; }

private:
    int n_ = 0;
    std::vector<MultiPoly> v_;
};

struct GkmViolation {
    Perm v, u;
    MultiPoly label;
};
// nullopt when every edge difference is divisible by its label
std::optional<GkmViolation> gkm_check(const EquivariantClass& p, const Hess& h);

EquivariantClass permutohedral_class(const Perm& w);
// product formula over the position blocks of v cut at `cuts` (need not be D(v))
EquivariantClass run_class(const Perm& v, const std::set<int>& cuts);
MultiPoly top_value(const Perm& w, const Hess& h);

struct Interpolation {
    EquivariantClass cls;
    bool unique = false;
    int nullity = 0;
    int unknowns = 0;
};
Interpolation interpolate_class(const Perm& w, const Hess& h);
// GKM, supported in A_{w,h}, top value at w, homogeneous of degree l_h(w)
bool is_flow_up(const EquivariantClass& p, const Perm& w, const Hess& h);

// coefficients over the basis {sigma_v}
using Expansion = std::map<Perm, MultiPoly>;

// flow-up basis for h: explicit for permutohedral, interpolated otherwise; cached, thread safe
class BasisProvider {
public:
    explicit BasisProvider(const Hess& h) : h_(h) {}
    const Hess& hess() const { return h_; }
    const EquivariantClass& operator()(const Perm& v);
    bool unique(const Perm& v);

private:
    struct Entry {
        EquivariantClass cls;
        bool unique;
    };
    const Entry& get(const Perm& v);
    Hess h_;
    std::mutex mu_;
    std::map<Perm, Entry> cache_;
};

// triangular elimination along (length, lex); throws std::domain_error on a division failure
Expansion expand_in_basis(const EquivariantClass& p, BasisProvider& basis);
EquivariantClass resum(const Expansion& e, BasisProvider& basis);

// {v : l_h(v) = k} in lex order
std::vector<Perm> degree_basis(const Hess& h, int k);
// constant coefficients at degree-k basis elements
QVec reduce_to_ordinary(const Expansion& e, const std::vector<Perm>& degree_k);

}  // namespace gkm
