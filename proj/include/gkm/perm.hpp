#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace gkm {

constexpr int kMaxN = 16;

// one-line notation, values 1..n
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);                       // identity
    explicit Perm(const std::vector<int>& images);

    static Perm identity(int n) { return Perm(n); }
    static Perm longest(int n);
    static Perm simple(int n, int i);           // s_i = (i, i+1)
    static Perm transposition(int n, int a, int b);
    static Perm parse(const std::string& s, int n = 0);

    int n() const { return n_; }
    int operator()(int i) const { return a_[i - 1]; }
    int at(int i) const { return a_[i - 1]; }
    std::vector<int> images() const;

    Perm inverse() const;
    Perm operator*(const Perm& v) const;        // (u*v)(i) = u(v(i))
    Perm left_simple(int i) const;              // s_i * w, swaps values i, i+1
    Perm right_simple(int j) const;             // w * s_j, swaps positions j, j+1
    Perm swap_positions(int j, int i) const;    // w * s_{j,i}

    std::set<int> descents() const;
    int des() const { return static_cast<int>(descents().size()); }
    int length() const;
    std::vector<int> reduced_word() const;      // w = s_{r[0]} s_{r[1]} ...
    std::vector<int> prefix_sorted(int j) const; // u^{(j)}

    std::string str() const;

    bool operator==(const Perm& o) const;
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const;

    std::size_t hash() const;

private:
    int n_ = 0;
    std::array<std::uint8_t, kMaxN> a_{};
};

Perm compose(const Perm& u, const Perm& v);

// all of S_n in lexicographic order
const std::vector<Perm>& all_perms(int n);
int perm_rank(const Perm& w);
long factorial(int n);

// D_R(vw) = D_R(w) symmetric-difference ((w^-1 T_R(v) w) ∩ S)
bool right_descent_identity_check(const Perm& v, const Perm& w);

bool bruhat_leq(const Perm& u, const Perm& v);

struct Composition {
    std::vector<int> parts;

    int n() const;
    std::set<int> partial_sums() const;         // S(a)
    static Composition from_set(int n, const std::set<int>& s);
    static Composition of(const Perm& w) { return from_set(w.n(), w.descents()); }
    std::string str() const;
    bool operator==(const Composition& o) const { return parts == o.parts; }
    bool operator<(const Composition& o) const { return parts < o.parts; }
};

std::vector<Composition> compositions(int n);
std::vector<Composition> compositions(int n, int nparts);
std::vector<std::vector<int>> partitions(int n);  // weakly decreasing, reverse lex

std::vector<std::vector<int>> subsets(int n, int k); // increasing k-subsets of [n]

}  // namespace gkm

template <>
struct std::hash<gkm::Perm> {
    std::size_t operator()(const gkm::Perm& p) const { return p.hash(); }
};
