#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/perm.hpp"

namespace gkm {

using Q = mpq_class;

constexpr int kMaxVars = 32;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint8_t deg = 0;

    static Mono var(int k, int power = 1);
    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;
    Mono operator/(const Mono& o) const;
    bool operator==(const Mono& o) const { return e == o.e; }
};

// graded lex, largest first: higher degree, then larger exponent of the earlier variable
struct GrLex {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.e > b.e;
    }
};

using VarNamer = std::function<std::string(int)>;
std::string t_name(int k);  // k is 0-based: t1, t2, ...

class MultiPoly {
public:
    using Terms = std::map<Mono, Q, GrLex>;

    MultiPoly() = default;
    static MultiPoly constant(const Q& c);
    static MultiPoly var(int k);                 // 0-based variable index
    static MultiPoly t(int i) { return var(i - 1); }
    static MultiPoly t_diff(int a, int b);       // t_a - t_b

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    Q coefficient(const Mono& m) const;
    int degree() const;                          // -1 for zero
    bool is_homogeneous() const;
    int max_var() const;                         // largest 0-based index used, -1 if none

    void add_term(const Mono& m, const Q& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Q& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // t_i -> t_{u(i)} for i = 1..u.n()
    MultiPoly substitute(const Perm& u) const;
    // t_a -> t_b; the remainder of division by t_a - t_b
    MultiPoly identify(int a, int b) const;
    std::optional<MultiPoly> divide_exact(const MultiPoly& q) const;
    std::optional<MultiPoly> divide_linear(const MultiPoly& l) const;
    Q evaluate(const std::vector<Q>& point) const;
    // replace variable k by a polynomial
    MultiPoly compose_var(int k, const MultiPoly& value) const;

    std::string str(const VarNamer& name = t_name) const;
    static MultiPoly parse(const std::string& s);

private:
    Terms terms_;
};

inline MultiPoly operator*(const Q& c, const MultiPoly& p) { return p * c; }

std::string q_str(const Q& q);

}  // namespace gkm
