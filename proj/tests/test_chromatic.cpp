#include "doctest.h"

#include "gkm/chromatic.hpp"
#include "gkm/decomposition.hpp"
#include "gkm/util.hpp"

using namespace gkm;

namespace {

SymFunc random_symfunc(int n, Basis b, Rng& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    SymFunc f(n, b);
    for (auto& lam : partitions(n)) {
        Q v(d(rng), 1 + std::abs(d(rng)));
        v.canonicalize();
        f.add(lam, v);
    }
    return f;
}

// inversion generating function of S_n
std::vector<long> inversions(int n) {
    std::vector<long> c(n * (n - 1) / 2 + 1, 0);
    for (auto& w : all_perms(n)) ++c[w.length()];
    return c;
}

}  // namespace

TEST_CASE("basis conversions") {
    Rng rng = make_rng(7, "symfunc");
    std::vector<Basis> all{Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};
    for (int n = 1; n <= 6; ++n)
        for (Basis b : all)
            for (int rep = 0; rep < 3; ++rep) {
                auto f = random_symfunc(n, b, rng);
                for (Basis t : all) CHECK(convert(convert(f, t), b).c == f.c);
                CHECK(omega(omega(f)).c == f.c);
            }
    // omega(e_lambda) = h_lambda
    for (int n = 1; n <= 5; ++n)
        for (auto& lam : partitions(n))
            CHECK(convert(omega(SymFunc::single(n, Basis::e, lam)), Basis::h).c == SymFunc::single(n, Basis::h, lam).c);
    // p_{1^n} = h_1^n and e_1 = h_1 = p_1 = s_1 = m_1
    for (int n = 1; n <= 6; ++n) {
        Partition ones(n, 1);
        CHECK(SymFunc::single(n, Basis::p, ones) == SymFunc::single(n, Basis::h, ones));
        CHECK(SymFunc::single(n, Basis::e, ones) == SymFunc::single(n, Basis::s, ones) * 0 +
                                                        SymFunc::single(n, Basis::h, ones));
    }
    // small identities
    CHECK(convert(SymFunc::single(2, Basis::s, {2}), Basis::h).str() == "h2");
    CHECK(convert(SymFunc::single(2, Basis::s, {1, 1}), Basis::e).str() == "e2");
    CHECK(convert(SymFunc::single(2, Basis::p, {2}), Basis::m).str() == "m2");
    CHECK(convert(SymFunc::single(3, Basis::e, {3}), Basis::p).str() == "1/3p3-1/2p21+1/6p111");
    // Kostka: s_{21} = m_{21} + 2 m_{111}
    CHECK(convert(SymFunc::single(3, Basis::s, {2, 1}), Basis::m).str() == "m21+2m111");
}

TEST_CASE("cycle types") {
    CHECK(cycle_type_rep({3, 2}) == Perm::parse("23154"));
    CHECK(z_mu({2, 2, 1}) == 8);
    long total = 0;
    for (int n = 1; n <= 6; ++n) {
        total = 0;
        for (auto& mu : partitions(n)) total += factorial(n) / z_mu(mu);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("chromatic quasisymmetric functions") {
    for (int n = 1; n <= 5; ++n) {
        // edgeless: e_1^n at t^0 only
        std::vector<int> hv(n);
        for (int i = 0; i < n; ++i) hv[i] = i + 1;
        auto X = chromatic_qsym(Hess(hv));
        CHECK(X.X.size() == 1);
        CHECK(X.X[0] == SymFunc::single(n, Basis::e, Partition(n, 1)));
        // complete graph: e_n times the inversion polynomial
        auto K = chromatic_qsym(Hess::full_flag(n));
        auto inv = inversions(n);
        REQUIRE(K.X.size() == inv.size());
        for (std::size_t k = 0; k < inv.size(); ++k) {
            CHECK(K.X[k][Partition(n, 1)] == inv[k]);
            CHECK(K.X[k] == SymFunc::single(n, Basis::e, {n}, inv[k]));
        }
    }
    // symmetry of every coefficient, all h on [5]
    for (auto& h : all_hessenberg(5)) CHECK(chromatic_qsym(h).symmetric);
}

TEST_CASE("Frobenius characteristics") {
    for (int n = 2; n <= 5; ++n) {
        auto hp = Hess::permutohedral(n);
        PermSiAction act(n, false);
        CHECK(frobenius_of_degree(hp, 0, &act).str() == "h" + std::to_string(n));
        for (int k = 0; k < n; ++k) {
            auto ch = frobenius_of_degree(hp, k, &act);
            // dimension = character at the identity
            Q dim = 0;
            for (auto& [lam, v] : ch.c) {
                Q d = factorial(n);
                for (int p : lam) d /= factorial(p);
                dim += v * d;
                CHECK(v >= 0);  // h-positive
            }
            CHECK(dim == eulerian(n, k));
        }
    }
    PermSiAction act5(5, false);
    CHECK(frobenius_of_degree(Hess::permutohedral(5), 2, &act5) ==
          SymFunc::single(5, Basis::h, {5}) + SymFunc::single(5, Basis::h, {3, 2}, 3) +
              SymFunc::single(5, Basis::h, {4, 1}) + SymFunc::single(5, Basis::h, {2, 2, 1}));
    PermSiAction act4(4, false);
    CHECK(frobenius_of_degree(Hess::permutohedral(4), 1, &act4).str() == "h4+h31+h22");
}

TEST_CASE("Shareshian-Wachs") {
    for (int n = 1; n <= 4; ++n) {
        auto r = verify_shareshian_wachs(Hess::permutohedral(n));
        CHECK(r.ok);
        CHECK(verify_shareshian_wachs(Hess::full_flag(n)).ok);
    }
    auto r4 = verify_shareshian_wachs(Hess::permutohedral(4));
    CHECK(r4.frobenius[1].str() == "h4+h31+h22");
    auto r3 = verify_shareshian_wachs(Hess::full_flag(3));
    CHECK(r3.omega_x[1].str() == "2h3");
    // general h, n = 4
    for (auto& h : all_hessenberg(4)) {
        CAPTURE(h.str());
        CHECK(verify_shareshian_wachs(h).ok);
    }
}

TEST_CASE("closed expansion") {
    auto r3 = verify_closed_expansion(3);
    CHECK(r3.ok());
    CHECK(r3.from_generators[1].str() == "h3+h21");
    CHECK(r3.total_dim == 6);
    for (int n = 1; n <= 5; ++n) {
        auto r = verify_closed_expansion(n);
        CHECK(r.ok());
        CHECK(r.total_dim == factorial(n));
    }
}
