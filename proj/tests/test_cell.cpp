#include <functional>

#include "doctest.h"
#include "gkm/cell.hpp"

using namespace gkm;

namespace {

Perm P(const char* s) { return Perm::parse(s); }

Mono path_mono(const CellChart& ch, const std::vector<int>& path) {
    Mono m;
    for (std::size_t l = 0; l + 1 < path.size(); ++l) m = m * Mono::var(ch.var_index(path[l], path[l + 1]));
    return m;
}

}  // namespace

TEST_CASE("chart examples") {
    Hess h({3, 3, 4, 5, 5});
    auto c = Eigenvalues::primes(5);
    CellChart ch(P("24135"), h, c);
    int v54 = ch.var_index(5, 4), v43 = ch.var_index(4, 3);
    MultiPoly expect = MultiPoly::var(v54) * MultiPoly::var(v43) * ((c(3) - c(1)) / (c(5) - c(1)));
    CHECK(ch.entry(5, 3) == expect);
    CHECK(ch.entry(2, 1) == MultiPoly::var(ch.var_index(2, 1)));

    CellChart id(Perm::identity(5), h, c);
    MultiPoly e52 = MultiPoly::var(id.var_index(5, 4)) * MultiPoly::var(id.var_index(4, 3)) *
                    MultiPoly::var(id.var_index(3, 2)) *
                    ((c(3) - c(2)) * (c(4) - c(3)) / ((c(5) - c(2)) * (c(5) - c(3))));
    CHECK(id.entry(5, 2) == e52);
    CHECK(minimal_path_coefficient({4, 3, 1}, Perm::identity(5), h, c) == (c(3) - c(1)) / (c(4) - c(1)));
    CHECK(minimal_path_coefficient({5, 4, 3, 1}, Perm::identity(5), h, c) ==
          (c(4) - c(3)) * (c(3) - c(1)) / ((c(5) - c(1)) * (c(5) - c(3))));
    CHECK_THROWS(minimal_path_coefficient({5, 3, 1}, Perm::identity(5), h, c));
    CHECK_THROWS(CellChart(P("24135"), h, Eigenvalues::parse("1,2,2,3,4")));
}

TEST_CASE("chart consistency and minimal paths") {
    for (int n = 2; n <= 5; ++n) {
        auto c = Eigenvalues::primes(n);
        for (auto& h : all_hessenberg(n))
            for (auto& w : all_perms(n)) {
                CellChart ch(w, h, c);
                for (int b = 1; b <= n; ++b)
                    for (int a = h(b) + 1; a <= n; ++a) CHECK(defining_equation(ch, a, b).is_zero());
                for (int j = 1; j <= n; ++j)
                    for (int i = j + 1; i <= n; ++i) {
                        CHECK(ch.entry(i, j).is_zero() == !ch.graph().reachable(j, i));
                        for (auto& path : long_paths(ch.graph(), i, j))
                            if (is_minimal_path(ch.graph(), path))
                                CHECK(ch.entry(i, j).coefficient(path_mono(ch, path)) ==
                                      minimal_path_coefficient(path, w, h, c));
                    }
            }
    }
}

TEST_CASE("minors") {
    Hess h({3, 3, 4, 5, 5});
    auto c = Eigenvalues::primes(5);
    CellChart a(P("24135"), h, c);
    CHECK(minor(a, {3, 4}, {1, 2}).is_zero());
    CHECK(minor(a, {2, 4}, {2, 4}).constant_term() == 1);
    CellChart b(P("15342"), h, c);
    CHECK(!minor(b, {3, 4}, {1, 3}).is_zero());
    CHECK_THROWS(minor(b, {3}, {1, 3}));
    Rng rng(1);
    auto cert = minor_reachability_certificate(P("24135"), h, c, {3, 4}, {1, 2}, rng, true);
    CHECK(cert.agree);
    CHECK(!cert.reachable);
    auto all = minor_reachability_certificate(P("24135"), h, c, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, rng, false);
    CHECK(all.agree);
}

TEST_CASE("pluecker patterns") {
    Hess h({3, 3, 4, 5, 5});
    auto c = Eigenvalues::primes(5);
    Rng rng(3);
    Perm w = P("24135");
    CellChart ch(w, h, c);
    auto L = plucker_pattern(ch.evaluate(random_point(ch, rng)), w);
    for (int j = 1; j <= 5; ++j) {
        std::set<std::vector<int>> expect;
        for (auto& ib : j_family(w, h, j)) {
            std::vector<int> img;
            for (int i : ib) img.push_back(w(i));
            std::sort(img.begin(), img.end());
            expect.insert(img);
        }
        CHECK(L[j] == expect);
    }
    auto id = plucker_pattern(identity_matrix(4), Perm::identity(4));
    for (int j = 1; j <= 4; ++j) CHECK(id[j] == std::set<std::vector<int>>{Perm::identity(4).prefix_sorted(j)});
    auto lw = plucker_pattern(identity_matrix(4), P("3142"));
    for (int j = 1; j <= 4; ++j) CHECK(lw[j] == std::set<std::vector<int>>{P("3142").prefix_sorted(j)});

    CHECK(fixed_point_oracle(w, h, c, rng).support == support_A(w, h));
    CHECK(fixed_point_oracle(Perm::longest(5), h, c, rng).support == std::vector<Perm>{Perm::longest(5)});
}
