#include "doctest.h"

#include "gkm/decomposition.hpp"

using namespace gkm;

namespace {

Perm P(const char* s) { return Perm::parse(s); }
Composition C(std::vector<int> p) { return Composition{std::move(p)}; }

// coefficient vector from (perm, value) pairs
QVec vec(int n, int k, const std::vector<std::pair<const char*, int>>& terms) {
    auto B = degree_basis(Hess::permutohedral(n), k);
    QVec x(B.size(), 0);
    for (auto& [s, c] : terms) x[std::find(B.begin(), B.end(), P(s)) - B.begin()] = c;
    return x;
}

}  // namespace

TEST_CASE("erasure") {
    CHECK(erase({1, 2}).empty());
    CHECK(erase({2, 4}) == std::set<int>{2, 4});
    CHECK(erase({}).empty());
    CHECK(erase({2, 3, 5}) == std::set<int>{2, 5});
    CHECK(erased_composition(P("54123")) == C({5}));
    CHECK(erased_composition(P("45231")) == C({2, 2, 1}));
}

TEST_CASE("g_set") {
    std::vector<Perm> expect{P("54123"), P("53412"), P("52341"), P("45312"), P("45231"), P("34521")};
    CHECK(g_set(5, 2) == expect);
    CHECK(g_set(5, 0) == std::vector<Perm>{Perm::identity(5)});
    CHECK(g_set(5, 4) == std::vector<Perm>{Perm::longest(5)});
    // {w : des(w) = k, w_0 in A_w}
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            std::vector<Perm> brute;
            for (auto& w : all_perms(n))
                if (w.des() == k && permutohedral_class(w)(Perm::longest(n)) != MultiPoly()) brute.push_back(w);
            auto g = g_set(n, k);
            std::sort(g.begin(), g.end());
            CHECK(g == brute);
        }
}

TEST_CASE("generator data") {
    auto g = generator_data(P("4312"));
    CHECK(g.a_hat == C({4}));
    CHECK(g.order_Sw == 24);
    CHECK(g.coset_reps.size() == 12);  // 4! / (1! 1! 2!)
    auto g2 = generator_data(P("45312"));
    CHECK(g2.a_hat == C({2, 3}));
    CHECK(g2.coset_reps.size() == 3);
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k < n; ++k)
            for (auto& w : g_set(n, k)) {
                auto d = generator_data(w);
                long young = 1;
                for (auto& b : d.run_blocks) young *= factorial(static_cast<int>(b.size()));
                CHECK(static_cast<long>(d.coset_reps.size()) == d.order_Sw / young);
            }
}

TEST_CASE("sigma hat: equivariant properties") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k < n; ++k)
            for (auto& w : g_set(n, k)) {
                auto s = sigma_hat(w);
                CHECK(!gkm_check(s, Hess::permutohedral(n)));
                CHECK(sigma_hat_sum_check(w));
                // sum of dots agrees with the block-class shortcut
                auto d = generator_data(w);
                EquivariantClass viaDot(n);
                for (auto& v : d.coset_reps) viaDot += dot(v, permutohedral_class(w));
                CHECK(viaDot == s);
                // S_w fixes, simple reflections outside move it
                for (int i = 1; i < n; ++i) {
                    bool fixed = dot(Perm::simple(n, i), s) == s;
                    CHECK(fixed == in_Sw(d, Perm::simple(n, i)));
                }
            }
    CHECK(sigma_hat(P("12345")) == permutohedral_class(P("12345")));
}

TEST_CASE("sigma hat: ordinary expansions") {
    PermSiAction act(4, false);
    CHECK(sigma_hat_ordinary(P("4312"), act) ==
          vec(4, 2, {{"4312", 2}, {"4213", 4}, {"3214", 6}, {"4231", 2}, {"4132", -2}, {"3241", 4},
                     {"3142", -2}, {"2143", -2}, {"3421", 2}, {"2431", -2}}));
    CHECK(sigma_hat_ordinary(P("3421"), act) == vec(4, 2, {{"3421", 2}}));
    CHECK(sigma_hat_ordinary(P("4231"), act) == vec(4, 2, {{"4231", 1}, {"3241", 2}, {"3421", 1}, {"2431", -1}}));
    // e(D) = D gives sigma_w itself
    PermSiAction act5(5, false);
    CHECK(sigma_hat_ordinary(P("45231"), act5) == vec(5, 2, {{"45231", 1}}));

    // independent route: equivariant expansion then constant terms
    BasisProvider basis(Hess::permutohedral(4));
    for (int k = 0; k < 4; ++k)
        for (auto& w : g_set(4, k)) {
            auto e = expand_in_basis(sigma_hat(w), basis);
            CHECK(reduce_to_ordinary(e, degree_basis(Hess::permutohedral(4), k)) == sigma_hat_ordinary(w, act));
        }
}

TEST_CASE("admissible decomposition and graphs") {
    auto blocks = admissible_decomposition(C({2, 1, 1, 3, 4, 1, 1, 1, 5, 1, 2}));
    CHECK(blocks == std::vector<Composition>{C({2}), C({1, 1, 3, 4}), C({1, 1, 1, 5}), C({1, 2})});
    auto big = C({2, 1, 1, 3, 4, 1, 1, 1, 5, 1, 2});
    CHECK(Composition::from_set(big.n(), erase(big.partial_sums())) == C({2, 5, 4, 8, 3}));

    auto g = composition_graph(C({1, 1, 4}));
    CHECK(g.vertices.size() == 10);
    auto label = [&](std::vector<int> a, std::vector<int> b) {
        for (auto& e : g.edges)
            if (e.from == g.index(a) && e.to == g.index(b)) return e.label;
        return -1;
    };
    CHECK(label({0, 0}, {1, 0}) == 4);
    CHECK(label({1, 0}, {2, 0}) == 3);
    CHECK(label({2, 0}, {3, 0}) == 2);
    CHECK(label({1, 0}, {1, 1}) == 5);
    CHECK(label({3, 1}, {3, 2}) == 4);
    CHECK(label({3, 2}, {3, 3}) == 3);
    CHECK(g.edges.size() == 12);

    CHECK(composition_graph(C({2, 1, 1})).vertices.size() == 1);
    CHECK(composition_graph(C({4})).vertices.size() == 1);

    CHECK(w_z(g, {0, 0}) == P("651234"));
    CHECK(w_z(g, {1, 0}) == P("641235"));
    CHECK(w_z(g, {3, 3}) == P("321456"));
    CHECK_THROWS_AS(w_z(g, {0, 1}), std::invalid_argument);

    auto g121 = composition_graph(C({1, 2, 1}));
    std::set<Perm> got;
    for (auto& z : g121.vertices) got.insert(w_z(g121, z));
    CHECK(got == std::set<Perm>{P("4231"), P("3241")});
    CHECK(verify_wz_completeness(C({1, 2, 1})));
    CHECK(verify_wz(C({4})).graph_equals_class);
}

TEST_CASE("w_z completeness and adjacency") {
    for (int n = 1; n <= 6; ++n)
        for (auto& a : compositions(n)) {
            auto r = verify_wz(a);
            CHECK(r.graph_equals_cosets);
            CHECK(r.graph_equals_support);
            CHECK(r.adjacency);
            CHECK(r.vertices == r.support_class_size);
            CHECK(verify_wz_completeness(a));
            // the unrestricted class is reached only in the reduced shape (1,...,1,n-m)
            bool reduced = std::all_of(a.parts.begin(), a.parts.end() - 1, [](int p) { return p == 1; });
            CHECK(r.graph_equals_class == reduced);
        }
}

TEST_CASE("Young subgroup types") {
    for (int n = 1; n <= 7; ++n) {
        auto r = young_type_check(n);
        CHECK(r.composition_level);
        CHECK(r.partition_level);
    }
}

TEST_CASE("decomposition n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        PermSiAction act(n, false);
        for (int k = 0; k < n; ++k) {
            auto rep = verify_decomposition(n, k, &act);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(rep.dims_ok);
            CHECK(rep.stabilizers_ok);
            CHECK(rep.total_ok);
            CHECK(rep.direct_sum);
            CHECK(rep.leading_ok);
            CHECK(rep.ok());
        }
    }
    PermSiAction act(5, false);
    auto rep = verify_decomposition(5, 2, &act);
    std::vector<int> dims;
    for (auto& m : rep.modules) dims.push_back(m.dim);
    CHECK(dims == std::vector<int>{1, 10, 5, 10, 30, 10});
    CHECK(rep.total_rank == 66);

    PermSiAction act4(4, false);
    auto rep4 = verify_decomposition(4, 2, &act4);
    std::vector<Composition> types;
    for (auto& m : rep4.modules) types.push_back(m.gen.a_hat);
    CHECK(types == std::vector<Composition>{C({4}), C({3, 1}), C({2, 2})});
    CHECK(rep4.total_rank == 11);
}
