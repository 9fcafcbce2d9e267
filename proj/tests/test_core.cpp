#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "doctest.h"
#include "gkm/cell.hpp"
#include "gkm/hessenberg.hpp"
#include "gkm/reach.hpp"

using namespace gkm;

namespace {

Perm P(const char* s) { return Perm::parse(s); }

std::set<std::string> strs(const std::vector<Perm>& v) {
    std::set<std::string> out;
    for (auto& p : v) out.insert(p.str());
    return out;
}

int inversions(const Perm& w) {
    int c = 0;
    for (int j = 1; j <= w.n(); ++j)
        for (int i = j + 1; i <= w.n(); ++i) c += w(j) > w(i);
    return c;
}

}  // namespace

TEST_CASE("compose and descents") {
    CHECK(compose(P("213"), P("231")) == P("132"));
    CHECK(compose(P("4132"), Perm::identity(4)) == P("4132"));
    CHECK(compose(Perm::simple(3, 1), Perm::simple(3, 1)) == Perm::identity(3));
    CHECK(P("25347168").descents() == std::set<int>{2, 5});
    CHECK(Perm::identity(5).descents().empty());
    CHECK(Perm::longest(4).descents() == std::set<int>{1, 2, 3});
    CHECK(P("321").length() == 3);
    CHECK(P("24135").length() == 3);
    CHECK(Perm::parse("10,2,3,4,5,6,7,8,9,1").str() == "10,2,3,4,5,6,7,8,9,1");
}

TEST_CASE("coxeter length is the cayley distance") {
    for (int n = 1; n <= 6; ++n) {
        std::map<Perm, int> dist;
        std::deque<Perm> q{Perm::identity(n)};
        dist[Perm::identity(n)] = 0;
        while (!q.empty()) {
            Perm w = q.front();
            q.pop_front();
            for (int i = 1; i < n; ++i) {
                Perm v = w.right_simple(i);
                if (!dist.count(v)) {
                    dist[v] = dist[w] + 1;
                    q.push_back(v);
                }
            }
        }
        for (auto& w : all_perms(n)) {
            CHECK(w.length() == dist[w]);
            CHECK(w.length() == inversions(w));
        }
    }
}

TEST_CASE("reduced word and ranks") {
    for (auto& w : all_perms(5)) {
        Perm u = Perm::identity(5);
        auto r = w.reduced_word();
        CHECK(static_cast<int>(r.size()) == w.length());
        for (int i : r) u = u * Perm::simple(5, i);
        CHECK(u == w);
    }
    auto& s4 = all_perms(4);
    for (int k = 0; k < 24; ++k) CHECK(perm_rank(s4[k]) == k);
}

TEST_CASE("right descent identity") {
    for (auto& v : all_perms(4))
        for (auto& w : all_perms(4)) CHECK(right_descent_identity_check(v, w));
}

TEST_CASE("substitution and linear division") {
    auto t = [](int i) { return MultiPoly::t(i); };
    CHECK((t(1) - t(2)).substitute(Perm::simple(2, 1)) == t(2) - t(1));
    CHECK(t(3).substitute(Perm::identity(3)) == t(3));
    MultiPoly p = (t(2) - t(3)) * (t(1) - t(2));
    CHECK(p.substitute(P("231")) == (t(3) - t(1)) * (t(2) - t(3)));

    CHECK(*(t(1) * t(1) - t(2) * t(2)).divide_linear(t(1) - t(2)) == t(1) + t(2));
    CHECK(!t(1).divide_linear(t(1) - t(2)));
    CHECK(MultiPoly().divide_linear(t(1) - t(2))->is_zero());
    CHECK_THROWS(t(1).divide_linear(MultiPoly()));

    Rng rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly r;
        for (int a = 1; a <= 4; ++a)
            for (int b = a; b <= 4; ++b) r += t(a) * t(b) * Q(d(rng));
        for (auto& u : all_perms(4))
            for (auto& v : all_perms(4)) CHECK(r.substitute(u).substitute(v) == r.substitute(compose(v, u)));
        MultiPoly l = t(1) * Q(d(rng) | 1) + t(3) * Q(d(rng));
        auto qt = (r * l).divide_linear(l);
        REQUIRE(qt);
        CHECK(*qt * l == r * l);
    }
}

TEST_CASE("polynomial text round trip") {
    MultiPoly p = MultiPoly::parse("2*t1^2*t2-1/2*t3+t4-7");
    CHECK(MultiPoly::parse(p.str()) == p);
    CHECK((MultiPoly::t(3) - MultiPoly::t(1)).str() == "-t1+t3");
    CHECK(MultiPoly().str() == "0");
}

TEST_CASE("gkm graph") {
    Hess h({2, 3, 3});
    auto es = gkm_edges(P("132"), h);
    std::map<std::string, std::string> got;
    for (auto& e : es) got[e.dst.str()] = e.label_str();
    CHECK(got == std::map<std::string, std::string>{{"312", "t3-t1"}, {"123", "t2-t3"}});

    GkmGraph full(Hess::full_flag(3));
    for (auto& w : all_perms(3)) CHECK(full.edges(w).size() == 3);
    GkmGraph none(Hess({1, 2, 3, 4}));
    for (auto& w : all_perms(4)) CHECK(none.edges(w).empty());

    for (int n = 2; n <= 6; ++n) {
        GkmGraph g(Hess::permutohedral(n));
        for (auto& w : all_perms(n)) {
            CHECK(static_cast<int>(g.edges(w).size()) == n - 1);
            CHECK(g.out_degree(w) == w.des());
        }
    }
    for (int n = 2; n <= 5; ++n)
        for (auto& h2 : all_hessenberg(n)) {
            GkmGraph g(h2);
            for (auto& w : all_perms(n)) {
                CHECK(l_h(w, h2) == g.out_degree(w));
                for (auto& e : g.edges(w)) {
                    bool found = false;
                    for (auto& back : g.edges(e.dst))
                        if (back.dst == w) {
                            found = true;
                            CHECK(back.label == -e.label);
                        }
                    CHECK(found);
                    CHECK(e.dst.length() != w.length());
                }
            }
        }
}

TEST_CASE("l_h and poincare") {
    Hess h({2, 3, 3});
    CHECK(l_h(P("231"), h) == 1);
    CHECK(l_h(P("321"), h) == 2);
    CHECK(l_h(Perm::identity(3), h) == 0);
    CHECK(poincare_polynomial(h) == std::vector<long>{1, 4, 1});
    CHECK(poincare_polynomial(Hess::full_flag(3)) == std::vector<long>{1, 2, 2, 1});
    CHECK(poincare_polynomial(Hess({2, 3, 4, 4})) == std::vector<long>{1, 11, 11, 1});
    for (int n = 1; n <= 5; ++n)
        for (auto& h2 : all_hessenberg(n)) {
            long s = 0;
            for (long c : poincare_polynomial(h2)) s += c;
            CHECK(s == factorial(n));
        }
}

TEST_CASE("edge kinds") {
    Hess h({2, 4, 4, 4});
    CHECK(edge_kind(P("4123"), 3, h) == EdgeKind::Dashed);
    CHECK(edge_kind(P("1342"), 2, h) == EdgeKind::SolidUp);
    for (auto& w : all_perms(4))
        for (int i = 1; i < 4; ++i) CHECK(edge_kind(w, i, Hess::full_flag(4)) != EdgeKind::Dashed);

    for (int n = 2; n <= 5; ++n)
        for (auto& h2 : all_hessenberg(n))
            for (auto& w : all_perms(n))
                for (int i = 1; i < n; ++i) {
                    Perm v = w.left_simple(i);
                    auto ew = CellDigraph(w, h2).edges();
                    auto ev = CellDigraph(v, h2).edges();
                    switch (edge_kind(w, i, h2)) {
                    case EdgeKind::Dashed:
                        CHECK(ew == ev);
                        CHECK(l_h(w, h2) == l_h(v, h2));
                        break;
                    case EdgeKind::SolidUp:
                        CHECK(l_h(w, h2) == l_h(v, h2) + 1);
                        CHECK(ev.size() == ew.size() + 1);
                        CHECK(std::includes(ev.begin(), ev.end(), ew.begin(), ew.end()));
                        break;
                    case EdgeKind::SolidDown:
                        CHECK(l_h(v, h2) == l_h(w, h2) + 1);
                        CHECK(ew.size() == ev.size() + 1);
                        break;
                    }
                }
}

TEST_CASE("cell digraph and reachability") {
    Hess h({3, 3, 4, 5, 5});
    using E = std::set<std::pair<int, int>>;
    CHECK(CellDigraph(P("24135"), h).edges() == E{{1, 2}, {3, 4}, {4, 5}});
    CellDigraph g(P("15342"), h);
    CHECK(g.edges() == E{{1, 2}, {1, 3}, {3, 4}});
    CHECK(CellDigraph(Perm::longest(5), h).edges().empty());
    CHECK(vertex_reachable(g, 1, 4));
    CHECK(!vertex_reachable(g, 3, 5));
    CHECK(vertex_reachable(g, 5, 5));
    CHECK(set_reachable(g, {1, 3}, {3, 4}));
    CHECK(set_reachable(g, {2, 5}, {2, 5}));
    CHECK(!set_reachable(CellDigraph(P("24135"), h), {1}, {3}));
    CHECK_THROWS(set_reachable(g, {1}, {2, 3}));
    CHECK_THROWS(set_reachable(g, {3, 1}, {3, 4}));

    for (int n = 2; n <= 5; ++n)
        for (auto& h2 : all_hessenberg(n))
            for (auto& w : all_perms(n))
                CHECK(static_cast<int>(CellDigraph(w, h2).edges().size()) == h2.edge_count() - l_h(w, h2));
}

TEST_CASE("j families") {
    Hess h({3, 3, 4, 5, 5});
    using F = std::vector<std::vector<int>>;
    CHECK(j_family(P("24135"), h, 2) == F{{1, 2}});
    CHECK(j_family(P("15342"), h, 2) == F{{1, 2}, {2, 3}, {2, 4}});
    for (int j = 1; j <= 5; ++j) CHECK(j_family(Perm::identity(5), h, j) == subsets(5, j));
}

TEST_CASE("support sets") {
    Hess h({3, 3, 4, 5, 5});
    CHECK(strs(support_A(P("24135"), h)) ==
          std::set<std::string>{"24135", "24153", "24351", "24315", "24531", "24513", "42135", "42153", "42351",
                                "42315", "42531", "42513"});
    CHECK(strs(support_A(P("15342"), h)) ==
          std::set<std::string>{"15342", "15432", "35142", "35412", "45132", "45312", "51342", "51432", "53142",
                                "53412", "54132", "54312"});
    CHECK(support_A(Perm::identity(5), h).size() == 120);

    for (int n = 2; n <= 5; ++n)
        for (auto& w : all_perms(n)) {
            std::vector<Perm> up;
            for (auto& u : all_perms(n))
                if (bruhat_leq(w, u)) up.push_back(u);
            CHECK(strs(support_A(w, Hess::full_flag(n))) == strs(up));
        }

    // permutohedral: permute values within each ascending run
    for (int n = 2; n <= 6; ++n)
        for (auto& w : all_perms(n)) {
            auto sup = support_A(w, Hess::permutohedral(n));
            auto d = w.descents();
            std::set<std::string> expect;
            for (auto& u : all_perms(n)) {
                bool ok = true;
                int start = 1;
                for (int k = 1; k <= n && ok; ++k)
                    if (k == n || d.count(k)) {
                        std::multiset<int> a, b;
                        for (int p = start; p <= k; ++p) a.insert(w(p)), b.insert(u(p));
                        ok = a == b;
                        start = k + 1;
                    }
                if (ok) expect.insert(u.str());
            }
            CHECK(strs(sup) == expect);
            for (auto& u : sup)
                if (u != w) CHECK(u.length() > w.length());
        }
}

TEST_CASE("bruhat order oracle") {
    // against the subword property
    for (auto& v : all_perms(4)) {
        auto word = v.reduced_word();
        std::set<Perm> below;
        int L = static_cast<int>(word.size());
        for (int mask = 0; mask < (1 << L); ++mask) {
            Perm u = Perm::identity(4);
            for (int k = 0; k < L; ++k)
                if (mask >> k & 1) u = u * Perm::simple(4, word[k]);
            below.insert(u);
        }
        for (auto& u : all_perms(4)) CHECK(bruhat_leq(u, v) == (below.count(u) > 0));
    }
}
