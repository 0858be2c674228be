#include <doctest.h>

#include "endowlab/cohen.hpp"
#include "endowlab/error.hpp"
#include "oracles.hpp"

using namespace endowlab;

TEST_CASE("condition counts and atoms") {
    const CohenPoset c1 = make_cohen(1), c2 = make_cohen(2), c3 = make_cohen(3);
    CHECK(c1.poset().size() == 3);
    CHECK(c1.poset().atoms().size() == 2);
    CHECK(c2.poset().size() == 9);
    CHECK(c2.poset().atoms().size() == 4);
    CHECK(c3.poset().size() == 27);
    for (Cond a : c2.poset().atoms()) CHECK(c2.support_size(a) == 2);
    CHECK(c2.poset().top() == c2.parse_cond(""));
}

TEST_CASE("order is reverse extension") {
    const CohenPoset c = make_cohen(2);
    const Poset& P = c.poset();
    CHECK(P.leq(c.parse_cond("0:0,1:1"), c.parse_cond("0:0")));
    CHECK(P.leq(c.parse_cond("0:0"), c.parse_cond("")));
    CHECK_FALSE(P.leq(c.parse_cond("0:0"), c.parse_cond("0:0,1:1")));
    CHECK_FALSE(P.leq(c.parse_cond("0:1,1:1"), c.parse_cond("0:0")));
}

TEST_CASE("compatibility examples") {
    const CohenPoset c = make_cohen(2);
    CHECK(c.poset().compatible(c.parse_cond("0:0"), c.parse_cond("1:1")));
    CHECK_FALSE(c.poset().compatible(c.parse_cond("0:0"), c.parse_cond("0:1")));
}

TEST_CASE("maximal antichain examples") {
    const CohenPoset c = make_cohen(2);
    const CondSet a{c.parse_cond("0:0"), c.parse_cond("0:1")};
    CHECK(c.poset().is_maximal_antichain(a));
    CHECK(oracle::is_maximal_antichain(c.poset(), a));
    CHECK_FALSE(c.poset().is_maximal_antichain(CondSet{c.parse_cond("0:0")}));
}

TEST_CASE("stratification by support size") {
    const CohenPoset c = make_cohen(2);
    const Stratification s = stratify_cohen(c);
    CHECK(s.level(0) == CondSet{c.parse_cond("")});
    CHECK(s.level(1).size() == 5);
    CHECK(s.stabilization_index() == 2);
    CHECK(stratify_cohen(make_cohen(3)).stabilization_index() == 3);
}

TEST_CASE("supports") {
    const CohenPoset c = make_cohen(3);
    CHECK(c.supp(c.parse_cond("")).empty());
    CHECK(c.supp(c.parse_cond("0:1,2:0")) == std::vector<unsigned>{0, 2});
    const Poset& P = c.poset();
    for (Cond p : P.all())
        for (Cond q : P.all()) {
            if (!P.compatible(p, q)) continue;
            // The merged map is the greatest common lower bound; its support is the union.
            std::vector<unsigned> u = c.supp(p), sq = c.supp(q);
            u.insert(u.end(), sq.begin(), sq.end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            Cond merged{};
            bool found = false;
            for (Cond r : P.all())
                if (P.leq(r, p) && P.leq(r, q) && c.support_size(r) == u.size()) {
                    merged = r;
                    found = true;
                }
            REQUIRE(found);
            CHECK(c.supp(merged) == u);
        }
}

TEST_CASE("property: compatible iff the maps agree on the common support") {
    for (std::size_t d = 1; d <= 3; ++d) {
        const CohenPoset c = make_cohen(d);
        const Poset& P = c.poset();
        for (Cond p : P.all())
            for (Cond q : P.all()) {
                CHECK(c.agree(p, q) == oracle::compatible(P, p, q));
                CHECK(P.compatible(p, q) == oracle::compatible(P, p, q));
            }
    }
}

TEST_CASE("canonical order: support size, then positions, then values") {
    const CohenPoset c = make_cohen(2);
    std::vector<std::string> labels;
    for (Cond p : c.poset().all()) labels.push_back(c.poset().label(p));
    CHECK(labels == std::vector<std::string>{"", "0:0", "0:1", "1:0", "1:1", "0:0,1:0", "0:0,1:1", "0:1,1:0",
                                             "0:1,1:1"});
}

TEST_CASE("literals round-trip over arbitrary index sets") {
    const CohenPoset c = make_cohen(std::vector<unsigned>{3, 7, 9});
    CHECK(c.poset().size() == 27);
    for (Cond p : c.poset().all()) CHECK(c.parse_cond(c.poset().label(p)) == p);
    CHECK(c.parse_cond("{}") == c.parse_cond(""));
    CHECK(c.supp(c.parse_cond("3:1,9:0")) == std::vector<unsigned>{3, 9});
    CHECK_THROWS_AS(c.parse_cond("4:1"), InputError);
    CHECK_THROWS_AS(c.parse_cond("3:2"), InputError);
    CHECK_THROWS_AS(c.parse_cond("3:1,3:0"), InputError);
    CHECK_THROWS_AS(c.parse_cond("3"), InputError);
}

TEST_CASE("bounds") {
    CHECK_THROWS_AS(make_cohen(6), ResourceError);
    CHECK_THROWS_AS(make_cohen(std::vector<unsigned>{}), InputError);
    Limits wide;
    wide.cohen_index = 6;
    CHECK(make_cohen(6, wide).poset().size() == 729);
}
