#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "gsc/fincat.hpp"

using namespace gsc;

TEST_CASE("poset construction and validation") {
    auto p = FinPoset::chain(2);
    CHECK(p.size() == 3);
    CHECK(p.less_eq(0, 2));
    CHECK(!p.less_eq(2, 0));
    CHECK(p.terminal().has_value());
    CHECK(*p.terminal() == 2);
    CHECK(*p.initial() == 0);

    CHECK_THROWS_AS(FinPoset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
    CHECK_THROWS_AS(FinPoset::from_relation({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
}

TEST_CASE("square poset has no terminal object") {
    auto p = FinPoset::from_covers({"1", "2", "3", "4"}, {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
    CHECK(!p.terminal().has_value());
    CHECK(!p.initial().has_value());
    CHECK(p.covers().size() == 4);
}

TEST_CASE("poset_to_category: stated examples") {
    auto c1 = poset_to_category(FinPoset::chain(1));
    CHECK(c1.objects.size() == 2);
    CHECK(c1.morphisms.size() == 3);

    auto ca = poset_to_category(FinPoset::antichain(2));
    CHECK(ca.objects.size() == 2);
    CHECK(ca.morphisms.size() == 2);

    auto c2 = poset_to_category(FinPoset::chain(2));
    CHECK(c2.objects.size() == 3);
    CHECK(c2.morphisms.size() == 6);
    c2.validate();
    CHECK(c2.is_loop_free());
    CHECK(c2.longest_chain() == 2);
}

TEST_CASE("nerve: stated examples") {
    auto c1 = poset_to_category(FinPoset::chain(1));
    auto n1 = nerve(c1, 3);
    CHECK(n1.count(0) == 2);
    CHECK(n1.count(1) == 1);
    CHECK(n1.count(2) == 0);
    CHECK(n1.count(3) == 0);

    auto c2 = poset_to_category(FinPoset::chain(2));
    auto n2 = nerve(c2, 3);
    CHECK(n2.count(0) == 3);
    CHECK(n2.count(1) == 3);
    CHECK(n2.count(2) == 1);
    CHECK(n2.count(3) == 0);

    auto cpt = poset_to_category(FinPoset::antichain(1));
    auto npt = nerve(cpt, 2);
    CHECK(npt.count(0) == 1);
    CHECK(npt.count(1) == 0);
}

TEST_CASE("nerve chains of a poset category are the strict chains") {
    auto p = FinPoset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    auto c = poset_to_category(p);
    auto n = nerve(c, 4);
    std::vector<std::size_t> expect(5, 0);
    std::uint32_t m = std::uint32_t(p.size());
    std::function<void(std::vector<std::uint32_t>&)> rec = [&](std::vector<std::uint32_t>& ch) {
        expect[ch.size() - 1]++;
        for (std::uint32_t nxt = 0; nxt < m; ++nxt)
            if (nxt != ch.back() && p.less_eq(ch.back(), nxt)) {
                ch.push_back(nxt);
                rec(ch);
                ch.pop_back();
            }
    };
    for (std::uint32_t s = 0; s < m; ++s) {
        std::vector<std::uint32_t> ch{s};
        rec(ch);
    }
    for (std::uint32_t d = 0; d <= 4; ++d) CHECK(n.count(d) == expect[d]);
}

TEST_CASE("nerve faces satisfy the simplicial identities") {
    auto c = poset_to_category(FinPoset::chain(2));
    auto n = nerve(c, 2);
    const Chain& top = n.by_degree[2][0];  // 0 -> 1 -> 2
    auto f0 = n.face(c, top, 0);
    auto f1 = n.face(c, top, 1);
    auto f2 = n.face(c, top, 2);
    CHECK(f0.min_obj == 1);
    CHECK(f0.max_obj == 2);
    CHECK(f1.min_obj == 0);
    CHECK(f1.max_obj == 2);
    CHECK(f1.mors.size() == 1);
    CHECK(f2.min_obj == 0);
    CHECK(f2.max_obj == 1);
    // d_i d_j = d_{j-1} d_i for i < j on the top chain
    CHECK(n.face(c, f1, 0) == n.face(c, f0, 0));   // i=0, j=1
    CHECK(n.face(c, f2, 0) == n.face(c, f0, 1));   // i=0, j=2
    CHECK(n.face(c, f2, 1) == n.face(c, f1, 1));   // i=1, j=2
}

TEST_CASE("unnormalized nerve includes identity chains") {
    auto c = poset_to_category(FinPoset::chain(1));
    auto n = nerve(c, 2, false);
    CHECK(n.count(0) == 2);
    CHECK(n.count(1) == 3);
    // composable pairs (f1, f2): (id0,id0),(id0,a),(a,id1),(id1,id1)
    CHECK(n.count(2) == 4);
}

TEST_CASE("twisted arrow: stated examples") {
    auto c1 = poset_to_category(FinPoset::chain(1));
    auto tw = twisted_arrow(c1);
    CHECK(tw.cat.objects.size() == 3);
    tw.cat.validate();
    std::uint32_t arrow = 3, id0 = 3, id1 = 3;
    for (std::uint32_t f = 0; f < c1.morphisms.size(); ++f) {
        if (!c1.is_identity(f)) arrow = f;
        if (c1.is_identity(f) && c1.morphisms[f].src == 0) id0 = f;
        if (c1.is_identity(f) && c1.morphisms[f].src == 1) id1 = f;
    }
    bool has_id0_arrow = false, has_id1_arrow = false;
    for (const auto& m : tw.cat.morphisms) {
        if (m.src == id0 && m.tgt == arrow) has_id0_arrow = true;
        if (m.src == id1 && m.tgt == arrow) has_id1_arrow = true;
    }
    CHECK(has_id0_arrow);
    CHECK(has_id1_arrow);

    auto cpt = poset_to_category(FinPoset::antichain(1));
    auto twpt = twisted_arrow(cpt);
    CHECK(twpt.cat.objects.size() == 1);
    CHECK(twpt.cat.morphisms.size() == 1);

    auto c2 = poset_to_category(FinPoset::chain(2));
    CHECK(twisted_arrow(c2).cat.objects.size() == 6);
}

TEST_CASE("twisted arrow of a loop-free category is loop-free and composes by juxtaposition") {
    auto c = poset_to_category(FinPoset::chain(2));
    auto tw = twisted_arrow(c);
    CHECK(tw.cat.is_loop_free());
    for (std::uint32_t m2 = 0; m2 < tw.cat.morphisms.size(); ++m2)
        for (std::uint32_t m1 = 0; m1 < tw.cat.morphisms.size(); ++m1) {
            if (tw.cat.morphisms[m1].tgt != tw.cat.morphisms[m2].src) continue;
            auto comp = tw.cat.compose(m2, m1);
            CHECK(tw.pair_of[comp].second == c.compose(tw.pair_of[m1].second, tw.pair_of[m2].second));
            CHECK(tw.pair_of[comp].first == c.compose(tw.pair_of[m2].first, tw.pair_of[m1].first));
        }
}

TEST_CASE("is_free: stated examples") {
    CHECK(is_free(poset_to_category(FinPoset::chain(1))));
    CHECK(is_free(poset_to_category(FinPoset::chain(2))));
    CHECK(is_free(poset_to_category(FinPoset::chain(3))));
    CHECK(is_free(poset_to_category(FinPoset::antichain(3))));
    auto grid =
        FinPoset::from_covers({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
    CHECK(!is_free(poset_to_category(grid)));
}

TEST_CASE("free category on two parallel arrows") {
    // objects 0,1; morphisms id0, id1, a: 0->1, b: 0->1
    FinCategory c;
    c.objects = {"0", "1"};
    c.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"a", 0, 1}, {"b", 0, 1}};
    c.identity = {0, 1};
    c.table = {
        {0, -1, -1, -1},
        {-1, 1, 2, 3},
        {2, -1, -1, -1},
        {3, -1, -1, -1},
    };
    c.validate();
    CHECK(c.is_loop_free());
    CHECK(is_free(c));

    auto n = nerve(c, 2);
    CHECK(n.count(0) == 2);
    CHECK(n.count(1) == 2);  // a and b
    CHECK(n.count(2) == 0);

    auto tw = twisted_arrow(c);
    CHECK(tw.cat.objects.size() == 4);
    tw.cat.validate();
    CHECK(tw.cat.is_loop_free());
    // Tw has the square shape: id0 -> a, id0 -> b, id1 -> a, id1 -> b
    std::uint32_t non_id = 0;
    for (std::uint32_t m = 0; m < tw.cat.morphisms.size(); ++m)
        if (!tw.cat.is_identity(m)) ++non_id;
    CHECK(non_id == 4);
}

TEST_CASE("is_free rejects non-loop-free input") {
    FinCategory c;
    c.objects = {"x"};
    c.morphisms = {{"id", 0, 0}, {"e", 0, 0}};
    c.identity = {0};
    c.table = {{0, 1}, {1, 1}};
    c.validate();
    CHECK(!c.is_loop_free());
    CHECK_THROWS_AS(is_free(c), Error);
}

TEST_CASE("lower ideals and restriction") {
    auto p = FinPoset::chain(2);
    CHECK(p.is_lower_ideal({0, 1}));
    CHECK(!p.is_lower_ideal({1, 2}));
    auto q = p.restrict_to({0, 1});
    CHECK(q.size() == 2);
    CHECK(q.less_eq(0, 1));
}
