#include <map>
#include <set>

#include "arq/structure.hpp"
#include "arq/verify.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace arq;
using arq::test::example1;
using arq::test::root;

namespace {

// The D4 example grid, (level, column) -> label.
const std::map<std::pair<int, int>, std::string> example1_grid{
    {{1, -6}, "<1,-2>"}, {{1, -4}, "<2,4>"},  {{1, -2}, "<1,-4>"}, {{2, -5}, "<1,4>"},
    {{2, -3}, "<1,2>"},  {{2, -1}, "<2,-4>"}, {{3, -4}, "<1,3>"},  {{3, -2}, "<2,-3>"},
    {{3, 0}, "<3,-4>"},  {{4, -6}, "<3,4>"},  {{4, -4}, "<1,-3>"}, {{4, -2}, "<2,3>"},
};

}  // namespace

TEST_CASE("D4 example grid") {
    const auto ar = example1();
    REQUIRE(ar.size() == 12);
    for (const auto& [c, label] : example1_grid) {
        const auto r = ar.at(c.first, c.second);
        REQUIRE(r);
        CHECK(ar.label(*r) == label);
    }
    for (int i = 1; i <= 4; ++i) CHECK(ar.m(i) == 2);
    CHECK(ar.coord(root(ar, "<1,-2>")) == RepCoord{1, -6});
    CHECK(ar.arrows().size() == 15);
}

TEST_CASE("builder agrees with iterating the Coxeter element on eta") {
    // tau^k(eta_i) sits at (i, xi_i - 2k); tau = c, applied as a product of reflections.
    for (int n = 4; n <= 6; ++n)
        arq::test::for_each_orientation(n, [&](const ARQuiver& ar) {
            const auto c = coxeter_word(ar.quiver());
            for (int i = 1; i <= n; ++i) {
                SignedRoot x{1, eta_zeta(ar.quiver(), i).eta};
                for (int k = 0; k <= ar.m(i); ++k) {
                    REQUIRE(x.sign == 1);
                    const auto r = ar.at(i, ar.xi()[i] - 2 * k);
                    REQUIRE(r);
                    CHECK(ar.roots().root(*r) == x.root);
                    x = ar.roots().apply_word(c, x);
                }
                CHECK(x.sign == -1);
            }
        });
}

TEST_CASE("m values") {
    const CartanDatum d5(DiagramType::D, 5);
    for (std::uint32_t m = 0; m < 16; ++m) {
        const auto ar = ARQuiver::build(DynkinQuiver::from_mask(d5, m));
        if (ar.xi()[5] == ar.xi()[4] + 2) {
            CHECK(ar.m(4) == 2);
            CHECK(ar.m(5) == 4);
        }
    }
}

TEST_CASE("simple roots and level pairs on D4 example") {
    const auto ar = example1();
    CHECK(ar.coord(ar.roots().simple_index(3)) == RepCoord{3, 0});
    CHECK(ar.coord(ar.roots().simple_index(1)) == RepCoord{1, -6});
    for (int k = 1; k <= 4; ++k) CHECK(predicted_simple_root_coord(ar, k) == ar.coord(ar.roots().simple_index(k)));
    const auto lp = level_pair_sum(ar, -4);
    REQUIRE(lp);
    CHECK(ar.label(lp->upper) == "<1,3>");
    CHECK(ar.label(lp->lower) == "<1,-3>");
    CHECK(fork_index(ar) == 3);
    CHECK_FALSE(level_pair_sum(ar, 0));
}

TEST_CASE("triangle apex") {
    const auto ar = example1();
    CHECK(triangle_apex(ar, {3, -4}, {3, -2}) == RepCoord{2, -3});
    CHECK(ar.roots().sum_index(root(ar, "<1,3>"), root(ar, "<2,-3>")) == root(ar, "<1,2>"));
    CHECK_THROWS_AS(triangle_apex(ar, {3, -4}, {4, -2}), std::invalid_argument);
}

TEST_CASE("swings, shallow paths, sigma and kappa on D4 example") {
    const auto ar = example1();
    const auto sw = swings(ar);
    REQUIRE(sw.size() == 2);
    for (const auto& s : sw) {
        std::set<std::string> members;
        for (int r : s.members()) members.insert(ar.label(r));
        if (s.a == 1)
            CHECK(members == std::set<std::string>{"<1,4>", "<1,2>", "<1,3>", "<1,-3>", "<1,-4>", "<1,-2>"});
        else
            CHECK(members.size() == 5);
    }
    // <1,-4> -> <2,-4> -> <3,-4> shares -e_4 but ends at level n-1, so it is
    // not shallow; the only shallow path is the lone vertex <1,-2>.
    int shallow = 0;
    bool found = false;
    for (const auto& p : sectional_paths(ar)) {
        if (p.shallow) {
            ++shallow;
            CHECK(arq::test::labels(ar, p.roots) == std::vector<std::string>{"<1,-2>"});
        }
        if (arq::test::labels(ar, p.roots) == std::vector<std::string>{"<1,-4>", "<2,-4>", "<3,-4>"}) {
            found = true;
            CHECK(p.kind == PathKind::S);
            CHECK(p.maximal);
            CHECK_FALSE(p.shallow);
            for (int r : p.roots) CHECK(has_summand(ar.roots().epsilon_form(r), -4));
        }
    }
    CHECK(shallow == 1);
    CHECK(found);
    const auto sk = sigma_kappa(ar);
    CHECK(arq::test::labels(ar, sk.sigma) == std::vector<std::string>{"<2,-3>", "<1,3>"});
    CHECK(sk.sigma_swing == std::vector<int>{2, 1});
    CHECK(arq::test::labels(ar, sk.kappa) == std::vector<std::string>{"<1,-4>", "<2,4>", "<1,-2>"});
    CHECK(longest_root_coord(ar) == RepCoord{2, -3});
}

TEST_CASE("non-free region on D4 example") {
    const auto ar = example1();
    const auto region = nfree_region(ar);
    CHECK(region.i == -2);
    CHECK(region.j == -4);
    CHECK(region.contains({2, -3}));
    CHECK(region.within_band({2, -3}));
    for (int r = 0; r < ar.size(); ++r)
        if (ar.coord(r).level == 1) CHECK(ar.roots().root(r).multiplicity() == 1);
}

TEST_CASE("precedence follows paths") {
    const auto ar = example1();
    CHECK(ar.precedes(root(ar, "<2,-3>"), root(ar, "<1,3>")));
    CHECK_FALSE(ar.precedes(root(ar, "<1,3>"), root(ar, "<1,3>")));
    for (int r = 0; r < ar.size(); ++r)
        if (r != root(ar, "<3,-4>")) CHECK(ar.precedes(root(ar, "<3,-4>"), r));
}

TEST_CASE("structure checks hold on every orientation up to D7") {
    std::vector<const Check*> checks;
    for (const auto& c : check_catalog())
        if (c.info.suite == Suite::Structure) checks.push_back(&c);
    REQUIRE(checks.size() >= 20);
    for (int n = 4; n <= 7; ++n)
        arq::test::for_each_orientation(n, [&](const ARQuiver& ar) {
            for (const auto* c : checks) {
                const auto bad = c->on_quiver(ar);
                INFO(c->info.id << " on " << ar.quiver().to_string());
                CHECK_FALSE(bad);
            }
        });
}

TEST_CASE("shifting xi moves every vertex") {
    const auto ar = example1();
    const auto moved = ARQuiver::build(ar.quiver(), ar.xi().shifted(-6));
    for (int r = 0; r < ar.size(); ++r) CHECK(moved.coord(r) == RepCoord{ar.coord(r).level, ar.coord(r).column - 6});
}

TEST_CASE("type A builds without type-D structure") {
    const CartanDatum a4(DiagramType::A, 4);
    const auto ar = ARQuiver::build(parse_quiver(a4, "1>2,3>2,3>4"));
    CHECK(ar.size() == 10);
    for (auto [s, t] : ar.arrows()) CHECK(ar.roots().pairing(ar.roots().root(s), ar.roots().root(t)) == 1);
    CHECK_THROWS(swings(ar));
}

TEST_CASE("from_parts rejects broken placements") {
    const auto ar = example1();
    std::vector<RepCoord> placement;
    for (int r = 0; r < ar.size(); ++r) placement.push_back(ar.coord(r));
    auto clash = placement;
    clash[1] = clash[0];
    CHECK_THROWS(ARQuiver::from_parts(ar.quiver(), ar.xi(), clash, ar.arrows()));
    CHECK(ARQuiver::from_parts(ar.quiver(), ar.xi(), placement, ar.arrows()) == ar);
}
