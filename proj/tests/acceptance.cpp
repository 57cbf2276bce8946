// Acceptance run: one PASS/FAIL line per criterion, each under a fixed time
// limit. Exits nonzero if any criterion fails or runs over its limit.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"
#include "arq/orders.hpp"
#include "arq/qaffine.hpp"
#include "arq/structure.hpp"
#include "arq/verify.hpp"

using namespace arq;

namespace {

using Failure = std::optional<std::string>;

ARQuiver example1() {
    const CartanDatum d(DiagramType::D, 4);
    const auto q = parse_quiver(d, "2>1,3>2,2>4");
    return ARQuiver::build(q, HeightFunction::anchored(q, 3, 0));
}

// Stops at the first orientation that fails.
Failure each_orientation(int n, const std::function<Failure(const ARQuiver&)>& f) {
    const CartanDatum d(DiagramType::D, n);
    for (std::uint32_t m = 0; m < DynkinQuiver::orientation_count(d); ++m) {
        const auto ar = ARQuiver::build(DynkinQuiver::from_mask(d, m));
        if (auto bad = f(ar)) return "D" + std::to_string(n) + " " + ar.quiver().to_string() + ": " + *bad;
    }
    return std::nullopt;
}

std::string pair_text(const ARQuiver& ar, int g, const RootPair& p) {
    return "(" + ar.label(p.alpha) + ", " + ar.label(p.beta) + ") of " + ar.label(g);
}

Failure c1_grid() {
    const std::map<std::pair<int, int>, std::string> grid{
        {{1, -6}, "<1,-2>"}, {{1, -4}, "<2,4>"},  {{1, -2}, "<1,-4>"}, {{2, -5}, "<1,4>"},
        {{2, -3}, "<1,2>"},  {{2, -1}, "<2,-4>"}, {{3, -4}, "<1,3>"},  {{3, -2}, "<2,-3>"},
        {{3, 0}, "<3,-4>"},  {{4, -6}, "<3,4>"},  {{4, -4}, "<1,-3>"}, {{4, -2}, "<2,3>"},
    };
    const auto ar = example1();
    if (ar.size() != 12) return std::to_string(ar.size()) + " vertices";
    for (const auto& [c, label] : grid) {
        const auto r = ar.at(c.first, c.second);
        if (!r) return "nothing at (" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
        if (ar.label(*r) != label) return ar.label(*r) + " where " + label + " belongs";
    }
    return std::nullopt;
}

Failure c2_orders() {
    const std::map<Reading, std::string> expected{
        {Reading::U1, "<3,-4> <2,-4> <1,-4> <2,3> <2,-3> <1,2> <2,4> <1,-3> <1,3> <1,4> <1,-2> <3,4>"},
        {Reading::U2, "<3,-4> <2,-4> <1,-4> <2,-3> <2,3> <1,2> <2,4> <1,3> <1,-3> <1,4> <1,-2> <3,4>"},
        {Reading::L1, "<3,-4> <2,-4> <2,-3> <2,3> <1,-4> <1,2> <1,-3> <1,3> <2,4> <1,4> <3,4> <1,-2>"},
        {Reading::L2, "<3,-4> <2,-4> <2,3> <2,-3> <1,-4> <1,2> <1,3> <1,-3> <2,4> <1,4> <3,4> <1,-2>"},
    };
    const auto ar = example1();
    for (const auto& [r, text] : expected) {
        std::string got;
        for (int v : canonical_sequence(ar, r)) got += (got.empty() ? "" : " ") + ar.label(v);
        if (got != text) return to_string(r) + " reads " + got;
    }
    return std::nullopt;
}

Failure c3_structure() {
    std::vector<const Check*> checks;
    for (const auto& c : check_catalog())
        if (c.info.suite == Suite::Structure) checks.push_back(&c);
    for (int n = 4; n <= 7; ++n)
        if (auto bad = each_orientation(n, [&](const ARQuiver& ar) -> Failure {
                for (const auto* c : checks)
                    if (c->info.applies_to(n))
                        if (auto e = c->on_quiver(ar)) return c->info.id + ": " + *e;
                return std::nullopt;
            }))
            return bad;
    return std::nullopt;
}

Failure c4_pair_counts() {
    for (int n = 4; n <= 6; ++n)
        if (auto bad = each_orientation(n, [&](const ARQuiver& ar) -> Failure {
                for (int g = 0; g < ar.size(); ++g) {
                    const auto& root = ar.roots().root(g);
                    if (root.is_simple()) continue;
                    int minimal = 0;
                    int nonminimal = 0;
                    for (const auto& p : pairs_of(ar, g))
                        (classify_pair(ar, g, p).verdict == Verdict::Minimal ? minimal : nonminimal)++;
                    if (minimal != static_cast<int>(root.support_at_least(1).size()) - 1 ||
                        nonminimal != static_cast<int>(root.support_at_least(2).size()))
                        return ar.label(g) + ": " + std::to_string(minimal) + " minimal, " +
                               std::to_string(nonminimal) + " non-minimal";
                    const auto e = ar.roots().epsilon_form(g);
                    if (e.b > 0 && e.b <= n - 2 && nonminimal != n - e.b - 1)
                        return ar.label(g) + ": " + std::to_string(nonminimal) + " non-minimal, expected " +
                               std::to_string(n - e.b - 1);
                }
                return std::nullopt;
            }))
            return bad;
    return std::nullopt;
}

Failure c5_oracle() {
    return each_orientation(4, [](const ARQuiver& ar) -> Failure {
        for (int g = 0; g < ar.size(); ++g) {
            if (ar.roots().root(g).is_simple()) continue;
            for (const auto& p : pairs_of(ar, g))
                if (classify_pair(ar, g, p).verdict != oracle_classify(ar, g, p).verdict)
                    return pair_text(ar, g, p) + " disagrees with the oracle";
        }
        return std::nullopt;
    });
}

Failure c6_multiplicity() {
    for (int n = 4; n <= 6; ++n)
        if (auto bad = each_orientation(n, [&](const ARQuiver& ar) -> Failure {
                for (int g = 0; g < ar.size(); ++g) {
                    if (ar.roots().root(g).is_simple()) continue;
                    for (const auto& p : pairs_of(ar, g)) {
                        const auto a = ar.coord(p.alpha);
                        const auto b = ar.coord(p.beta);
                        const int dp = std::abs(a.column - b.column);
                        const int got = zero_multiplicity(denom_D1(n, a.level, b.level), SpectralParam::mq(dp));
                        const int want = classify_pair(ar, g, p).verdict == Verdict::Minimal ? 1 : 2;
                        if (got != want)
                            return pair_text(ar, g, p) + ": multiplicity " + std::to_string(got) + ", expected " +
                                   std::to_string(want);
                    }
                }
                return std::nullopt;
            }))
            return bad;
    return std::nullopt;
}

Failure c7_dorey() {
    for (int n = 4; n <= 6; ++n)
        if (auto bad = each_orientation(n, [&](const ARQuiver& ar) -> Failure {
                auto star = [&](const Module& m) { return star_map(n, m.level, m.param); };
                for (int g = 0; g < ar.size(); ++g) {
                    if (ar.roots().root(g).is_simple()) continue;
                    for (const auto& p : pairs_of(ar, g)) {
                        const auto t = pair_to_triple(ar, g, p);
                        if (!dorey_D1(n, t).holds) return t.to_string() + " fails the untwisted criterion";
                        if (classify_pair(ar, g, p).verdict != Verdict::Minimal) continue;
                        const HomTriple image{star(t.first), star(t.second), star(t.target)};
                        if (!dorey_D2(n - 1, image).holds) return image.to_string() + " fails the twisted criterion";
                    }
                }
                return std::nullopt;
            }))
            return bad;
    return std::nullopt;
}

Failure c8_double_zeros() {
    for (int n = 3; n <= 8; ++n) {
        if (double_zero_set_D1(n + 1) != double_zero_set_D2(n))
            return "D1(" + std::to_string(n + 1) + ") and D2(" + std::to_string(n) + ") differ";
        // Case (ii) triples (i,-j), (j,i) -> (2N-2-i-j, 0) in rank N = n+1.
        const int N = n + 1;
        const auto loci = double_zero_set_D1(N);
        for (int i = 1; i <= N - 2; ++i)
            for (int j = 1; j <= N - 2; ++j) {
                const int k = 2 * N - 2 - i - j;
                if (k < 1 || k > N - 2) continue;
                const HomTriple t{{i, SpectralParam::mq(-j)}, {j, SpectralParam::mq(i)}, {k, SpectralParam::mq(0)}};
                const auto v = dorey_D1(N, t);
                if (v.holds && v.matched_case == "ii" && !loci.count({i, j, i + j}))
                    return "D" + std::to_string(N) + " " + t.to_string() + " is case ii off the double-zero set";
            }
    }
    return std::nullopt;
}

Failure c9_non_adapted() {
    const CartanDatum d4(DiagramType::D, 4);
    const auto& rs = *RootSystem::of(d4);
    const WeylWord w{{1, 2, 3, 1, 2, 4, 1, 2, 3, 1, 2, 4}};
    if (!rs.is_reduced(w)) return "word is not reduced";
    for (std::uint32_t m = 0; m < DynkinQuiver::orientation_count(d4); ++m)
        if (is_adapted(w, DynkinQuiver::from_mask(d4, m))) return "word is adapted to mask " + std::to_string(m);
    const int gamma = *rs.index_of(std::vector<int>{0, 1, 1, 1});
    const RootPair pair{*rs.index_of(std::vector<int>{0, 1, 1, 0}), *rs.index_of(std::vector<int>{0, 0, 0, 1})};
    for (const auto& v : commutation_class(d4, w))
        if (minimal_wrt(ConvexOrder::from_word(rs, v), gamma, pair, rs))
            return "(a2+a3, a4) is minimal for " + v.to_string();
    return std::nullopt;
}

Failure c10_commuting() {
    for (int n = 4; n <= 6; ++n)
        if (auto bad = each_orientation(n, [&](const ARQuiver& ar) -> Failure {
                for (const auto& path : sectional_paths(ar))
                    for (std::size_t x = 0; x < path.roots.size(); ++x)
                        for (std::size_t y = x + 1; y < path.roots.size(); ++y)
                            if (!same_path_commuting_check(ar, path.roots[x], path.roots[y]))
                                return ar.label(path.roots[x]) + " and " + ar.label(path.roots[y]) +
                                       " hit a denominator zero";
                return std::nullopt;
            }))
            return bad;
    return std::nullopt;
}

struct Criterion {
    int number;
    const char* name;
    double limit_ms;
    Failure (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "D4 example grid", 1, c1_grid},
        {2, "canonical orders on D4 example", 1, c2_orders},
        {3, "structure suite, D4..D7", 10'000, c3_structure},
        {4, "pair counts and non-free counts, D4..D6", 30'000, c4_pair_counts},
        {5, "classifier vs exhaustive oracle, D4", 60'000, c5_oracle},
        {6, "denominator multiplicities, D4..D6", 10'000, c6_multiplicity},
        {7, "Dorey coverage, D4..D6", 30'000, c7_dorey},
        {8, "double-zero correspondence, n = 3..8", 5'000, c8_double_zeros},
        {9, "non-adapted D4 word", 10'000, c9_non_adapted},
        {10, "sectional-path commutation, D4..D6", 10'000, c10_commuting},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Failure bad;
        try {
            bad = c.run();
        } catch (const std::exception& e) {
            bad = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!bad && ms > c.limit_ms) bad = "over the time limit";
        failed += bad.has_value();
        std::printf("%s %2d %-42s %10.3f ms (limit %g ms)%s%s\n", bad ? "FAIL" : "PASS", c.number, c.name, ms,
                    c.limit_ms, bad ? ": " : "", bad ? bad->c_str() : "");
    }
    return failed == 0 ? 0 : 1;
}
