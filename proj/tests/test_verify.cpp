#include <set>

#include "arq/verify.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace arq;

TEST_CASE("catalog lists every check once") {
    std::set<std::string> ids;
    for (const auto& c : check_catalog()) {
        CHECK(ids.insert(c.info.id).second);
        CHECK_FALSE(c.info.statement.empty());
        CHECK(static_cast<bool>(c.on_quiver) == c.info.per_orientation);
        CHECK(static_cast<bool>(c.on_rank) == !c.info.per_orientation);
    }
    for (const char* id : {"mesh_additivity", "surj_free_multiplicity", "non_adapted_remark", "oracle_agreement",
                           "double_zero_correspondence", "sectional_commuting", "pair_counts"})
        CHECK(ids.count(id));
    CHECK(find_check("mesh_additivity").info.suite == Suite::Structure);
    CHECK_THROWS_AS(find_check("no_such_check"), std::invalid_argument);
}

TEST_CASE("suite names") {
    CHECK(parse_suites("all").size() == 3);
    CHECK(parse_suites("orders") == std::set<Suite>{Suite::Orders});
    CHECK_THROWS_AS(parse_suites("everything"), std::invalid_argument);
}

TEST_CASE("D4 passes every check") {
    const auto report = run_suite(4, parse_suites("all"));
    CHECK(report.all_passed());
    std::set<std::uint32_t> masks;
    for (const auto& r : report.records)
        if (!r.orientation.empty()) masks.insert(r.mask);
    CHECK(masks.size() == 8);
}

TEST_CASE("report order does not depend on the worker count") {
    const auto one = report_json(run_suite(5, parse_suites("all"), 1));
    const auto four = report_json(run_suite(5, parse_suites("all"), 4));
    CHECK(one == four);
    const auto parsed = nlohmann::json::parse(one);
    REQUIRE(parsed.is_array());
    CHECK(parsed[0].at("status") == "pass");
    CHECK(parsed[0].at("counterexample").is_null());
    CHECK_FALSE(parsed[0].contains("elapsed_ms"));
    CHECK(nlohmann::json::parse(report_json(run_suite(4, {Suite::Structure}), true))[0].contains("elapsed_ms"));
}

TEST_CASE("a flipped arrow breaks mesh additivity at its coordinate") {
    const auto ar = arq::test::example1();
    const auto& mesh = find_check("mesh_additivity");
    REQUIRE_FALSE(mesh.on_quiver(ar));
    for (std::size_t k = 0; k < ar.arrows().size(); ++k) {
        const auto broken = with_flipped_arrow(ar, k);
        const auto bad = mesh.on_quiver(broken);
        REQUIRE(bad);
        // One of the arrow's endpoints now fails the mesh.
        const auto [s, t] = ar.arrows()[k];
        const bool named = bad->find(ar.coord(s).to_string()) != std::string::npos ||
                           bad->find(ar.coord(t).to_string()) != std::string::npos;
        CHECK(named);
        CHECK(find_check("arrow_rule").on_quiver(broken));
    }
}

TEST_CASE("failing records carry their scope") {
    const auto ar = arq::test::example1();
    const auto records = run_on(with_flipped_arrow(ar, 0), {Suite::Structure});
    int failed = 0;
    for (const auto& r : records)
        if (!r.passed) {
            ++failed;
            CHECK(r.orientation == "2>1,3>2,2>4");
            CHECK(r.xi == ar.xi().to_string());
            CHECK_FALSE(r.counterexample.empty());
        }
    CHECK(failed >= 2);
}
