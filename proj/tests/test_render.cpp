#include "arq/render.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace arq;

TEST_CASE("ASCII grid of D4 example") {
    const std::string expected =
        "(i,p) -6   -5   -4   -3   -2   -1   0\n"
        "1     <1,-2>    <2,4>     <1,-4>\n"
        "         \\    /    \\    /    \\\n"
        "2          <1,4>     <1,2>     <2,-4>\n"
        "              \\    /    \\    /    \\\n"
        "3               <1,3>     <2,-3>    <3,-4>\n"
        "         /    \\    /    \\    /\n"
        "4     <3,4>     <1,-3>    <2,3>\n";
    CHECK(render_ascii(arq::test::example1()) == expected);
}

TEST_CASE("DOT output") {
    const auto ar = arq::test::example1();
    const auto dot = render_dot(ar);
    CHECK(dot.rfind("digraph GammaQ {", 0) == 0);
    CHECK(dot.find("[label=\"<3,-4> @(3,0)\"]") != std::string::npos);
    CHECK(dot.find("{ rank=same;") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = dot.find(" -> "); at != std::string::npos; at = dot.find(" -> ", at + 1)) ++edges;
    CHECK(edges == ar.arrows().size());
}

TEST_CASE("JSON layout") {
    const auto ar = arq::test::example1();
    const auto j = nlohmann::json::parse(render_json(ar));
    CHECK(j.at("type") == "D");
    CHECK(j.at("rank") == 4);
    CHECK(j.at("xi") == std::vector<int>{-2, -1, 0, -2});
    CHECK(j.at("m") == std::vector<int>{2, 2, 2, 2});
    const auto& v = j.at("vertices");
    REQUIRE(v.size() == 12);
    CHECK(v[0].at("level") == 1);
    CHECK(v[0].at("p") == -6);
    CHECK(v[0].at("eps") == std::vector<int>{1, -2});
    for (std::size_t z = 1; z < v.size(); ++z)
        CHECK(std::pair{v[z - 1].at("p").get<int>(), v[z - 1].at("level").get<int>()} <
              std::pair{v[z].at("p").get<int>(), v[z].at("level").get<int>()});
}

TEST_CASE("JSON round-trips for every orientation") {
    for (int n = 4; n <= 6; ++n)
        arq::test::for_each_orientation(n, [&](const ARQuiver& ar) { CHECK(parse_ar_json(render_json(ar)) == ar); });
    const CartanDatum a3(DiagramType::A, 3);
    const auto a = ARQuiver::build(parse_quiver(a3, "2>1,2>3"));
    CHECK(parse_ar_json(render_json(a)) == a);
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(parse_ar_json("{"), std::invalid_argument);
    auto j = nlohmann::json::parse(render_json(arq::test::example1()));
    j["vertices"].erase(0);
    CHECK_THROWS_AS(parse_ar_json(j.dump()), std::invalid_argument);
    j = nlohmann::json::parse(render_json(arq::test::example1()));
    j["m"][0] = 3;
    CHECK_THROWS_AS(parse_ar_json(j.dump()), std::invalid_argument);
}
