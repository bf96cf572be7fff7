#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsc/json_io.hpp"
#include "gsc/verify.hpp"
#include "test_util.hpp"

using namespace gsc;
using namespace gsc::testutil;

TEST_CASE("field spec parsing") {
    CHECK(parse_field_flag("5").p == 5);
    CHECK(parse_field_flag("Q").kind == FieldSpec::Kind::rational);
    CHECK(parse_field_flag("32003").p == 32003);
    CHECK_THROWS_AS(parse_field_flag("6"), Error);
    CHECK_THROWS_AS(parse_field_flag("zzz"), Error);
    CHECK(parse_field_spec(json::parse(R"({"kind":"prime","p":7})")).p == 7);
    CHECK(parse_field_spec(json::parse(R"({"kind":"rational"})")).kind == FieldSpec::Kind::rational);
}

TEST_CASE("poset json round trip") {
    auto j = json::parse(R"({"elements":["a","b","c"],"covers":[["a","b"],["b","c"]]})");
    auto p = parse_poset(j);
    CHECK(p.size() == 3);
    CHECK(p.less_eq(p.index_of("a"), p.index_of("c")));
    auto j2 = poset_to_json(p);
    auto p2 = parse_poset(j2);
    CHECK(p2.leq == p.leq);
    CHECK_THROWS_AS(parse_poset(json::parse(R"({"elements":["a"],"covers":[["a","a"]]})")), Error);
}

TEST_CASE("complex json round trip") {
    auto j = json::parse(R"({"maximal_faces":[["a","b"],["b","c"]]})");
    auto s = parse_complex(j);
    CHECK(s.faces.size() == 5);
    auto s2 = parse_complex(complex_to_json(s));
    CHECK(s2.faces == s.faces);
    CHECK(s2.vertices == s.vertices);
}

TEST_CASE("filtration and diagram json") {
    auto fj = json::parse(R"({"steps":[{"maximal_faces":[["a"]]},{"maximal_faces":[["a","b"]]}]})");
    auto steps = parse_filtration(fj);
    CHECK(steps.size() == 2);
    auto d = filtration(steps);
    CHECK(d.maps.size() == 1);

    auto dj = json::parse(R"({
      "poset": {"elements":["r","p","q"],"covers":[["r","p"],["r","q"]]},
      "complexes": {"r": {"maximal_faces":[["m"]]},
                    "p": {"maximal_faces":[["m","a"]]},
                    "q": {"maximal_faces":[["m","b"]]}},
      "maps": [{"from":"r","to":"p"},{"from":"r","to":"q"}]})");
    auto dg = parse_diagram(dj);
    CHECK(dg.index.size() == 3);
    auto K = colimit(dg);
    CHECK(K.complex.vertices.size() == 3);
}

TEST_CASE("algebra json round trip preserves hh") {
    Fp f3(3);
    auto a = truncated_polynomial_algebra(2, f3);
    auto j = algebra_to_json(a);
    auto b = parse_algebra<Fp>(j, f3);
    CHECK(b.dim == a.dim);
    CHECK(hh_diag(b, 2) == hh_diag(a, 2));

    Rat fq;
    auto aq = matrix_algebra(2, fq);
    auto bq = parse_algebra<Rat>(algebra_to_json(aq), fq);
    CHECK(hh_diag(bq, 1) == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("morphism json parses and certifies") {
    Fp f2(2);
    auto dual = truncated_polynomial_algebra(2, f2);
    auto k = truncated_polynomial_algebra(1, f2);
    json j;
    j["source"] = algebra_to_json(dual);
    j["target"] = algebra_to_json(k);
    j["matrix"] = json::array({json::array({0, 0, "1"})});
    auto m = parse_morphism<Fp>(j, f2);
    auto cert = certify_hom_epi(m, 2);
    CHECK(cert.status == "FAILED");
    auto cj = certificate_to_json(cert);
    CHECK(cj["tor_dims"][1] == 1);
    CHECK(cj["projective_kernel"] == "UNDECIDED");
}

TEST_CASE("json output is deterministic") {
    Fp f5(5);
    auto a = matrix_algebra(2, f5);
    CHECK(algebra_to_json(a).dump(2) == algebra_to_json(a).dump(2));
    auto p = square_poset();
    CHECK(poset_to_json(p).dump() == poset_to_json(p).dump());
}

TEST_CASE("verify suite registry") {
    CHECK(suite_names().size() == 9);
    CHECK_THROWS_AS(run_suite("nope"), Error);
    // the cheap suites run clean at unit-test time
    CHECK(all_ok(run_suite("hh-classics")));
    CHECK(all_ok(run_suite("colim-limit")));
}

TEST_CASE("page serialization shape") {
    SSPage page;
    page.r = 2;
    page.dims = {{1, 0}, {1, 0}};
    auto j = page_to_json(page);
    CHECK(j["r"] == 2);
    CHECK(j["cells"]["0,0"] == 1);
    CHECK(j["cells"]["1,1"] == 0);
    auto t = page_to_table(page);
    CHECK(t.find("E2 page") != std::string::npos);
}
