#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsc/simp.hpp"

using namespace gsc;

namespace {
SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_maximal_faces({{"a", "b"}, {"a", "c"}, {"b", "c"}});
}
SimplicialComplex full_triangle() { return SimplicialComplex::from_maximal_faces({{"a", "b", "c"}}); }
}  // namespace

TEST_CASE("closure and validation") {
    auto t = full_triangle();
    CHECK(t.vertices.size() == 3);
    CHECK(t.faces.size() == 7);
    CHECK(t.dim() == 2);
    auto b = triangle_boundary();
    CHECK(b.faces.size() == 6);
    CHECK(b.is_subcomplex_of(t));
    CHECK(!t.is_subcomplex_of(b));
}

TEST_CASE("simplicial cohomology: stated examples") {
    Fp f2(2), f3(3);
    CHECK(simplicial_cohomology(SimplicialComplex::point(), f2, 2) == std::vector<std::uint32_t>{1, 0, 0});
    CHECK(simplicial_cohomology(triangle_boundary(), f2, 2) == std::vector<std::uint32_t>{1, 1, 0});
    CHECK(simplicial_cohomology(triangle_boundary(), f3, 2) == std::vector<std::uint32_t>{1, 1, 0});
    CHECK(simplicial_cohomology(full_triangle(), f2, 2) == std::vector<std::uint32_t>{1, 0, 0});
    Rat fq;
    CHECK(simplicial_cohomology(triangle_boundary(), fq, 2) == std::vector<std::uint32_t>{1, 1, 0});
}

TEST_CASE("face poset: stated examples") {
    auto edge = SimplicialComplex::from_maximal_faces({{"a", "b"}});
    auto pe = face_poset(edge);
    CHECK(pe.size() == 3);
    CHECK(pe.covers().size() == 2);

    auto pb = face_poset(triangle_boundary());
    CHECK(pb.size() == 6);
    CHECK(pb.covers().size() == 6);

    CHECK(face_poset(SimplicialComplex::point()).size() == 1);
}

TEST_CASE("face poset with the empty simplex included") {
    auto edge = SimplicialComplex::from_maximal_faces({{"a", "b"}});
    auto p = face_poset(edge, true);
    CHECK(p.size() == 4);
    auto bot = p.index_of("{}");
    CHECK(p.initial().has_value());
    CHECK(*p.initial() == bot);
    // order complex becomes a cone, hence acyclic
    Fp f2(2);
    CHECK(simplicial_cohomology(order_complex(p), f2, 1) == std::vector<std::uint32_t>{1, 0});
    auto pb = face_poset(triangle_boundary(), true);
    CHECK(pb.size() == 7);
    CHECK(simplicial_cohomology(order_complex(pb), f2, 1) == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("colimit vertex count is bounded by the disjoint-union size") {
    auto pt = SimplicialComplex::from_maximal_faces({{"a"}});
    auto edge = SimplicialComplex::from_maximal_faces({{"a", "b"}});
    auto d = filtration({pt, edge, triangle_boundary()});
    auto K = colimit(d);
    std::size_t total = 0;
    for (const auto& s : d.complexes) total += s.vertices.size();
    CHECK(K.complex.vertices.size() <= total);
}

TEST_CASE("face poset orientation: subcomplexes are lower ideals") {
    auto big = triangle_boundary();
    auto pbig = face_poset(big);
    auto edge = SimplicialComplex::from_maximal_faces({{"a", "b"}});
    std::vector<std::uint32_t> ideal;
    for (const auto& f : edge.faces) {
        std::vector<std::uint32_t> g;
        for (auto v : f) g.push_back(big.vertex_index(edge.vertices[v]));
        ideal.push_back(pbig.index_of(big.face_label(g)));
    }
    CHECK(pbig.is_lower_ideal(ideal));
}

TEST_CASE("order complex of a face poset is the barycentric subdivision") {
    Fp f2(2);
    auto b = triangle_boundary();
    auto oc = order_complex(face_poset(b));
    CHECK(simplicial_cohomology(oc, f2, 2) == simplicial_cohomology(b, f2, 2));
    auto t = full_triangle();
    auto oct = order_complex(face_poset(t));
    CHECK(simplicial_cohomology(oct, f2, 2) == simplicial_cohomology(t, f2, 2));
}

TEST_CASE("filtration validates inclusions") {
    auto pt = SimplicialComplex::from_maximal_faces({{"a"}});
    auto edge = SimplicialComplex::from_maximal_faces({{"a", "b"}});
    auto d = filtration({pt, edge, triangle_boundary()});
    CHECK(d.index.size() == 3);
    CHECK(d.maps.size() == 3);  // 0<=1, 1<=2, 0<=2 closed

    auto lone = SimplicialComplex::from_maximal_faces({{"z"}});
    CHECK_THROWS_AS(filtration({lone, edge}), Error);
}

TEST_CASE("filtration steps give lower-ideal inclusions of face posets") {
    auto pt = SimplicialComplex::from_maximal_faces({{"a"}});
    auto edge = SimplicialComplex::from_maximal_faces({{"a", "b"}});
    auto d = filtration({pt, edge, triangle_boundary()});
    for (std::uint32_t i = 0; i + 1 < 3; ++i) {
        auto psmall = face_poset(d.complexes[i]);
        auto pbig = face_poset(d.complexes[i + 1]);
        std::vector<std::uint32_t> img;
        for (const auto& f : d.complexes[i].faces) {
            std::vector<std::uint32_t> g;
            for (auto v : f) g.push_back(d.complexes[i + 1].vertex_index(d.complexes[i].vertices[v]));
            img.push_back(pbig.index_of(d.complexes[i + 1].face_label(g)));
        }
        CHECK(pbig.is_lower_ideal(img));
        CHECK(img.size() == psmall.size());
    }
}

TEST_CASE("colimit: coproduct over an antichain") {
    ComplexDiagram d;
    d.index = FinPoset::antichain(2);
    d.complexes = {SimplicialComplex::point("x"), SimplicialComplex::point("y")};
    d.validate_and_close();
    auto K = colimit(d);
    CHECK(K.complex.vertices.size() == 2);
    CHECK(K.complex.faces.size() == 2);
}

TEST_CASE("colimit: pushout of two edges glued along a shared vertex") {
    // r = {m}, p = edge {m,a}, q = edge {m,b}
    ComplexDiagram d;
    d.index = FinPoset::from_covers({"p", "q", "r"}, {{"r", "p"}, {"r", "q"}});
    auto pe = SimplicialComplex::from_maximal_faces({{"m", "a"}});
    auto qe = SimplicialComplex::from_maximal_faces({{"m", "b"}});
    auto re = SimplicialComplex::point("m");
    d.complexes.resize(3);
    d.complexes[d.index.index_of("p")] = pe;
    d.complexes[d.index.index_of("q")] = qe;
    d.complexes[d.index.index_of("r")] = re;
    d.maps[{d.index.index_of("r"), d.index.index_of("p")}] = simplicial_map_from_labels(re, pe, {});
    d.maps[{d.index.index_of("r"), d.index.index_of("q")}] = simplicial_map_from_labels(re, qe, {});
    d.validate_and_close();
    auto K = colimit(d);
    CHECK(K.complex.vertices.size() == 3);
    CHECK(K.complex.faces.size() == 5);  // 3 vertices + 2 edges
    Fp f2(2);
    CHECK(simplicial_cohomology(K.complex, f2, 1) == std::vector<std::uint32_t>{1, 0});

    // iota_q ∘ map(r<=q) = iota_r
    auto r = d.index.index_of("r"), p = d.index.index_of("p");
    const auto& m = d.map_for(r, p);
    for (std::uint32_t v = 0; v < re.vertices.size(); ++v)
        CHECK(K.inclusions[p].vertex_map[m.vertex_map[v]] == K.inclusions[r].vertex_map[v]);
}

TEST_CASE("colimit: constant singleton diagram over the square poset is a point") {
    ComplexDiagram d;
    d.index = FinPoset::from_covers({"1", "2", "3", "4"}, {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
    for (std::uint32_t i = 0; i < 4; ++i) d.complexes.push_back(SimplicialComplex::point("*"));
    for (auto [a, b] : d.index.covers())
        d.maps[{a, b}] = simplicial_map_from_labels(d.complexes[a], d.complexes[b], {});
    d.validate_and_close();
    auto K = colimit(d);
    CHECK(K.complex.vertices.size() == 1);
    CHECK(K.complex.faces.size() == 1);
}

TEST_CASE("colimit of a one-object diagram is isomorphic to the complex") {
    ComplexDiagram d;
    d.index = FinPoset::antichain(1);
    d.complexes = {triangle_boundary()};
    d.validate_and_close();
    auto K = colimit(d);
    CHECK(K.complex.vertices.size() == 3);
    CHECK(K.complex.faces.size() == 6);
    Fp f2(2);
    CHECK(simplicial_cohomology(K.complex, f2, 2) == simplicial_cohomology(d.complexes[0], f2, 2));
}

TEST_CASE("colimit of a filtration is the top complex") {
    auto pt = SimplicialComplex::from_maximal_faces({{"a"}});
    auto edge = SimplicialComplex::from_maximal_faces({{"a", "b"}});
    auto d = filtration({pt, edge, triangle_boundary()});
    auto K = colimit(d);
    Fp f3(3);
    CHECK(simplicial_cohomology(K.complex, f3, 2) == simplicial_cohomology(triangle_boundary(), f3, 2));
    CHECK(K.complex.faces.size() == triangle_boundary().faces.size());
}

TEST_CASE("cone_factor: stated examples") {
    // pushout diagram from above
    ComplexDiagram d;
    d.index = FinPoset::from_covers({"p", "q", "r"}, {{"r", "p"}, {"r", "q"}});
    auto pe = SimplicialComplex::from_maximal_faces({{"m", "a"}});
    auto qe = SimplicialComplex::from_maximal_faces({{"m", "b"}});
    auto re = SimplicialComplex::point("m");
    d.complexes.resize(3);
    d.complexes[d.index.index_of("p")] = pe;
    d.complexes[d.index.index_of("q")] = qe;
    d.complexes[d.index.index_of("r")] = re;
    d.maps[{d.index.index_of("r"), d.index.index_of("p")}] = simplicial_map_from_labels(re, pe, {});
    d.maps[{d.index.index_of("r"), d.index.index_of("q")}] = simplicial_map_from_labels(re, qe, {});
    d.validate_and_close();
    auto K = colimit(d);

    // cone = the colimit inclusions -> identity map
    auto phi = cone_factor(d, K, K.complex, K.inclusions);
    for (std::uint32_t v = 0; v < phi.vertex_map.size(); ++v) CHECK(phi.vertex_map[v] == v);

    // constant cone to a point -> constant map
    auto pt = SimplicialComplex::point("z");
    std::vector<SimplicialMap> cone;
    for (std::uint32_t i = 0; i < 3; ++i) {
        SimplicialMap m;
        m.vertex_map.assign(d.complexes[i].vertices.size(), 0);
        cone.push_back(m);
    }
    auto cphi = cone_factor(d, K, pt, cone);
    for (auto v : cphi.vertex_map) CHECK(v == 0);

    // embedding into a larger path a-m-b-c
    auto path = SimplicialComplex::from_maximal_faces({{"m", "a"}, {"m", "b"}, {"b", "c"}});
    std::vector<SimplicialMap> emb(3);
    emb[d.index.index_of("p")] = simplicial_map_from_labels(pe, path, {});
    emb[d.index.index_of("q")] = simplicial_map_from_labels(qe, path, {});
    emb[d.index.index_of("r")] = simplicial_map_from_labels(re, path, {});
    auto ephi = cone_factor(d, K, path, emb);
    // the evident embedding: each colimit vertex goes to the same-labelled path vertex
    for (std::uint32_t v = 0; v < K.complex.vertices.size(); ++v)
        CHECK(path.vertices[ephi.vertex_map[v]] == K.complex.vertices[v]);

    // incompatible cone rejected
    std::vector<SimplicialMap> bad = emb;
    bad[d.index.index_of("r")].vertex_map[0] = path.vertex_index("c");
    CHECK_THROWS_AS(cone_factor(d, K, path, bad), Error);
}
