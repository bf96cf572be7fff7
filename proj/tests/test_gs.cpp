#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsc/gs.hpp"
#include "test_util.hpp"

using namespace gsc;
using namespace gsc::testutil;

namespace {

AlgebraPresheaf<Fp> dual_to_k_on_arrow(const Fp& f) {
    auto dual = truncated_polynomial_algebra(2, f);
    auto k = truncated_polynomial_algebra(1, f);
    AlgebraMorphism<Fp> quot{dual, k, SparseMatrix<Fp>::from_triplets(1, 2, {{0, 0, 1}}, f)};
    quot.validate();
    return presheaf_on_arrow(quot);
}

}  // namespace

TEST_CASE("one-object base reduces to classical Hochschild cohomology") {
    Fp f5(5);
    auto A = constant_presheaf(FinPoset::antichain(1), matrix_algebra(2, f5));
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 2);
    CHECK(gs_cohomology(g, 2) == std::vector<std::uint32_t>{1, 0, 0});
    auto pages = ss_pages(g);
    CHECK(pages.e2.dim(0, 0) == 1);
    for (std::uint32_t q = 1; q <= 2; ++q) CHECK(pages.e2.dim(0, q) == 0);
}

TEST_CASE("cell dimensions over the arrow with singleton algebras") {
    Fp f2(2);
    auto k = truncated_polynomial_algebra(1, f2);
    auto A = constant_presheaf(FinPoset::chain(1), k);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 2, std::nullopt, /*hh_normalized=*/false);
    CHECK(g.dim_cell(0, 0) == 2);
    CHECK(g.dim_cell(1, 0) == 1);
    for (std::uint32_t q = 1; q <= 2; ++q) {
        CHECK(g.dim_cell(0, q) == 2);  // (dim k)^q * dim k per object
        CHECK(g.dim_cell(1, q) == 1);
    }
    CHECK(gs_cohomology(g, 2) == std::vector<std::uint32_t>{1, 0, 0});
}

TEST_CASE("cell dimension formula on a filtration presheaf (unnormalized cochains)") {
    Fp f2(2);
    auto d = filtration({point_a(), edge_ab()});
    auto A = presheaf_from_diagram(d, f2);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 2, std::nullopt, /*hh_normalized=*/false);
    // dims: A0 = 1, A1 = 5
    auto nv = nerve(A.base, 2);
    for (std::uint32_t p = 0; p <= g.p_max; ++p)
        for (std::uint32_t q = 0; q <= 3; ++q) {
            std::uint64_t expect = 0;
            for (const auto& ch : nv.by_degree[p]) {
                std::uint64_t aw = 1;
                for (std::uint32_t t = 0; t < q; ++t) aw *= A.at[ch.max_obj].dim;
                expect += aw * A.at[ch.min_obj].dim;
            }
            CHECK(g.dim_cell(p, q) == expect);
        }
}

TEST_CASE("E1 column dims are the chainwise Hochschild cohomology sums") {
    Fp f2(2);
    auto d = filtration({point_a(), edge_ab()});
    auto A = presheaf_from_diagram(d, f2);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 2);
    auto pages = ss_pages(g);
    auto nv = nerve(A.base, g.p_max);
    for (std::uint32_t p = 0; p <= g.p_max; ++p)
        for (std::uint32_t q = 0; q <= 2; ++q) {
            std::uint32_t expect = 0;
            for (const auto& ch : nv.by_degree[p]) {
                AlgebraMorphism<Fp> comp{A.at[ch.max_obj], A.at[ch.min_obj],
                                         ch.degree() == 0 ? SparseMatrix<Fp>::identity(A.at[ch.min_obj].dim, f2)
                                                          : A.on[chain_composite(A.base, ch)]};
                auto coeff = restrict_bimodule(diagonal_bimodule(A.at[ch.min_obj]), comp);
                expect += hh(A.at[ch.max_obj], coeff, q)[q];
            }
            CHECK(pages.e1.dim(p, q) == expect);
        }
}

TEST_CASE("closing example: constant singleton diagram on the square poset") {
    Fp f2(2);
    auto k = truncated_polynomial_algebra(1, f2);
    auto A = constant_presheaf(square_poset(), k);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 3);
    CHECK(gs_cohomology(g, 3) == std::vector<std::uint32_t>{1, 1, 0, 0});
}

TEST_CASE("closing example: adding a terminal element kills H^1") {
    Fp f2(2);
    auto k = truncated_polynomial_algebra(1, f2);
    auto A = constant_presheaf(square_poset_with_terminal(), k);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 3);
    CHECK(gs_cohomology(g, 3) == std::vector<std::uint32_t>{1, 0, 0, 0});
}

TEST_CASE("two-step filtration: GS cohomology is the top complex's cohomology") {
    Fp f2(2);
    auto d = filtration({point_a(), edge_ab()});
    auto A = presheaf_from_diagram(d, f2);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 2);
    CHECK(gs_cohomology(g, 2) == simplicial_cohomology(edge_ab(), f2, 2));
    auto pages = ss_pages(g);
    // terminal object: E2 concentrated in column 0 with HH of the top algebra
    auto top_hh = hh_diag(incidence_algebra(face_poset(edge_ab()), f2), 2);
    for (std::uint32_t q = 0; q <= 2; ++q) {
        CHECK(pages.e2.dim(0, q) == top_hh[q]);
        CHECK(pages.e2.dim(1, q) == 0);
    }
    auto rep = ss_consistency(pages, gs_cohomology(g, 2), 2);
    CHECK(rep.two_column_case);
    CHECK(rep.equality_holds);
}

TEST_CASE("free-category bound: E2 columns beyond p = 1 vanish over [2]") {
    Fp f2(2);
    auto d = filtration({point_a(), point_a(), edge_ab()});
    auto A = presheaf_from_diagram(d, f2);
    CHECK(is_free(A.base));
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 2);
    auto pages = ss_pages(g);
    for (std::uint32_t q = 0; q <= 2; ++q) CHECK(pages.e2.dim(2, q) == 0);
    auto rep = ss_consistency(pages, gs_cohomology(g, 2), 2);
    CHECK(rep.equality_holds);
}

TEST_CASE("non-hom-epi arrow presheaf still satisfies the E2 page structure") {
    Fp f3(3);
    auto A = dual_to_k_on_arrow(f3);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 2);
    auto pages = ss_pages(g);
    // base [1] has no 2-chains; consistency must hold in the two-column case
    auto rep = ss_consistency(pages, gs_cohomology(g, 2), 2);
    CHECK(rep.two_column_case);
    CHECK(rep.equality_holds);
}

TEST_CASE("identity-containing nerve agrees with the normalized one in low degrees") {
    Fp f3(3);
    auto A = dual_to_k_on_arrow(f3);
    auto M = diagonal_bimodule_presheaf(A);
    auto gn = gs_double_complex(A, M, 3);
    auto gu = gs_double_complex(A, M, 3, /*p_max=*/4, /*hh_normalized=*/true, /*nerve_normalized=*/false);
    auto hn = gs_cohomology(gn, 2);
    auto hu = gs_cohomology(gu, 2);
    CHECK(hn == hu);

    // and with unnormalized Hochschild cochains as well
    auto gu2 = gs_double_complex(A, M, 3, 4, /*hh_normalized=*/false, /*nerve_normalized=*/false);
    CHECK(gs_cohomology(gu2, 2) == hn);
}

TEST_CASE("results are independent of the thread count") {
    Fp f2(2);
    auto d = filtration({point_a(), edge_ab()});
    auto A = presheaf_from_diagram(d, f2);
    auto M = diagonal_bimodule_presheaf(A);
    auto g1 = gs_double_complex(A, M, 2, std::nullopt, true, true, 1);
    auto g3 = gs_double_complex(A, M, 2, std::nullopt, true, true, 3);
    CHECK(gs_cohomology(g1, 2) == gs_cohomology(g3, 2));
    auto p1 = ss_pages(g1, 1);
    auto p3 = ss_pages(g3, 3);
    CHECK(p1.e2.dims == p3.e2.dims);
    CHECK(p1.e1.dims == p3.e1.dims);
}

TEST_CASE("base mismatch and insufficient ranges are rejected") {
    Fp f2(2);
    auto k = truncated_polynomial_algebra(1, f2);
    auto A = constant_presheaf(FinPoset::chain(1), k);
    auto M = diagonal_bimodule_presheaf(constant_presheaf(FinPoset::chain(2), k));
    CHECK_THROWS_AS(gs_double_complex(A, M, 1), Error);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), 1);
    CHECK_THROWS_AS(gs_cohomology(g, 2), Error);
}
