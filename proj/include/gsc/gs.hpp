#pragma once

// The Gerstenhaber-Schack double complex of a presheaf of algebras on a
// finite loop-free category, its total-complex cohomology, and the pages
// E0/E1/E2 of the column-filtration spectral sequence.
//
// Cells: C^{p,q} = prod over normalized p-chains sigma of
//        Hom((A(max sigma))^{tensor q}, M(min sigma)),
// horizontal differential d_simp over the nerve faces (outer faces transport
// along the presheaf maps), vertical differential the Hochschild one. The
// total differential is D = d_simp + (-1)^p d_HH.

#include <cstdint>
#include <mutex>
#include <vector>

#include "gsc/fincat.hpp"
#include "gsc/hochschild.hpp"
#include "gsc/pool.hpp"
#include "gsc/simp.hpp"

namespace gsc {

template <class F>
struct AlgebraPresheaf {
    FinCategory base;
    std::vector<FiniteAlgebra<F>> at;   // per object
    std::vector<SparseMatrix<F>> on;    // per morphism f: c -> d, the map A(d) -> A(c)

    const F& field() const { return at.at(0).field; }

    void validate() const {
        if (at.size() != base.objects.size() || on.size() != base.morphisms.size())
            throw Error("INPUT", "presheaf: size mismatch");
        for (std::uint32_t m = 0; m < base.morphisms.size(); ++m) {
            AlgebraMorphism<F> mor{at[base.morphisms[m].tgt], at[base.morphisms[m].src], on[m]};
            mor.validate();
            if (base.is_identity(m) && !on[m].equals(SparseMatrix<F>::identity(at[base.morphisms[m].src].dim, field()), field()))
                throw Error("INPUT", "presheaf: identity morphism must map to the identity");
        }
        // contravariant functoriality: A(g∘f) = A(f)∘A(g)
        for (std::uint32_t g = 0; g < base.morphisms.size(); ++g)
            for (std::uint32_t f = 0; f < base.morphisms.size(); ++f) {
                if (!base.composable(g, f)) continue;
                auto gf = base.compose(g, f);
                if (!on[gf].equals(multiply(on[f], on[g], field()), field()))
                    throw Error("FUNCTORIALITY_VIOLATION", "presheaf does not respect composition");
            }
    }

    bool is_surjective() const {
        for (std::uint32_t m = 0; m < base.morphisms.size(); ++m)
            if (rank(on[m], field()) != at[base.morphisms[m].src].dim) return false;
        return true;
    }
};

template <class F>
struct BimodulePresheaf {
    FinCategory base;
    std::vector<Bimodule<F>> at;       // at[c] is a bimodule over A(c)
    std::vector<SparseMatrix<F>> on;   // per morphism f: c -> d, the map M(d) -> M(c)

    void validate(const AlgebraPresheaf<F>& A) const {
        const F& f = A.field();
        if (at.size() != base.objects.size() || on.size() != base.morphisms.size())
            throw Error("INPUT", "bimodule presheaf: size mismatch");
        for (std::uint32_t m = 0; m < base.morphisms.size(); ++m) {
            std::uint32_t c = base.morphisms[m].src, d = base.morphisms[m].tgt;
            // T: M(d) -> M(c) is a map of A(d)-bimodules, M(c) viewed via A(d) -> A(c)
            const auto& T = on[m];
            for (std::uint32_t i = 0; i < A.at[d].dim; ++i) {
                auto ai = A.on[m].column(i, f);  // image of e_i in A(c)
                SparseMatrix<F> lc = SparseMatrix<F>::zero(at[c].dim, at[c].dim);
                SparseMatrix<F> rc = SparseMatrix<F>::zero(at[c].dim, at[c].dim);
                for (std::uint32_t k = 0; k < A.at[c].dim; ++k) {
                    if (f.is_zero(ai[k])) continue;
                    lc = add(lc, scale(at[c].left[k], ai[k], f), f);
                    rc = add(rc, scale(at[c].right[k], ai[k], f), f);
                }
                if (!multiply(T, at[d].left[i], f).equals(multiply(lc, T, f), f) ||
                    !multiply(T, at[d].right[i], f).equals(multiply(rc, T, f), f))
                    throw Error("INPUT", "bimodule presheaf: map is not a bimodule morphism");
            }
        }
    }
};

template <class F>
BimodulePresheaf<F> diagonal_bimodule_presheaf(const AlgebraPresheaf<F>& A) {
    BimodulePresheaf<F> M;
    M.base = A.base;
    for (const auto& a : A.at) M.at.push_back(diagonal_bimodule(a));
    M.on = A.on;
    return M;
}

// Incidence-algebra presheaf of a diagram of complexes (injective maps).
template <class F>
AlgebraPresheaf<F> presheaf_from_diagram(const ComplexDiagram& d, const F& f) {
    AlgebraPresheaf<F> A;
    A.base = poset_to_category(d.index);
    for (const auto& s : d.complexes) A.at.push_back(incidence_algebra(face_poset(s), f));
    for (std::uint32_t m = 0; m < A.base.morphisms.size(); ++m) {
        std::uint32_t x = A.base.morphisms[m].src, y = A.base.morphisms[m].tgt;
        if (x == y) {
            A.on.push_back(SparseMatrix<F>::identity(A.at[x].dim, f));
        } else {
            A.on.push_back(face_restriction_morphism(d.complexes[x], d.complexes[y], d.map_for(x, y), f).matrix);
        }
    }
    A.validate();
    return A;
}

// Presheaf on [1] from a single algebra map phi: B -> A (object 0 gets A).
template <class F>
AlgebraPresheaf<F> presheaf_on_arrow(const AlgebraMorphism<F>& phi) {
    AlgebraPresheaf<F> A;
    A.base = poset_to_category(FinPoset::chain(1));
    A.at.resize(2);
    A.on.resize(3);
    // objects "0", "1"; A(1) = source, A(0) = target of phi
    std::uint32_t o0 = 0, o1 = 1;
    A.at[o0] = phi.target;
    A.at[o1] = phi.source;
    for (std::uint32_t m = 0; m < A.base.morphisms.size(); ++m) {
        if (A.base.is_identity(m))
            A.on[m] = SparseMatrix<F>::identity(A.at[A.base.morphisms[m].src].dim, phi.source.field);
        else
            A.on[m] = phi.matrix;
    }
    A.validate();
    return A;
}

// Constant presheaf with value a on every object of the poset's category.
template <class F>
AlgebraPresheaf<F> constant_presheaf(const FinPoset& p, const FiniteAlgebra<F>& a) {
    AlgebraPresheaf<F> A;
    A.base = poset_to_category(p);
    A.at.assign(p.size(), a);
    for (std::uint32_t m = 0; m < A.base.morphisms.size(); ++m)
        A.on.push_back(SparseMatrix<F>::identity(a.dim, a.field));
    A.validate();
    return A;
}

template <class F>
struct GSDoubleComplex {
    AlgebraPresheaf<F> A;
    BimodulePresheaf<F> M;
    std::uint32_t p_max = 0, q_max = 0;
    bool hh_normalized = true;
    bool nerve_normalized = true;
    NerveChains nv;

    // spaces exist for q <= q_max + 1; dv[p][q]: C^{p,q} -> C^{p,q+1} for q <= q_max;
    // dh[p][q]: C^{p,q} -> C^{p+1,q} for p < p_max, q <= q_max + 1
    std::vector<std::vector<std::uint32_t>> cell_dims;
    std::vector<std::vector<std::vector<std::uint32_t>>> offs;  // [p][q][chain]
    std::vector<std::vector<SparseMatrix<F>>> dv, dh;

    std::uint32_t dim_cell(std::uint32_t p, std::uint32_t q) const {
        if (p >= cell_dims.size() || q >= cell_dims[p].size()) return 0;
        return cell_dims[p][q];
    }
};

template <class F>
GSDoubleComplex<F> gs_double_complex(const AlgebraPresheaf<F>& A, const BimodulePresheaf<F>& M,
                                     std::uint32_t q_max, std::optional<std::uint32_t> p_max_opt = std::nullopt,
                                     bool hh_normalized = true, bool nerve_normalized = true,
                                     unsigned threads = 1) {
    const F& f = A.field();
    if (A.base.objects.size() != M.base.objects.size() || A.base.morphisms.size() != M.base.morphisms.size())
        throw Error("BASE_MISMATCH", "presheaves live on different categories");
    A.validate();
    M.validate(A);

    GSDoubleComplex<F> g;
    g.A = A;
    g.M = M;
    g.q_max = q_max;
    g.hh_normalized = hh_normalized;
    g.nerve_normalized = nerve_normalized;
    if (nerve_normalized) {
        g.p_max = p_max_opt ? *p_max_opt : A.base.longest_chain();
        if (g.p_max < A.base.longest_chain()) throw Error("INPUT", "p_max below the longest identity-free chain");
    } else {
        if (!p_max_opt) throw Error("NOT_LOOP_FREE", "identity-containing nerve needs an explicit degree cutoff");
        g.p_max = *p_max_opt;
    }
    if (nerve_normalized) A.base.require_loop_free();
    g.nv = nerve(A.base, g.p_max + 1, nerve_normalized);  // +1: faces of (p_max+1)-chains never used, safe bound

    // per-chain Hochschild complexes, flattened over (p, chain)
    std::vector<std::vector<HochschildComplex<F>>> hcs(g.p_max + 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> jobs;
    for (std::uint32_t p = 0; p <= g.p_max; ++p) {
        hcs[p].resize(g.nv.count(p));
        for (std::uint32_t c = 0; c < g.nv.count(p); ++c) jobs.push_back({p, c});
    }
    parallel_for(jobs.size(), threads, [&](std::size_t ji) {
        auto [p, c] = jobs[ji];
        const Chain& ch = g.nv.by_degree[p][c];
        AlgebraMorphism<F> comp{A.at[ch.max_obj], A.at[ch.min_obj], A.on[chain_composite(A.base, ch)]};
        auto coeff = restrict_bimodule(M.at[ch.min_obj], comp);
        hcs[p][c] = hochschild_complex(A.at[ch.max_obj], coeff, q_max, hh_normalized);
    });

    // cell dims and offsets
    g.cell_dims.assign(g.p_max + 1, std::vector<std::uint32_t>(q_max + 2, 0));
    g.offs.assign(g.p_max + 1, {});
    for (std::uint32_t p = 0; p <= g.p_max; ++p) {
        g.offs[p].assign(q_max + 2, {});
        for (std::uint32_t q = 0; q <= q_max + 1; ++q) {
            for (std::uint32_t c = 0; c < g.nv.count(p); ++c) {
                g.offs[p][q].push_back(g.cell_dims[p][q]);
                g.cell_dims[p][q] += hcs[p][c].rep.dims[q];
            }
        }
    }

    // vertical differential: block diagonal per chain
    g.dv.assign(g.p_max + 1, {});
    for (std::uint32_t p = 0; p <= g.p_max; ++p) {
        g.dv[p].resize(q_max + 1);
        for (std::uint32_t q = 0; q <= q_max; ++q) {
            std::vector<typename SparseMatrix<F>::Entry> tr;
            for (std::uint32_t c = 0; c < g.nv.count(p); ++c) {
                for (const auto& e : hcs[p][c].rep.diffs[q].entries)
                    tr.push_back({g.offs[p][q + 1][c] + e.row, g.offs[p][q][c] + e.col, e.val});
            }
            g.dv[p][q] =
                SparseMatrix<F>::from_triplets(g.cell_dims[p][q + 1], g.cell_dims[p][q], std::move(tr), f);
        }
    }

    // horizontal differential: faces of each (p+1)-chain
    g.dh.assign(g.p_max + 1, {});
    for (std::uint32_t p = 0; p + 1 <= g.p_max; ++p) {
        g.dh[p].resize(q_max + 2);
        for (std::uint32_t q = 0; q <= q_max + 1; ++q) {
            std::vector<typename SparseMatrix<F>::Entry> tr;
            for (std::uint32_t c = 0; c < g.nv.count(p + 1); ++c) {
                const Chain& sigma = g.nv.by_degree[p + 1][c];
                for (std::uint32_t r = 0; r <= p + 1; ++r) {
                    Chain face = g.nv.face(A.base, sigma, r);
                    std::uint32_t fc = g.nv.index_of(p, face);
                    bool neg = (r % 2 == 1);
                    SparseMatrix<F> block;
                    if (r == 0) {
                        // postcompose values with T = M(g_1): M(c_1) -> M(c_0)
                        std::uint32_t g1 = sigma.mors[0];
                        block = cochain_map(hcs[p][fc], hcs[p + 1][c], q,
                                            SparseMatrix<F>::identity(hcs[p + 1][c].args(), f), M.on[g1]);
                    } else if (r == p + 1) {
                        // precompose arguments with phi = A(g_{p+1})
                        std::uint32_t gl = sigma.mors[p];
                        auto phi_w = arg_transport(hcs[p + 1][c], hcs[p][fc], A.on[gl]);
                        block = cochain_map(hcs[p][fc], hcs[p + 1][c], q, phi_w,
                                            SparseMatrix<F>::identity(hcs[p + 1][c].coeffs.dim, f));
                    } else {
                        block = SparseMatrix<F>::identity(hcs[p][fc].rep.dims[q], f);
                    }
                    for (const auto& e : block.entries) {
                        auto val = neg ? f.neg(e.val) : e.val;
                        tr.push_back({g.offs[p + 1][q][c] + e.row, g.offs[p][q][fc] + e.col, val});
                    }
                }
            }
            g.dh[p][q] =
                SparseMatrix<F>::from_triplets(g.cell_dims[p + 1][q], g.cell_dims[p][q], std::move(tr), f);
        }
    }

    // structure checks: d_simp^2 = 0, d_HH^2 = 0 (already by construction), and
    // the signed vertical differential anti-commutes with the horizontal one
    for (std::uint32_t p = 0; p + 2 <= g.p_max; ++p)
        for (std::uint32_t q = 0; q <= q_max + 1; ++q)
            if (!multiply(g.dh[p + 1][q], g.dh[p][q], f).is_zero())
                throw Error("COMPOSABILITY_VIOLATION", "simplicial differential does not square to zero");
    for (std::uint32_t p = 0; p + 1 <= g.p_max; ++p)
        for (std::uint32_t q = 0; q < q_max; ++q) {
            // dh (.) dv_signed + dv_signed (.) dh = 0 with dv_signed = (-1)^p dv on column p
            auto a1 = multiply(g.dh[p][q + 1], scale(g.dv[p][q], (p % 2) ? f.neg(f.one()) : f.one(), f), f);
            auto a2 = multiply(scale(g.dv[p + 1][q], ((p + 1) % 2) ? f.neg(f.one()) : f.one(), f), g.dh[p][q], f);
            if (!add(a1, a2, f).is_zero())
                throw Error("COMPOSABILITY_VIOLATION", "differentials do not anti-commute");
        }
    return g;
}

// Total-complex cohomology dims for n <= n_max (D = d_simp + (-1)^p d_HH).
template <class F>
std::vector<std::uint32_t> gs_cohomology(const GSDoubleComplex<F>& g, std::uint32_t n_max) {
    const F& f = g.A.field();
    if (n_max > g.q_max) throw Error("INSUFFICIENT_Q_RANGE", "raise q_max to at least n_max");
    if (!g.nerve_normalized && n_max + 1 > g.p_max)
        throw Error("INSUFFICIENT_Q_RANGE", "identity-containing nerve truncated below total degree n_max+1");
    std::uint32_t top = n_max + 1;
    // block offsets of cell (p, q) inside T^n, ordered by p
    std::vector<std::vector<std::uint32_t>> toff(top + 1);
    std::vector<std::uint32_t> tdim(top + 1, 0);
    for (std::uint32_t n = 0; n <= top; ++n) {
        for (std::uint32_t p = 0; p <= std::min<std::uint32_t>(n, g.p_max); ++p) {
            std::uint32_t q = n - p;
            toff[n].push_back(tdim[n]);
            tdim[n] += g.dim_cell(p, q);
        }
    }
    std::vector<SparseMatrix<F>> diffs;
    for (std::uint32_t n = 0; n < top; ++n) {
        std::vector<typename SparseMatrix<F>::Entry> tr;
        for (std::uint32_t p = 0; p <= std::min<std::uint32_t>(n, g.p_max); ++p) {
            std::uint32_t q = n - p;
            std::uint32_t src = toff[n][p];
            // horizontal into (p+1, q)
            if (p + 1 <= g.p_max && p + 1 <= n + 1) {
                std::uint32_t dst = toff[n + 1][p + 1];
                for (const auto& e : g.dh[p][q].entries) tr.push_back({dst + e.row, src + e.col, e.val});
            }
            // vertical into (p, q+1), sign (-1)^p
            if (q <= g.q_max) {
                std::uint32_t dst = toff[n + 1][p];
                bool neg = (p % 2 == 1);
                for (const auto& e : g.dv[p][q].entries)
                    tr.push_back({dst + e.row, src + e.col, neg ? f.neg(e.val) : e.val});
            }
        }
        diffs.push_back(SparseMatrix<F>::from_triplets(tdim[n + 1], tdim[n], std::move(tr), f));
    }
    CochainComplexRep<F> total(std::move(tdim), std::move(diffs), f);
    return total.cohomology_dims(f, n_max);
}

struct SSPage {
    std::uint32_t r = 0;
    std::vector<std::vector<std::uint32_t>> dims;  // [p][q]

    std::uint32_t dim(std::uint32_t p, std::uint32_t q) const {
        if (p >= dims.size() || q >= dims[p].size()) return 0;
        return dims[p][q];
    }
};

template <class F>
struct SSPages {
    SSPage e0, e1, e2;
    std::vector<std::vector<CohoBasis<F>>> e1_basis;   // [p][q], representatives of E1 cells
    std::vector<std::vector<SparseMatrix<F>>> d1;      // [p][q]: E1^{p,q} -> E1^{p+1,q}
};

template <class F>
SSPages<F> ss_pages(const GSDoubleComplex<F>& g, unsigned threads = 1) {
    const F& f = g.A.field();
    SSPages<F> out;
    out.e0.r = 0;
    out.e1.r = 1;
    out.e2.r = 2;
    std::uint32_t P = g.p_max, Q = g.q_max;
    out.e0.dims.assign(P + 1, std::vector<std::uint32_t>(Q + 1, 0));
    out.e1.dims = out.e0.dims;
    out.e2.dims = out.e0.dims;
    out.e1_basis.assign(P + 1, {});
    for (std::uint32_t p = 0; p <= P; ++p) out.e1_basis[p].resize(Q + 1);

    // E0 and E1 (vertical cohomology with representatives)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
    for (std::uint32_t p = 0; p <= P; ++p)
        for (std::uint32_t q = 0; q <= Q; ++q) cells.push_back({p, q});
    std::mutex mu;
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        auto [p, q] = cells[i];
        const auto& d_out = g.dv[p][q];
        SparseMatrix<F> d_in = (q == 0) ? SparseMatrix<F>::zero(g.dim_cell(p, 0), 0) : g.dv[p][q - 1];
        CohoBasis<F> basis(d_out, d_in, f);
        std::lock_guard<std::mutex> lk(mu);
        out.e0.dims[p][q] = g.dim_cell(p, q);
        out.e1.dims[p][q] = basis.dim();
        out.e1_basis[p][q] = std::move(basis);
    });

    // d1[p][q]: induced by d_simp on vertical cohomology
    out.d1.assign(P + 1, {});
    for (std::uint32_t p = 0; p <= P; ++p) out.d1[p].resize(Q + 1);
    for (std::uint32_t p = 0; p <= P; ++p)
        for (std::uint32_t q = 0; q <= Q; ++q) {
            if (p + 1 > P) {
                out.d1[p][q] = SparseMatrix<F>::zero(0, out.e1.dims[p][q]);
                continue;
            }
            std::vector<typename SparseMatrix<F>::Entry> tr;
            const auto& src = out.e1_basis[p][q];
            const auto& dst = out.e1_basis[p + 1][q];
            for (std::uint32_t j = 0; j < src.dim(); ++j) {
                auto img = g.dh[p][q].apply(src.reps()[j], f);
                auto coords = dst.coords_of(img);
                if (!coords) throw Error("COMPOSABILITY_VIOLATION", "d1 image is not a vertical cocycle");
                for (std::uint32_t i = 0; i < dst.dim(); ++i)
                    if (!f.is_zero((*coords)[i])) tr.push_back({i, j, (*coords)[i]});
            }
            out.d1[p][q] = SparseMatrix<F>::from_triplets(dst.dim(), src.dim(), std::move(tr), f);
        }

    // E2 from d1 ranks
    for (std::uint32_t p = 0; p <= P; ++p)
        for (std::uint32_t q = 0; q <= Q; ++q) {
            std::uint32_t r_out = out.d1[p][q].nnz() ? rank(out.d1[p][q], f) : 0;
            std::uint32_t r_in = (p == 0 || !out.d1[p - 1][q].nnz()) ? 0 : rank(out.d1[p - 1][q], f);
            out.e2.dims[p][q] = out.e1.dims[p][q] - r_out - r_in;
        }
    return out;
}

struct ConsistencyReport {
    bool two_column_case = false;      // E2 supported in columns {0,1} (or a single column)
    bool equality_holds = false;       // dims of H^n(Tot) match the E2 diagonal sums
    bool possible_higher_differentials = false;
    std::vector<std::uint32_t> total_dims, e2_diagonal_sums;
};

template <class F>
ConsistencyReport ss_consistency(const SSPages<F>& pages, const std::vector<std::uint32_t>& gs_dims,
                                 std::uint32_t n_max) {
    ConsistencyReport rep;
    std::uint32_t P = std::uint32_t(pages.e2.dims.size()) - 1;
    bool beyond1 = false;
    for (std::uint32_t p = 2; p <= P; ++p)
        for (std::uint32_t q = 0; q < pages.e2.dims[p].size(); ++q)
            if (pages.e2.dims[p][q] != 0) beyond1 = true;
    rep.two_column_case = !beyond1;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        std::uint32_t s = 0;
        for (std::uint32_t p = 0; p <= std::min(P, n); ++p) s += pages.e2.dim(p, n - p);
        rep.e2_diagonal_sums.push_back(s);
        rep.total_dims.push_back(gs_dims.at(n));
    }
    if (rep.two_column_case) {
        rep.equality_holds = rep.total_dims == rep.e2_diagonal_sums;
        if (!rep.equality_holds)
            throw Error("CONSISTENCY_VIOLATION",
                        "collapsed spectral sequence disagrees with the total cohomology");
    } else {
        rep.possible_higher_differentials = true;
        for (std::uint32_t n = 0; n <= n_max; ++n)
            if (rep.total_dims[n] > rep.e2_diagonal_sums[n])
                throw Error("CONSISTENCY_VIOLATION", "total cohomology exceeds the E2 bound");
        rep.equality_holds = rep.total_dims == rep.e2_diagonal_sums;
    }
    return rep;
}

}  // namespace gsc
