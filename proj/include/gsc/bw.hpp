#pragma once

// Natural systems on finite categories, Baues-Wirsching cochain complexes,
// Roos complexes for higher limits, and the comparison pipelines: E2 pages
// against BW cohomology of the Hochschild natural system, and BW cohomology
// against higher limits of the Hochschild functor along homological
// epimorphisms.
//
// Chains are kept in the same orientation as the GS nerve (c_0 -> ... -> c_p);
// the BW coboundary is transcribed into that orientation so that, on the
// cochain-level Hochschild natural system, its matrix equals the simplicial
// differential of the double complex entry for entry.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gsc/gs.hpp"
#include "gsc/hochschild.hpp"

namespace gsc {

// F: Tw C -> vector spaces. Values are indexed by base morphisms (= objects
// of Tw C); the action of a Tw morphism (alpha, beta) is generated from the
// elementary actions of (alpha, 1) and (1, beta).
template <class F>
struct NaturalSystem {
    FinCategory base;
    TwistedArrowCat tw;
    std::vector<std::uint32_t> dims;  // per base morphism
    // elementary actions: post[alpha](f): F(f) -> F(alpha . f), pre[beta](f): F(f) -> F(f . beta)
    std::function<SparseMatrix<F>(std::uint32_t alpha, std::uint32_t f)> post;
    std::function<SparseMatrix<F>(std::uint32_t beta, std::uint32_t f)> pre;
};

template <class F>
SparseMatrix<F> natural_action(const NaturalSystem<F>& ns, std::uint32_t alpha, std::uint32_t beta,
                               std::uint32_t f_mor, const F& fld) {
    // (alpha, beta) = (alpha, 1) . (1, beta)
    auto first = ns.pre(beta, f_mor);
    std::uint32_t f_beta = ns.base.compose(f_mor, beta);
    auto second = ns.post(alpha, f_beta);
    return multiply(second, first, fld);
}

// Functor laws of the natural system over Tw C, asserted on all composable pairs.
template <class F>
void validate_natural_system(const NaturalSystem<F>& ns, const F& fld) {
    const auto& t = ns.tw.cat;
    for (std::uint32_t m = 0; m < t.morphisms.size(); ++m) {
        auto [a, b] = ns.tw.pair_of[m];
        auto act = natural_action(ns, a, b, t.morphisms[m].src, fld);
        if (t.is_identity(m)) {
            if (!act.equals(SparseMatrix<F>::identity(ns.dims[t.morphisms[m].src], fld), fld))
                throw Error("INPUT", "natural system: identity does not act as identity");
        }
    }
    for (std::uint32_t m2 = 0; m2 < t.morphisms.size(); ++m2)
        for (std::uint32_t m1 = 0; m1 < t.morphisms.size(); ++m1) {
            if (t.morphisms[m1].tgt != t.morphisms[m2].src) continue;
            auto c = t.compose(m2, m1);
            auto [a1, b1] = ns.tw.pair_of[m1];
            auto [a2, b2] = ns.tw.pair_of[m2];
            auto [ac, bc] = ns.tw.pair_of[c];
            auto lhs = natural_action(ns, ac, bc, t.morphisms[c].src, fld);
            auto rhs = multiply(natural_action(ns, a2, b2, t.morphisms[m2].src, fld),
                                natural_action(ns, a1, b1, t.morphisms[m1].src, fld), fld);
            if (!lhs.equals(rhs, fld)) throw Error("INPUT", "natural system: functor law fails on Tw C");
        }
}

template <class F>
NaturalSystem<F> constant_natural_system(const FinCategory& base, std::uint32_t dim, const F& fld) {
    NaturalSystem<F> ns;
    ns.base = base;
    ns.tw = twisted_arrow(base);
    ns.dims.assign(base.morphisms.size(), dim);
    auto id = [dim, fld](std::uint32_t, std::uint32_t) { return SparseMatrix<F>::identity(dim, fld); };
    ns.post = id;
    ns.pre = id;
    return ns;
}

// The BW cochain complex of a natural system over normalized chains, in the
// GS orientation: (delta G)^sigma = F(1,g_1) G^{d_0 sigma}
//   + sum_{r=1}^{p-1} (-1)^r G^{d_r sigma} + (-1)^p F(g_p,1) G^{d_p sigma}.
template <class F>
CochainComplexRep<F> bw_cochain_complex(const NaturalSystem<F>& ns, std::uint32_t n_max, const F& fld) {
    ns.base.require_loop_free();
    auto nv = nerve(ns.base, n_max + 1);
    std::vector<std::uint32_t> dims(n_max + 2, 0);
    std::vector<std::vector<std::uint32_t>> offs(n_max + 2);
    for (std::uint32_t p = 0; p <= n_max + 1; ++p) {
        for (std::uint32_t c = 0; c < nv.count(p); ++c) {
            offs[p].push_back(dims[p]);
            dims[p] += ns.dims[chain_composite(ns.base, nv.by_degree[p][c])];
        }
    }
    std::vector<SparseMatrix<F>> diffs;
    for (std::uint32_t p = 0; p + 1 <= n_max + 1; ++p) {
        std::vector<typename SparseMatrix<F>::Entry> tr;
        for (std::uint32_t c = 0; c < nv.count(p + 1); ++c) {
            const Chain& sigma = nv.by_degree[p + 1][c];
            for (std::uint32_t r = 0; r <= p + 1; ++r) {
                Chain face = nv.face(ns.base, sigma, r);
                std::uint32_t fc = nv.index_of(p, face);
                std::uint32_t fmor = chain_composite(ns.base, face);
                bool neg = (r % 2 == 1);
                SparseMatrix<F> block;
                if (r == 0) {
                    block = ns.pre(sigma.mors[0], fmor);
                } else if (r == p + 1) {
                    block = ns.post(sigma.mors[p], fmor);
                } else {
                    block = SparseMatrix<F>::identity(ns.dims[fmor], fld);
                }
                for (const auto& e : block.entries)
                    tr.push_back({offs[p + 1][c] + e.row, offs[p][fc] + e.col, neg ? fld.neg(e.val) : e.val});
            }
        }
        diffs.push_back(SparseMatrix<F>::from_triplets(dims[p + 1], dims[p], std::move(tr), fld));
    }
    return CochainComplexRep<F>(std::move(dims), std::move(diffs), fld);
}

template <class F>
std::vector<std::uint32_t> bw_cohomology(const NaturalSystem<F>& ns, std::uint32_t n_max, const F& fld) {
    return bw_cochain_complex(ns, n_max, fld).cohomology_dims(fld, n_max);
}

// Functors C -> vector spaces with explicit matrices.
template <class F>
struct FunctorRep {
    FinCategory base;
    bool covariant = true;
    std::vector<std::uint32_t> dims;      // per object
    std::vector<SparseMatrix<F>> on;      // per morphism: cov F(src)->F(tgt), contra F(tgt)->F(src)

    void validate(const F& fld) const {
        for (std::uint32_t m = 0; m < base.morphisms.size(); ++m) {
            std::uint32_t s = base.morphisms[m].src, t = base.morphisms[m].tgt;
            std::uint32_t from = covariant ? s : t, to = covariant ? t : s;
            if (on[m].cols != dims[from] || on[m].rows != dims[to])
                throw Error("INPUT", "functor: matrix shape mismatch");
            if (base.is_identity(m) && !on[m].equals(SparseMatrix<F>::identity(dims[s], fld), fld))
                throw Error("INPUT", "functor: identity must act as identity");
        }
        for (std::uint32_t g = 0; g < base.morphisms.size(); ++g)
            for (std::uint32_t f = 0; f < base.morphisms.size(); ++f) {
                if (!base.composable(g, f)) continue;
                auto gf = base.compose(g, f);
                auto lhs = covariant ? multiply(on[g], on[f], fld) : multiply(on[f], on[g], fld);
                if (!lhs.equals(on[gf], fld)) throw Error("INPUT", "functor: composition law fails");
            }
    }
};

template <class F>
FunctorRep<F> constant_functor(const FinCategory& base, std::uint32_t dim, bool covariant, const F& fld) {
    FunctorRep<F> fr;
    fr.base = base;
    fr.covariant = covariant;
    fr.dims.assign(base.objects.size(), dim);
    for (std::uint32_t m = 0; m < base.morphisms.size(); ++m)
        fr.on.push_back(SparseMatrix<F>::identity(dim, fld));
    return fr;
}

// Roos complex over normalized chains. Covariant: spaces F(c_n), last face
// transported; contravariant: spaces F(c_0), zeroth face transported.
template <class F>
CochainComplexRep<F> roos_complex(const FunctorRep<F>& fr, std::uint32_t n_max, const F& fld) {
    fr.base.require_loop_free();
    auto nv = nerve(fr.base, n_max + 1);
    std::vector<std::uint32_t> dims(n_max + 2, 0);
    std::vector<std::vector<std::uint32_t>> offs(n_max + 2);
    for (std::uint32_t p = 0; p <= n_max + 1; ++p)
        for (std::uint32_t c = 0; c < nv.count(p); ++c) {
            const Chain& ch = nv.by_degree[p][c];
            offs[p].push_back(dims[p]);
            dims[p] += fr.dims[fr.covariant ? ch.max_obj : ch.min_obj];
        }
    std::vector<SparseMatrix<F>> diffs;
    for (std::uint32_t p = 0; p + 1 <= n_max + 1; ++p) {
        std::vector<typename SparseMatrix<F>::Entry> tr;
        for (std::uint32_t c = 0; c < nv.count(p + 1); ++c) {
            const Chain& sigma = nv.by_degree[p + 1][c];
            for (std::uint32_t r = 0; r <= p + 1; ++r) {
                Chain face = nv.face(fr.base, sigma, r);
                std::uint32_t fc = nv.index_of(p, face);
                bool neg = (r % 2 == 1);
                SparseMatrix<F> block;
                if (fr.covariant && r == p + 1) {
                    block = fr.on[sigma.mors[p]];  // F(c_p -> c_{p+1})
                } else if (!fr.covariant && r == 0) {
                    block = fr.on[sigma.mors[0]];  // F(c_0 -> c_1): F(c_1) -> F(c_0)
                } else {
                    std::uint32_t obj = fr.covariant ? face.max_obj : face.min_obj;
                    block = SparseMatrix<F>::identity(fr.dims[obj], fld);
                }
                for (const auto& e : block.entries)
                    tr.push_back({offs[p + 1][c] + e.row, offs[p][fc] + e.col, neg ? fld.neg(e.val) : e.val});
            }
        }
        diffs.push_back(SparseMatrix<F>::from_triplets(dims[p + 1], dims[p], std::move(tr), fld));
    }
    return CochainComplexRep<F>(std::move(dims), std::move(diffs), fld);
}

template <class F>
std::vector<std::uint32_t> roos_cohomology(const FunctorRep<F>& fr, std::uint32_t n_max, const F& fld) {
    return roos_complex(fr, n_max, fld).cohomology_dims(fld, n_max);
}

// Higher limits over Tw C of a natural system, via the covariant Roos complex
// on the twisted arrow category (optional cross-check route).
template <class F>
std::vector<std::uint32_t> roos_on_twisted(const NaturalSystem<F>& ns, std::uint32_t n_max, const F& fld) {
    FunctorRep<F> fr;
    fr.base = ns.tw.cat;
    fr.covariant = true;
    fr.dims.resize(ns.tw.cat.objects.size());
    for (std::uint32_t f = 0; f < ns.tw.cat.objects.size(); ++f) fr.dims[f] = ns.dims[f];
    for (std::uint32_t m = 0; m < ns.tw.cat.morphisms.size(); ++m) {
        auto [a, b] = ns.tw.pair_of[m];
        fr.on.push_back(natural_action(ns, a, b, ns.tw.cat.morphisms[m].src, fld));
    }
    fr.validate(fld);
    return roos_complex(fr, n_max, fld).cohomology_dims(fld, n_max);
}

// ---- Hochschild natural systems ----

// Cochain-level system q |-> C^q(A(d), A(c)) on f: c -> d, with pre/post the
// scalar-restriction cochain maps. Used for the literal differential
// comparison against the double complex.
template <class F>
struct HHCochainSystem {
    NaturalSystem<F> ns;
    std::vector<HochschildComplex<F>> complexes;  // per base morphism
};

template <class F>
HHCochainSystem<F> hh_cochain_natural_system(const AlgebraPresheaf<F>& A, std::uint32_t q, bool normalized = true) {
    const F& fld = A.field();
    auto shared = std::make_shared<std::vector<HochschildComplex<F>>>();
    shared->resize(A.base.morphisms.size());
    for (std::uint32_t m = 0; m < A.base.morphisms.size(); ++m) {
        std::uint32_t c = A.base.morphisms[m].src, d = A.base.morphisms[m].tgt;
        AlgebraMorphism<F> comp{A.at[d], A.at[c], A.on[m]};
        (*shared)[m] = hochschild_complex(A.at[d], restrict_bimodule(diagonal_bimodule(A.at[c]), comp), q, normalized);
    }
    HHCochainSystem<F> out;
    out.ns.base = A.base;
    out.ns.tw = twisted_arrow(A.base);
    for (std::uint32_t m = 0; m < A.base.morphisms.size(); ++m) out.ns.dims.push_back((*shared)[m].rep.dims[q]);
    auto Acopy = A;
    out.ns.post = [shared, Acopy, q, fld](std::uint32_t alpha, std::uint32_t f) {
        // (alpha,1): C^q at f -> C^q at alpha.f; precompose arguments with A(alpha)
        std::uint32_t g = Acopy.base.compose(alpha, f);
        auto phi_w = arg_transport((*shared)[g], (*shared)[f], Acopy.on[alpha]);
        return cochain_map((*shared)[f], (*shared)[g], q, phi_w,
                           SparseMatrix<F>::identity((*shared)[f].coeffs.dim, fld));
    };
    out.ns.pre = [shared, Acopy, q, fld](std::uint32_t beta, std::uint32_t f) {
        // (1,beta): C^q at f -> C^q at f.beta; postcompose values with A(beta)
        std::uint32_t g = Acopy.base.compose(f, beta);
        return cochain_map((*shared)[f], (*shared)[g], q,
                           SparseMatrix<F>::identity((*shared)[g].args(), fld), Acopy.on[beta]);
    };
    out.complexes = *shared;
    return out;
}

// Cohomology-level natural system q |-> HH^q(A(d), A(c)).
template <class F>
NaturalSystem<F> hh_natural_system(const AlgebraPresheaf<F>& A, std::uint32_t q, bool normalized = true) {
    const F& fld = A.field();
    auto cl = std::make_shared<HHCochainSystem<F>>(hh_cochain_natural_system(A, q, normalized));
    auto bases = std::make_shared<std::vector<CohoBasis<F>>>();
    for (std::uint32_t m = 0; m < A.base.morphisms.size(); ++m)
        bases->push_back(hochschild_coho_basis(cl->complexes[m], q));

    NaturalSystem<F> ns;
    ns.base = A.base;
    ns.tw = cl->ns.tw;
    for (const auto& b : *bases) ns.dims.push_back(b.dim());

    auto on_coho = [fld](const SparseMatrix<F>& cmap, const CohoBasis<F>& from, const CohoBasis<F>& to) {
        std::vector<typename SparseMatrix<F>::Entry> tr;
        for (std::uint32_t j = 0; j < from.dim(); ++j) {
            auto coords = to.coords_of(cmap.apply(from.reps()[j], fld));
            if (!coords) throw Error("INPUT", "natural-system action does not preserve cocycles");
            for (std::uint32_t i = 0; i < to.dim(); ++i)
                if (!fld.is_zero((*coords)[i])) tr.push_back({i, j, (*coords)[i]});
        }
        return SparseMatrix<F>::from_triplets(to.dim(), from.dim(), std::move(tr), fld);
    };
    auto base = A.base;
    ns.post = [cl, bases, base, on_coho](std::uint32_t alpha, std::uint32_t f) {
        std::uint32_t g = base.compose(alpha, f);
        return on_coho(cl->ns.post(alpha, f), (*bases)[f], (*bases)[g]);
    };
    ns.pre = [cl, bases, base, on_coho](std::uint32_t beta, std::uint32_t f) {
        std::uint32_t g = base.compose(f, beta);
        return on_coho(cl->ns.pre(beta, f), (*bases)[f], (*bases)[g]);
    };
    return ns;
}

// Contravariant functor c |-> HH^q(A(c), A(c)) along certified homological
// epimorphisms; arrows act by the induced maps.
template <class F>
FunctorRep<F> hh_functor(const AlgebraPresheaf<F>& A, std::uint32_t q, std::uint32_t tor_bound = 1,
                         bool normalized = true) {
    const F& fld = A.field();
    FunctorRep<F> fr;
    fr.base = A.base;
    fr.covariant = false;
    for (std::uint32_t c = 0; c < A.base.objects.size(); ++c)
        fr.dims.push_back(hh_diag(A.at[c], q, normalized)[q]);
    fr.on.resize(A.base.morphisms.size());
    for (std::uint32_t m = 0; m < A.base.morphisms.size(); ++m) {
        std::uint32_t c = A.base.morphisms[m].src, d = A.base.morphisms[m].tgt;
        AlgebraMorphism<F> mor{A.at[d], A.at[c], A.on[m]};
        if (A.base.is_identity(m)) {
            fr.on[m] = SparseMatrix<F>::identity(fr.dims[c], fld);
            continue;
        }
        auto cert = certify_hom_epi(mor, tor_bound);
        if (!cert.certifies() || !cert.surjective)
            throw Error("NOT_CERTIFIED", "presheaf arrow is not a certified surjective homological epimorphism");
        fr.on[m] = hh_induced_map(mor, q, cert, normalized);
    }
    fr.validate(fld);  // functor laws: coherence of the induced maps
    return fr;
}

// ---- comparison reports ----

struct CompareCell {
    std::uint32_t p, q, lhs, rhs;
    bool ok;
};

struct CompareReport {
    std::string claim;
    std::vector<CompareCell> cells;
    bool all_ok = true;

    void add(std::uint32_t p, std::uint32_t q, std::uint32_t l, std::uint32_t r) {
        cells.push_back({p, q, l, r, l == r});
        all_ok = all_ok && l == r;
    }
};

// E2^{p,q} of the GS spectral sequence vs H^p_BW(C, HH^q natural system).
template <class F>
CompareReport e2_vs_bw(const AlgebraPresheaf<F>& A, std::uint32_t p_max, std::uint32_t q_max,
                       bool normalized = true) {
    const F& fld = A.field();
    CompareReport rep;
    rep.claim = "E2 page equals BW cohomology of the Hochschild natural system";
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), q_max, std::nullopt, normalized);
    auto pages = ss_pages(g);
    for (std::uint32_t q = 0; q <= q_max; ++q) {
        auto ns = hh_natural_system(A, q, normalized);
        validate_natural_system(ns, fld);
        auto bw = bw_cohomology(ns, p_max, fld);
        for (std::uint32_t p = 0; p <= p_max; ++p) rep.add(p, q, pages.e2.dim(p, q), bw[p]);
    }
    if (!rep.all_ok) throw Error("MISMATCH", "E2/BW comparison failed");
    return rep;
}

// BW cohomology of the HH natural system vs higher limits of the HH functor.
template <class F>
CompareReport selfduality_check(const AlgebraPresheaf<F>& A, std::uint32_t p_max, std::uint32_t q_max,
                                std::uint32_t tor_bound = 1, bool normalized = true) {
    const F& fld = A.field();
    CompareReport rep;
    rep.claim = "BW cohomology of the natural system equals the higher limits of the Hochschild functor";
    for (std::uint32_t q = 0; q <= q_max; ++q) {
        auto ns = hh_natural_system(A, q, normalized);
        auto bw = bw_cohomology(ns, p_max, fld);
        auto fr = hh_functor(A, q, tor_bound, normalized);
        auto lim = roos_cohomology(fr, p_max, fld);
        for (std::uint32_t p = 0; p <= p_max; ++p) rep.add(p, q, bw[p], lim[p]);
    }
    if (!rep.all_ok) throw Error("MISMATCH", "selfduality comparison failed");
    return rep;
}

}  // namespace gsc
