#pragma once

// Finite-dimensional associative unital algebras via structure constants,
// morphisms, bimodules, two-sided ideals, incidence algebras of posets,
// quotients, and limits of contravariant algebra diagrams.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsc/elim.hpp"
#include "gsc/fincat.hpp"
#include "gsc/simp.hpp"
#include "gsc/sparse.hpp"

namespace gsc {

template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;  // sorted by index

template <class F>
struct FiniteAlgebra {
    using Elem = typename F::Elem;

    F field;
    std::uint32_t dim = 0;
    std::vector<std::vector<SparseVec<F>>> mult;  // mult[i][j] = e_i * e_j in basis coordinates
    std::vector<Elem> unit;
    std::vector<std::string> basis_labels;

    SparseVec<F> basis_product(std::uint32_t i, std::uint32_t j) const { return mult[i][j]; }

    std::vector<Elem> mul_vec(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
        std::vector<Elem> out(dim, field.zero());
        for (std::uint32_t i = 0; i < dim; ++i) {
            if (field.is_zero(a[i])) continue;
            for (std::uint32_t j = 0; j < dim; ++j) {
                if (field.is_zero(b[j])) continue;
                Elem c = field.mul(a[i], b[j]);
                for (const auto& [k, v] : mult[i][j]) out[k] = field.add(out[k], field.mul(c, v));
            }
        }
        return out;
    }

    // matrix of x -> e_i * x
    SparseMatrix<F> left_mult_matrix(std::uint32_t i) const {
        std::vector<typename SparseMatrix<F>::Entry> tr;
        for (std::uint32_t j = 0; j < dim; ++j)
            for (const auto& [k, v] : mult[i][j]) tr.push_back({k, j, v});
        return SparseMatrix<F>::from_triplets(dim, dim, std::move(tr), field);
    }
    // matrix of x -> x * e_i
    SparseMatrix<F> right_mult_matrix(std::uint32_t i) const {
        std::vector<typename SparseMatrix<F>::Entry> tr;
        for (std::uint32_t j = 0; j < dim; ++j)
            for (const auto& [k, v] : mult[j][i]) tr.push_back({k, j, v});
        return SparseMatrix<F>::from_triplets(dim, dim, std::move(tr), field);
    }

    void validate() const {
        if (mult.size() != dim || unit.size() != dim) throw Error("INPUT", "algebra: table shape mismatch");
        for (const auto& row : mult)
            if (row.size() != dim) throw Error("INPUT", "algebra: table shape mismatch");
        // unit laws
        std::vector<Elem> e(dim, field.zero());
        for (std::uint32_t i = 0; i < dim; ++i) {
            std::fill(e.begin(), e.end(), field.zero());
            e[i] = field.one();
            auto le = mul_vec(unit, e), re = mul_vec(e, unit);
            for (std::uint32_t k = 0; k < dim; ++k)
                if (!field.eq(le[k], e[k]) || !field.eq(re[k], e[k]))
                    throw Error("INPUT", "algebra: unit law fails at basis " + std::to_string(i));
        }
        // associativity on basis triples
        for (std::uint32_t i = 0; i < dim; ++i)
            for (std::uint32_t j = 0; j < dim; ++j) {
                std::vector<Elem> eij(dim, field.zero());
                for (const auto& [k, v] : mult[i][j]) eij[k] = v;
                for (std::uint32_t l = 0; l < dim; ++l) {
                    std::vector<Elem> el(dim, field.zero());
                    el[l] = field.one();
                    auto lhs = mul_vec(eij, el);
                    std::vector<Elem> ejl(dim, field.zero());
                    for (const auto& [k, v] : mult[j][l]) ejl[k] = v;
                    std::vector<Elem> ei(dim, field.zero());
                    ei[i] = field.one();
                    auto rhs = mul_vec(ei, ejl);
                    for (std::uint32_t k = 0; k < dim; ++k)
                        if (!field.eq(lhs[k], rhs[k])) throw Error("INPUT", "algebra: associativity fails");
                }
            }
    }

    std::string label(std::uint32_t i) const {
        return i < basis_labels.size() ? basis_labels[i] : "e" + std::to_string(i);
    }
};

template <class F>
struct AlgebraMorphism {
    FiniteAlgebra<F> source, target;
    SparseMatrix<F> matrix;  // target.dim x source.dim

    std::vector<typename F::Elem> apply(const std::vector<typename F::Elem>& x) const {
        return matrix.apply(x, source.field);
    }

    void validate() const {
        const F& f = source.field;
        if (matrix.rows != target.dim || matrix.cols != source.dim) throw Error("INPUT", "morphism: shape mismatch");
        auto u = apply(source.unit);
        for (std::uint32_t k = 0; k < target.dim; ++k)
            if (!f.eq(u[k], target.unit[k])) throw Error("INPUT", "morphism: does not preserve the unit");
        for (std::uint32_t i = 0; i < source.dim; ++i)
            for (std::uint32_t j = 0; j < source.dim; ++j) {
                std::vector<typename F::Elem> ei(source.dim, f.zero()), ej(source.dim, f.zero());
                ei[i] = f.one();
                ej[j] = f.one();
                auto lhs = apply(source.mul_vec(ei, ej));
                auto rhs = target.mul_vec(apply(ei), apply(ej));
                for (std::uint32_t k = 0; k < target.dim; ++k)
                    if (!f.eq(lhs[k], rhs[k])) throw Error("INPUT", "morphism: not multiplicative");
            }
    }

    bool is_surjective() const { return rank(matrix, source.field) == target.dim; }
};

template <class F>
AlgebraMorphism<F> identity_morphism(const FiniteAlgebra<F>& a) {
    return AlgebraMorphism<F>{a, a, SparseMatrix<F>::identity(a.dim, a.field)};
}

template <class F>
AlgebraMorphism<F> compose(const AlgebraMorphism<F>& g, const AlgebraMorphism<F>& f) {
    // g after f
    return AlgebraMorphism<F>{f.source, g.target, multiply(g.matrix, f.matrix, f.source.field)};
}

// Bimodule over a single algebra; actions stored per algebra basis element.
template <class F>
struct Bimodule {
    using Elem = typename F::Elem;

    FiniteAlgebra<F> over;
    std::uint32_t dim = 0;
    std::vector<SparseMatrix<F>> left;   // left[i]: m -> e_i . m
    std::vector<SparseMatrix<F>> right;  // right[i]: m -> m . e_i
    std::vector<std::string> labels;

    std::vector<Elem> act_left(const std::vector<Elem>& a, const std::vector<Elem>& m) const {
        const F& f = over.field;
        std::vector<Elem> out(dim, f.zero());
        for (std::uint32_t i = 0; i < over.dim; ++i) {
            if (f.is_zero(a[i])) continue;
            auto t = left[i].apply(m, f);
            for (std::uint32_t k = 0; k < dim; ++k) out[k] = f.add(out[k], f.mul(a[i], t[k]));
        }
        return out;
    }
    std::vector<Elem> act_right(const std::vector<Elem>& m, const std::vector<Elem>& a) const {
        const F& f = over.field;
        std::vector<Elem> out(dim, f.zero());
        for (std::uint32_t i = 0; i < over.dim; ++i) {
            if (f.is_zero(a[i])) continue;
            auto t = right[i].apply(m, f);
            for (std::uint32_t k = 0; k < dim; ++k) out[k] = f.add(out[k], f.mul(a[i], t[k]));
        }
        return out;
    }

    void validate() const {
        const F& f = over.field;
        if (left.size() != over.dim || right.size() != over.dim) throw Error("INPUT", "bimodule: table size");
        // unit acts as identity
        SparseMatrix<F> lu = SparseMatrix<F>::zero(dim, dim), ru = SparseMatrix<F>::zero(dim, dim);
        for (std::uint32_t i = 0; i < over.dim; ++i) {
            lu = add(lu, scale(left[i], over.unit[i], f), f);
            ru = add(ru, scale(right[i], over.unit[i], f), f);
        }
        auto id = SparseMatrix<F>::identity(dim, f);
        if (!lu.equals(id, f) || !ru.equals(id, f)) throw Error("INPUT", "bimodule: unit does not act as identity");
        for (std::uint32_t i = 0; i < over.dim; ++i)
            for (std::uint32_t j = 0; j < over.dim; ++j) {
                // (e_i e_j) . m = e_i . (e_j . m)
                SparseMatrix<F> lhs = SparseMatrix<F>::zero(dim, dim);
                for (const auto& [k, v] : over.mult[i][j]) lhs = add(lhs, scale(left[k], v, f), f);
                if (!lhs.equals(multiply(left[i], left[j], f), f))
                    throw Error("INPUT", "bimodule: left action not associative");
                // m . (e_i e_j) = (m . e_i) . e_j
                SparseMatrix<F> rhs = SparseMatrix<F>::zero(dim, dim);
                for (const auto& [k, v] : over.mult[i][j]) rhs = add(rhs, scale(right[k], v, f), f);
                if (!rhs.equals(multiply(right[j], right[i], f), f))
                    throw Error("INPUT", "bimodule: right action not associative");
                // actions commute
                if (!multiply(left[i], right[j], f).equals(multiply(right[j], left[i], f), f))
                    throw Error("INPUT", "bimodule: actions do not commute");
            }
    }
};

template <class F>
struct TwoSidedIdeal {
    FiniteAlgebra<F> ambient;
    std::vector<std::vector<typename F::Elem>> basis;

    void validate() const {
        const F& f = ambient.field;
        SpanBuilder<F> span(ambient.dim, f);
        for (const auto& b : basis)
            if (!span.add(b)) throw Error("INPUT", "ideal: basis not independent");
        for (const auto& b : basis)
            for (std::uint32_t i = 0; i < ambient.dim; ++i) {
                std::vector<typename F::Elem> ei(ambient.dim, f.zero());
                ei[i] = f.one();
                if (!span.contains(ambient.mul_vec(ei, b)) || !span.contains(ambient.mul_vec(b, ei)))
                    throw Error("INPUT", "ideal: not closed under multiplication");
            }
    }
};

// ---- constructions ----

template <class F>
FiniteAlgebra<F> incidence_algebra(const FinPoset& p, const F& f) {
    FiniteAlgebra<F> a;
    a.field = f;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
    for (std::uint32_t x = 0; x < p.size(); ++x)
        for (std::uint32_t y = 0; y < p.size(); ++y)
            if (p.leq[x][y]) {
                id[{x, y}] = a.dim++;
                a.basis_labels.push_back("(" + p.elements[x] + "," + p.elements[y] + ")");
            }
    a.mult.assign(a.dim, std::vector<SparseVec<F>>(a.dim));
    for (const auto& [xy, i] : id)
        for (const auto& [yz, j] : id) {
            if (xy.second != yz.first) continue;
            a.mult[i][j] = {{id.at({xy.first, yz.second}), f.one()}};
        }
    a.unit.assign(a.dim, f.zero());
    for (std::uint32_t x = 0; x < p.size(); ++x) a.unit[id.at({x, x})] = f.one();
    a.validate();
    return a;
}

// Index of the basis pair (x,y) in incidence_algebra(p, .): iteration order of the map above.
inline std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> incidence_basis_index(const FinPoset& p) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
    std::uint32_t n = 0;
    for (std::uint32_t x = 0; x < p.size(); ++x)
        for (std::uint32_t y = 0; y < p.size(); ++y)
            if (p.leq[x][y]) id[{x, y}] = n++;
    return id;
}

// Restriction I(P) -> I(Q) along an order embedding Q -> P whose image is a
// lower ideal of P; emb[i] = index in P of Q's element i.
template <class F>
AlgebraMorphism<F> restriction_morphism_embedded(const FinPoset& p, const FinPoset& q,
                                                 const std::vector<std::uint32_t>& emb, const F& f) {
    if (emb.size() != q.size()) throw Error("INPUT", "restriction: embedding size mismatch");
    for (std::uint32_t i = 0; i < q.size(); ++i)
        for (std::uint32_t j = 0; j < q.size(); ++j)
            if (q.leq[i][j] != p.leq[emb[i]][emb[j]]) throw Error("INPUT", "restriction: not an order embedding");
    if (!p.is_lower_ideal(emb)) throw Error("NOT_LOWER_IDEAL", "restriction target is not a lower ideal");

    auto pid = incidence_basis_index(p);
    auto qid = incidence_basis_index(q);
    auto A = incidence_algebra(p, f);
    auto B = incidence_algebra(q, f);
    std::vector<std::int32_t> in_q(p.size(), -1);
    for (std::uint32_t i = 0; i < q.size(); ++i) in_q[emb[i]] = std::int32_t(i);
    std::vector<typename SparseMatrix<F>::Entry> tr;
    for (const auto& [xy, col] : pid) {
        auto [x, y] = xy;
        if (in_q[x] >= 0 && in_q[y] >= 0)
            tr.push_back({qid.at({std::uint32_t(in_q[x]), std::uint32_t(in_q[y])}), col, f.one()});
    }
    AlgebraMorphism<F> m{A, B, SparseMatrix<F>::from_triplets(B.dim, A.dim, std::move(tr), f)};
    m.validate();
    return m;
}

// Restriction where Q is literally a sub-poset of P given by shared element names.
template <class F>
AlgebraMorphism<F> restriction_morphism(const FinPoset& p, const FinPoset& q, const F& f) {
    std::vector<std::uint32_t> emb;
    for (const auto& e : q.elements) emb.push_back(p.index_of(e));
    return restriction_morphism_embedded(p, q, emb, f);
}

template <class F>
FiniteAlgebra<F> matrix_algebra(std::uint32_t n, const F& f) {
    if (n < 1) throw Error("INPUT", "matrix_algebra: n >= 1 required");
    FiniteAlgebra<F> a;
    a.field = f;
    a.dim = n * n;
    auto idx = [n](std::uint32_t i, std::uint32_t j) { return i * n + j; };
    a.mult.assign(a.dim, std::vector<SparseVec<F>>(a.dim));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            a.basis_labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            for (std::uint32_t k = 0; k < n; ++k)
                for (std::uint32_t l = 0; l < n; ++l)
                    if (j == k) a.mult[idx(i, j)][idx(k, l)] = {{idx(i, l), f.one()}};
        }
    a.unit.assign(a.dim, f.zero());
    for (std::uint32_t i = 0; i < n; ++i) a.unit[idx(i, i)] = f.one();
    a.validate();
    return a;
}

template <class F>
FiniteAlgebra<F> truncated_polynomial_algebra(std::uint32_t m, const F& f) {
    if (m < 1) throw Error("INPUT", "truncated_polynomial_algebra: m >= 1 required");
    FiniteAlgebra<F> a;
    a.field = f;
    a.dim = m;
    a.mult.assign(m, std::vector<SparseVec<F>>(m));
    for (std::uint32_t i = 0; i < m; ++i) {
        a.basis_labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        for (std::uint32_t j = 0; j < m; ++j)
            if (i + j < m) a.mult[i][j] = {{i + j, f.one()}};
    }
    a.unit.assign(m, f.zero());
    a.unit[0] = f.one();
    a.validate();
    return a;
}

template <class F>
TwoSidedIdeal<F> kernel_ideal(const AlgebraMorphism<F>& m) {
    TwoSidedIdeal<F> ideal{m.source, kernel_basis(m.matrix, m.source.field)};
    ideal.validate();
    return ideal;
}

template <class F>
Bimodule<F> diagonal_bimodule(const FiniteAlgebra<F>& a) {
    Bimodule<F> b;
    b.over = a;
    b.dim = a.dim;
    b.labels = a.basis_labels;
    for (std::uint32_t i = 0; i < a.dim; ++i) {
        b.left.push_back(a.left_mult_matrix(i));
        b.right.push_back(a.right_mult_matrix(i));
    }
    return b;
}

// Pull back a B-bimodule along f: A -> B (a . m . a' = f(a) m f(a')).
template <class F>
Bimodule<F> restrict_bimodule(const Bimodule<F>& m, const AlgebraMorphism<F>& f) {
    const F& fld = f.source.field;
    Bimodule<F> out;
    out.over = f.source;
    out.dim = m.dim;
    out.labels = m.labels;
    for (std::uint32_t i = 0; i < f.source.dim; ++i) {
        auto fi = f.matrix.column(i, fld);
        SparseMatrix<F> l = SparseMatrix<F>::zero(m.dim, m.dim), r = SparseMatrix<F>::zero(m.dim, m.dim);
        for (std::uint32_t k = 0; k < f.target.dim; ++k) {
            if (fld.is_zero(fi[k])) continue;
            l = add(l, scale(m.left[k], fi[k], fld), fld);
            r = add(r, scale(m.right[k], fi[k], fld), fld);
        }
        out.left.push_back(std::move(l));
        out.right.push_back(std::move(r));
    }
    return out;
}

// A two-sided ideal as a bimodule over the ambient algebra (basis = ideal basis).
template <class F>
Bimodule<F> ideal_bimodule(const TwoSidedIdeal<F>& ideal) {
    const F& f = ideal.ambient.field;
    std::uint32_t d = std::uint32_t(ideal.basis.size());
    // expression solver for coordinates in the ideal basis
    std::vector<typename SparseMatrix<F>::Entry> tr;
    for (std::uint32_t j = 0; j < d; ++j)
        for (std::uint32_t i = 0; i < ideal.ambient.dim; ++i)
            if (!f.is_zero(ideal.basis[j][i])) tr.push_back({i, j, ideal.basis[j][i]});
    Echelon<F> expr(SparseMatrix<F>::from_triplets(ideal.ambient.dim, d, std::move(tr), f), f, true);

    Bimodule<F> out;
    out.over = ideal.ambient;
    out.dim = d;
    for (std::uint32_t i = 0; i < ideal.ambient.dim; ++i) {
        std::vector<typename SparseMatrix<F>::Entry> lt, rt;
        std::vector<typename F::Elem> ei(ideal.ambient.dim, f.zero());
        ei[i] = f.one();
        for (std::uint32_t j = 0; j < d; ++j) {
            auto lcoords = expr.solve(ideal.ambient.mul_vec(ei, ideal.basis[j]));
            auto rcoords = expr.solve(ideal.ambient.mul_vec(ideal.basis[j], ei));
            if (!lcoords || !rcoords) throw Error("INPUT", "ideal_bimodule: not closed under action");
            for (std::uint32_t k = 0; k < d; ++k) {
                if (!f.is_zero((*lcoords)[k])) lt.push_back({k, j, (*lcoords)[k]});
                if (!f.is_zero((*rcoords)[k])) rt.push_back({k, j, (*rcoords)[k]});
            }
        }
        out.left.push_back(SparseMatrix<F>::from_triplets(d, d, std::move(lt), f));
        out.right.push_back(SparseMatrix<F>::from_triplets(d, d, std::move(rt), f));
    }
    return out;
}

// Quotient algebra A/I with the projection morphism and a linear section.
template <class F>
struct QuotientResult {
    FiniteAlgebra<F> algebra;
    AlgebraMorphism<F> projection;   // A -> A/I
    SparseMatrix<F> section;         // A/I -> A, chosen coset representatives
};

template <class F>
QuotientResult<F> quotient_algebra(const FiniteAlgebra<F>& a, const TwoSidedIdeal<F>& ideal) {
    const F& f = a.field;
    SpanBuilder<F> span(a.dim, f);
    for (const auto& b : ideal.basis) span.add(b);
    // coset representatives among original basis vectors, in order
    std::vector<std::uint32_t> reps;
    for (std::uint32_t i = 0; i < a.dim; ++i) {
        std::vector<typename F::Elem> ei(a.dim, f.zero());
        ei[i] = f.one();
        if (span.add(ei)) reps.push_back(i);
    }
    std::uint32_t bd = std::uint32_t(reps.size());

    // coordinates of x mod I: solve [reps | ideal] = x, take the reps part
    std::vector<typename SparseMatrix<F>::Entry> tr;
    for (std::uint32_t j = 0; j < bd; ++j) tr.push_back({reps[j], j, f.one()});
    for (std::uint32_t j = 0; j < ideal.basis.size(); ++j)
        for (std::uint32_t i = 0; i < a.dim; ++i)
            if (!f.is_zero(ideal.basis[j][i])) tr.push_back({i, bd + j, ideal.basis[j][i]});
    Echelon<F> expr(SparseMatrix<F>::from_triplets(a.dim, bd + std::uint32_t(ideal.basis.size()), std::move(tr), f),
                    f, true);
    auto mod_coords = [&](const std::vector<typename F::Elem>& x) {
        auto sol = expr.solve(x);
        if (!sol) throw Error("INPUT", "quotient: expression failed");
        return std::vector<typename F::Elem>(sol->begin(), sol->begin() + bd);
    };

    QuotientResult<F> out;
    out.algebra.field = f;
    out.algebra.dim = bd;
    for (auto r : reps) out.algebra.basis_labels.push_back(a.label(r) + "+I");
    out.algebra.mult.assign(bd, std::vector<SparseVec<F>>(bd));
    for (std::uint32_t i = 0; i < bd; ++i)
        for (std::uint32_t j = 0; j < bd; ++j) {
            std::vector<typename F::Elem> ei(a.dim, f.zero()), ej(a.dim, f.zero());
            ei[reps[i]] = f.one();
            ej[reps[j]] = f.one();
            auto c = mod_coords(a.mul_vec(ei, ej));
            for (std::uint32_t k = 0; k < bd; ++k)
                if (!f.is_zero(c[k])) out.algebra.mult[i][j].push_back({k, c[k]});
        }
    out.algebra.unit = mod_coords(a.unit);
    out.algebra.validate();

    std::vector<typename SparseMatrix<F>::Entry> ptr;
    for (std::uint32_t i = 0; i < a.dim; ++i) {
        std::vector<typename F::Elem> ei(a.dim, f.zero());
        ei[i] = f.one();
        auto c = mod_coords(ei);
        for (std::uint32_t k = 0; k < bd; ++k)
            if (!f.is_zero(c[k])) ptr.push_back({k, i, c[k]});
    }
    out.projection = AlgebraMorphism<F>{a, out.algebra, SparseMatrix<F>::from_triplets(bd, a.dim, std::move(ptr), f)};
    out.projection.validate();

    std::vector<typename SparseMatrix<F>::Entry> str;
    for (std::uint32_t j = 0; j < bd; ++j) str.push_back({reps[j], j, f.one()});
    out.section = SparseMatrix<F>::from_triplets(a.dim, bd, std::move(str), f);
    return out;
}

// Basis of the center {x : e_i x = x e_i for all i}.
template <class F>
std::vector<std::vector<typename F::Elem>> center_basis(const FiniteAlgebra<F>& a) {
    const F& f = a.field;
    std::vector<typename SparseMatrix<F>::Entry> tr;
    std::uint32_t row0 = 0;
    for (std::uint32_t i = 0; i < a.dim; ++i) {
        auto l = a.left_mult_matrix(i), r = a.right_mult_matrix(i);
        auto diff = add(l, scale(r, f.neg(f.one()), f), f);
        for (const auto& e : diff.entries) tr.push_back({row0 + e.row, e.col, e.val});
        row0 += a.dim;
    }
    return kernel_basis(SparseMatrix<F>::from_triplets(row0, a.dim, std::move(tr), f), f);
}

// ---- limits of contravariant algebra diagrams ----

template <class F>
struct LimitResult {
    FiniteAlgebra<F> algebra;
    std::vector<SparseMatrix<F>> projections;      // per index element: limit -> A_p
    std::vector<std::uint32_t> offsets;            // block start of A_p inside the product
    std::vector<std::vector<typename F::Elem>> tuples;  // basis as product-space vectors
};

// Algebras indexed by a poset, morphisms[q][p]: A_q -> A_p for p <= q (contravariant).
template <class F>
LimitResult<F> limit_algebra(const FinPoset& index, const std::vector<FiniteAlgebra<F>>& algebras,
                             const std::map<std::pair<std::uint32_t, std::uint32_t>, SparseMatrix<F>>& morphisms) {
    if (algebras.empty() || algebras.size() != index.size()) throw Error("INPUT", "limit: one algebra per element");
    const F& f = algebras[0].field;
    // functoriality of the given morphisms
    for (std::uint32_t p = 0; p < index.size(); ++p)
        for (std::uint32_t m = 0; m < index.size(); ++m)
            for (std::uint32_t q = 0; q < index.size(); ++q) {
                if (p == m || m == q || p == q) continue;
                if (!index.leq[p][m] || !index.leq[m][q]) continue;
                auto qp = multiply(morphisms.at({m, p}), morphisms.at({q, m}), f);
                if (!qp.equals(morphisms.at({q, p}), f))
                    throw Error("FUNCTORIALITY_VIOLATION", "limit: morphisms do not compose");
            }

    std::vector<std::uint32_t> off(index.size() + 1, 0);
    for (std::uint32_t p = 0; p < index.size(); ++p) off[p + 1] = off[p] + algebras[p].dim;
    std::uint32_t total = off[index.size()];

    // stacked constraints r_{q->p}(a_q) - a_p = 0
    std::vector<typename SparseMatrix<F>::Entry> tr;
    std::uint32_t row0 = 0;
    for (std::uint32_t p = 0; p < index.size(); ++p)
        for (std::uint32_t q = 0; q < index.size(); ++q) {
            if (p == q || !index.leq[p][q]) continue;
            const auto& m = morphisms.at({q, p});
            if (m.rows != algebras[p].dim || m.cols != algebras[q].dim)
                throw Error("INPUT", "limit: morphism shape mismatch");
            for (const auto& e : m.entries) tr.push_back({row0 + e.row, off[q] + e.col, e.val});
            for (std::uint32_t i = 0; i < algebras[p].dim; ++i)
                tr.push_back({row0 + i, off[p] + i, f.neg(f.one())});
            row0 += algebras[p].dim;
        }
    auto tuples = kernel_basis(SparseMatrix<F>::from_triplets(row0, total, std::move(tr), f), f);

    // expression solver on the tuple basis
    std::vector<typename SparseMatrix<F>::Entry> btr;
    for (std::uint32_t j = 0; j < tuples.size(); ++j)
        for (std::uint32_t i = 0; i < total; ++i)
            if (!f.is_zero(tuples[j][i])) btr.push_back({i, j, tuples[j][i]});
    Echelon<F> expr(SparseMatrix<F>::from_triplets(total, std::uint32_t(tuples.size()), std::move(btr), f), f, true);

    LimitResult<F> out;
    out.offsets = off;
    out.tuples = tuples;
    out.algebra.field = f;
    out.algebra.dim = std::uint32_t(tuples.size());
    for (std::uint32_t j = 0; j < tuples.size(); ++j) out.algebra.basis_labels.push_back("t" + std::to_string(j));
    out.algebra.mult.assign(out.algebra.dim, std::vector<SparseVec<F>>(out.algebra.dim));
    auto mul_tuple = [&](const std::vector<typename F::Elem>& x, const std::vector<typename F::Elem>& y) {
        std::vector<typename F::Elem> z(total, f.zero());
        for (std::uint32_t p = 0; p < index.size(); ++p) {
            std::vector<typename F::Elem> xp(x.begin() + off[p], x.begin() + off[p + 1]);
            std::vector<typename F::Elem> yp(y.begin() + off[p], y.begin() + off[p + 1]);
            auto zp = algebras[p].mul_vec(xp, yp);
            for (std::uint32_t k = 0; k < algebras[p].dim; ++k) z[off[p] + k] = zp[k];
        }
        return z;
    };
    for (std::uint32_t i = 0; i < out.algebra.dim; ++i)
        for (std::uint32_t j = 0; j < out.algebra.dim; ++j) {
            auto prod = mul_tuple(tuples[i], tuples[j]);
            auto coords = expr.solve(prod);
            if (!coords) throw Error("FUNCTORIALITY_VIOLATION", "limit: product escapes the compatible subspace");
            for (std::uint32_t k = 0; k < out.algebra.dim; ++k)
                if (!f.is_zero((*coords)[k])) out.algebra.mult[i][j].push_back({k, (*coords)[k]});
        }
    std::vector<typename F::Elem> unit_tuple(total, f.zero());
    for (std::uint32_t p = 0; p < index.size(); ++p)
        for (std::uint32_t k = 0; k < algebras[p].dim; ++k) unit_tuple[off[p] + k] = algebras[p].unit[k];
    auto ucoords = expr.solve(unit_tuple);
    if (!ucoords) throw Error("FUNCTORIALITY_VIOLATION", "limit: unit tuple not compatible");
    out.algebra.unit = *ucoords;
    out.algebra.validate();

    for (std::uint32_t p = 0; p < index.size(); ++p) {
        std::vector<typename SparseMatrix<F>::Entry> ptr;
        for (std::uint32_t j = 0; j < out.algebra.dim; ++j)
            for (std::uint32_t k = 0; k < algebras[p].dim; ++k)
                if (!f.is_zero(tuples[j][off[p] + k])) ptr.push_back({k, j, tuples[j][off[p] + k]});
        out.projections.push_back(
            SparseMatrix<F>::from_triplets(algebras[p].dim, out.algebra.dim, std::move(ptr), f));
    }
    return out;
}

// Incidence-algebra restriction along an injective simplicial map (its face
// image is a lower ideal): I(F(cod)) -> I(F(dom)).
template <class F>
AlgebraMorphism<F> face_restriction_morphism(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                             const SimplicialMap& m, const F& f) {
    if (!m.injective()) throw Error("NONINJECTIVE_MAP", "face restriction needs an injective map");
    auto pd = face_poset(dom);
    auto pc = face_poset(cod);
    std::vector<std::uint32_t> emb;  // embedding F(dom) -> F(cod) by labels of image faces
    for (const auto& fc : dom.faces) {
        std::vector<std::uint32_t> img;
        for (auto v : fc) img.push_back(m.vertex_map[v]);
        std::sort(img.begin(), img.end());
        emb.push_back(pc.index_of(cod.face_label(img)));
    }
    // pd elements enumerate dom.faces in the same (set) order as face_poset
    auto mor = restriction_morphism_embedded(pc, pd, emb, f);
    return mor;
}

// Theta: I(F(K)) -> lim_p I(F(Sigma_p)) given the colimit K of the diagram.
template <class F>
struct ThetaResult {
    LimitResult<F> limit;
    SparseMatrix<F> theta;  // limit coordinates of each I(F(K)) basis element
    bool is_isomorphism = false;
};

template <class F>
ThetaResult<F> theta_map(const ComplexDiagram& d, const ColimitResult& K, const F& f) {
    ThetaResult<F> out;
    std::vector<FiniteAlgebra<F>> algebras;
    for (const auto& s : d.complexes) algebras.push_back(incidence_algebra(face_poset(s), f));
    std::map<std::pair<std::uint32_t, std::uint32_t>, SparseMatrix<F>> morphisms;
    for (std::uint32_t p = 0; p < d.index.size(); ++p)
        for (std::uint32_t q = 0; q < d.index.size(); ++q) {
            if (p == q || !d.index.leq[p][q]) continue;
            morphisms[{q, p}] = face_restriction_morphism(d.complexes[p], d.complexes[q], d.map_for(p, q), f).matrix;
        }
    out.limit = limit_algebra(d.index, algebras, morphisms);

    auto AK = incidence_algebra(face_poset(K.complex), f);
    // per-index restriction of I(F(K)) composed into tuples
    std::vector<SparseMatrix<F>> rho;
    for (std::uint32_t p = 0; p < d.index.size(); ++p)
        rho.push_back(face_restriction_morphism(d.complexes[p], K.complex, K.inclusions[p], f).matrix);

    std::uint32_t total = out.limit.offsets.back();
    std::vector<typename SparseMatrix<F>::Entry> ttr;
    // tuple-space image of each basis vector of I(F(K)), then coordinates in the limit basis
    std::vector<typename SparseMatrix<F>::Entry> btr;
    for (std::uint32_t j = 0; j < out.limit.algebra.dim; ++j)
        for (std::uint32_t i = 0; i < total; ++i)
            if (!f.is_zero(out.limit.tuples[j][i])) btr.push_back({i, j, out.limit.tuples[j][i]});
    Echelon<F> expr(SparseMatrix<F>::from_triplets(total, out.limit.algebra.dim, std::move(btr), f), f, true);

    for (std::uint32_t col = 0; col < AK.dim; ++col) {
        std::vector<typename F::Elem> ek(AK.dim, f.zero());
        ek[col] = f.one();
        std::vector<typename F::Elem> tuple(total, f.zero());
        for (std::uint32_t p = 0; p < d.index.size(); ++p) {
            auto img = rho[p].apply(ek, f);
            for (std::uint32_t k = 0; k < img.size(); ++k) tuple[out.limit.offsets[p] + k] = img[k];
        }
        auto coords = expr.solve(tuple);
        if (!coords) throw Error("THETA_NOT_ISO", "restriction tuple is not compatible");
        for (std::uint32_t k = 0; k < out.limit.algebra.dim; ++k)
            if (!f.is_zero((*coords)[k])) ttr.push_back({k, col, (*coords)[k]});
    }
    out.theta = SparseMatrix<F>::from_triplets(out.limit.algebra.dim, AK.dim, std::move(ttr), f);

    // bijective + unital + multiplicative
    bool bijective = (AK.dim == out.limit.algebra.dim) && (rank(out.theta, f) == AK.dim);
    AlgebraMorphism<F> as_mor{AK, out.limit.algebra, out.theta};
    try {
        as_mor.validate();
        out.is_isomorphism = bijective;
    } catch (const Error&) {
        out.is_isomorphism = false;
    }
    if (!out.is_isomorphism) throw Error("THETA_NOT_ISO", "theta is not a unital algebra isomorphism");
    return out;
}

}  // namespace gsc
