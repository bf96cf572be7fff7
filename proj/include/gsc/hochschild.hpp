#pragma once

// Hochschild cochain complexes and cohomology, restriction maps, Tor via the
// bar complex, homological-epimorphism certificates, induced maps on HH along
// surjective homological epimorphisms, and the long exact sequence of a
// homological ideal.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsc/alg.hpp"
#include "gsc/complex.hpp"

namespace gsc {

// Cochains C^q = Hom(V^{tensor q}, M) where V is either the full algebra
// (unnormalized) or the complement W of k·1 spanned by all basis vectors
// except one unit-supported one (normalized). Flat index: args-major,
// module-minor.
template <class F>
struct HochschildComplex {
    FiniteAlgebra<F> algebra;
    Bimodule<F> coeffs;
    std::uint32_t q_max = 0;
    bool normalized = true;
    std::vector<std::uint32_t> arg_basis;  // algebra basis indices serving as arguments
    CochainComplexRep<F> rep;              // dims 0..q_max+1, diffs d^0..d^{q_max}

    std::uint32_t args() const { return std::uint32_t(arg_basis.size()); }
};

// Complement choice: all basis vectors except the first with nonzero unit coordinate.
template <class F>
std::uint32_t unit_support_index(const FiniteAlgebra<F>& a) {
    for (std::uint32_t i = 0; i < a.dim; ++i)
        if (!a.field.is_zero(a.unit[i])) return i;
    throw Error("INPUT", "algebra unit is zero");
}

// Projection A -> W along k·1 in coordinates: v - (v[jstar]/unit[jstar]) * unit.
template <class F>
std::vector<typename F::Elem> project_off_unit(const FiniteAlgebra<F>& a, std::uint32_t jstar,
                                               std::vector<typename F::Elem> v) {
    const F& f = a.field;
    typename F::Elem lam = f.div(v[jstar], a.unit[jstar]);
    for (std::uint32_t i = 0; i < a.dim; ++i) v[i] = f.sub(v[i], f.mul(lam, a.unit[i]));
    return v;
}

template <class F>
HochschildComplex<F> hochschild_complex(const FiniteAlgebra<F>& a, const Bimodule<F>& m, std::uint32_t q_max,
                                        bool normalized) {
    const F& f = a.field;
    HochschildComplex<F> hc;
    hc.algebra = a;
    hc.coeffs = m;
    hc.q_max = q_max;
    hc.normalized = normalized;

    std::uint32_t jstar = normalized ? unit_support_index(a) : UINT32_MAX;
    for (std::uint32_t i = 0; i < a.dim; ++i)
        if (!normalized || i != jstar) hc.arg_basis.push_back(i);
    const std::uint32_t w = hc.args();
    const std::uint32_t md = m.dim;

    // slot of an algebra basis index among the arguments (w-index)
    std::vector<std::int32_t> slot(a.dim, -1);
    for (std::uint32_t s = 0; s < w; ++s) slot[hc.arg_basis[s]] = std::int32_t(s);

    // left/right action expansions per argument slot
    std::vector<std::vector<SparseVec<F>>> lact(w, std::vector<SparseVec<F>>(md));
    std::vector<std::vector<SparseVec<F>>> ract(w, std::vector<SparseVec<F>>(md));
    for (std::uint32_t s = 0; s < w; ++s) {
        std::uint32_t i = hc.arg_basis[s];
        for (const auto& e : m.left[i].entries) lact[s][e.col].push_back({e.row, e.val});
        for (const auto& e : m.right[i].entries) ract[s][e.col].push_back({e.row, e.val});
    }

    // comult[k] = list of (a-slot, b-slot, coeff of arg k in the (projected) product)
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>>> comult(w);
    for (std::uint32_t sa = 0; sa < w; ++sa)
        for (std::uint32_t sb = 0; sb < w; ++sb) {
            std::vector<typename F::Elem> prod(a.dim, f.zero());
            for (const auto& [k, v] : a.mult[hc.arg_basis[sa]][hc.arg_basis[sb]]) prod[k] = v;
            if (normalized) prod = project_off_unit(a, jstar, std::move(prod));
            for (std::uint32_t k = 0; k < a.dim; ++k) {
                if (f.is_zero(prod[k])) continue;
                if (slot[k] < 0) throw Error("INPUT", "projected product escapes the complement");
                comult[std::uint32_t(slot[k])].push_back({sa, sb, prod[k]});
            }
        }

    // dims
    std::vector<std::uint32_t> dims(q_max + 2);
    {
        std::uint64_t pw = 1;
        for (std::uint32_t q = 0; q <= q_max + 1; ++q) {
            std::uint64_t d = pw * md;
            if (d > 0x7fffffffull) throw Error("INPUT", "cochain space too large");
            dims[q] = std::uint32_t(d);
            pw *= w;
        }
    }

    std::vector<SparseMatrix<F>> diffs;
    std::vector<std::uint32_t> tuple;
    for (std::uint32_t q = 0; q <= q_max; ++q) {
        using E = typename SparseMatrix<F>::Entry;
        std::vector<E> tr;
        // enumerate columns (i_1..i_q, u)
        tuple.assign(q, 0);
        std::uint64_t wq = 1;
        for (std::uint32_t t = 0; t < q; ++t) wq *= w;
        for (std::uint64_t code = 0; code < wq; ++code) {
            // decode column tuple (big-endian)
            std::uint64_t c = code;
            for (std::uint32_t t = q; t-- > 0;) {
                tuple[t] = std::uint32_t(c % w);
                c /= w;
            }
            std::uint32_t colbase = std::uint32_t(code * md);
            auto flat_out = [&](const std::vector<std::uint32_t>& out_tuple, std::uint32_t u) {
                std::uint64_t fl = 0;
                for (auto s : out_tuple) fl = fl * w + s;
                return std::uint32_t(fl * md + u);
            };
            std::vector<std::uint32_t> out_tuple(q + 1);
            for (std::uint32_t u = 0; u < md; ++u) {
                std::uint32_t col = colbase + u;
                // first face: a . f(...)
                for (std::uint32_t s = 0; s < w; ++s) {
                    if (lact[s][u].empty()) continue;
                    out_tuple[0] = s;
                    for (std::uint32_t t = 0; t < q; ++t) out_tuple[t + 1] = tuple[t];
                    for (const auto& [v, cval] : lact[s][u]) tr.push_back({flat_out(out_tuple, v), col, cval});
                }
                // inner faces
                for (std::uint32_t t = 1; t <= q; ++t) {
                    bool neg = (t % 2 == 1);
                    for (const auto& [sa, sb, cval] : comult[tuple[t - 1]]) {
                        for (std::uint32_t x = 0; x < t - 1; ++x) out_tuple[x] = tuple[x];
                        out_tuple[t - 1] = sa;
                        out_tuple[t] = sb;
                        for (std::uint32_t x = t; x < q; ++x) out_tuple[x + 1] = tuple[x];
                        tr.push_back({flat_out(out_tuple, u), col, neg ? f.neg(cval) : cval});
                    }
                }
                // last face: f(...) . a
                bool lneg = ((q + 1) % 2 == 1);
                for (std::uint32_t s = 0; s < w; ++s) {
                    if (ract[s][u].empty()) continue;
                    for (std::uint32_t t = 0; t < q; ++t) out_tuple[t] = tuple[t];
                    out_tuple[q] = s;
                    for (const auto& [v, cval] : ract[s][u])
                        tr.push_back({flat_out(out_tuple, v), col, lneg ? f.neg(cval) : cval});
                }
            }
        }
        diffs.push_back(SparseMatrix<F>::from_triplets(dims[q + 1], dims[q], std::move(tr), f));
    }
    hc.rep = CochainComplexRep<F>(std::move(dims), std::move(diffs), f);
    return hc;
}

// dims of HH^q(A, M) for q <= q_max
template <class F>
std::vector<std::uint32_t> hh(const FiniteAlgebra<F>& a, const Bimodule<F>& m, std::uint32_t q_max,
                              bool normalized = true) {
    auto hc = hochschild_complex(a, m, q_max, normalized);
    return hc.rep.cohomology_dims(a.field, q_max);
}

template <class F>
std::vector<std::uint32_t> hh_diag(const FiniteAlgebra<F>& a, std::uint32_t q_max, bool normalized = true) {
    return hh(a, diagonal_bimodule(a), q_max, normalized);
}

template <class F>
CohoBasis<F> hochschild_coho_basis(const HochschildComplex<F>& hc, std::uint32_t q) {
    if (q > hc.q_max) throw Error("INPUT", "degree beyond complex range");
    const auto& d_out = hc.rep.diffs[q];
    SparseMatrix<F> d_in = (q == 0) ? SparseMatrix<F>::zero(hc.rep.dims[0], 0) : hc.rep.diffs[q - 1];
    return CohoBasis<F>(d_out, d_in, hc.algebra.field);
}

// Matrix of the first-argument transport W_src -> W_tgt induced by an
// algebra map g: src -> tgt of the argument algebras (projected off the unit).
template <class F>
SparseMatrix<F> arg_transport(const HochschildComplex<F>& from, const HochschildComplex<F>& to,
                              const SparseMatrix<F>& alg_map) {
    // alg_map: from.algebra -> to.algebra on coordinates; result: to-args x from-args
    const F& f = from.algebra.field;
    std::vector<typename SparseMatrix<F>::Entry> tr;
    std::uint32_t jt = to.normalized ? unit_support_index(to.algebra) : UINT32_MAX;
    std::vector<std::int32_t> slot(to.algebra.dim, -1);
    for (std::uint32_t s = 0; s < to.args(); ++s) slot[to.arg_basis[s]] = std::int32_t(s);
    for (std::uint32_t i = 0; i < from.args(); ++i) {
        std::vector<typename F::Elem> e(from.algebra.dim, f.zero());
        e[from.arg_basis[i]] = f.one();
        auto img = alg_map.apply(e, f);
        if (to.normalized) img = project_off_unit(to.algebra, jt, std::move(img));
        for (std::uint32_t k = 0; k < to.algebra.dim; ++k) {
            if (f.is_zero(img[k])) continue;
            if (slot[k] < 0) throw Error("INPUT", "transport escapes the complement");
            tr.push_back({std::uint32_t(slot[k]), i, img[k]});
        }
    }
    return SparseMatrix<F>::from_triplets(to.args(), from.args(), std::move(tr), f);
}

// Cochain map C^q(from) -> C^q(to) precomposing arguments with arg_map
// (to-args -> from-args backwards: arg_map maps to's arguments into from's)
// and postcomposing values with val_map.
template <class F>
SparseMatrix<F> cochain_map(const HochschildComplex<F>& from, const HochschildComplex<F>& to, std::uint32_t q,
                            const SparseMatrix<F>& arg_map_to_from, const SparseMatrix<F>& val_map) {
    const F& f = from.algebra.field;
    auto args = kron_power(arg_map_to_from.transpose(), q, f);
    auto m = kron(args, val_map, f);
    if (m.cols != from.rep.dims[q] || m.rows != to.rep.dims[q])
        throw Error("INPUT", "cochain map shape mismatch at degree " + std::to_string(q));
    return m;
}

// Restriction along f: B -> A of the first argument: C^*(A, M) -> C^*(B, M|_B)
// in each degree <= q_max; commutation with the differentials is asserted.
template <class F>
std::vector<SparseMatrix<F>> hh_restrict_first_arg(const AlgebraMorphism<F>& f_mor, const Bimodule<F>& m,
                                                   std::uint32_t q_max, bool normalized = true) {
    const F& f = f_mor.source.field;
    auto ca = hochschild_complex(f_mor.target, m, q_max, normalized);
    auto mb = restrict_bimodule(m, f_mor);
    auto cb = hochschild_complex(f_mor.source, mb, q_max, normalized);
    auto phi_w = arg_transport(cb, ca, f_mor.matrix);  // B-args -> A-args
    std::vector<SparseMatrix<F>> maps;
    auto idm = SparseMatrix<F>::identity(m.dim, f);
    for (std::uint32_t q = 0; q <= q_max; ++q) maps.push_back(cochain_map(ca, cb, q, phi_w, idm));
    for (std::uint32_t q = 0; q < q_max; ++q) {
        auto lhs = multiply(maps[q + 1], ca.rep.diffs[q], f);
        auto rhs = multiply(cb.rep.diffs[q], maps[q], f);
        if (!lhs.equals(rhs, f)) throw Error("INPUT", "restriction does not commute with differentials");
    }
    return maps;
}

// ---- Tor via the (normalized) two-sided bar complex ----

// dims of Tor_i^A(B, B) for 0 <= i <= n_max along f: A -> B.
template <class F>
std::vector<std::uint32_t> tor(const AlgebraMorphism<F>& fm, std::uint32_t n_max) {
    const F& f = fm.source.field;
    const auto& A = fm.source;
    const auto& B = fm.target;
    std::uint32_t jstar = unit_support_index(A);
    std::vector<std::uint32_t> args;
    for (std::uint32_t i = 0; i < A.dim; ++i)
        if (i != jstar) args.push_back(i);
    const std::uint32_t w = std::uint32_t(args.size());
    const std::uint32_t bd = B.dim;

    // phi(w_s) in B coordinates
    std::vector<std::vector<typename F::Elem>> phi(w);
    for (std::uint32_t s = 0; s < w; ++s) {
        std::vector<typename F::Elem> e(A.dim, f.zero());
        e[args[s]] = f.one();
        phi[s] = fm.matrix.apply(e, f);
    }
    // left multiplications b * phi(w_s) and phi(w_s) * b expanded over B
    std::vector<std::vector<SparseVec<F>>> lmul(w, std::vector<SparseVec<F>>(bd));
    std::vector<std::vector<SparseVec<F>>> rmul(w, std::vector<SparseVec<F>>(bd));
    for (std::uint32_t s = 0; s < w; ++s)
        for (std::uint32_t b = 0; b < bd; ++b) {
            std::vector<typename F::Elem> eb(bd, f.zero());
            eb[b] = f.one();
            auto lv = B.mul_vec(eb, phi[s]);  // b * phi
            auto rv = B.mul_vec(phi[s], eb);  // phi * b
            for (std::uint32_t k = 0; k < bd; ++k) {
                if (!f.is_zero(lv[k])) lmul[s][b].push_back({k, lv[k]});
                if (!f.is_zero(rv[k])) rmul[s][b].push_back({k, rv[k]});
            }
        }
    // inner projected products as in the cochain complex
    std::vector<std::int32_t> slot(A.dim, -1);
    for (std::uint32_t s = 0; s < w; ++s) slot[args[s]] = std::int32_t(s);
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>>> mult_w(w * w);
    for (std::uint32_t sa = 0; sa < w; ++sa)
        for (std::uint32_t sb = 0; sb < w; ++sb) {
            std::vector<typename F::Elem> prod(A.dim, f.zero());
            for (const auto& [k, v] : A.mult[args[sa]][args[sb]]) prod[k] = v;
            prod = project_off_unit(A, jstar, std::move(prod));
            for (std::uint32_t k = 0; k < A.dim; ++k)
                if (!f.is_zero(prod[k]))
                    mult_w[sa * w + sb].push_back({std::uint32_t(slot[k]), 0, prod[k]});
        }

    // C_n = B (x) W^{(x)n} (x) B, flat index ((b*w^n + tuple)*bd + b')
    std::vector<std::uint32_t> dims(n_max + 2);
    {
        std::uint64_t pw = 1;
        for (std::uint32_t n = 0; n <= n_max + 1; ++n) {
            std::uint64_t d = std::uint64_t(bd) * bd * pw;
            if (d > 0x7fffffffull) throw Error("INPUT", "bar space too large");
            dims[n] = std::uint32_t(d);
            pw *= w;
        }
    }

    // boundaries first, then homology dims
    std::vector<std::uint32_t> ranks(n_max + 2, 0);
    std::vector<std::uint32_t> tuple;
    for (std::uint32_t n = 1; n <= n_max + 1; ++n) {
        using E = typename SparseMatrix<F>::Entry;
        std::vector<E> tr;
        std::uint64_t wn = 1;
        for (std::uint32_t t = 0; t < n; ++t) wn *= w;
        tuple.assign(n, 0);
        auto flat = [&](std::uint32_t b, std::uint64_t tcode, std::uint32_t b2, std::uint32_t nn) {
            std::uint64_t pw = 1;
            for (std::uint32_t t = 0; t < nn; ++t) pw *= w;
            return std::uint32_t(((std::uint64_t(b) * pw + tcode) * bd) + b2);
        };
        for (std::uint64_t code = 0; code < wn; ++code) {
            std::uint64_t c = code;
            for (std::uint32_t t = n; t-- > 0;) {
                tuple[t] = std::uint32_t(c % w);
                c /= w;
            }
            // tail code of tuple without position t
            auto code_without = [&](std::uint32_t skip) {
                std::uint64_t r = 0;
                for (std::uint32_t t = 0; t < n; ++t)
                    if (t != skip) r = r * w + tuple[t];
                return r;
            };
            auto code_merge = [&](std::uint32_t t, std::uint32_t merged) {
                std::uint64_t r = 0;
                for (std::uint32_t x = 0; x < n; ++x) {
                    if (x == t) r = r * w + merged;
                    else if (x != t + 1) r = r * w + tuple[x];
                }
                return r;
            };
            for (std::uint32_t b = 0; b < bd; ++b)
                for (std::uint32_t b2 = 0; b2 < bd; ++b2) {
                    std::uint32_t col = flat(b, code, b2, n);
                    // d0: (b*phi(w_1)) (x) rest
                    for (const auto& [k, v] : lmul[tuple[0]][b])
                        tr.push_back({flat(k, code_without(0), b2, n - 1), col, v});
                    // inner merges
                    for (std::uint32_t t = 0; t + 1 < n; ++t) {
                        bool neg = ((t + 1) % 2 == 1);
                        for (const auto& [ms, unused, v] : mult_w[tuple[t] * w + tuple[t + 1]]) {
                            (void)unused;
                            tr.push_back({flat(b, code_merge(t, ms), b2, n - 1), col, neg ? f.neg(v) : v});
                        }
                    }
                    // dn: rest (x) (phi(w_n)*b2)
                    bool lneg = (n % 2 == 1);
                    for (const auto& [k, v] : rmul[tuple[n - 1]][b2])
                        tr.push_back({flat(b, code_without(n - 1), k, n - 1), col, lneg ? f.neg(v) : v});
                }
        }
        auto d = SparseMatrix<F>::from_triplets(dims[n - 1], dims[n], std::move(tr), f);
        ranks[n] = d.nnz() ? rank(d, f) : 0;
    }
    std::vector<std::uint32_t> out(n_max + 1);
    for (std::uint32_t n = 0; n <= n_max; ++n) out[n] = dims[n] - ranks[n] - ranks[n + 1];
    return out;
}

// ---- homological epimorphism certificates ----

struct HomEpiCertificate {
    std::uint32_t checked_degree_bound = 0;
    bool surjective = false;
    bool epi_ok = false;                       // Tor_0 multiplication bijective
    std::vector<std::uint32_t> tor_dims;       // 0..N
    std::vector<bool> tor_vanishing;           // 1..N (index shifted by 1)
    bool idempotent_kernel = false;
    enum class Projective { yes, no, undecided };
    Projective projective_kernel = Projective::undecided;
    bool proven = false;
    std::string status;                        // PROVEN | CHECKED_TO_DEGREE n | FAILED

    bool certifies() const { return proven || (epi_ok && all_tor_vanish()); }
    bool all_tor_vanish() const {
        for (bool b : tor_vanishing)
            if (!b) return false;
        return true;
    }
};

// One-sided identity of the span I: e with x*e = x (right) or e*x = x (left)
// for all x in I. Existence <=> I = Ae (resp. eA) with e idempotent.
template <class F>
std::optional<std::vector<typename F::Elem>> one_sided_identity(const FiniteAlgebra<F>& a,
                                                                const std::vector<std::vector<typename F::Elem>>& basis,
                                                                bool right) {
    const F& f = a.field;
    std::uint32_t k = std::uint32_t(basis.size());
    if (k == 0) return std::vector<typename F::Elem>{};  // zero ideal: trivially generated
    std::vector<typename SparseMatrix<F>::Entry> tr;
    std::vector<typename F::Elem> rhs;
    rhs.reserve(std::size_t(k) * a.dim);
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
            auto prod = right ? a.mul_vec(basis[i], basis[j]) : a.mul_vec(basis[j], basis[i]);
            for (std::uint32_t comp = 0; comp < a.dim; ++comp)
                if (!f.is_zero(prod[comp])) tr.push_back({i * a.dim + comp, j, prod[comp]});
        }
        for (std::uint32_t comp = 0; comp < a.dim; ++comp) rhs.push_back(basis[i][comp]);
    }
    auto m = SparseMatrix<F>::from_triplets(k * a.dim, k, std::move(tr), f);
    auto sol = solve(m, rhs, f);
    if (!sol) return std::nullopt;
    // e = sum sol_j * basis_j
    std::vector<typename F::Elem> e(a.dim, f.zero());
    for (std::uint32_t j = 0; j < k; ++j)
        for (std::uint32_t comp = 0; comp < a.dim; ++comp)
            e[comp] = f.add(e[comp], f.mul((*sol)[j], basis[j][comp]));
    return e;
}

template <class F>
HomEpiCertificate certify_hom_epi(const AlgebraMorphism<F>& fm, std::uint32_t n_max) {
    const F& f = fm.source.field;
    HomEpiCertificate cert;
    cert.checked_degree_bound = n_max;
    cert.surjective = fm.is_surjective();
    cert.tor_dims = tor(fm, n_max);
    cert.epi_ok = (cert.tor_dims[0] == fm.target.dim);  // multiplication Tor_0 -> B is onto; bijective iff dims agree
    for (std::uint32_t i = 1; i <= n_max; ++i) cert.tor_vanishing.push_back(cert.tor_dims[i] == 0);

    auto I = kernel_basis(fm.matrix, f);
    // I idempotent: span(I*I) = span(I)
    SpanBuilder<F> sq(fm.source.dim, f);
    std::uint32_t sq_rank = 0;
    for (const auto& x : I)
        for (const auto& y : I)
            if (sq.add(fm.source.mul_vec(x, y))) ++sq_rank;
    cert.idempotent_kernel = (sq_rank == I.size());

    auto re = one_sided_identity(fm.source, I, true);
    auto le = re ? re : one_sided_identity(fm.source, I, false);
    cert.projective_kernel = (re || le) ? HomEpiCertificate::Projective::yes
                                        : HomEpiCertificate::Projective::undecided;

    cert.proven = cert.surjective && cert.idempotent_kernel &&
                  cert.projective_kernel == HomEpiCertificate::Projective::yes;
    if (cert.proven) cert.status = "PROVEN";
    else if (cert.epi_ok && cert.all_tor_vanish()) cert.status = "CHECKED_TO_DEGREE " + std::to_string(n_max);
    else cert.status = "FAILED";
    return cert;
}

// ---- induced map on HH along a surjective homological epimorphism ----

// HH^q(S,S) -> HH^q(T,T) for certified f: S -> T, via the zigzag
// HH^q(S,S) -> HH^q(S,T) <- HH^q(T,T) (second map inverted on cohomology).
template <class F>
SparseMatrix<F> hh_induced_map(const AlgebraMorphism<F>& fm, std::uint32_t q, const HomEpiCertificate& cert,
                               bool normalized = true) {
    if (!cert.certifies() || !cert.surjective)
        throw Error("NOT_CERTIFIED", "induced map requires a certified surjective homological epimorphism");
    const F& f = fm.source.field;
    const auto& S = fm.source;
    const auto& T = fm.target;

    auto cs = hochschild_complex(S, diagonal_bimodule(S), q, normalized);
    auto mt_over_s = restrict_bimodule(diagonal_bimodule(T), fm);
    auto cst = hochschild_complex(S, mt_over_s, q, normalized);
    auto ct = hochschild_complex(T, diagonal_bimodule(T), q, normalized);

    auto hs = hochschild_coho_basis(cs, q);
    auto hst = hochschild_coho_basis(cst, q);
    auto ht = hochschild_coho_basis(ct, q);

    // push coefficients along f: kron(Id_args, f)
    auto push = cochain_map(cs, cst, q, SparseMatrix<F>::identity(std::uint32_t(cs.args()), f), fm.matrix);
    // restrict first argument along f: C^q(T,T) -> C^q(S,T)
    auto phi_w = arg_transport(cst, ct, fm.matrix);  // S-args -> T-args
    auto restr = cochain_map(ct, cst, q, phi_w, SparseMatrix<F>::identity(T.dim, f));

    if (ht.dim() != hst.dim())
        throw Error("ZIGZAG_NOT_INVERTIBLE", "restriction is not an isomorphism on cohomology (dim mismatch)");

    // coordinates of [restr t_j] in the HST basis
    std::vector<typename SparseMatrix<F>::Entry> rc;
    for (std::uint32_t j = 0; j < ht.dim(); ++j) {
        auto img = restr.apply(ht.reps()[j], f);
        auto coords = hst.coords_of(img);
        if (!coords) throw Error("ZIGZAG_NOT_INVERTIBLE", "restriction image is not a cocycle class");
        for (std::uint32_t i = 0; i < hst.dim(); ++i)
            if (!f.is_zero((*coords)[i])) rc.push_back({i, j, (*coords)[i]});
    }
    auto rmat = SparseMatrix<F>::from_triplets(hst.dim(), ht.dim(), std::move(rc), f);
    Echelon<F> rsolve(rmat, f, true);
    if (rsolve.rank() != ht.dim())
        throw Error("ZIGZAG_NOT_INVERTIBLE", "restriction is not injective on cohomology");

    std::vector<typename SparseMatrix<F>::Entry> out;
    for (std::uint32_t j = 0; j < hs.dim(); ++j) {
        auto img = push.apply(hs.reps()[j], f);
        auto coords = hst.coords_of(img);
        if (!coords) throw Error("ZIGZAG_NOT_INVERTIBLE", "pushed class failed to express");
        auto x = rsolve.solve(*coords);
        if (!x) throw Error("ZIGZAG_NOT_INVERTIBLE", "pushed class not in the restricted image");
        for (std::uint32_t i = 0; i < ht.dim(); ++i)
            if (!f.is_zero((*x)[i])) out.push_back({i, j, (*x)[i]});
    }
    return SparseMatrix<F>::from_triplets(ht.dim(), hs.dim(), std::move(out), f);
}

// ---- long exact sequence of a homological ideal ----

struct LesNode {
    std::string at;           // e.g. "H^1(A,A)"
    std::uint32_t dim_kernel;
    std::uint32_t dim_image_in;  // image of the incoming map
    bool exact;
};

struct LesReport {
    std::vector<std::uint32_t> h_ai, h_aa, h_ab, h_bb;
    bool quotient_iso_ok = false;  // HH^q(A,B) = HH^q(B) via restriction
    std::vector<LesNode> nodes;
    bool all_exact = true;
};

template <class F>
LesReport hh_les(const FiniteAlgebra<F>& a, const TwoSidedIdeal<F>& ideal, std::uint32_t q_max,
                 std::uint32_t tor_bound = 1, bool normalized = true) {
    const F& f = a.field;
    auto Q = quotient_algebra(a, ideal);
    auto cert = certify_hom_epi(Q.projection, tor_bound);
    if (!cert.certifies()) throw Error("NOT_HOM_EPI", "quotient map is not a certified homological epimorphism");

    auto mi = ideal_bimodule(ideal);
    auto ma = diagonal_bimodule(a);
    auto mb = restrict_bimodule(diagonal_bimodule(Q.algebra), Q.projection);

    auto ci = hochschild_complex(a, mi, q_max, normalized);
    auto ca = hochschild_complex(a, ma, q_max, normalized);
    auto cb = hochschild_complex(a, mb, q_max, normalized);
    auto ct = hochschild_complex(Q.algebra, diagonal_bimodule(Q.algebra), q_max, normalized);

    LesReport rep;
    rep.h_ai = ci.rep.cohomology_dims(f, q_max);
    rep.h_aa = ca.rep.cohomology_dims(f, q_max);
    rep.h_ab = cb.rep.cohomology_dims(f, q_max);
    rep.h_bb = ct.rep.cohomology_dims(f, q_max);

    // value maps
    std::vector<typename SparseMatrix<F>::Entry> itr;
    for (std::uint32_t j = 0; j < ideal.basis.size(); ++j)
        for (std::uint32_t i = 0; i < a.dim; ++i)
            if (!f.is_zero(ideal.basis[j][i])) itr.push_back({i, j, ideal.basis[j][i]});
    auto incl = SparseMatrix<F>::from_triplets(a.dim, std::uint32_t(ideal.basis.size()), std::move(itr), f);

    auto id_args = SparseMatrix<F>::identity(std::uint32_t(ca.args()), f);

    std::vector<CohoBasis<F>> hi, ha, hb;
    for (std::uint32_t q = 0; q <= q_max; ++q) {
        hi.push_back(hochschild_coho_basis(ci, q));
        ha.push_back(hochschild_coho_basis(ca, q));
        hb.push_back(hochschild_coho_basis(cb, q));
    }

    // quotient identification HH^q(A,B) ~ HH^q(B) via first-argument restriction along pi
    {
        bool ok = true;
        auto phi_w = arg_transport(cb, ct, Q.projection.matrix);
        for (std::uint32_t q = 0; q <= q_max && ok; ++q) {
            if (rep.h_ab[q] != rep.h_bb[q]) {
                ok = false;
                break;
            }
            auto ht = hochschild_coho_basis(ct, q);
            auto restr = cochain_map(ct, cb, q, phi_w, SparseMatrix<F>::identity(Q.algebra.dim, f));
            SpanBuilder<F> span(hb[q].dim(), f);
            std::uint32_t rk = 0;
            for (std::uint32_t j = 0; j < ht.dim(); ++j) {
                auto coords = hb[q].coords_of(restr.apply(ht.reps()[j], f));
                if (!coords) {
                    ok = false;
                    break;
                }
                if (span.add(*coords)) ++rk;
            }
            ok = ok && (rk == rep.h_ab[q]);
        }
        rep.quotient_iso_ok = ok;
    }

    // cohomology-level maps iota_q, pi_q and connecting maps
    auto map_on_coho = [&](const SparseMatrix<F>& chain_map_q, const CohoBasis<F>& from, const CohoBasis<F>& to) {
        std::vector<typename SparseMatrix<F>::Entry> tr;
        for (std::uint32_t j = 0; j < from.dim(); ++j) {
            auto coords = to.coords_of(chain_map_q.apply(from.reps()[j], f));
            if (!coords) throw Error("INPUT", "cochain map failed to descend to cohomology");
            for (std::uint32_t i = 0; i < to.dim(); ++i)
                if (!f.is_zero((*coords)[i])) tr.push_back({i, j, (*coords)[i]});
        }
        return SparseMatrix<F>::from_triplets(to.dim(), from.dim(), std::move(tr), f);
    };

    std::vector<SparseMatrix<F>> iota(q_max + 1), pi(q_max + 1), conn(q_max + 1);
    std::vector<std::uint32_t> conn_ker_dim(q_max + 1, 0);
    for (std::uint32_t q = 0; q <= q_max; ++q) {
        iota[q] = map_on_coho(cochain_map(ci, ca, q, id_args, incl), hi[q], ha[q]);
        pi[q] = map_on_coho(cochain_map(ca, cb, q, id_args, Q.projection.matrix), ha[q], hb[q]);
        // connecting: lift along the section, apply d, express in C^{q+1}(A,I)
        auto lift = cochain_map(cb, ca, q, id_args, Q.section);
        auto incl_next = cochain_map(ci, ca, q + 1, id_args, incl);
        Echelon<F> incl_solve(incl_next, f, true);
        std::vector<std::vector<typename F::Elem>> dvals;
        for (std::uint32_t j = 0; j < hb[q].dim(); ++j) {
            auto g = lift.apply(hb[q].reps()[j], f);
            auto dg = ca.rep.diffs[q].apply(g, f);
            auto y = incl_solve.solve(dg);
            if (!y) throw Error("INPUT", "connecting value not in the ideal cochains");
            dvals.push_back(std::move(*y));
        }
        if (q < q_max) {
            std::vector<typename SparseMatrix<F>::Entry> tr;
            for (std::uint32_t j = 0; j < dvals.size(); ++j) {
                auto coords = hi[q + 1].coords_of(dvals[j]);
                if (!coords) throw Error("INPUT", "connecting image is not a cocycle class");
                for (std::uint32_t i = 0; i < hi[q + 1].dim(); ++i)
                    if (!f.is_zero((*coords)[i])) tr.push_back({i, j, (*coords)[i]});
            }
            conn[q] = SparseMatrix<F>::from_triplets(hi[q + 1].dim(), hb[q].dim(), std::move(tr), f);
            conn_ker_dim[q] = hb[q].dim() - rank(conn[q], f);
        } else {
            // kernel of the connecting map out of the last computed degree:
            // classes whose boundary is a coboundary in C^{q+1}(A,I)
            std::uint32_t h = hb[q].dim();
            auto d_i = ci.rep.diffs[q];
            std::vector<typename SparseMatrix<F>::Entry> tr;
            for (std::uint32_t j = 0; j < h; ++j)
                for (std::uint32_t i = 0; i < dvals[j].size(); ++i)
                    if (!f.is_zero(dvals[j][i])) tr.push_back({i, j, dvals[j][i]});
            auto vmat = SparseMatrix<F>::from_triplets(ci.rep.dims[q + 1], h, std::move(tr), f);
            std::uint32_t r_d = d_i.nnz() ? rank(d_i, f) : 0;
            std::uint32_t r_both = rank(hcat(vmat, d_i), f);
            conn_ker_dim[q] = h - (r_both - r_d);
        }
    }

    auto node = [&](const std::string& at, std::uint32_t ker, std::uint32_t img) {
        rep.nodes.push_back({at, ker, img, ker == img});
        rep.all_exact = rep.all_exact && ker == img;
    };
    for (std::uint32_t q = 0; q <= q_max; ++q) {
        std::uint32_t ker_iota = hi[q].dim() - rank(iota[q], f);
        std::uint32_t im_conn_prev = (q == 0) ? 0 : rank(conn[q - 1], f);
        node("H^" + std::to_string(q) + "(A,I)", ker_iota, im_conn_prev);
        std::uint32_t ker_pi = ha[q].dim() - rank(pi[q], f);
        node("H^" + std::to_string(q) + "(A,A)", ker_pi, rank(iota[q], f));
        node("H^" + std::to_string(q) + "(A,B)", conn_ker_dim[q], rank(pi[q], f));
    }
    return rep;
}

}  // namespace gsc
