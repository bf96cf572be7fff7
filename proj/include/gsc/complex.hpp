#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gsc/elim.hpp"
#include "gsc/sparse.hpp"

namespace gsc {

// A bounded cochain complex: dims per degree 0..N, differentials
// diffs[n]: C^n -> C^{n+1}. Degrees outside the stored range are zero.
// d composability is asserted at construction.
template <class F>
struct CochainComplexRep {
    std::vector<std::uint32_t> dims;
    std::vector<SparseMatrix<F>> diffs;

    CochainComplexRep() = default;

    CochainComplexRep(std::vector<std::uint32_t> ds, std::vector<SparseMatrix<F>> df, const F& f)
        : dims(std::move(ds)), diffs(std::move(df)) {
        // fewer differentials than degrees is allowed: missing ones are zero maps
        for (std::size_t n = 0; n < diffs.size(); ++n) {
            std::uint32_t dn = n < dims.size() ? dims[n] : 0;
            std::uint32_t dn1 = n + 1 < dims.size() ? dims[n + 1] : 0;
            if (diffs[n].cols != dn || diffs[n].rows != dn1)
                throw Error("INPUT", "differential shape mismatch at degree " + std::to_string(n));
        }
        for (std::size_t n = 0; n + 1 < diffs.size(); ++n) {
            if (!multiply(diffs[n + 1], diffs[n], f).is_zero())
                throw Error("COMPOSABILITY_VIOLATION", "d o d != 0 at degree " + std::to_string(n));
        }
    }

    const SparseMatrix<F>& diff(std::size_t n) const {
        static const SparseMatrix<F> empty{};
        if (n < diffs.size()) return diffs[n];
        return empty;
    }

    std::uint32_t dim(std::size_t n) const { return n < dims.size() ? dims[n] : 0; }

    // dim H^n = dim C^n - rank d^n - rank d^{n-1}, for n = 0..n_max.
    std::vector<std::uint32_t> cohomology_dims(const F& f, std::optional<std::uint32_t> n_max = std::nullopt) const {
        std::uint32_t top = n_max ? *n_max : (dims.empty() ? 0 : std::uint32_t(dims.size()) - 1);
        std::vector<std::uint32_t> ranks(top + 2, 0);
        for (std::uint32_t n = 0; n <= top; ++n) {
            if (n < diffs.size() && diffs[n].nnz() > 0) ranks[n] = rank(diffs[n], f);
        }
        std::vector<std::uint32_t> h(top + 1, 0);
        for (std::uint32_t n = 0; n <= top; ++n) {
            std::uint32_t prev = (n == 0) ? 0 : ranks[n - 1];
            h[n] = dim(n) - ranks[n] - prev;
        }
        return h;
    }
};

// Representative basis of H^n: deterministic cocycle representatives plus a
// solver expressing any cocycle's class in that basis.
template <class F>
class CohoBasis {
  public:
    using Elem = typename F::Elem;

    CohoBasis() = default;

    // d_out: C^n -> C^{n+1} (zero matrix allowed), d_in: C^{n-1} -> C^n (zero for n = 0).
    CohoBasis(const SparseMatrix<F>& d_out, const SparseMatrix<F>& d_in, const F& f)
        : f_(f), space_dim_(d_out.cols) {
        SpanBuilder<F> span(space_dim_, f);
        std::vector<std::vector<Elem>> im_gens;
        for (std::uint32_t j = 0; j < d_in.cols; ++j) {
            auto v = d_in.column(j, f);
            if (span.add(v)) im_gens.push_back(std::move(v));
        }
        for (auto& z : kernel_basis(d_out, f))
            if (span.add(z)) reps_.push_back(std::move(z));

        // [reps | im_gens] used to express classes
        using E = typename SparseMatrix<F>::Entry;
        std::vector<E> tr;
        for (std::uint32_t j = 0; j < reps_.size(); ++j)
            for (std::uint32_t i = 0; i < space_dim_; ++i)
                if (!f_.is_zero(reps_[j][i])) tr.push_back({i, j, reps_[j][i]});
        std::uint32_t off = std::uint32_t(reps_.size());
        for (std::uint32_t j = 0; j < im_gens.size(); ++j)
            for (std::uint32_t i = 0; i < space_dim_; ++i)
                if (!f_.is_zero(im_gens[j][i])) tr.push_back({i, off + j, im_gens[j][i]});
        auto m = SparseMatrix<F>::from_triplets(space_dim_, off + std::uint32_t(im_gens.size()), std::move(tr), f);
        expr_ = std::make_shared<Echelon<F>>(m, f, true);
    }

    std::uint32_t dim() const { return std::uint32_t(reps_.size()); }
    std::uint32_t space_dim() const { return space_dim_; }
    const std::vector<std::vector<Elem>>& reps() const { return reps_; }

    // Coordinates of [z] in the representative basis; nullopt if z is not in
    // the span of cocycle representatives + coboundaries (i.e. not a cocycle).
    std::optional<std::vector<Elem>> coords_of(const std::vector<Elem>& z) const {
        auto sol = expr_->solve(z);
        if (!sol) return std::nullopt;
        std::vector<Elem> c(sol->begin(), sol->begin() + reps_.size());
        return c;
    }

  private:
    F f_;
    std::uint32_t space_dim_ = 0;
    std::vector<std::vector<Elem>> reps_;
    std::shared_ptr<Echelon<F>> expr_;
};

}  // namespace gsc
