#pragma once

// Exact Gaussian elimination on sparse matrices over a field.
//
// The engine does right-looking column elimination with min-fill pivoting
// (smallest column, then the entry whose row hits the fewest columns).
// GF(p) switches to a dense column-major tail once the active block is
// small enough; the dense phase runs on the runtime-selected axpy kernels.
// Everything is deterministic: identical inputs give identical pivot
// sequences, ranks, kernel bases and solutions on every run.

#include <cstdint>
#include <optional>
#include <queue>
#include <type_traits>
#include <vector>

#include "gsc/field.hpp"
#include "gsc/kernels.hpp"
#include "gsc/sparse.hpp"

namespace gsc {

template <class F>
class Echelon {
  public:
    using Elem = typename F::Elem;
    using SpVec = std::vector<std::pair<std::uint32_t, Elem>>;  // sorted by row

    Echelon(const SparseMatrix<F>& m, const F& f, bool track) : f_(f), rows_(m.rows), cols_(m.cols), track_(track) {
        cols_data_.assign(cols_, {});
        for (const auto& e : m.entries) cols_data_[e.col].push_back({e.row, e.val});
        if (track_) {
            ucols_.assign(cols_, {});
            for (std::uint32_t j = 0; j < cols_; ++j) ucols_[j].push_back({j, f_.one()});
        }
        run();
    }

    std::uint32_t rank() const { return std::uint32_t(pivots_.size()); }

    // Basis of the null space as dense vectors, in ascending column order.
    std::vector<std::vector<Elem>> kernel_basis() const {
        if (!track_) throw Error("INPUT", "echelon was built without transform tracking");
        std::vector<std::vector<Elem>> out;
        for (std::uint32_t j = 0; j < cols_; ++j) {
            if (!is_pivot_col_[j]) {
                std::vector<Elem> v(cols_, f_.zero());
                for (const auto& [i, val] : ucols_[j]) v[i] = val;
                out.push_back(std::move(v));
            }
        }
        return out;
    }

    // Any x with M x = b, if one exists.
    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const {
        if (!track_) throw Error("INPUT", "echelon was built without transform tracking");
        if (b.size() != rows_) throw Error("INPUT", "solve: rhs length mismatch");
        std::vector<Elem> r = b;
        std::vector<Elem> x(cols_, f_.zero());
        for (const auto& pv : pivots_) {
            const Elem& v = r[pv.row];
            if (f_.is_zero(v)) continue;
            Elem lam = f_.div(v, pv.pval);
            for (const auto& [i, val] : pv.col_vec) r[i] = f_.sub(r[i], f_.mul(lam, val));
            for (const auto& [i, val] : ucols_[pv.col]) x[i] = f_.add(x[i], f_.mul(lam, val));
        }
        for (const auto& e : r)
            if (!f_.is_zero(e)) return std::nullopt;
        return x;
    }

  private:
    struct Pivot {
        std::uint32_t row, col;
        Elem pval;
        SpVec col_vec;  // state of the pivot column at elimination time
    };

    F f_;
    std::uint32_t rows_, cols_;
    bool track_;
    std::vector<SpVec> cols_data_;
    std::vector<SpVec> ucols_;
    std::vector<Pivot> pivots_;
    std::vector<bool> is_pivot_col_;

    static constexpr std::size_t kDenseImmediate = 1u << 16;
    static constexpr std::size_t kDenseBudget = std::size_t(8) << 20;  // entries in the gathered block

    void run() {
        is_pivot_col_.assign(cols_, false);
        if (rows_ == 0 || cols_ == 0) return;
        if constexpr (std::is_same_v<F, Fp>) {
            if (std::size_t(rows_) * cols_ <= kDenseImmediate) {
                std::vector<std::uint32_t> act_cols, act_rows;
                for (std::uint32_t j = 0; j < cols_; ++j) act_cols.push_back(j);
                for (std::uint32_t i = 0; i < rows_; ++i) act_rows.push_back(i);
                dense_phase(act_rows, act_cols);
                return;
            }
        }
        sparse_phase();
    }

    void sparse_phase() {
        std::vector<std::uint32_t> row_count(rows_, 0);
        std::vector<std::vector<std::uint32_t>> rows_of(rows_);
        std::vector<bool> active(cols_, true);
        std::uint32_t nonempty_cols = 0;
        for (std::uint32_t j = 0; j < cols_; ++j) {
            for (const auto& [r, v] : cols_data_[j]) {
                ++row_count[r];
                rows_of[r].push_back(j);
            }
            if (!cols_data_[j].empty()) ++nonempty_cols;
        }

        using QE = std::pair<std::uint32_t, std::uint32_t>;  // (nnz, col)
        std::priority_queue<QE, std::vector<QE>, std::greater<QE>> heap;
        for (std::uint32_t j = 0; j < cols_; ++j)
            if (!cols_data_[j].empty()) heap.push({std::uint32_t(cols_data_[j].size()), j});

        std::uint32_t dense_threshold = 4096;
        SpVec scratch;
        while (!heap.empty()) {
            if constexpr (std::is_same_v<F, Fp>) {
                if (nonempty_cols > 0 && nonempty_cols <= dense_threshold) {
                    std::vector<std::uint32_t> ac, ar;
                    for (std::uint32_t j = 0; j < cols_; ++j)
                        if (active[j] && !cols_data_[j].empty()) ac.push_back(j);
                    for (std::uint32_t i = 0; i < rows_; ++i)
                        if (row_count[i] > 0) ar.push_back(i);
                    if (ar.size() * ac.size() <= kDenseBudget) {
                        for (std::uint32_t j : ac) active[j] = false;
                        dense_phase(ar, ac);
                        return;
                    }
                    dense_threshold /= 2;  // too tall: retry later with fewer columns
                    if (dense_threshold < 16) dense_threshold = 0;
                }
            }

            auto [nz, c] = heap.top();
            heap.pop();
            if (!active[c] || cols_data_[c].empty() || cols_data_[c].size() != nz) continue;

            // pivot row: fewest active columns, then smallest index
            std::uint32_t pr = 0;
            bool first = true;
            for (const auto& [r, v] : cols_data_[c]) {
                if (first || row_count[r] < row_count[pr] || (row_count[r] == row_count[pr] && r < pr)) {
                    pr = r;
                    first = false;
                }
            }

            Elem pval = f_.zero();
            for (const auto& [r, v] : cols_data_[c])
                if (r == pr) pval = v;

            // eliminate row pr from every other active column
            auto cand = rows_of[pr];
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (std::uint32_t j : cand) {
                if (j == c || !active[j]) continue;
                Elem v = f_.zero();
                bool found = false;
                for (const auto& [r, val] : cols_data_[j])
                    if (r == pr) {
                        v = val;
                        found = true;
                        break;
                    }
                if (!found) continue;
                Elem mu = f_.div(v, pval);
                axpy_col(cols_data_[j], cols_data_[c], mu, scratch, &row_count, &rows_of, j);
                if (track_) axpy_col(ucols_[j], ucols_[c], mu, scratch, nullptr, nullptr, j);
                if (cols_data_[j].empty()) --nonempty_cols;
                else heap.push({std::uint32_t(cols_data_[j].size()), j});
            }
            rows_of[pr].clear();

            // retire the pivot column
            active[c] = false;
            is_pivot_col_[c] = true;
            --nonempty_cols;
            for (const auto& [r, v] : cols_data_[c]) --row_count[r];
            pivots_.push_back({pr, c, pval, track_ ? cols_data_[c] : SpVec{}});
            if (!track_) {
                cols_data_[c].clear();
                cols_data_[c].shrink_to_fit();
            }
        }
    }

    // y <- y - mu * x (sparse merge); maintains row counts / row->col index for the main matrix.
    void axpy_col(SpVec& y, const SpVec& x, const Elem& mu, SpVec& scratch, std::vector<std::uint32_t>* row_count,
                  std::vector<std::vector<std::uint32_t>>* rows_of, std::uint32_t ycol) {
        scratch.clear();
        scratch.reserve(y.size() + x.size());
        std::size_t i = 0, j = 0;
        while (i < y.size() || j < x.size()) {
            if (j >= x.size() || (i < y.size() && y[i].first < x[j].first)) {
                scratch.push_back(y[i++]);
            } else if (i >= y.size() || x[j].first < y[i].first) {
                Elem nv = f_.neg(f_.mul(mu, x[j].second));
                if (!f_.is_zero(nv)) {
                    scratch.push_back({x[j].first, nv});
                    if (row_count) {
                        ++(*row_count)[x[j].first];
                        (*rows_of)[x[j].first].push_back(ycol);
                    }
                }
                ++j;
            } else {
                Elem nv = f_.sub(y[i].second, f_.mul(mu, x[j].second));
                if (!f_.is_zero(nv)) {
                    scratch.push_back({y[i].first, nv});
                } else if (row_count) {
                    --(*row_count)[y[i].first];
                }
                ++i;
                ++j;
            }
        }
        y.swap(scratch);
    }

    // Dense column-major elimination over GF(p) on the gathered active block.
    void dense_phase(const std::vector<std::uint32_t>& act_rows, const std::vector<std::uint32_t>& act_cols) {
        if constexpr (std::is_same_v<F, Fp>) {
            const std::uint32_t p = f_.modulus();
            const auto& K = kernels::active_kernels();
            const std::size_t nr = act_rows.size();
            std::vector<std::uint32_t> row_slot(rows_, UINT32_MAX);
            for (std::size_t i = 0; i < nr; ++i) row_slot[act_rows[i]] = std::uint32_t(i);

            std::vector<std::vector<std::uint32_t>> d(act_cols.size());
            for (std::size_t cj = 0; cj < act_cols.size(); ++cj) {
                d[cj].assign(nr, 0);
                for (const auto& [r, v] : cols_data_[act_cols[cj]]) d[cj][row_slot[r]] = v;
            }

            std::vector<bool> used_col(act_cols.size(), false);
            std::vector<bool> used_row(nr, false);
            SpVec uscratch;
            for (std::size_t cj = 0; cj < act_cols.size(); ++cj) {
                std::size_t pr = nr;
                for (std::size_t i = 0; i < nr; ++i)
                    if (!used_row[i] && d[cj][i] != 0) {
                        pr = i;
                        break;
                    }
                if (pr == nr) continue;  // dependent column: kernel candidate
                used_row[pr] = true;
                used_col[cj] = true;
                const std::uint32_t pval = d[cj][pr];
                const std::uint32_t pinv = f_.inv(pval);
                for (std::size_t ck = 0; ck < act_cols.size(); ++ck) {
                    if (ck == cj || used_col[ck] || d[ck][pr] == 0) continue;
                    const std::uint32_t mu = f_.mul(d[ck][pr], pinv);
                    const std::uint32_t a = f_.neg(mu);
                    K.axpy_mod(d[ck].data(), d[cj].data(), a, nr, p);
                    if (track_) axpy_col(ucols_[act_cols[ck]], ucols_[act_cols[cj]], mu, uscratch, nullptr, nullptr, 0);
                }
                SpVec pc;
                for (std::size_t i = 0; i < nr; ++i)
                    if (d[cj][i] != 0) pc.push_back({act_rows[i], d[cj][i]});
                is_pivot_col_[act_cols[cj]] = true;
                pivots_.push_back({act_rows[pr], act_cols[cj], pval, track_ ? pc : SpVec{}});
                if (track_) cols_data_[act_cols[cj]] = pc;
            }
            for (std::size_t cj = 0; cj < act_cols.size(); ++cj)
                if (!used_col[cj]) cols_data_[act_cols[cj]].clear();
        } else {
            (void)act_rows;
            (void)act_cols;
            throw Error("INPUT", "dense phase is GF(p)-only");
        }
    }
};

template <class F>
std::uint32_t rank(const SparseMatrix<F>& m, const F& f) {
    return Echelon<F>(m, f, false).rank();
}

template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const SparseMatrix<F>& m, const F& f) {
    return Echelon<F>(m, f, true).kernel_basis();
}

template <class F>
std::optional<std::vector<typename F::Elem>> solve(const SparseMatrix<F>& m,
                                                   const std::vector<typename F::Elem>& b, const F& f) {
    return Echelon<F>(m, f, true).solve(b);
}

// Incrementally reduced span of dense vectors; used to pick deterministic
// representative bases (feed image generators first, then cocycles).
template <class F>
class SpanBuilder {
  public:
    using Elem = typename F::Elem;
    explicit SpanBuilder(std::uint32_t dim, const F& f) : f_(f), dim_(dim) {}

    // true iff v was independent of the current span (v is then absorbed)
    bool add(std::vector<Elem> v) {
        reduce(v);
        for (std::uint32_t i = 0; i < dim_; ++i) {
            if (!f_.is_zero(v[i])) {
                Elem inv = f_.inv(v[i]);
                for (auto& e : v) e = f_.mul(e, inv);
                rows_.push_back(std::move(v));
                pivot_.push_back(i);
                return true;
            }
        }
        return false;
    }

    bool contains(std::vector<Elem> v) const {
        reduce(v);
        for (const auto& e : v)
            if (!f_.is_zero(e)) return false;
        return true;
    }

    std::uint32_t rank() const { return std::uint32_t(rows_.size()); }

  private:
    void reduce(std::vector<Elem>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Elem c = v[pivot_[k]];
            if (f_.is_zero(c)) continue;
            for (std::uint32_t i = 0; i < dim_; ++i) v[i] = f_.sub(v[i], f_.mul(c, rows_[k][i]));
        }
    }

    F f_;
    std::uint32_t dim_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::uint32_t> pivot_;
};

}  // namespace gsc
