#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gsc/field.hpp"

namespace gsc {

// Immutable sparse matrix over a field F. Entries are sorted by (col, row),
// unique per (row, col), and hold nonzero values only.
template <class F>
struct SparseMatrix {
    using Elem = typename F::Elem;
    struct Entry {
        std::uint32_t row, col;
        Elem val;
    };

    std::uint32_t rows = 0, cols = 0;
    std::vector<Entry> entries;

    static SparseMatrix zero(std::uint32_t r, std::uint32_t c) { return SparseMatrix{r, c, {}}; }

    static SparseMatrix identity(std::uint32_t n, const F& f) {
        SparseMatrix m{n, n, {}};
        m.entries.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) m.entries.push_back({i, i, f.one()});
        return m;
    }

    // Coalesces duplicate coordinates by field addition, drops zeros, sorts.
    static SparseMatrix from_triplets(std::uint32_t r, std::uint32_t c, std::vector<Entry> tr, const F& f) {
        for (const auto& e : tr)
            if (e.row >= r || e.col >= c) throw Error("INPUT", "sparse entry out of bounds");
        std::sort(tr.begin(), tr.end(),
                  [](const Entry& a, const Entry& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
        std::vector<Entry> out;
        out.reserve(tr.size());
        for (std::size_t i = 0; i < tr.size();) {
            Elem v = tr[i].val;
            std::size_t j = i + 1;
            while (j < tr.size() && tr[j].col == tr[i].col && tr[j].row == tr[i].row) v = f.add(v, tr[j++].val);
            if (!f.is_zero(v)) out.push_back({tr[i].row, tr[i].col, v});
            i = j;
        }
        return SparseMatrix{r, c, std::move(out)};
    }

    std::size_t nnz() const { return entries.size(); }

    SparseMatrix transpose() const {
        SparseMatrix t{cols, rows, entries};
        for (auto& e : t.entries) std::swap(e.row, e.col);
        std::sort(t.entries.begin(), t.entries.end(),
                  [](const Entry& a, const Entry& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
        return t;
    }

    // y = M x
    std::vector<Elem> apply(const std::vector<Elem>& x, const F& f) const {
        if (x.size() != cols) throw Error("INPUT", "apply: size mismatch");
        std::vector<Elem> y(rows, f.zero());
        for (const auto& e : entries) y[e.row] = f.add(y[e.row], f.mul(e.val, x[e.col]));
        return y;
    }

    std::vector<Elem> column(std::uint32_t c, const F& f) const {
        std::vector<Elem> v(rows, f.zero());
        for (const auto& e : entries)
            if (e.col == c) v[e.row] = e.val;
        return v;
    }

    bool is_zero() const { return entries.empty(); }

    bool equals(const SparseMatrix& o, const F& f) const {
        if (rows != o.rows || cols != o.cols || entries.size() != o.entries.size()) return false;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].row != o.entries[i].row || entries[i].col != o.entries[i].col ||
                !f.eq(entries[i].val, o.entries[i].val))
                return false;
        }
        return true;
    }
};

// C = A * B
template <class F>
SparseMatrix<F> multiply(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const F& f) {
    if (a.cols != b.rows) throw Error("INPUT", "multiply: shape mismatch");
    using E = typename SparseMatrix<F>::Entry;
    // a indexed by column for the expansion
    std::vector<std::vector<E>> acol(a.cols);
    for (const auto& e : a.entries) acol[e.col].push_back(e);
    std::vector<E> tr;
    for (const auto& e : b.entries)
        for (const auto& ae : acol[e.row]) tr.push_back({ae.row, e.col, f.mul(ae.val, e.val)});
    return SparseMatrix<F>::from_triplets(a.rows, b.cols, std::move(tr), f);
}

template <class F>
SparseMatrix<F> add(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const F& f) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("INPUT", "add: shape mismatch");
    auto tr = a.entries;
    tr.insert(tr.end(), b.entries.begin(), b.entries.end());
    return SparseMatrix<F>::from_triplets(a.rows, a.cols, std::move(tr), f);
}

template <class F>
SparseMatrix<F> scale(const SparseMatrix<F>& a, const typename F::Elem& c, const F& f) {
    if (f.is_zero(c)) return SparseMatrix<F>::zero(a.rows, a.cols);
    SparseMatrix<F> r = a;
    for (auto& e : r.entries) e.val = f.mul(e.val, c);
    return r;
}

// Kronecker product: (A ⊗ B)[(ia*Brows+ib),(ja*Bcols+jb)] = A[ia,ja] * B[ib,jb]
template <class F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b, const F& f) {
    using E = typename SparseMatrix<F>::Entry;
    std::vector<E> tr;
    tr.reserve(a.nnz() * b.nnz());
    for (const auto& ea : a.entries)
        for (const auto& eb : b.entries)
            tr.push_back({ea.row * b.rows + eb.row, ea.col * b.cols + eb.col, f.mul(ea.val, eb.val)});
    return SparseMatrix<F>::from_triplets(a.rows * b.rows, a.cols * b.cols, std::move(tr), f);
}

// q-fold Kronecker power (q = 0 gives the 1x1 identity).
template <class F>
SparseMatrix<F> kron_power(const SparseMatrix<F>& a, std::uint32_t q, const F& f) {
    SparseMatrix<F> r = SparseMatrix<F>::identity(1, f);
    for (std::uint32_t i = 0; i < q; ++i) r = kron(r, a, f);
    return r;
}

// Horizontal concatenation [A | B].
template <class F>
SparseMatrix<F> hcat(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    if (a.rows != b.rows) throw Error("INPUT", "hcat: row mismatch");
    SparseMatrix<F> r{a.rows, a.cols + b.cols, a.entries};
    r.entries.reserve(a.nnz() + b.nnz());
    for (auto e : b.entries) {
        e.col += a.cols;
        r.entries.push_back(e);
    }
    return r;
}

}  // namespace gsc
