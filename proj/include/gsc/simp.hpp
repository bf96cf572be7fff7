#pragma once

// Finite simplicial complexes, face posets, diagrams/filtrations and colimits.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gsc/complex.hpp"
#include "gsc/fincat.hpp"
#include "gsc/sparse.hpp"

namespace gsc {

// Faces are sorted vertex-index tuples; the empty simplex is excluded.
struct SimplicialComplex {
    std::vector<std::string> vertices;          // sorted, unique
    std::set<std::vector<std::uint32_t>> faces; // nonempty, closed under subsets

    static SimplicialComplex from_maximal_faces(const std::vector<std::vector<std::string>>& maximal);
    void validate() const;

    std::uint32_t vertex_index(const std::string& v) const;
    bool contains(const std::vector<std::uint32_t>& face) const { return faces.count(face) > 0; }
    int dim() const;
    std::vector<std::vector<std::uint32_t>> faces_of_dim(std::uint32_t q) const;  // |face| = q+1, sorted
    std::string face_label(const std::vector<std::uint32_t>& face) const;
    bool is_subcomplex_of(const SimplicialComplex& other) const;  // by vertex labels

    static SimplicialComplex point(const std::string& v = "v");
};

// A simplicial vertex map between complexes, stored by vertex indices.
struct SimplicialMap {
    std::vector<std::uint32_t> vertex_map;  // domain vertex -> codomain vertex
    bool injective() const;
};

SimplicialMap simplicial_map_from_labels(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                         const std::map<std::string, std::string>& labels);
// Validates that faces map to faces.
void validate_simplicial(const SimplicialComplex& dom, const SimplicialComplex& cod, const SimplicialMap& m);

// Face poset: elements are nonempty faces, sigma <= tau iff sigma is a subset
// of tau (subcomplexes correspond to lower ideals). The empty simplex is
// excluded by default; include_empty adds it as the minimum element "{}".
FinPoset face_poset(const SimplicialComplex& s, bool include_empty = false);

// Order complex of a poset: vertices = elements, faces = strict chains.
SimplicialComplex order_complex(const FinPoset& p);

struct ComplexDiagram {
    FinPoset index;
    std::vector<SimplicialComplex> complexes;                  // per element
    std::map<std::pair<std::uint32_t, std::uint32_t>, SimplicialMap> maps;  // per relation p <= q (p != q)

    const SimplicialMap& map_for(std::uint32_t p, std::uint32_t q) const;
    // Checks simpliciality, injectivity and functoriality; fills in composite
    // relations from cover maps if only those were provided.
    void validate_and_close();
};

// Chain-indexed diagram whose maps are label-preserving inclusions.
ComplexDiagram filtration(const std::vector<SimplicialComplex>& steps);

struct ColimitResult {
    SimplicialComplex complex;
    std::vector<SimplicialMap> inclusions;  // per index element
};

// Quotient of the disjoint union by the identifications generated by the
// diagram maps (union-find); vertex classes are canonicalized by their
// lexicographically least (element, vertex) representative.
ColimitResult colimit(const ComplexDiagram& d);

// The unique simplicial map K -> L through which a compatible cone factors.
SimplicialMap cone_factor(const ComplexDiagram& d, const ColimitResult& K, const SimplicialComplex& L,
                          const std::vector<SimplicialMap>& cone);

// Simplicial cochain complex with the coboundary on a fixed vertex order.
template <class F>
CochainComplexRep<F> simplicial_cochain_complex(const SimplicialComplex& s, const F& f, std::uint32_t q_max) {
    std::vector<std::uint32_t> dims(q_max + 2, 0);
    std::vector<std::vector<std::vector<std::uint32_t>>> fq(q_max + 2);
    std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> idx(q_max + 2);
    for (std::uint32_t q = 0; q <= q_max + 1; ++q) {
        fq[q] = s.faces_of_dim(q);
        dims[q] = std::uint32_t(fq[q].size());
        for (std::uint32_t i = 0; i < fq[q].size(); ++i) idx[q][fq[q][i]] = i;
    }
    std::vector<SparseMatrix<F>> diffs;
    for (std::uint32_t q = 0; q <= q_max; ++q) {
        using E = typename SparseMatrix<F>::Entry;
        std::vector<E> tr;
        // (delta f)(tau) = sum_i (-1)^i f(tau \ v_i)
        for (std::uint32_t t = 0; t < fq[q + 1].size(); ++t) {
            const auto& tau = fq[q + 1][t];
            for (std::uint32_t i = 0; i < tau.size(); ++i) {
                std::vector<std::uint32_t> sigma;
                sigma.reserve(tau.size() - 1);
                for (std::uint32_t j = 0; j < tau.size(); ++j)
                    if (j != i) sigma.push_back(tau[j]);
                auto it = idx[q].find(sigma);
                if (it == idx[q].end()) continue;  // cannot happen: closed under faces
                typename F::Elem sgn = (i % 2 == 0) ? f.one() : f.neg(f.one());
                tr.push_back({t, it->second, sgn});
            }
        }
        diffs.push_back(SparseMatrix<F>::from_triplets(dims[q + 1], dims[q], std::move(tr), f));
    }
    return CochainComplexRep<F>(std::move(dims), std::move(diffs), f);
}

// dims of H^q(Sigma; k) for q <= q_max.
template <class F>
std::vector<std::uint32_t> simplicial_cohomology(const SimplicialComplex& s, const F& f, std::uint32_t q_max) {
    return simplicial_cochain_complex(s, f, q_max).cohomology_dims(f, q_max);
}

}  // namespace gsc
