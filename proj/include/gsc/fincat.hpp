#pragma once

// Finite posets and categories, nerves, twisted arrow categories.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsc/field.hpp"

namespace gsc {

struct FinPoset {
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> leq;  // leq[i][j] <=> elements[i] <= elements[j]

    // Validates reflexivity, antisymmetry, transitivity.
    static FinPoset from_relation(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& pairs);
    // Relation = reflexive-transitive closure of covers; validated acyclic.
    static FinPoset from_covers(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& covers);
    static FinPoset chain(std::uint32_t n);      // [n]: elements "0".."n"
    static FinPoset antichain(std::uint32_t k);  // k incomparable elements

    std::size_t size() const { return elements.size(); }
    std::uint32_t index_of(const std::string& name) const;
    bool less_eq(std::uint32_t i, std::uint32_t j) const { return leq[i][j]; }
    bool is_lower_ideal(const std::vector<std::uint32_t>& subset) const;
    // Sub-poset on a subset of elements (restricted order).
    FinPoset restrict_to(const std::vector<std::uint32_t>& subset) const;
    // Covering pairs (i,j): i < j with nothing strictly between.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers() const;
    std::optional<std::uint32_t> terminal() const;
    std::optional<std::uint32_t> initial() const;
};

struct FinCategory {
    struct Mor {
        std::string name;
        std::uint32_t src, tgt;
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<std::uint32_t> identity;            // per object
    std::vector<std::vector<std::int32_t>> table;   // table[g][f] = g∘f, -1 when not composable

    // Composition g∘f for f: a->b, g: b->c.
    std::uint32_t compose(std::uint32_t g, std::uint32_t f) const;
    bool composable(std::uint32_t g, std::uint32_t f) const { return morphisms[f].tgt == morphisms[g].src; }
    bool is_identity(std::uint32_t m) const { return identity[morphisms[m].src] == m && morphisms[m].src == morphisms[m].tgt; }

    // Identity laws + associativity on the full table.
    void validate() const;
    bool is_loop_free() const;           // no non-identity endomorphism, no cycle between distinct objects
    void require_loop_free() const;      // throws NOT_LOOP_FREE
    std::uint32_t longest_chain() const; // longest identity-free composable chain (loop-free only)
};

FinCategory poset_to_category(const FinPoset& p);

// A p-chain c_0 -> c_1 -> ... -> c_p stored by its morphisms (empty for p = 0).
struct Chain {
    std::uint32_t min_obj = 0, max_obj = 0;
    std::vector<std::uint32_t> mors;

    std::uint32_t degree() const { return std::uint32_t(mors.size()); }
    bool operator<(const Chain& o) const {
        if (mors != o.mors) return mors < o.mors;
        return min_obj < o.min_obj;  // distinguishes degree-0 chains
    }
    bool operator==(const Chain& o) const { return mors == o.mors && min_obj == o.min_obj; }
};

struct NerveChains {
    bool normalized = true;
    std::vector<std::vector<Chain>> by_degree;  // degree 0..p_max
    std::vector<std::map<Chain, std::uint32_t>> index;

    std::size_t count(std::uint32_t p) const { return p < by_degree.size() ? by_degree[p].size() : 0; }
    std::uint32_t index_of(std::uint32_t p, const Chain& c) const;
    // r-th face of a degree-p chain (composes at inner indices, drops at the ends).
    Chain face(const FinCategory& c, const Chain& ch, std::uint32_t r) const;
};

// All composable chains up to degree p_max; normalized = identity-free.
NerveChains nerve(const FinCategory& c, std::uint32_t p_max, bool normalized = true);

// Composite morphism of a chain (identity of the object for degree 0).
std::uint32_t chain_composite(const FinCategory& c, const Chain& ch);

struct TwistedArrowCat {
    FinCategory cat;                 // objects = morphisms of the base
    // for morphism m of cat: the pair (alpha, beta) in the base
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_of;
};

// Objects are base morphisms f; Hom(f,g) = pairs (alpha, beta) with g = alpha∘f∘beta.
TwistedArrowCat twisted_arrow(const FinCategory& c);

// True iff every non-identity morphism factors uniquely into indecomposables.
// Throws NOT_LOOP_FREE when the category is not loop-free.
bool is_free(const FinCategory& c);

}  // namespace gsc
