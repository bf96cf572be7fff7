#pragma once

// Shared helpers for the test suites.

#include <cstdint>
#include <string>
#include <vector>

#include "gsc/fincat.hpp"
#include "gsc/simp.hpp"

namespace gsc::testutil {

struct XorShift {
    std::uint64_t s;
    explicit XorShift(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    std::uint32_t below(std::uint32_t n) { return std::uint32_t(next() % n); }
};

// Random poset on up to max_elems elements: random DAG edges i -> j (i < j), closed transitively.
inline FinPoset random_poset(XorShift& rng, std::uint32_t max_elems) {
    std::uint32_t n = 1 + rng.below(max_elems);
    std::vector<std::string> els;
    for (std::uint32_t i = 0; i < n; ++i) els.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.below(3) == 0) covers.push_back({els[i], els[j]});
    return FinPoset::from_covers(els, covers);
}

inline SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_maximal_faces({{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

inline SimplicialComplex edge_ab() { return SimplicialComplex::from_maximal_faces({{"a", "b"}}); }

inline SimplicialComplex point_a() { return SimplicialComplex::from_maximal_faces({{"a"}}); }

inline FinPoset square_poset() {
    return FinPoset::from_covers({"1", "2", "3", "4"}, {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
}

inline FinPoset square_poset_with_terminal() {
    return FinPoset::from_covers({"1", "2", "3", "4", "5"},
                                 {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "5"}, {"4", "5"}});
}

}  // namespace gsc::testutil
