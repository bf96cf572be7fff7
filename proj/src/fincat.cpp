#include "gsc/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gsc {

std::uint32_t FinPoset::index_of(const std::string& name) const {
    for (std::uint32_t i = 0; i < elements.size(); ++i)
        if (elements[i] == name) return i;
    throw Error("INPUT", "unknown poset element: " + name);
}

FinPoset FinPoset::from_relation(std::vector<std::string> els,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
    FinPoset p;
    p.elements = std::move(els);
    {
        std::set<std::string> seen(p.elements.begin(), p.elements.end());
        if (seen.size() != p.elements.size()) throw Error("INPUT", "duplicate poset elements");
    }
    std::size_t n = p.elements.size();
    p.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p.leq[i][i] = true;
    for (const auto& [a, b] : pairs) p.leq[p.index_of(a)][p.index_of(b)] = true;
    // validate transitivity and antisymmetry
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k])
                    throw Error("INPUT", "relation not transitive: " + p.elements[i] + " <= " + p.elements[j] +
                                             " <= " + p.elements[k]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.leq[i][j] && p.leq[j][i])
                throw Error("INPUT", "relation not antisymmetric: " + p.elements[i] + ", " + p.elements[j]);
    return p;
}

FinPoset FinPoset::from_covers(std::vector<std::string> els,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
    FinPoset p;
    p.elements = std::move(els);
    {
        std::set<std::string> seen(p.elements.begin(), p.elements.end());
        if (seen.size() != p.elements.size()) throw Error("INPUT", "duplicate poset elements");
    }
    std::size_t n = p.elements.size();
    p.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p.leq[i][i] = true;
    for (const auto& [a, b] : covers) {
        auto ia = p.index_of(a), ib = p.index_of(b);
        if (ia == ib) throw Error("INPUT", "self-cover: " + a);
        p.leq[ia][ib] = true;
    }
    // Warshall closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq[k][j]) p.leq[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.leq[i][j] && p.leq[j][i])
                throw Error("INPUT", "covers contain a cycle through " + p.elements[i] + " and " + p.elements[j]);
    return p;
}

FinPoset FinPoset::chain(std::uint32_t n) {
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::uint32_t i = 0; i <= n; ++i) els.push_back(std::to_string(i));
    for (std::uint32_t i = 0; i < n; ++i) covers.push_back({std::to_string(i), std::to_string(i + 1)});
    return from_covers(els, covers);
}

FinPoset FinPoset::antichain(std::uint32_t k) {
    std::vector<std::string> els;
    for (std::uint32_t i = 0; i < k; ++i) els.push_back("a" + std::to_string(i));
    return from_covers(els, {});
}

bool FinPoset::is_lower_ideal(const std::vector<std::uint32_t>& subset) const {
    std::vector<bool> in(size(), false);
    for (auto i : subset) in[i] = true;
    for (auto j : subset)
        for (std::uint32_t i = 0; i < size(); ++i)
            if (leq[i][j] && !in[i]) return false;
    return true;
}

FinPoset FinPoset::restrict_to(const std::vector<std::uint32_t>& subset) const {
    FinPoset q;
    for (auto i : subset) q.elements.push_back(elements[i]);
    q.leq.assign(subset.size(), std::vector<bool>(subset.size(), false));
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = 0; b < subset.size(); ++b) q.leq[a][b] = leq[subset[a]][subset[b]];
    return q;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FinPoset::covers() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 0; i < size(); ++i)
        for (std::uint32_t j = 0; j < size(); ++j) {
            if (i == j || !leq[i][j]) continue;
            bool strict_between = false;
            for (std::uint32_t k = 0; k < size() && !strict_between; ++k)
                if (k != i && k != j && leq[i][k] && leq[k][j]) strict_between = true;
            if (!strict_between) out.push_back({i, j});
        }
    return out;
}

std::optional<std::uint32_t> FinPoset::terminal() const {
    for (std::uint32_t j = 0; j < size(); ++j) {
        bool all = true;
        for (std::uint32_t i = 0; i < size(); ++i) all = all && leq[i][j];
        if (all) return j;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> FinPoset::initial() const {
    for (std::uint32_t i = 0; i < size(); ++i) {
        bool all = true;
        for (std::uint32_t j = 0; j < size(); ++j) all = all && leq[i][j];
        if (all) return i;
    }
    return std::nullopt;
}

std::uint32_t FinCategory::compose(std::uint32_t g, std::uint32_t f) const {
    std::int32_t r = table[g][f];
    if (r < 0) throw Error("INPUT", "composing non-composable morphisms");
    return std::uint32_t(r);
}

void FinCategory::validate() const {
    if (identity.size() != objects.size()) throw Error("INPUT", "category: identity table size mismatch");
    for (std::uint32_t o = 0; o < objects.size(); ++o) {
        const Mor& id = morphisms[identity[o]];
        if (id.src != o || id.tgt != o) throw Error("INPUT", "category: bad identity for object " + objects[o]);
    }
    for (std::uint32_t g = 0; g < morphisms.size(); ++g)
        for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
            bool comp = morphisms[f].tgt == morphisms[g].src;
            if (comp != (table[g][f] >= 0))
                throw Error("INPUT", "category: composition defined iff composable fails at (" + morphisms[g].name +
                                         ", " + morphisms[f].name + ")");
            if (comp) {
                const Mor& gf = morphisms[std::uint32_t(table[g][f])];
                if (gf.src != morphisms[f].src || gf.tgt != morphisms[g].tgt)
                    throw Error("INPUT", "category: composite endpoints wrong");
            }
        }
    for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
        if (compose(identity[morphisms[f].tgt], f) != f || compose(f, identity[morphisms[f].src]) != f)
            throw Error("INPUT", "category: identity law fails at " + morphisms[f].name);
    }
    for (std::uint32_t h = 0; h < morphisms.size(); ++h)
        for (std::uint32_t g = 0; g < morphisms.size(); ++g) {
            if (!composable(h, g)) continue;
            for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
                if (!composable(g, f)) continue;
                if (compose(compose(h, g), f) != compose(h, compose(g, f)))
                    throw Error("INPUT", "category: associativity fails");
            }
        }
}

bool FinCategory::is_loop_free() const {
    for (std::uint32_t f = 0; f < morphisms.size(); ++f)
        if (morphisms[f].src == morphisms[f].tgt && !is_identity(f)) return false;
    // cycle between distinct objects via non-identity morphisms
    std::size_t n = objects.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::uint32_t f = 0; f < morphisms.size(); ++f)
        if (!is_identity(f)) reach[morphisms[f].src][morphisms[f].tgt] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (reach[i][i]) return false;
    return true;
}

void FinCategory::require_loop_free() const {
    if (!is_loop_free()) throw Error("NOT_LOOP_FREE", "category has an endomorphism or isomorphism cycle");
}

std::uint32_t FinCategory::longest_chain() const {
    require_loop_free();
    // longest path in the DAG of non-identity morphisms
    std::size_t n = objects.size();
    std::vector<std::int32_t> best(n, -1);
    std::vector<std::vector<std::uint32_t>> out(n);
    for (std::uint32_t f = 0; f < morphisms.size(); ++f)
        if (!is_identity(f)) out[morphisms[f].src].push_back(morphisms[f].tgt);
    std::uint32_t ans = 0;
    // memoized DFS
    std::vector<std::uint32_t> stack;
    std::function<std::uint32_t(std::uint32_t)> go = [&](std::uint32_t v) -> std::uint32_t {
        if (best[v] >= 0) return std::uint32_t(best[v]);
        std::uint32_t b = 0;
        for (auto w : out[v]) b = std::max(b, 1 + go(w));
        best[v] = std::int32_t(b);
        return b;
    };
    for (std::uint32_t v = 0; v < n; ++v) ans = std::max(ans, go(v));
    return ans;
}

FinCategory poset_to_category(const FinPoset& p) {
    FinCategory c;
    c.objects = p.elements;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mor_id;
    for (std::uint32_t i = 0; i < p.size(); ++i)
        for (std::uint32_t j = 0; j < p.size(); ++j)
            if (p.leq[i][j]) {
                mor_id[{i, j}] = std::uint32_t(c.morphisms.size());
                c.morphisms.push_back({p.elements[i] + "<=" + p.elements[j], i, j});
            }
    c.identity.resize(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) c.identity[i] = mor_id.at({i, i});
    c.table.assign(c.morphisms.size(), std::vector<std::int32_t>(c.morphisms.size(), -1));
    for (std::uint32_t g = 0; g < c.morphisms.size(); ++g)
        for (std::uint32_t f = 0; f < c.morphisms.size(); ++f)
            if (c.morphisms[f].tgt == c.morphisms[g].src)
                c.table[g][f] = std::int32_t(mor_id.at({c.morphisms[f].src, c.morphisms[g].tgt}));
    c.validate();
    return c;
}

std::uint32_t NerveChains::index_of(std::uint32_t p, const Chain& c) const {
    auto it = index[p].find(c);
    if (it == index[p].end()) throw Error("INPUT", "chain not present in nerve");
    return it->second;
}

Chain NerveChains::face(const FinCategory& cat, const Chain& ch, std::uint32_t r) const {
    std::uint32_t p = ch.degree();
    if (p == 0 || r > p) throw Error("INPUT", "bad face index");
    Chain out;
    if (p == 1) {
        // faces are degree-0 chains (objects)
        std::uint32_t obj = (r == 0) ? cat.morphisms[ch.mors[0]].tgt : cat.morphisms[ch.mors[0]].src;
        out.min_obj = out.max_obj = obj;
        return out;
    }
    out.mors.reserve(p - 1);
    if (r == 0) {
        out.mors.assign(ch.mors.begin() + 1, ch.mors.end());
    } else if (r == p) {
        out.mors.assign(ch.mors.begin(), ch.mors.end() - 1);
    } else {
        out.mors.assign(ch.mors.begin(), ch.mors.begin() + (r - 1));
        out.mors.push_back(cat.compose(ch.mors[r], ch.mors[r - 1]));
        out.mors.insert(out.mors.end(), ch.mors.begin() + (r + 1), ch.mors.end());
    }
    out.min_obj = cat.morphisms[out.mors.front()].src;
    out.max_obj = cat.morphisms[out.mors.back()].tgt;
    return out;
}

NerveChains nerve(const FinCategory& c, std::uint32_t p_max, bool normalized) {
    NerveChains n;
    n.normalized = normalized;
    n.by_degree.resize(p_max + 1);
    n.index.resize(p_max + 1);
    for (std::uint32_t o = 0; o < c.objects.size(); ++o) {
        Chain ch;
        ch.min_obj = ch.max_obj = o;
        n.index[0][ch] = std::uint32_t(n.by_degree[0].size());
        n.by_degree[0].push_back(ch);
    }
    for (std::uint32_t p = 1; p <= p_max; ++p) {
        for (const auto& prev : n.by_degree[p - 1]) {
            for (std::uint32_t f = 0; f < c.morphisms.size(); ++f) {
                if (normalized && c.is_identity(f)) continue;
                if (c.morphisms[f].src != prev.max_obj) continue;
                Chain ch = prev;
                ch.mors.push_back(f);
                ch.max_obj = c.morphisms[f].tgt;
                n.index[p][ch] = std::uint32_t(n.by_degree[p].size());
                n.by_degree[p].push_back(ch);
            }
        }
    }
    return n;
}

std::uint32_t chain_composite(const FinCategory& c, const Chain& ch) {
    if (ch.degree() == 0) return c.identity[ch.min_obj];
    std::uint32_t m = ch.mors[0];
    for (std::uint32_t t = 1; t < ch.degree(); ++t) m = c.compose(ch.mors[t], m);
    return m;
}

TwistedArrowCat twisted_arrow(const FinCategory& c) {
    TwistedArrowCat tw;
    FinCategory& t = tw.cat;
    for (std::uint32_t f = 0; f < c.morphisms.size(); ++f) t.objects.push_back(c.morphisms[f].name);

    std::map<std::pair<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>>, std::uint32_t> mor_id;
    // Hom(f, g): pairs (alpha, beta), alpha: tgt f -> tgt g, beta: src g -> src f, g = alpha∘f∘beta
    for (std::uint32_t f = 0; f < c.morphisms.size(); ++f) {
        for (std::uint32_t a = 0; a < c.morphisms.size(); ++a) {
            if (c.morphisms[a].src != c.morphisms[f].tgt) continue;
            for (std::uint32_t b = 0; b < c.morphisms.size(); ++b) {
                if (c.morphisms[b].tgt != c.morphisms[f].src) continue;
                std::uint32_t g = c.compose(c.compose(a, f), b);
                std::uint32_t id = std::uint32_t(t.morphisms.size());
                t.morphisms.push_back({"(" + c.morphisms[a].name + "," + c.morphisms[b].name + ")", f, g});
                tw.pair_of.push_back({a, b});
                mor_id[{f, {a, b}}] = id;
            }
        }
    }
    t.identity.resize(t.objects.size());
    for (std::uint32_t f = 0; f < c.morphisms.size(); ++f)
        t.identity[f] = mor_id.at({f, {c.identity[c.morphisms[f].tgt], c.identity[c.morphisms[f].src]}});
    t.table.assign(t.morphisms.size(), std::vector<std::int32_t>(t.morphisms.size(), -1));
    // (alpha', beta') ∘ (alpha, beta) = (alpha'∘alpha, beta∘beta')
    for (std::uint32_t m2 = 0; m2 < t.morphisms.size(); ++m2)
        for (std::uint32_t m1 = 0; m1 < t.morphisms.size(); ++m1) {
            if (t.morphisms[m1].tgt != t.morphisms[m2].src) continue;
            auto [a1, b1] = tw.pair_of[m1];
            auto [a2, b2] = tw.pair_of[m2];
            std::uint32_t a = c.compose(a2, a1);
            std::uint32_t b = c.compose(b1, b2);
            t.table[m2][m1] = std::int32_t(mor_id.at({t.morphisms[m1].src, {a, b}}));
        }
    t.validate();
    return tw;
}

bool is_free(const FinCategory& c) {
    c.require_loop_free();
    // indecomposable: non-identity with no factorization into two non-identities
    std::vector<bool> indec(c.morphisms.size(), false);
    for (std::uint32_t h = 0; h < c.morphisms.size(); ++h) {
        if (c.is_identity(h)) continue;
        bool has_split = false;
        for (std::uint32_t g = 0; g < c.morphisms.size() && !has_split; ++g) {
            if (c.is_identity(g)) continue;
            for (std::uint32_t f = 0; f < c.morphisms.size(); ++f) {
                if (c.is_identity(f) || !c.composable(g, f)) continue;
                if (c.compose(g, f) == h) {
                    has_split = true;
                    break;
                }
            }
        }
        indec[h] = !has_split;
    }
    // count factorizations into sequences of indecomposables (loop-free => recursion terminates)
    std::vector<std::int64_t> memo(c.morphisms.size(), -1);
    std::function<std::int64_t(std::uint32_t)> count = [&](std::uint32_t h) -> std::int64_t {
        if (memo[h] >= 0) return memo[h];
        std::int64_t total = indec[h] ? 1 : 0;
        for (std::uint32_t u = 0; u < c.morphisms.size(); ++u) {
            if (!indec[u]) continue;
            for (std::uint32_t v = 0; v < c.morphisms.size(); ++v) {
                if (c.is_identity(v) || !c.composable(u, v)) continue;
                if (c.compose(u, v) == h) total += count(v);
            }
        }
        memo[h] = total;
        return total;
    };
    for (std::uint32_t h = 0; h < c.morphisms.size(); ++h) {
        if (c.is_identity(h)) continue;
        if (count(h) != 1) return false;
    }
    return true;
}

}  // namespace gsc
