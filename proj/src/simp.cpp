#include "gsc/simp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gsc {

SimplicialComplex SimplicialComplex::from_maximal_faces(const std::vector<std::vector<std::string>>& maximal) {
    SimplicialComplex s;
    std::set<std::string> vs;
    for (const auto& fc : maximal)
        for (const auto& v : fc) vs.insert(v);
    s.vertices.assign(vs.begin(), vs.end());
    for (const auto& fc : maximal) {
        std::set<std::uint32_t> unique;
        for (const auto& v : fc) unique.insert(s.vertex_index(v));
        std::vector<std::uint32_t> face(unique.begin(), unique.end());
        if (face.empty()) throw Error("INPUT", "empty face in complex");
        // all nonempty subsets
        std::uint32_t n = std::uint32_t(face.size());
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::uint32_t> sub;
            for (std::uint32_t i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(face[i]);
            s.faces.insert(sub);
        }
    }
    s.validate();
    return s;
}

void SimplicialComplex::validate() const {
    for (const auto& f : faces) {
        if (f.empty()) throw Error("INPUT", "empty simplex not allowed");
        if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error("INPUT", "face not a sorted vertex set");
        for (auto v : f)
            if (v >= vertices.size()) throw Error("INPUT", "face vertex out of range");
        if (f.size() > 1) {
            for (std::uint32_t i = 0; i < f.size(); ++i) {
                std::vector<std::uint32_t> sub;
                for (std::uint32_t j = 0; j < f.size(); ++j)
                    if (j != i) sub.push_back(f[j]);
                if (!faces.count(sub)) throw Error("INPUT", "not closed under subsets");
            }
        }
    }
}

std::uint32_t SimplicialComplex::vertex_index(const std::string& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw Error("INPUT", "unknown vertex: " + v);
    return std::uint32_t(it - vertices.begin());
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : faces) d = std::max(d, int(f.size()) - 1);
    return d;
}

std::vector<std::vector<std::uint32_t>> SimplicialComplex::faces_of_dim(std::uint32_t q) const {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& f : faces)
        if (f.size() == q + 1) out.push_back(f);
    return out;  // std::set iteration is already sorted
}

std::string SimplicialComplex::face_label(const std::vector<std::uint32_t>& face) const {
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) s += ",";
        s += vertices[face[i]];
    }
    return s + "}";
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& f : faces) {
        std::vector<std::uint32_t> g;
        for (auto v : f) g.push_back(other.vertex_index(vertices[v]));
        std::sort(g.begin(), g.end());
        if (!other.contains(g)) return false;
    }
    return true;
}

SimplicialComplex SimplicialComplex::point(const std::string& v) {
    return from_maximal_faces({{v}});
}

bool SimplicialMap::injective() const {
    auto m = vertex_map;
    std::sort(m.begin(), m.end());
    return std::adjacent_find(m.begin(), m.end()) == m.end();
}

SimplicialMap simplicial_map_from_labels(const SimplicialComplex& dom, const SimplicialComplex& cod,
                                         const std::map<std::string, std::string>& labels) {
    SimplicialMap m;
    m.vertex_map.resize(dom.vertices.size());
    for (std::uint32_t v = 0; v < dom.vertices.size(); ++v) {
        auto it = labels.find(dom.vertices[v]);
        if (it == labels.end()) {
            // default: same label (inclusion-style maps)
            m.vertex_map[v] = cod.vertex_index(dom.vertices[v]);
        } else {
            m.vertex_map[v] = cod.vertex_index(it->second);
        }
    }
    validate_simplicial(dom, cod, m);
    return m;
}

void validate_simplicial(const SimplicialComplex& dom, const SimplicialComplex& cod, const SimplicialMap& m) {
    if (m.vertex_map.size() != dom.vertices.size()) throw Error("INPUT", "vertex map size mismatch");
    for (const auto& f : dom.faces) {
        std::set<std::uint32_t> img;
        for (auto v : f) img.insert(m.vertex_map.at(v));
        std::vector<std::uint32_t> g(img.begin(), img.end());
        if (!cod.contains(g)) throw Error("INPUT", "map is not simplicial: image face missing");
    }
}

FinPoset face_poset(const SimplicialComplex& s, bool include_empty) {
    std::vector<std::string> els;
    std::vector<std::vector<std::uint32_t>> fl(s.faces.begin(), s.faces.end());
    for (const auto& f : fl) els.push_back(s.face_label(f));
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < fl.size(); ++i)
        for (std::size_t j = 0; j < fl.size(); ++j) {
            if (i == j) continue;
            if (std::includes(fl[j].begin(), fl[j].end(), fl[i].begin(), fl[i].end()))
                rel.push_back({els[i], els[j]});  // sigma <= tau iff sigma subset of tau
        }
    if (include_empty) {
        els.insert(els.begin(), "{}");
        for (std::size_t i = 1; i < els.size(); ++i) rel.push_back({"{}", els[i]});
    }
    return FinPoset::from_relation(els, rel);
}

SimplicialComplex order_complex(const FinPoset& p) {
    SimplicialComplex s;
    s.vertices = p.elements;
    std::sort(s.vertices.begin(), s.vertices.end());
    // strict chains via DFS; vertex indices refer to the sorted vertex list
    std::vector<std::uint32_t> sorted_of(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) sorted_of[i] = s.vertex_index(p.elements[i]);

    std::vector<std::vector<std::uint32_t>> chains;  // as poset indices
    std::vector<std::uint32_t> cur;
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t last) {
        chains.push_back(cur);
        for (std::uint32_t nxt = 0; nxt < p.size(); ++nxt) {
            if (nxt != last && p.leq[last][nxt]) {
                cur.push_back(nxt);
                extend(nxt);
                cur.pop_back();
            }
        }
    };
    for (std::uint32_t st = 0; st < p.size(); ++st) {
        cur = {st};
        extend(st);
    }
    for (const auto& ch : chains) {
        std::vector<std::uint32_t> face;
        for (auto i : ch) face.push_back(sorted_of[i]);
        std::sort(face.begin(), face.end());
        s.faces.insert(face);
    }
    s.validate();
    return s;
}

const SimplicialMap& ComplexDiagram::map_for(std::uint32_t p, std::uint32_t q) const {
    auto it = maps.find({p, q});
    if (it == maps.end()) throw Error("INPUT", "diagram map missing for relation");
    return it->second;
}

void ComplexDiagram::validate_and_close() {
    if (complexes.size() != index.size()) throw Error("INPUT", "diagram: one complex per element required");
    // close over all relations by composing cover maps along any path; check consistency
    auto compose = [&](const SimplicialMap& first, const SimplicialMap& second) {
        SimplicialMap r;  // second after first
        r.vertex_map.resize(first.vertex_map.size());
        for (std::size_t v = 0; v < first.vertex_map.size(); ++v)
            r.vertex_map[v] = second.vertex_map.at(first.vertex_map[v]);
        return r;
    };
    for (std::uint32_t p = 0; p < index.size(); ++p) {
        // BFS by poset height: repeat until stable
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t q = 0; q < index.size(); ++q) {
                if (p == q || !index.leq[p][q] || maps.count({p, q})) continue;
                for (std::uint32_t m = 0; m < index.size(); ++m) {
                    if (m == p || m == q || !index.leq[p][m] || !index.leq[m][q]) continue;
                    if (maps.count({p, m}) && maps.count({m, q})) {
                        maps[{p, q}] = compose(maps.at({p, m}), maps.at({m, q}));
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    for (std::uint32_t p = 0; p < index.size(); ++p)
        for (std::uint32_t q = 0; q < index.size(); ++q) {
            if (p == q || !index.leq[p][q]) continue;
            if (!maps.count({p, q})) throw Error("INPUT", "diagram maps incomplete (missing cover map?)");
            const auto& m = maps.at({p, q});
            validate_simplicial(complexes[p], complexes[q], m);
            if (!m.injective()) throw Error("NONINJECTIVE_MAP", "diagram map not injective");
        }
    // functoriality on all composable pairs
    for (std::uint32_t p = 0; p < index.size(); ++p)
        for (std::uint32_t m = 0; m < index.size(); ++m)
            for (std::uint32_t q = 0; q < index.size(); ++q) {
                if (p == m || m == q || p == q) continue;
                if (!index.leq[p][m] || !index.leq[m][q]) continue;
                auto pm = maps.at({p, m}), mq = maps.at({m, q}), pq = maps.at({p, q});
                for (std::size_t v = 0; v < pm.vertex_map.size(); ++v)
                    if (mq.vertex_map.at(pm.vertex_map[v]) != pq.vertex_map[v])
                        throw Error("FUNCTORIALITY_VIOLATION", "diagram maps do not compose");
            }
}

ComplexDiagram filtration(const std::vector<SimplicialComplex>& steps) {
    if (steps.empty()) throw Error("INPUT", "empty filtration");
    ComplexDiagram d;
    d.index = FinPoset::chain(std::uint32_t(steps.size()) - 1);
    d.complexes = steps;
    for (std::uint32_t i = 0; i + 1 < steps.size(); ++i) {
        if (!steps[i].is_subcomplex_of(steps[i + 1]))
            throw Error("INPUT", "filtration step " + std::to_string(i) + " is not a subcomplex of step " +
                                     std::to_string(i + 1));
        d.maps[{i, i + 1}] = simplicial_map_from_labels(steps[i], steps[i + 1], {});
    }
    d.validate_and_close();
    return d;
}

ColimitResult colimit(const ComplexDiagram& d) {
    // disjoint union of vertices: (element p, vertex v)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> verts;
    std::vector<std::vector<std::uint32_t>> offset(d.index.size());
    for (std::uint32_t p = 0; p < d.index.size(); ++p) {
        offset[p].resize(d.complexes[p].vertices.size());
        for (std::uint32_t v = 0; v < d.complexes[p].vertices.size(); ++v) {
            offset[p][v] = std::uint32_t(verts.size());
            verts.push_back({p, v});
        }
    }
    // union-find over the identifications x ~ map(x)
    std::vector<std::uint32_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); };
    for (const auto& [rel, m] : d.maps) {
        auto [p, q] = rel;
        for (std::uint32_t v = 0; v < m.vertex_map.size(); ++v) unite(offset[p][v], offset[q][m.vertex_map[v]]);
        if (!m.injective()) throw Error("NONINJECTIVE_MAP", "colimit requires injective maps");
    }
    // canonical representative per class: lexicographically least (element label, vertex label)
    std::map<std::uint32_t, std::pair<std::string, std::string>> rep;
    for (std::uint32_t i = 0; i < verts.size(); ++i) {
        auto r = find(i);
        auto [p, v] = verts[i];
        std::pair<std::string, std::string> key{d.index.elements[p], d.complexes[p].vertices[v]};
        auto it = rep.find(r);
        if (it == rep.end() || key < it->second) rep[r] = key;
    }
    // labels: bare vertex label when unique across classes, else qualified
    std::map<std::string, int> label_uses;
    for (const auto& [r, key] : rep) ++label_uses[key.second];
    std::map<std::uint32_t, std::string> class_label;
    for (const auto& [r, key] : rep)
        class_label[r] = (label_uses[key.second] == 1) ? key.second : key.first + ":" + key.second;

    ColimitResult out;
    std::set<std::string> vset;
    for (const auto& [r, lab] : class_label) vset.insert(lab);
    out.complex.vertices.assign(vset.begin(), vset.end());

    auto class_vertex = [&](std::uint32_t p, std::uint32_t v) {
        return out.complex.vertex_index(class_label.at(find(offset[p][v])));
    };
    for (std::uint32_t p = 0; p < d.index.size(); ++p)
        for (const auto& f : d.complexes[p].faces) {
            std::set<std::uint32_t> img;
            for (auto v : f) img.insert(class_vertex(p, v));
            out.complex.faces.insert(std::vector<std::uint32_t>(img.begin(), img.end()));
        }
    out.complex.validate();
    out.inclusions.resize(d.index.size());
    for (std::uint32_t p = 0; p < d.index.size(); ++p) {
        out.inclusions[p].vertex_map.resize(d.complexes[p].vertices.size());
        for (std::uint32_t v = 0; v < d.complexes[p].vertices.size(); ++v)
            out.inclusions[p].vertex_map[v] = class_vertex(p, v);
        validate_simplicial(d.complexes[p], out.complex, out.inclusions[p]);
        if (!out.inclusions[p].injective())
            throw Error("NONINJECTIVE_MAP", "colimit inclusion failed to be injective");
    }
    return out;
}

SimplicialMap cone_factor(const ComplexDiagram& d, const ColimitResult& K, const SimplicialComplex& L,
                          const std::vector<SimplicialMap>& cone) {
    if (cone.size() != d.index.size()) throw Error("INPUT", "cone: one map per index element required");
    for (std::uint32_t p = 0; p < d.index.size(); ++p) validate_simplicial(d.complexes[p], L, cone[p]);
    for (std::uint32_t p = 0; p < d.index.size(); ++p)
        for (std::uint32_t q = 0; q < d.index.size(); ++q) {
            if (p == q || !d.index.leq[p][q]) continue;
            const auto& m = d.map_for(p, q);
            for (std::uint32_t v = 0; v < m.vertex_map.size(); ++v)
                if (cone[q].vertex_map.at(m.vertex_map[v]) != cone[p].vertex_map[v])
                    throw Error("INCOMPATIBLE_CONE", "cone maps do not commute with the diagram");
        }
    SimplicialMap phi;
    phi.vertex_map.assign(K.complex.vertices.size(), UINT32_MAX);
    for (std::uint32_t p = 0; p < d.index.size(); ++p)
        for (std::uint32_t v = 0; v < d.complexes[p].vertices.size(); ++v) {
            std::uint32_t kv = K.inclusions[p].vertex_map[v];
            std::uint32_t lv = cone[p].vertex_map[v];
            if (phi.vertex_map[kv] != UINT32_MAX && phi.vertex_map[kv] != lv)
                throw Error("INCOMPATIBLE_CONE", "cone does not descend to the colimit");
            phi.vertex_map[kv] = lv;
        }
    for (auto v : phi.vertex_map)
        if (v == UINT32_MAX) throw Error("INPUT", "colimit has a vertex missed by all inclusions");
    validate_simplicial(K.complex, L, phi);
    return phi;
}

}  // namespace gsc
