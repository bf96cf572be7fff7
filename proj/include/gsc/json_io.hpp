#pragma once

// JSON parsing/serialization for the CLI surface. All emitted documents carry
// {"schema": "gs-cohomlab/1"} and use insertion-ordered keys so identical
// inputs produce byte-identical output.

#include <json.hpp>
#include <string>
#include <vector>

#include "gsc/alg.hpp"
#include "gsc/fincat.hpp"
#include "gsc/gs.hpp"
#include "gsc/hochschild.hpp"
#include "gsc/simp.hpp"

namespace gsc {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gs-cohomlab/1";

FieldSpec parse_field_spec(const json& j);
FieldSpec parse_field_flag(const std::string& s);  // "32003", "2", "Q", "rational"

// Documents carrying their own "field" key must agree with the requested one.
void check_field_consistency(const json& j, const FieldSpec& fs);

FinPoset parse_poset(const json& j);
json poset_to_json(const FinPoset& p);

SimplicialComplex parse_complex(const json& j);
json complex_to_json(const SimplicialComplex& s);

std::vector<SimplicialComplex> parse_filtration(const json& j);
ComplexDiagram parse_diagram(const json& j);

json checks_to_json(const std::string& suite, const std::vector<struct Check>& checks);

template <class F>
FiniteAlgebra<F> parse_algebra(const json& j, const F& f) {
    FiniteAlgebra<F> a;
    a.field = f;
    if (!j.contains("dim") || !j.contains("unit") || !j.contains("mult"))
        throw Error("INPUT", "algebra JSON needs dim, unit, mult");
    a.dim = j.at("dim").get<std::uint32_t>();
    for (const auto& u : j.at("unit")) a.unit.push_back(f.from_string(u.is_string() ? u.get<std::string>() : u.dump()));
    if (a.unit.size() != a.dim) throw Error("INPUT", "algebra JSON: unit length != dim");
    a.mult.assign(a.dim, std::vector<SparseVec<F>>(a.dim));
    for (const auto& t : j.at("mult")) {
        if (!t.is_array() || t.size() != 4) throw Error("INPUT", "algebra JSON: mult entries are [i,j,k,c]");
        std::uint32_t i = t[0].get<std::uint32_t>(), jj = t[1].get<std::uint32_t>(), k = t[2].get<std::uint32_t>();
        if (i >= a.dim || jj >= a.dim || k >= a.dim) throw Error("INPUT", "algebra JSON: mult index out of range");
        auto c = f.from_string(t[3].is_string() ? t[3].get<std::string>() : t[3].dump());
        if (!f.is_zero(c)) a.mult[i][jj].push_back({k, c});
    }
    for (auto& row : a.mult)
        for (auto& v : row) std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
    if (j.contains("basis_labels"))
        for (const auto& l : j.at("basis_labels")) a.basis_labels.push_back(l.get<std::string>());
    a.validate();
    return a;
}

template <class F>
json algebra_to_json(const FiniteAlgebra<F>& a) {
    json j;
    j["schema"] = kSchema;
    j["dim"] = a.dim;
    j["field"] = a.field.spec().kind == FieldSpec::Kind::rational ? json("Q") : json(a.field.spec().p);
    json unit = json::array();
    for (const auto& u : a.unit) unit.push_back(a.field.str(u));
    j["unit"] = unit;
    json mult = json::array();
    for (std::uint32_t i = 0; i < a.dim; ++i)
        for (std::uint32_t k = 0; k < a.dim; ++k)
            for (const auto& [l, c] : a.mult[i][k]) mult.push_back(json::array({i, k, l, a.field.str(c)}));
    j["mult"] = mult;
    json labels = json::array();
    for (std::uint32_t i = 0; i < a.dim; ++i) labels.push_back(a.label(i));
    j["basis_labels"] = labels;
    return j;
}

template <class F>
AlgebraMorphism<F> parse_morphism(const json& j, const F& f) {
    if (!j.contains("source") || !j.contains("target") || !j.contains("matrix"))
        throw Error("INPUT", "morphism JSON needs source, target, matrix");
    AlgebraMorphism<F> m{parse_algebra(j.at("source"), f), parse_algebra(j.at("target"), f), {}};
    std::vector<typename SparseMatrix<F>::Entry> tr;
    for (const auto& t : j.at("matrix")) {
        if (!t.is_array() || t.size() != 3) throw Error("INPUT", "morphism JSON: matrix entries are [row,col,v]");
        tr.push_back({t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>(),
                      f.from_string(t[2].is_string() ? t[2].get<std::string>() : t[2].dump())});
    }
    m.matrix = SparseMatrix<F>::from_triplets(m.target.dim, m.source.dim, std::move(tr), f);
    m.validate();
    return m;
}

json certificate_to_json(const HomEpiCertificate& c);

json page_to_json(const SSPage& page);
std::string page_to_table(const SSPage& page);

json compare_report_to_json(const struct CompareReport& rep);

json dims_to_json(const std::vector<std::uint32_t>& dims, const std::string& label);
std::string dims_to_table(const std::vector<std::uint32_t>& dims, const std::string& label);

}  // namespace gsc
