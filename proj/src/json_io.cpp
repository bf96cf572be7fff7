#include "gsc/json_io.hpp"

#include <sstream>

#include "gsc/bw.hpp"
#include "gsc/verify.hpp"

namespace gsc {

FieldSpec parse_field_spec(const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) return FieldSpec::prime(j.get<std::uint32_t>());
    if (j.is_string()) return parse_field_flag(j.get<std::string>());
    if (j.is_object()) {
        auto kind = j.at("kind").get<std::string>();
        if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint32_t>());
        if (kind == "rational") return FieldSpec::rational();
        throw Error("INPUT", "field kind must be prime or rational");
    }
    throw Error("INPUT", "unrecognized field spec");
}

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "Q" || s == "q" || s == "rational") return FieldSpec::rational();
    try {
        return FieldSpec::prime(std::uint32_t(std::stoul(s)));
    } catch (const std::logic_error&) {
        throw Error("INPUT", "field must be a prime number or Q: " + s);
    }
}

void check_field_consistency(const json& j, const FieldSpec& fs) {
    if (!j.is_object() || !j.contains("field")) return;
    auto own = parse_field_spec(j.at("field"));
    if (!(own == fs))
        throw Error("INPUT", "document field " + own.str() + " conflicts with the requested field " + fs.str());
}

FinPoset parse_poset(const json& j) {
    if (!j.contains("elements") || !j.contains("covers")) throw Error("INPUT", "poset JSON needs elements, covers");
    std::vector<std::string> els;
    for (const auto& e : j.at("elements")) els.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw Error("INPUT", "poset JSON: covers are [a,b] pairs");
        covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
    }
    return FinPoset::from_covers(els, covers);
}

json poset_to_json(const FinPoset& p) {
    json j;
    j["schema"] = kSchema;
    j["elements"] = p.elements;
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back(json::array({p.elements[a], p.elements[b]}));
    j["covers"] = covers;
    return j;
}

SimplicialComplex parse_complex(const json& j) {
    if (!j.contains("maximal_faces")) throw Error("INPUT", "complex JSON needs maximal_faces");
    std::vector<std::vector<std::string>> mf;
    for (const auto& fc : j.at("maximal_faces")) {
        std::vector<std::string> face;
        for (const auto& v : fc) face.push_back(v.get<std::string>());
        mf.push_back(face);
    }
    return SimplicialComplex::from_maximal_faces(mf);
}

json complex_to_json(const SimplicialComplex& s) {
    json j;
    j["schema"] = kSchema;
    json mf = json::array();
    // maximal faces: not contained in any other face
    for (const auto& f : s.faces) {
        bool maximal = true;
        for (const auto& g : s.faces) {
            if (f == g || g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            json face = json::array();
            for (auto v : f) face.push_back(s.vertices[v]);
            mf.push_back(face);
        }
    }
    j["maximal_faces"] = mf;
    return j;
}

std::vector<SimplicialComplex> parse_filtration(const json& j) {
    if (!j.contains("steps")) throw Error("INPUT", "filtration JSON needs steps");
    std::vector<SimplicialComplex> steps;
    for (const auto& s : j.at("steps")) steps.push_back(parse_complex(s));
    return steps;
}

ComplexDiagram parse_diagram(const json& j) {
    ComplexDiagram d;
    if (!j.contains("poset") || !j.contains("complexes") || !j.contains("maps"))
        throw Error("INPUT", "diagram JSON needs poset, complexes, maps");
    d.index = parse_poset(j.at("poset"));
    d.complexes.resize(d.index.size());
    for (const auto& [key, val] : j.at("complexes").items()) d.complexes[d.index.index_of(key)] = parse_complex(val);
    for (const auto& m : j.at("maps")) {
        auto from = d.index.index_of(m.at("from").get<std::string>());
        auto to = d.index.index_of(m.at("to").get<std::string>());
        std::map<std::string, std::string> labels;
        if (m.contains("vertex_map"))
            for (const auto& [k, v] : m.at("vertex_map").items()) labels[k] = v.get<std::string>();
        d.maps[{from, to}] = simplicial_map_from_labels(d.complexes[from], d.complexes[to], labels);
    }
    d.validate_and_close();
    return d;
}

json checks_to_json(const std::string& suite, const std::vector<Check>& checks) {
    json j;
    j["schema"] = kSchema;
    j["suite"] = suite;
    json arr = json::array();
    bool ok = true;
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["ok"] = c.ok;
        e["expected"] = c.expected;
        e["computed"] = c.got;
        arr.push_back(e);
        ok = ok && c.ok;
    }
    j["checks"] = arr;
    j["all_ok"] = ok;
    return j;
}

json certificate_to_json(const HomEpiCertificate& c) {
    json j;
    j["schema"] = kSchema;
    j["status"] = c.status;
    j["checked_degree_bound"] = c.checked_degree_bound;
    j["surjective"] = c.surjective;
    j["epi_ok"] = c.epi_ok;
    j["tor_dims"] = c.tor_dims;
    json tv = json::array();
    for (bool b : c.tor_vanishing) tv.push_back(b);
    j["tor_vanishing"] = tv;
    j["idempotent_kernel"] = c.idempotent_kernel;
    j["projective_kernel"] = c.projective_kernel == HomEpiCertificate::Projective::yes        ? "yes"
                             : c.projective_kernel == HomEpiCertificate::Projective::undecided ? "UNDECIDED"
                                                                                               : "no";
    j["proven"] = c.proven;
    return j;
}

json page_to_json(const SSPage& page) {
    json j;
    j["r"] = page.r;
    json cells;
    for (std::uint32_t p = 0; p < page.dims.size(); ++p)
        for (std::uint32_t q = 0; q < page.dims[p].size(); ++q)
            cells[std::to_string(p) + "," + std::to_string(q)] = page.dims[p][q];
    j["cells"] = cells;
    return j;
}

std::string page_to_table(const SSPage& page) {
    std::ostringstream os;
    os << "E" << page.r << " page (rows q descending, columns p):\n";
    std::uint32_t qmax = page.dims.empty() ? 0 : std::uint32_t(page.dims[0].size());
    for (std::uint32_t qi = qmax; qi-- > 0;) {
        os << "  q=" << qi << " |";
        for (std::uint32_t p = 0; p < page.dims.size(); ++p) os << " " << page.dim(p, qi);
        os << "\n";
    }
    os << "        ";
    for (std::uint32_t p = 0; p < page.dims.size(); ++p) os << " p" << p;
    os << "\n";
    return os.str();
}

json compare_report_to_json(const CompareReport& rep) {
    json j;
    j["schema"] = kSchema;
    j["claim"] = rep.claim;
    json cells;
    for (const auto& c : rep.cells) {
        json e;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["ok"] = c.ok;
        cells[std::to_string(c.p) + "," + std::to_string(c.q)] = e;
    }
    j["cells"] = cells;
    j["all_ok"] = rep.all_ok;
    return j;
}

json dims_to_json(const std::vector<std::uint32_t>& dims, const std::string& label) {
    json j;
    j["schema"] = kSchema;
    j[label] = dims;
    return j;
}

std::string dims_to_table(const std::vector<std::uint32_t>& dims, const std::string& label) {
    std::ostringstream os;
    os << label << ":";
    for (std::uint32_t n = 0; n < dims.size(); ++n) os << "  " << n << ": " << dims[n];
    os << "\n";
    return os.str();
}

}  // namespace gsc
