// gsc: exact cohomology computations for finite-dimensional algebras,
// presheaves of algebras on finite posets, and incidence algebras of
// simplicial filtrations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gsc/bw.hpp"
#include "gsc/gs.hpp"
#include "gsc/hochschild.hpp"
#include "gsc/json_io.hpp"
#include "gsc/verify.hpp"

using namespace gsc;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("INPUT", "cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("INPUT", path + ": " + e.what());
    }
}

template <class Fn>
int with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::prime) return fn(Fp(fs.p));
    return fn(Rat{});
}

void emit(const json& j, bool as_json, const std::string& table) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << table;
}

struct CommonOpts {
    std::string field = "32003";
    bool as_json = false;
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--field", o.field, "coefficient field: a prime p or Q (default GF(32003))");
    cmd->add_flag("--json", o.as_json, "emit JSON instead of a table");
    cmd->add_option("--threads", o.threads, "worker threads for independent cells (default 1)");
}

int cmd_hh(const std::string& algebra_path, const std::string& poset_path, const std::string& complex_path,
           const CommonOpts& common, int max_q, bool unnormalized) {
    auto fs = parse_field_flag(common.field);
    return with_field(fs, [&](auto fld) {
        using F = decltype(fld);
        FiniteAlgebra<F> a;
        std::string source;
        if (!algebra_path.empty()) {
            auto j = load_json(algebra_path);
            check_field_consistency(j, fs);
            a = parse_algebra<F>(j, fld);
            source = "algebra " + algebra_path;
        } else if (!poset_path.empty()) {
            a = incidence_algebra(parse_poset(load_json(poset_path)), fld);
            source = "incidence algebra of poset " + poset_path;
        } else if (!complex_path.empty()) {
            a = incidence_algebra(face_poset(parse_complex(load_json(complex_path))), fld);
            source = "incidence algebra of the face poset of " + complex_path;
        } else {
            throw Error("INPUT", "hh needs one of --algebra, --poset, --complex");
        }
        std::uint32_t q_max = max_q >= 0 ? std::uint32_t(max_q) : (a.dim <= 12 ? 3 : 2);
        auto dims = hh_diag(a, q_max, !unnormalized);
        json j;
        j["schema"] = kSchema;
        j["input"] = source;
        j["field"] = fs.str();
        j["q_max"] = q_max;
        j["normalized_cochains"] = !unnormalized;
        j["hh_dims"] = dims;
        std::ostringstream table;
        table << "HH^q of " << source << " over " << fs.str() << " (q_max = " << q_max << ")\n"
              << dims_to_table(dims, "  dims");
        emit(j, common.as_json, table.str());
        return 0;
    });
}

template <class F>
AlgebraPresheaf<F> presheaf_from_input(const std::string& filtration_path, const std::string& diagram_path,
                                       const F& fld) {
    if (!filtration_path.empty()) {
        auto steps = parse_filtration(load_json(filtration_path));
        return presheaf_from_diagram(filtration(steps), fld);
    }
    if (!diagram_path.empty()) return presheaf_from_diagram(parse_diagram(load_json(diagram_path)), fld);
    throw Error("INPUT", "expected --filtration or --diagram");
}

int cmd_gs(const std::string& filtration_path, const std::string& diagram_path, const CommonOpts& common,
           std::uint32_t max_n, bool with_pages) {
    auto fs = parse_field_flag(common.field);
    if (fs.kind == FieldSpec::Kind::rational) {
        Rat fld;
        auto A = presheaf_from_input(filtration_path, diagram_path, fld);
        auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), max_n, std::nullopt, true, true, common.threads);
        auto dims = gs_cohomology(g, max_n);
        json j;
        j["schema"] = kSchema;
        j["field"] = fs.str();
        j["n_max"] = max_n;
        j["gs_dims"] = dims;
        emit(j, common.as_json, dims_to_table(dims, "HH_GS over " + fs.str() + " (n_max " + std::to_string(max_n) + ")"));
        return 0;
    }
    Fp fld(fs.p);
    auto A = presheaf_from_input(filtration_path, diagram_path, fld);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), max_n, std::nullopt, true, true, common.threads);
    auto dims = gs_cohomology(g, max_n);
    json j;
    j["schema"] = kSchema;
    j["field"] = fs.str();
    j["n_max"] = max_n;
    j["gs_dims"] = dims;
    std::ostringstream table;
    table << dims_to_table(dims, "HH_GS over " + fs.str() + " (n_max " + std::to_string(max_n) + ")");
    if (with_pages) {
        auto pages = ss_pages(g, common.threads);
        j["pages"] = json::array({page_to_json(pages.e0), page_to_json(pages.e1), page_to_json(pages.e2)});
        auto cons = ss_consistency(pages, dims, max_n);
        j["consistency"] = {{"two_column_case", cons.two_column_case},
                            {"equality_holds", cons.equality_holds},
                            {"possible_higher_differentials", cons.possible_higher_differentials}};
        table << page_to_table(pages.e1) << page_to_table(pages.e2);
        table << "consistency: " << (cons.equality_holds ? "equality" : "bounded (possible higher differentials)")
              << "\n";
    }
    emit(j, common.as_json, table.str());
    return 0;
}

int cmd_ss(const std::string& filtration_path, const std::string& diagram_path, const CommonOpts& common,
           std::uint32_t max_q) {
    auto fs = parse_field_flag(common.field);
    if (fs.kind == FieldSpec::Kind::rational) throw Error("INPUT", "ss pages are reported over prime fields");
    Fp fld(fs.p);
    auto A = presheaf_from_input(filtration_path, diagram_path, fld);
    auto g = gs_double_complex(A, diagonal_bimodule_presheaf(A), max_q, std::nullopt, true, true, common.threads);
    auto pages = ss_pages(g, common.threads);
    auto dims = gs_cohomology(g, max_q);
    auto cons = ss_consistency(pages, dims, max_q);
    json j;
    j["schema"] = kSchema;
    j["field"] = fs.str();
    j["q_max"] = max_q;
    j["pages"] = json::array({page_to_json(pages.e0), page_to_json(pages.e1), page_to_json(pages.e2)});
    j["gs_dims"] = dims;
    j["consistency"] = {{"two_column_case", cons.two_column_case},
                        {"equality_holds", cons.equality_holds},
                        {"possible_higher_differentials", cons.possible_higher_differentials}};
    std::ostringstream table;
    table << page_to_table(pages.e0) << page_to_table(pages.e1) << page_to_table(pages.e2)
          << dims_to_table(dims, "HH_GS") << "consistency: "
          << (cons.equality_holds ? "equality" : "bounded (possible higher differentials)") << "\n";
    emit(j, common.as_json, table.str());
    return 0;
}

std::string compare_report_table(const CompareReport& rep) {
    std::ostringstream os;
    os << rep.claim << ":\n";
    for (const auto& c : rep.cells)
        os << "  (" << c.p << "," << c.q << "): " << c.lhs << " vs " << c.rhs << (c.ok ? "" : "  MISMATCH") << "\n";
    os << (rep.all_ok ? "all cells agree\n" : "MISMATCH\n");
    return os.str();
}

int cmd_bw(const std::string& poset_path, std::uint32_t const_dim, const std::string& filtration_path,
           const std::string& diagram_path, int hh_q, const CommonOpts& common, std::uint32_t max_p,
           bool compare_e2, std::uint32_t max_q) {
    auto fs = parse_field_flag(common.field);
    if (fs.kind == FieldSpec::Kind::rational) {
        Rat fld;
        if (poset_path.empty()) throw Error("INPUT", "bw over Q supports --poset (constant systems)");
        auto ns = constant_natural_system(poset_to_category(parse_poset(load_json(poset_path))), const_dim, fld);
        auto dims = bw_cohomology(ns, max_p, fld);
        emit(dims_to_json(dims, "bw_dims"), common.as_json, dims_to_table(dims, "H_BW (constant coefficients)"));
        return 0;
    }
    Fp fld(fs.p);
    if (compare_e2) {
        auto A = presheaf_from_input(filtration_path, diagram_path, fld);
        auto rep = e2_vs_bw(A, max_p, max_q);  // throws MISMATCH on disagreement
        emit(compare_report_to_json(rep), common.as_json, compare_report_table(rep));
        return 0;
    }
    std::vector<std::uint32_t> dims;
    std::string label;
    if (!poset_path.empty()) {
        auto ns = constant_natural_system(poset_to_category(parse_poset(load_json(poset_path))), const_dim, fld);
        dims = bw_cohomology(ns, max_p, fld);
        label = "H_BW with the constant system k^" + std::to_string(const_dim);
    } else {
        if (hh_q < 0) throw Error("INPUT", "bw on a diagram needs --hh-q");
        auto A = presheaf_from_input(filtration_path, diagram_path, fld);
        auto ns = hh_natural_system(A, std::uint32_t(hh_q));
        dims = bw_cohomology(ns, max_p, fld);
        label = "H_BW with the HH^" + std::to_string(hh_q) + " natural system";
    }
    json j = dims_to_json(dims, "bw_dims");
    j["field"] = fs.str();
    j["p_max"] = max_p;
    emit(j, common.as_json, dims_to_table(dims, label));
    return 0;
}

int cmd_roos(const std::string& poset_path, std::uint32_t const_dim, bool contravariant,
             const std::string& filtration_path, const std::string& diagram_path, int hh_q,
             const CommonOpts& common, std::uint32_t max_p, std::uint32_t tor_bound, bool selfduality,
             std::uint32_t max_q) {
    auto fs = parse_field_flag(common.field);
    if (fs.kind == FieldSpec::Kind::rational) throw Error("INPUT", "roos is reported over prime fields");
    Fp fld(fs.p);
    if (selfduality) {
        auto A = presheaf_from_input(filtration_path, diagram_path, fld);
        auto rep = selfduality_check(A, max_p, max_q, tor_bound);  // throws MISMATCH on disagreement
        emit(compare_report_to_json(rep), common.as_json, compare_report_table(rep));
        return 0;
    }
    std::vector<std::uint32_t> dims;
    std::string label;
    if (!poset_path.empty()) {
        auto fr = constant_functor(poset_to_category(parse_poset(load_json(poset_path))), const_dim, !contravariant, fld);
        dims = roos_cohomology(fr, max_p, fld);
        label = "higher limits of the constant functor k^" + std::to_string(const_dim);
    } else {
        if (hh_q < 0) throw Error("INPUT", "roos on a diagram needs --hh-q");
        auto A = presheaf_from_input(filtration_path, diagram_path, fld);
        auto fr = hh_functor(A, std::uint32_t(hh_q), tor_bound);
        dims = roos_cohomology(fr, max_p, fld);
        label = "higher limits of HH^" + std::to_string(hh_q) + " along the diagram";
    }
    json j = dims_to_json(dims, "lim_dims");
    j["field"] = fs.str();
    j["p_max"] = max_p;
    emit(j, common.as_json, dims_to_table(dims, label));
    return 0;
}

int cmd_homepi(const std::string& poset_path, const std::string& ideal_csv, const std::string& morphism_path,
               const std::string& filtration_path, const CommonOpts& common, std::uint32_t tor_bound) {
    auto fs = parse_field_flag(common.field);
    return with_field(fs, [&](auto fld) {
        using F = decltype(fld);
        json out;
        out["schema"] = kSchema;
        out["field"] = fs.str();
        json certs = json::array();
        auto one = [&](const std::string& name, const AlgebraMorphism<F>& m) {
            auto cert = certify_hom_epi(m, tor_bound);
            json cj = certificate_to_json(cert);
            cj["morphism"] = name;
            certs.push_back(cj);
        };
        if (!morphism_path.empty()) {
            auto j = load_json(morphism_path);
            check_field_consistency(j, fs);
            one(morphism_path, parse_morphism<F>(j, fld));
        } else if (!poset_path.empty()) {
            if (ideal_csv.empty()) throw Error("INPUT", "homepi with --poset needs --lower-ideal a,b,c");
            auto p = parse_poset(load_json(poset_path));
            std::vector<std::uint32_t> subset;
            std::stringstream ss(ideal_csv);
            std::string item;
            while (std::getline(ss, item, ',')) subset.push_back(p.index_of(item));
            if (!p.is_lower_ideal(subset)) throw Error("NOT_LOWER_IDEAL", "the named subset is not a lower ideal");
            one("restriction to {" + ideal_csv + "}", restriction_morphism(p, p.restrict_to(subset), fld));
        } else if (!filtration_path.empty()) {
            auto steps = parse_filtration(load_json(filtration_path));
            auto d = filtration(steps);
            for (std::uint32_t i = 0; i + 1 < steps.size(); ++i)
                one("I(F(step" + std::to_string(i + 1) + ")) -> I(F(step" + std::to_string(i) + "))",
                    face_restriction_morphism(d.complexes[i], d.complexes[i + 1], d.map_for(i, i + 1), fld));
        } else {
            throw Error("INPUT", "homepi needs --morphism, --poset + --lower-ideal, or --filtration");
        }
        out["certificates"] = certs;
        std::ostringstream table;
        for (const auto& c : out["certificates"])
            table << c["morphism"].get<std::string>() << ": " << c["status"].get<std::string>() << " (Tor dims "
                  << c["tor_dims"].dump() << ")\n";
        emit(out, common.as_json, table.str());
        return 0;
    });
}

int cmd_colimit(const std::string& diagram_path, const std::string& filtration_path, const CommonOpts& common) {
    ComplexDiagram d;
    if (!diagram_path.empty()) d = parse_diagram(load_json(diagram_path));
    else if (!filtration_path.empty()) d = filtration(parse_filtration(load_json(filtration_path)));
    else throw Error("INPUT", "colimit needs --diagram or --filtration");
    auto K = colimit(d);
    json j = complex_to_json(K.complex);
    json inc;
    for (std::uint32_t p = 0; p < d.index.size(); ++p) {
        json vm;
        for (std::uint32_t v = 0; v < d.complexes[p].vertices.size(); ++v)
            vm[d.complexes[p].vertices[v]] = K.complex.vertices[K.inclusions[p].vertex_map[v]];
        inc[d.index.elements[p]] = vm;
    }
    j["inclusions"] = inc;
    std::ostringstream table;
    table << "colimit: " << K.complex.vertices.size() << " vertices, " << K.complex.faces.size() << " faces\n";
    emit(j, common.as_json, table.str());
    return 0;
}

int cmd_limit(const std::string& diagram_path, const std::string& filtration_path, const CommonOpts& common) {
    auto fs = parse_field_flag(common.field);
    if (fs.kind == FieldSpec::Kind::rational) throw Error("INPUT", "limit is reported over prime fields");
    Fp fld(fs.p);
    ComplexDiagram d;
    if (!diagram_path.empty()) d = parse_diagram(load_json(diagram_path));
    else if (!filtration_path.empty()) d = filtration(parse_filtration(load_json(filtration_path)));
    else throw Error("INPUT", "limit needs --diagram or --filtration");
    auto K = colimit(d);
    auto th = theta_map(d, K, fld);
    json j;
    j["schema"] = kSchema;
    j["field"] = fs.str();
    j["limit_dim"] = th.limit.algebra.dim;
    j["colimit_incidence_dim"] = incidence_algebra(face_poset(K.complex), fld).dim;
    j["theta_is_isomorphism"] = th.is_isomorphism;
    std::ostringstream table;
    table << "limit algebra dim " << th.limit.algebra.dim << "; theta "
          << (th.is_isomorphism ? "is" : "is NOT") << " an isomorphism onto I(F(colimit))\n";
    emit(j, common.as_json, table.str());
    return 0;
}

int cmd_verify(const std::string& suite, const CommonOpts& common) {
    auto checks = run_suite(suite);
    if (common.as_json) {
        std::cout << checks_to_json(suite, checks).dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << " (expected " << c.expected << ", got "
                      << c.got << ")\n";
    }
    return all_ok(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gsc: exact Hochschild / diagram cohomology of finite-dimensional algebras"};
    app.require_subcommand(1);

    // hh
    auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions of an algebra");
    std::string hh_algebra, hh_poset, hh_complex;
    CommonOpts hh_c;
    int hh_maxq = -1;
    bool hh_unnorm = false;
    hh->add_option("--algebra", hh_algebra, "algebra JSON file");
    hh->add_option("--poset", hh_poset, "poset JSON file (incidence algebra)");
    hh->add_option("--complex", hh_complex, "complex JSON file (incidence algebra of the face poset)");
    hh->add_option("--max-q", hh_maxq, "top degree (default 3 for dim <= 12, else 2)");
    hh->add_flag("--unnormalized", hh_unnorm, "use unnormalized cochains");
    add_common(hh, hh_c);

    // gs
    auto* gs = app.add_subcommand("gs", "diagram (Gerstenhaber-Schack) cohomology of a filtration/diagram");
    std::string gs_filt, gs_diag;
    CommonOpts gs_c;
    std::uint32_t gs_maxn = 2;
    bool gs_pages = false;
    gs->add_option("--filtration", gs_filt, "filtration JSON file");
    gs->add_option("--diagram", gs_diag, "diagram JSON file");
    gs->add_option("--max-n", gs_maxn, "top total degree (default 2)");
    gs->add_flag("--pages", gs_pages, "also compute E1/E2 pages and the consistency verdict");
    add_common(gs, gs_c);

    // ss
    auto* ss = app.add_subcommand("ss", "spectral-sequence pages E0/E1/E2 of the double complex");
    std::string ss_filt, ss_diag;
    CommonOpts ss_c;
    std::uint32_t ss_maxq = 2;
    ss->add_option("--filtration", ss_filt, "filtration JSON file");
    ss->add_option("--diagram", ss_diag, "diagram JSON file");
    ss->add_option("--max-q", ss_maxq, "top vertical degree (default 2)");
    add_common(ss, ss_c);

    // bw
    auto* bw = app.add_subcommand("bw", "Baues-Wirsching cohomology");
    std::string bw_poset, bw_filt, bw_diag;
    CommonOpts bw_c;
    std::uint32_t bw_dim = 1, bw_maxp = 2, bw_maxq = 2;
    int bw_hhq = -1;
    bool bw_cmp = false;
    bw->add_option("--poset", bw_poset, "poset JSON (constant natural system)");
    bw->add_option("--dim", bw_dim, "dimension of the constant system (default 1)");
    bw->add_option("--filtration", bw_filt, "filtration JSON (Hochschild natural system)");
    bw->add_option("--diagram", bw_diag, "diagram JSON (Hochschild natural system)");
    bw->add_option("--hh-q", bw_hhq, "Hochschild degree of the natural system");
    bw->add_option("--max-p", bw_maxp, "top degree (default 2)");
    bw->add_flag("--compare-e2", bw_cmp, "compare BW cohomology against the E2 page cell by cell");
    bw->add_option("--max-q", bw_maxq, "top Hochschild degree for --compare-e2 (default 2)");
    add_common(bw, bw_c);

    // roos
    auto* roos = app.add_subcommand("roos", "higher limits via the Roos complex");
    std::string roos_poset, roos_filt, roos_diag;
    CommonOpts roos_c;
    std::uint32_t roos_dim = 1, roos_maxp = 2, roos_tor = 1, roos_maxq = 2;
    int roos_hhq = -1;
    bool roos_contra = false, roos_sd = false;
    roos->add_option("--poset", roos_poset, "poset JSON (constant functor)");
    roos->add_option("--dim", roos_dim, "dimension of the constant functor (default 1)");
    roos->add_flag("--contravariant", roos_contra, "contravariant variant (default covariant)");
    roos->add_option("--filtration", roos_filt, "filtration JSON (Hochschild functor)");
    roos->add_option("--diagram", roos_diag, "diagram JSON (Hochschild functor)");
    roos->add_option("--hh-q", roos_hhq, "Hochschild degree of the functor");
    roos->add_option("--max-p", roos_maxp, "top degree (default 2)");
    roos->add_option("--tor-bound", roos_tor, "Tor degree bound for certification (default 1)");
    roos->add_flag("--selfduality", roos_sd, "compare higher limits against BW cohomology cell by cell");
    roos->add_option("--max-q", roos_maxq, "top Hochschild degree for --selfduality (default 2)");
    add_common(roos, roos_c);

    // homepi
    auto* homepi = app.add_subcommand("homepi", "homological-epimorphism certificates");
    std::string he_poset, he_ideal, he_mor, he_filt;
    CommonOpts he_c;
    std::uint32_t he_tor = 3;
    homepi->add_option("--poset", he_poset, "poset JSON");
    homepi->add_option("--lower-ideal", he_ideal, "comma-separated element names of a lower ideal");
    homepi->add_option("--morphism", he_mor, "morphism JSON file");
    homepi->add_option("--filtration", he_filt, "filtration JSON (certify all steps)");
    homepi->add_option("--tor-bound", he_tor, "Tor degree bound (default 3)");
    add_common(homepi, he_c);

    // colimit
    auto* colim = app.add_subcommand("colimit", "colimit of a diagram of complexes");
    std::string cl_diag, cl_filt;
    CommonOpts cl_c;
    colim->add_option("--diagram", cl_diag, "diagram JSON file");
    colim->add_option("--filtration", cl_filt, "filtration JSON file");
    add_common(colim, cl_c);

    // limit
    auto* limit = app.add_subcommand("limit", "limit of the incidence algebras of a diagram");
    std::string lm_diag, lm_filt;
    CommonOpts lm_c;
    limit->add_option("--diagram", lm_diag, "diagram JSON file");
    limit->add_option("--filtration", lm_filt, "filtration JSON file");
    add_common(limit, lm_c);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    CommonOpts vf_c;
    verify->add_option("suite", suite, "one of: hh-classics incidence-oracle gs-filtration spectral bw-compare "
                                       "selfduality colim-limit les normalization")->required();
    add_common(verify, vf_c);

    try {
        app.parse(argc, argv);
        if (hh->parsed()) return cmd_hh(hh_algebra, hh_poset, hh_complex, hh_c, hh_maxq, hh_unnorm);
        if (gs->parsed()) return cmd_gs(gs_filt, gs_diag, gs_c, gs_maxn, gs_pages);
        if (ss->parsed()) return cmd_ss(ss_filt, ss_diag, ss_c, ss_maxq);
        if (bw->parsed()) return cmd_bw(bw_poset, bw_dim, bw_filt, bw_diag, bw_hhq, bw_c, bw_maxp, bw_cmp, bw_maxq);
        if (roos->parsed())
            return cmd_roos(roos_poset, roos_dim, roos_contra, roos_filt, roos_diag, roos_hhq, roos_c, roos_maxp,
                            roos_tor, roos_sd, roos_maxq);
        if (homepi->parsed()) return cmd_homepi(he_poset, he_ideal, he_mor, he_filt, he_c, he_tor);
        if (colim->parsed()) return cmd_colimit(cl_diag, cl_filt, cl_c);
        if (limit->parsed()) return cmd_limit(lm_diag, lm_filt, lm_c);
        if (verify->parsed()) return cmd_verify(suite, vf_c);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
