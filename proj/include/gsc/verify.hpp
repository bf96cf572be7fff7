#pragma once

// Named verification suites with embedded inputs. Each check records the
// expected and computed values; suites power both `gsc verify` and the
// acceptance run.

#include <string>
#include <vector>

namespace gsc {

struct Check {
    std::string name;
    bool ok;
    std::string expected, got;
};

namespace suites {

std::vector<Check> hh_classics();
std::vector<Check> incidence_oracle();
std::vector<Check> gs_filtration();        // the 3-step filtration totals
std::vector<Check> closing_examples();     // square poset with/without terminal
std::vector<Check> terminal_collapse();    // E2 of the filtration collapses to column 0
std::vector<Check> free_category_bound();  // E2 columns >= 2 vanish over free bases
std::vector<Check> homepi_certificates();  // PROVEN + Tor vanishing, and the failing counterexample
std::vector<Check> bw_compare();           // E2 page vs BW cohomology
std::vector<Check> selfduality();          // BW vs higher limits along hom-epis
std::vector<Check> colim_limit();          // colimit complex vs limit algebra
std::vector<Check> les();                  // long exact sequence exactness
std::vector<Check> normalization();        // normalized/unnormalized agreements

}  // namespace suites

// CLI surface: suite name -> checks. Throws on unknown name.
std::vector<Check> run_suite(const std::string& name);
std::vector<std::string> suite_names();
bool all_ok(const std::vector<Check>& checks);

}  // namespace gsc
