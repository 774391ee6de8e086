#pragma once

#include <optional>
#include <string>

#include "galekit/alternation.hpp"
#include "galekit/coloring.hpp"
#include "galekit/graph.hpp"
#include "galekit/hypergraph.hpp"

namespace galekit {

/// The full chain of chromatic lower bounds for KG(H): the colorability
/// defect, the two alternation bounds |V|-alt(H) and |V|-salt(H)+1, and the
/// induced lower bounds on the dimension parameters. Heuristic sigma search
/// yields upper bounds on alt/salt, so the derived chromatic bounds stay
/// valid; the exact flags record which fields are true minima.
struct BoundReport {
    int n = 0;
    std::optional<int> chi;
    bool chi_exact = false;
    std::string chi_note;
    std::optional<int> cd;
    std::string cd_note;
    int alt_value = 0;
    bool alt_exact = false;
    Bijection alt_sigma;
    int salt_value = 0;
    bool salt_exact = false;
    Bijection salt_sigma;
    bool degenerate = false;  // no edges: KG(H) is the empty graph

    int alt_bound() const { return n - alt_value; }
    int salt_bound() const { return n - salt_value + 1; }
    int dim_lower() const { return n - alt_value - 1; }
    int sdim_lower() const { return n - salt_value - 1; }
};

struct BoundBudget {
    AltSearchBudget alt_budget;
    int chromatic_cap = kDefaultChromaticCap;
};

/// Assembles the report, propagating per-field capacity refusals into notes
/// instead of failing the whole run. On an all-exact, non-degenerate run
/// the chain chi >= max(alt_bound, salt_bound) >= cd is asserted; a
/// violation is an implementation bug and raises internal_error.
inline BoundReport bound_report(const Hypergraph& h, const BoundBudget& budget = {}) {
    BoundReport r;
    r.n = h.vertex_count();
    r.degenerate = h.edge_count() == 0;

    try {
        r.cd = colorability_defect(h).defect;
    } catch (const capacity_error& e) {
        r.cd_note = e.what();
    }

    AltMinResult alt = alt_min(h, AltMode::alt, budget.alt_budget);
    r.alt_value = alt.value;
    r.alt_exact = alt.exact;
    r.alt_sigma = alt.sigma;
    AltMinResult salt = alt_min(h, AltMode::salt, budget.alt_budget);
    r.salt_value = salt.value;
    r.salt_exact = salt.exact;
    r.salt_sigma = salt.sigma;

    try {
        Graph kg = kneser_graph(h);
        ColoringResult chi = chromatic_number(kg, budget.chromatic_cap);
        r.chi = chi.chi;
        r.chi_exact = true;
    } catch (const capacity_error& e) {
        r.chi_note = e.what();
    }

    if (!r.degenerate && r.chi && r.chi_exact && r.alt_exact && r.salt_exact) {
        if (*r.chi < r.alt_bound() || *r.chi < r.salt_bound())
            throw internal_error("bound chain violated: chi < alternation bound");
        if (r.cd && std::max(r.alt_bound(), r.salt_bound()) < *r.cd)
            throw internal_error("bound chain violated: alternation bounds below the defect");
    }
    return r;
}

}  // namespace galekit
