#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galekit/bounds.hpp"
#include "galekit/box_complex.hpp"
#include "galekit/families.hpp"
#include "galekit/gale.hpp"
#include "galekit/homomorphism.hpp"
#include "galekit/io.hpp"

namespace galekit {

/// Exit code contract: 0 success, 2 input error, 3 capacity refusal,
/// 4 internal invariant violation.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitCapacity = 3,
    kExitInternal = 4,
};

struct CliResult {
    int exit_code = kExitOk;
    std::string output;                     // report payload (json/csv/text)
    std::string error;                      // diagnostic on failure
    std::optional<std::string> output_path; // from -o / --output
};

namespace climpl {

struct CommonOpts {
    std::string format = "json";
    std::string output_path;
    std::uint64_t seed = 12345;
    int threads = 1;
};

inline void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", o.output_path, "Write the report to a file");
    cmd->add_option("--seed", o.seed, "Seed for all randomized steps")->capture_default_str();
    cmd->add_option("--threads", o.threads, "Worker threads for permutation search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

inline Hypergraph load_hypergraph(const std::string& input, const std::string& family) {
    if (!input.empty() && !family.empty())
        throw domain_error("give either --input or --family, not both");
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw domain_error("cannot open input file '" + input + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw domain_error("bad JSON in '" + input + "': " + e.what());
        }
        return hypergraph_from_json(j);
    }
    if (!family.empty()) return family_hypergraph(parse_family(family));
    throw domain_error("an --input file or a --family spec is required");
}

inline Bijection parse_sigma(const std::string& text, int n) {
    if (text == "identity" || text == "I") return identity_bijection(n);
    auto values = detail::parse_int_list(text, static_cast<std::size_t>(n), "--sigma");
    Bijection sigma;
    for (int v : values) sigma.push_back(v - 1);
    validate_bijection(sigma, n);
    return sigma;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace climpl

inline CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Alternation bounds, Gale configurations, Kneser-type graph "
                 "invariants, and box complexes"};
    app.require_subcommand(1);

    // ---- alt ----
    climpl::CommonOpts alt_common;
    std::string alt_input, alt_family, alt_mode, alt_sigma;
    AltSearchBudget alt_budget;
    auto* alt_cmd = app.add_subcommand("alt", "Alternation number of a hypergraph");
    alt_cmd->add_option("--input", alt_input, "Hypergraph JSON file");
    alt_cmd->add_option("--family", alt_family, "Family spec, e.g. kneser:5,2");
    alt_cmd->add_option("--mode", alt_mode, "alt or salt")
        ->required()
        ->check(CLI::IsMember({"alt", "salt"}));
    alt_cmd->add_option("--sigma", alt_sigma,
                        "Fixed bijection ('identity' or comma list); omit to minimize over all");
    alt_cmd->add_option("--exhaustive-threshold", alt_budget.exhaustive_threshold,
                        "Largest n searched exhaustively")->capture_default_str();
    alt_cmd->add_option("--anneal-iters", alt_budget.anneal_iterations,
                        "Annealing proposals above the threshold")->capture_default_str();
    climpl::add_common(alt_cmd, alt_common);

    // ---- gale ----
    climpl::CommonOpts gale_common;
    std::string gale_family, gale_property, gale_mode = "auto", gale_sigma;
    int gale_n = -1, gale_d = -1;
    long long gale_trials = 100000;
    auto* gale_cmd = app.add_subcommand("gale", "Build a moment-curve configuration and verify it");
    gale_cmd->add_option("--family", gale_family, "Hypergraph family or pnks:n,k,s");
    gale_cmd->add_option("--property", gale_property, "p1, p2 or pnks:n,k,s");
    gale_cmd->add_option("--n", gale_n, "Point count for a standalone configuration");
    gale_cmd->add_option("--d", gale_d, "Sphere dimension override");
    gale_cmd->add_option("--mode", gale_mode, "auto, exact or sampled")
        ->check(CLI::IsMember({"auto", "exact", "sampled"}))
        ->capture_default_str();
    gale_cmd->add_option("--trials", gale_trials, "Random directions in sampled mode")
        ->capture_default_str();
    gale_cmd->add_option("--sigma", gale_sigma, "Identification bijection");
    climpl::add_common(gale_cmd, gale_common);

    // ---- bounds ----
    climpl::CommonOpts bounds_common;
    std::vector<std::string> bounds_families, bounds_inputs;
    BoundBudget bounds_budget;
    auto* bounds_cmd = app.add_subcommand("bounds", "Chromatic lower-bound chain for KG(H)");
    bounds_cmd->add_option("--family", bounds_families, "Family spec (repeatable)");
    bounds_cmd->add_option("--input", bounds_inputs, "Hypergraph JSON file (repeatable)");
    bounds_cmd->add_option("--exhaustive-threshold", bounds_budget.alt_budget.exhaustive_threshold,
                           "Largest n minimized exhaustively")->capture_default_str();
    bounds_cmd->add_option("--anneal-iters", bounds_budget.alt_budget.anneal_iterations,
                           "Annealing proposals above the threshold")->capture_default_str();
    bounds_cmd->add_option("--chi-cap", bounds_budget.chromatic_cap,
                           "Largest KG(H) solved exactly")->capture_default_str();
    climpl::add_common(bounds_cmd, bounds_common);

    // ---- multichi ----
    climpl::CommonOpts multichi_common;
    std::string multichi_family, multichi_input;
    int multichi_m = 1, multichi_nmax = -1;
    auto* multichi_cmd = app.add_subcommand("multichi", "Multichromatic number of KG(H)");
    multichi_cmd->add_option("--family", multichi_family, "Family spec for the hypergraph");
    multichi_cmd->add_option("--input", multichi_input, "Graph JSON file");
    multichi_cmd->add_option("--m", multichi_m, "Fold count m")->required();
    multichi_cmd->add_option("--nmax", multichi_nmax,
                             "Largest color count tried (default m * greedy chi)");
    climpl::add_common(multichi_cmd, multichi_common);

    // ---- boxcomplex ----
    climpl::CommonOpts box_common;
    std::string box_graph, box_input, box_variant;
    auto* box_cmd = app.add_subcommand("boxcomplex", "Box complex of a graph");
    box_cmd->add_option("--graph", box_graph, "Named graph (k3, c5, petersen, kneser:5,2, ...)");
    box_cmd->add_option("--input", box_input, "Graph JSON file");
    box_cmd->add_option("--variant", box_variant, "b or b0")
        ->required()
        ->check(CLI::IsMember({"b", "b0"}));
    climpl::add_common(box_cmd, box_common);

    CliResult result;

    std::vector<std::string> argv_storage;
    argv_storage.push_back("galekit");
    for (const auto& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        result.output = out.str();
        result.error = err.str();
        result.exit_code = code == 0 ? kExitOk : kExitInputError;
        return result;
    }

    auto finish = [&](const climpl::CommonOpts& common, const json& payload,
                      const std::string& csv, const std::string& text) {
        if (common.format == "json") result.output = payload.dump(2) + "\n";
        else if (common.format == "csv") result.output = csv;
        else result.output = text;
        if (!common.output_path.empty()) result.output_path = common.output_path;
    };

    try {
        if (*alt_cmd) {
            alt_budget.seed = alt_common.seed;
            alt_budget.threads = alt_common.threads;
            Hypergraph h = climpl::load_hypergraph(alt_input, alt_family);
            const AltMode mode = alt_mode == "alt" ? AltMode::alt : AltMode::salt;
            const int n = h.vertex_count();
            int value;
            Bijection sigma;
            bool exact, minimized;
            if (!alt_sigma.empty()) {
                sigma = climpl::parse_sigma(alt_sigma, n);
                value = mode == AltMode::alt ? alt_hypergraph(h, sigma) : salt_hypergraph(h, sigma);
                exact = true;
                minimized = false;
            } else {
                AltMinResult r = alt_min(h, mode, alt_budget);
                value = r.value;
                sigma = r.sigma;
                exact = r.exact;
                minimized = true;
            }
            const bool degenerate = h.edge_count() == 0;
            json payload{{"schema", 1},
                         {"command", "alt"},
                         {"params",
                          {{"source", alt_family.empty() ? alt_input : alt_family},
                           {"mode", alt_mode},
                           {"minimized_over_sigma", minimized},
                           {"seed", alt_common.seed}}},
                         {"result",
                          {{"value", value},
                           {"sigma", sigma_to_json(sigma)},
                           {"exact", exact},
                           {"degenerate", degenerate}}}};
            std::ostringstream csv;
            csv << "source,mode,value,exact,degenerate\n"
                << climpl::csv_escape(alt_family.empty() ? alt_input : alt_family) << ','
                << alt_mode << ',' << value << ',' << (exact ? 1 : 0) << ','
                << (degenerate ? 1 : 0) << '\n';
            std::ostringstream text;
            text << alt_mode << "(" << (alt_family.empty() ? alt_input : alt_family)
                 << ") = " << value << (exact ? " (exact" : " (upper bound")
                 << (degenerate ? ", degenerate: no edges)" : ")") << "\n";
            finish(alt_common, payload, csv.str(), text.str());
        } else if (*gale_cmd) {
            std::optional<Hypergraph> h;
            std::optional<SignedIncreasingProperty> property;
            int n = gale_n;
            std::string property_name = gale_property;
            if (!gale_family.empty()) {
                FamilySpec spec = parse_family(gale_family);
                if (spec.kind == "pnks") {
                    if (property_name.empty()) property_name = gale_family;
                    n = spec.params[0];
                } else {
                    h = family_hypergraph(spec);
                    n = h->vertex_count();
                    if (property_name.empty()) property_name = "p2";
                }
            }
            if (n < 0) throw domain_error("gale needs --family or --n");
            if (!property_name.empty()) {
                property = named_property(property_name, h);
                if (property->ground_size != n)
                    throw domain_error("property ground set does not match the configuration size");
            }

            Bijection sigma = gale_sigma.empty() ? identity_bijection(n)
                                                 : climpl::parse_sigma(gale_sigma, n);
            int d = gale_d;
            if (d < 0) {
                if (!property)
                    throw domain_error("gale needs --d when no property determines the dimension");
                AltValue av = alt_property(*property, sigma);
                if (av.all_in_property)
                    throw domain_error("every signed pair satisfies the property; any sphere works "
                                       "and no canonical dimension exists");
                if (av.value == n)
                    throw domain_error("alt equals |V| so d = -1; no sphere admits the configuration");
                d = n - av.value - 1;
            }
            GaleConfiguration z =
                h ? build_configuration(n, d, sigma, h->vertex_names())
                  : build_configuration(n, d, sigma);

            std::optional<VerificationReport> verification;
            if (property) {
                const bool exact = gale_mode == "exact" || (gale_mode == "auto" && d <= kMaxExactDim);
                verification = exact ? verify_exact(z, *property)
                                     : verify_sampled(z, *property, gale_trials, gale_common.seed);
            }

            json payload{{"schema", 1},
                         {"command", "gale"},
                         {"params",
                          {{"source", gale_family.empty() ? "standalone" : gale_family},
                           {"property", property_name.empty() ? json(nullptr) : json(property_name)},
                           {"n", n},
                           {"d", d},
                           {"mode", gale_mode},
                           {"trials", gale_trials},
                           {"seed", gale_common.seed}}},
                         {"configuration", configuration_to_json(z)}};
            payload["verification"] =
                verification ? verification_to_json(*verification, z) : json(nullptr);
            const bool ok = !verification || verification->ok;
            std::ostringstream csv;
            csv << "source,property,n,d,mode,ok,checked\n"
                << climpl::csv_escape(gale_family.empty() ? "standalone" : gale_family) << ','
                << property_name << ',' << n << ',' << d << ','
                << (verification ? verification->mode : "none") << ',' << (ok ? 1 : 0) << ','
                << (verification ? verification->checked : 0) << '\n';
            std::ostringstream text;
            text << "configuration: n = " << n << ", d = " << d << "\n";
            if (verification)
                text << "verification (" << verification->mode
                     << "): " << (verification->ok ? "ok" : "counterexample found") << " after "
                     << verification->checked
                     << (verification->mode == "exact" ? " cells" : " trials") << "\n";
            finish(gale_common, payload, csv.str(), text.str());
            if (verification && !verification->ok) result.exit_code = kExitInternal;
        } else if (*bounds_cmd) {
            bounds_budget.alt_budget.seed = bounds_common.seed;
            bounds_budget.alt_budget.threads = bounds_common.threads;
            std::vector<std::pair<std::string, Hypergraph>> instances;
            for (const auto& f : bounds_families)
                instances.emplace_back(f, family_hypergraph(parse_family(f)));
            for (const auto& p : bounds_inputs)
                instances.emplace_back(p, climpl::load_hypergraph(p, ""));
            if (instances.empty()) throw domain_error("bounds needs --family or --input");

            json reports = json::array();
            std::ostringstream csv, text;
            csv << "source,n,chi,cd,alt,salt,alt_bound,salt_bound,dim_lb,sdim_lb,"
                   "chi_exact,alt_exact,salt_exact,degenerate\n";
            for (const auto& [source, h] : instances) {
                BoundReport r = bound_report(h, bounds_budget);
                json jr = bound_report_to_json(r);
                jr["source"] = source;
                reports.push_back(jr);
                csv << climpl::csv_escape(source) << ',' << r.n << ','
                    << (r.chi ? std::to_string(*r.chi) : "") << ','
                    << (r.cd ? std::to_string(*r.cd) : "") << ',' << r.alt_value << ','
                    << r.salt_value << ',' << r.alt_bound() << ',' << r.salt_bound() << ','
                    << r.dim_lower() << ',' << r.sdim_lower() << ',' << (r.chi_exact ? 1 : 0)
                    << ',' << (r.alt_exact ? 1 : 0) << ',' << (r.salt_exact ? 1 : 0) << ','
                    << (r.degenerate ? 1 : 0) << '\n';
                text << source << ": chi = " << (r.chi ? std::to_string(*r.chi) : "unavailable")
                     << ", cd = " << (r.cd ? std::to_string(*r.cd) : "unavailable")
                     << ", alt bound = " << r.alt_bound() << ", salt bound = " << r.salt_bound()
                     << (r.degenerate ? " (degenerate)" : "") << "\n";
            }
            json payload{{"schema", 1},
                         {"command", "bounds"},
                         {"params", {{"seed", bounds_common.seed}}}};
            if (reports.size() == 1) payload["report"] = reports[0];
            else payload["reports"] = reports;
            finish(bounds_common, payload, csv.str(), text.str());
        } else if (*multichi_cmd) {
            Graph g;
            std::string source;
            if (!multichi_family.empty() && !multichi_input.empty())
                throw domain_error("give either --input or --family, not both");
            if (!multichi_family.empty()) {
                g = kneser_graph(family_hypergraph(parse_family(multichi_family)));
                source = multichi_family;
            } else if (!multichi_input.empty()) {
                std::ifstream in(multichi_input);
                if (!in) throw domain_error("cannot open input file '" + multichi_input + "'");
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    throw domain_error("bad JSON in '" + multichi_input + "': " + e.what());
                }
                g = graph_from_json(j);
                source = multichi_input;
            } else {
                throw domain_error("multichi needs --family or --input");
            }
            int nmax = multichi_nmax;
            if (nmax < 0) {
                const int ub = g.vertex_count() == 0 ? 1 : dsatur_coloring(g).first;
                nmax = multichi_m * std::max(ub, 1);
            }
            const int value = multichromatic_number(g, multichi_m, nmax);
            std::vector<Mask> witness;
            is_mfold_colorable(g, value, multichi_m, &witness);
            json wit = json::array();
            for (Mask s : witness) {
                json colors = json::array();
                for (int c : bits_of(s)) colors.push_back(c + 1);
                wit.push_back(colors);
            }
            json payload{{"schema", 1},
                         {"command", "multichi"},
                         {"params", {{"source", source}, {"m", multichi_m}, {"nmax", nmax}}},
                         {"result",
                          {{"value", value},
                           {"vertices", g.labels()},
                           {"color_sets", wit}}}};
            std::ostringstream csv;
            csv << "source,m,nmax,value\n"
                << climpl::csv_escape(source) << ',' << multichi_m << ',' << nmax << ',' << value
                << '\n';
            std::ostringstream text;
            text << "chi_" << multichi_m << "(" << source << ") = " << value << "\n";
            finish(multichi_common, payload, csv.str(), text.str());
        } else if (*box_cmd) {
            Graph g;
            std::string source;
            if (!box_graph.empty() && !box_input.empty())
                throw domain_error("give either --graph or --input, not both");
            if (!box_graph.empty()) {
                g = named_graph(box_graph);
                source = box_graph;
            } else if (!box_input.empty()) {
                std::ifstream in(box_input);
                if (!in) throw domain_error("cannot open input file '" + box_input + "'");
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    throw domain_error("bad JSON in '" + box_input + "': " + e.what());
                }
                g = graph_from_json(j);
                source = box_input;
            } else {
                throw domain_error("boxcomplex needs --graph or --input");
            }
            const BoxVariant variant = box_variant == "b" ? BoxVariant::b : BoxVariant::b0;
            BoxComplex c = build_box_complex(g, variant);
            Z2CheckResult z2 = check_z2_structure(c);
            if (!z2.hereditary || !z2.involution_closed || !z2.free)
                throw internal_error("built box complex failed its structural checks");
            json payload{{"schema", 1},
                         {"command", "boxcomplex"},
                         {"params", {{"source", source}, {"variant", box_variant}}},
                         {"result", box_complex_to_json(c)}};
            payload["result"]["z2_checks"] =
                json{{"hereditary", z2.hereditary},
                     {"involution_closed", z2.involution_closed},
                     {"free", z2.free}};
            std::ostringstream csv;
            csv << "source,variant,n,dimension,simplex_count\n"
                << climpl::csv_escape(source) << ',' << box_variant << ',' << c.n << ','
                << complex_dimension(c) << ',' << c.simplices.size() << '\n';
            std::ostringstream text;
            text << to_string(variant) << "(" << source << "): f-vector [";
            auto f = f_vector(c);
            for (std::size_t i = 0; i < f.size(); ++i) text << (i ? "," : "") << f[i];
            text << "]\n";
            finish(box_common, payload, csv.str(), text.str());
        }
    } catch (const domain_error& e) {
        result.exit_code = kExitInputError;
        result.error = std::string("input error: ") + e.what() + "\n";
    } catch (const capacity_error& e) {
        result.exit_code = kExitCapacity;
        result.error = std::string("capacity refusal: ") + e.what() + "\n";
    } catch (const internal_error& e) {
        result.exit_code = kExitInternal;
        result.error = std::string("internal invariant violation: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = kExitInternal;
        result.error = std::string("unexpected error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace galekit
