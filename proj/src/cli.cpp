#include "sring/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "sring/betti_table.hpp"
#include "sring/complex_io.hpp"
#include "sring/constructions.hpp"
#include "sring/error.hpp"
#include "sring/formulas.hpp"
#include "sring/golod.hpp"
#include "sring/hochster.hpp"
#include "sring/taylor.hpp"

namespace sring {

namespace {

struct Config {
    // inputs
    std::string file, file2, output;
    int k = 0, n = 0, m = 0;
    std::vector<int> dims;
    std::string strategy = "lex";
    std::uint64_t seed = 0;
    std::vector<Label> facet, sigma1, sigma2;
    Label vertex = 0;
    // computation
    std::string coeff = "rational";
    std::string engine = "hochster";
    std::string format = "json";
    unsigned threads = 1;
    std::size_t max_vertices = 24;
    std::size_t taylor_bound = 18;
    bool taylor_nerve = false;
    bool minimal = false;
    bool no_prefilter = false;
};

SubsetScanOptions scan_options(const Config& c) { return {std::max(1u, c.threads), c.max_vertices}; }

TaylorOptions taylor_options(const Config& c) { return {c.taylor_bound, c.taylor_nerve}; }

int dimension_of(const SimplicialComplex& K) {
    if (auto d = polytope_dimension(K)) return *d;
    return K.dimension() + 1;
}

std::optional<int> factors_of(const SimplicialComplex& K) {
    const auto& meta = K.meta();
    if (meta.is_object() && meta.value("type", std::string{}) == "gtp" && meta.contains("dims"))
        return static_cast<int>(meta.at("dims").size());
    return std::nullopt;
}

GtpSpec gtp_spec(const Config& c) {
    GtpSpec s{c.k, c.dims, FacetPolicy::lex()};
    if (c.strategy == "random") s.policy = FacetPolicy::random(c.seed);
    s.validate();
    return s;
}

void emit_complex(const SimplicialComplex& K, const Config& c, std::ostream& out) {
    if (c.output.empty())
        out << complex_to_json(K).dump(2) << "\n";
    else
        write_complex(K, c.output);
}

BigradedBettiTable compute_table(const SimplicialComplex& K, const Config& c) {
    if (c.engine == "taylor") return taylor_betti(K, taylor_options(c));
    const auto coeff = c.coeff == "integer" ? Coefficients::Integer : Coefficients::Rational;
    return bigraded_betti(K, coeff, scan_options(c));
}

nlohmann::json table_diff(const BigradedBettiTable& a, const BigradedBettiTable& b) {
    nlohmann::json diff = nlohmann::json::array();
    std::set<std::pair<int, int>> keys;
    for (const auto& [ij, v] : a.entries) keys.insert(ij);
    for (const auto& [ij, v] : b.entries) keys.insert(ij);
    for (const auto& [i, j] : keys)
        if (a.at(i, j) != b.at(i, j))
            diff.push_back({{"i", i}, {"j", j}, {"left", a.at(i, j)}, {"right", b.at(i, j)}});
    return diff;
}

int run_betti(const Config& c, std::ostream& out) {
    const auto K = read_complex(c.file);
    auto table = compute_table(K, c);
    if (!table.d) table.d = polytope_dimension(K);
    if (c.format == "table") {
        out << render_table(table);
    } else {
        auto j = table_to_json(table, c.engine);
        j["ordinary"] = ordinary_to_json(ordinary_betti(table))["betti"];
        out << j.dump(2) << "\n";
    }
    return 0;
}

int run_golod(const Config& c, std::ostream& out) {
    const auto K = read_complex(c.file);
    GolodOptions options{scan_options(c), !c.no_prefilter};
    const auto report = c.minimal ? is_minimally_non_golod(K, options) : is_ring_golod(K, options);
    out << golod_to_json(report).dump(2) << "\n";
    return 0;
}

int run_verify_formula(const Config& c, std::ostream& out) {
    const auto spec = gtp_spec(c);
    const auto formula = gtp_formula_table(spec);
    const auto K = build_gtp(spec);
    auto brute = bigraded_betti(K, Coefficients::Rational, scan_options(c));
    nlohmann::json j;
    j["k"] = spec.k;
    j["dims"] = spec.dims;
    j["strategy"] = c.strategy;
    if (c.strategy == "random") j["seed"] = c.seed;
    j["formula"] = formula.engine();
    j["holds"] = formula.table == brute;
    j["differences"] = table_diff(formula.table, brute);
    out << j.dump(2) << "\n";
    return formula.table == brute ? 0 : 1;
}

int run_verify_duality(const Config& c, std::ostream& out) {
    const auto K = read_complex(c.file);
    const auto table = bigraded_betti(K, Coefficients::Rational, scan_options(c));
    const int d = dimension_of(K);
    const auto report = duality_check(table, static_cast<int>(K.num_vertices()), d);
    nlohmann::json j;
    j["m"] = K.num_vertices();
    j["n"] = d;
    j["holds"] = report.holds;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations)
        j["violations"].push_back({{"i", v.i}, {"j", v.j}, {"beta", v.beta}, {"dual_i", v.dual_i},
                                   {"dual_j", v.dual_j}, {"dual_beta", v.dual_beta}});
    out << j.dump(2) << "\n";
    return report.holds ? 0 : 1;
}

int run_verify_oracle(const Config& c, std::ostream& out) {
    const auto K = read_complex(c.file);
    const auto hochster = bigraded_betti(K, Coefficients::Rational, scan_options(c));
    TaylorStats stats;
    const auto taylor = taylor_betti(K, taylor_options(c), &stats);
    nlohmann::json j;
    j["holds"] = hochster == taylor;
    j["differences"] = table_diff(hochster, taylor);
    j["taylor_strands"] = {{"direct", stats.direct_strands}, {"nerve", stats.nerve_strands}};
    out << j.dump(2) << "\n";
    return hochster == taylor ? 0 : 1;
}

int run_verify_torsion(const Config& c, std::ostream& out) {
    const auto K = read_complex(c.file);
    const auto witness = hochster_torsion_witness(K, scan_options(c));
    nlohmann::json j;
    j["torsion_free"] = !witness.has_value();
    if (witness) {
        j["subset"] = witness->first;
        j["homology"] = homology_to_json(witness->second);
    }
    out << j.dump(2) << "\n";
    return witness ? 1 : 0;
}

int run_predict_mcgavran(const Config& c, std::ostream& out) {
    const auto list = mcgavran_decomposition(c.k, c.n);
    const int total = 2 * c.n + c.k + 1;
    nlohmann::json j;
    j["k"] = c.k;
    j["n"] = c.n;
    j["total_dimension"] = total;
    j["spheres"] = spheres_to_json(list);
    j["betti"] = ordinary_to_json(connected_sum_betti(list, total))["betti"];
    out << j.dump(2) << "\n";
    return 0;
}

int run_predict_spheres(const Config& c, std::ostream& out) {
    const auto K = read_complex(c.file);
    const auto table = bigraded_betti(K, Coefficients::Rational, scan_options(c));
    const int m = static_cast<int>(K.num_vertices()), d = dimension_of(K);
    const auto result = sphere_list_from_table(table, m, d, factors_of(K));
    nlohmann::json j;
    j["m"] = m;
    j["d"] = d;
    j["validity"] = result.validity;
    j["spheres"] = result.list ? spheres_to_json(*result.list) : nlohmann::json(nullptr);
    if (!result.list) j["reason"] = result.reason;
    bool consistent = result.list.has_value();
    if (result.list) {
        const auto product = non_top_product(K, scan_options(c));
        j["non_top_product"] = product ? witness_to_json(*product) : nlohmann::json(nullptr);
        consistent = !product;
    }
    j["consistent"] = consistent;
    out << j.dump(2) << "\n";
    return consistent ? 0 : 1;
}

void add_scan_flags(CLI::App* app, Config& c) {
    app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--max-vertices", c.max_vertices, "largest ground set for subset scans");
}

void add_taylor_flags(CLI::App* app, Config& c) {
    app->add_option("--taylor-bound", c.taylor_bound, "generator bound for the Taylor oracle");
    app->add_flag("--taylor-nerve", c.taylor_nerve,
                  "compute strands above the bound through their nerve instead of rejecting");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Stanley-Reisner Betti numbers and Golodness of generalized truncation polytopes", "sring"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct a complex")->require_subcommand(1);
    auto* build_gtp_cmd = build->add_subcommand("gtp", "dual of a (k; n_1,...,n_r) polytope");
    build_gtp_cmd->add_option("--k", c.k)->required();
    build_gtp_cmd->add_option("--dims", c.dims)->required()->delimiter(',');
    build_gtp_cmd->add_option("--strategy", c.strategy)->check(CLI::IsMember({"lex", "random"}));
    build_gtp_cmd->add_option("--seed", c.seed);
    build_gtp_cmd->add_option("-o,--output", c.output);
    auto* build_cyclic = build->add_subcommand("cyclic", "boundary of the cyclic polytope C(m, n)");
    build_cyclic->add_option("--m", c.m)->required();
    build_cyclic->add_option("--n", c.n)->required();
    build_cyclic->add_option("-o,--output", c.output);
    auto* build_join = build->add_subcommand("join", "join of two complexes");
    build_join->add_option("A", c.file)->required();
    build_join->add_option("B", c.file2)->required();
    build_join->add_option("-o,--output", c.output);

    auto* ops = app.add_subcommand("ops", "modify a complex")->require_subcommand(1);
    auto* ops_stack = ops->add_subcommand("stack", "stellar subdivision of a facet");
    ops_stack->add_option("FILE", c.file)->required();
    ops_stack->add_option("--facet", c.facet)->required()->delimiter(',');
    ops_stack->add_option("-o,--output", c.output);
    auto* ops_delete = ops->add_subcommand("delete", "delete a vertex");
    ops_delete->add_option("FILE", c.file)->required();
    ops_delete->add_option("--vertex", c.vertex)->required();
    ops_delete->add_option("-o,--output", c.output);
    auto* ops_glue = ops->add_subcommand("glue", "glue two complexes along a simplex");
    ops_glue->add_option("A", c.file)->required();
    ops_glue->add_option("B", c.file2)->required();
    ops_glue->add_option("--sigma1", c.sigma1)->required()->delimiter(',');
    ops_glue->add_option("--sigma2", c.sigma2)->required()->delimiter(',');
    ops_glue->add_option("-o,--output", c.output);

    auto* betti = app.add_subcommand("betti", "bigraded Betti numbers");
    betti->add_option("FILE", c.file)->required();
    betti->add_option("--coeff", c.coeff)->check(CLI::IsMember({"rational", "integer"}));
    betti->add_option("--engine", c.engine)->check(CLI::IsMember({"hochster", "taylor"}));
    betti->add_option("--format", c.format)->check(CLI::IsMember({"table", "json"}));
    add_scan_flags(betti, c);
    add_taylor_flags(betti, c);

    auto* golod = app.add_subcommand("golod", "ring-level Golodness");
    golod->add_option("FILE", c.file)->required();
    golod->add_flag("--minimal", c.minimal, "decide minimal non-Golodness");
    golod->add_flag("--no-prefilter", c.no_prefilter, "skip the chordality shortcut");
    add_scan_flags(golod, c);

    auto* predict = app.add_subcommand("predict", "topology predictions")->require_subcommand(1);
    auto* predict_mcg = predict->add_subcommand("mcgavran", "sphere products of a truncated simplex");
    predict_mcg->add_option("--k", c.k)->required();
    predict_mcg->add_option("--n", c.n)->required();
    auto* predict_spheres = predict->add_subcommand("spheres", "connected sum read off the Betti numbers");
    predict_spheres->add_option("FILE", c.file)->required();
    add_scan_flags(predict_spheres, c);

    auto* verify = app.add_subcommand("verify", "check a property")->require_subcommand(1);
    auto* verify_formula = verify->add_subcommand("formula", "closed form against Hochster");
    verify_formula->add_option("--k", c.k)->required();
    verify_formula->add_option("--dims", c.dims)->required()->delimiter(',');
    verify_formula->add_option("--strategy", c.strategy)->check(CLI::IsMember({"lex", "random"}));
    verify_formula->add_option("--seed", c.seed);
    add_scan_flags(verify_formula, c);
    auto* verify_duality = verify->add_subcommand("duality", "bigraded Poincare duality");
    verify_duality->add_option("FILE", c.file)->required();
    add_scan_flags(verify_duality, c);
    auto* verify_oracle = verify->add_subcommand("oracle", "Hochster against Taylor");
    verify_oracle->add_option("FILE", c.file)->required();
    add_scan_flags(verify_oracle, c);
    add_taylor_flags(verify_oracle, c);
    auto* verify_torsion = verify->add_subcommand("torsion", "integral homology of all full subcomplexes");
    verify_torsion->add_option("FILE", c.file)->required();
    add_scan_flags(verify_torsion, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (build_gtp_cmd->parsed()) {
            emit_complex(build_gtp(gtp_spec(c)), c, out);
        } else if (build_cyclic->parsed()) {
            emit_complex(cyclic_boundary(c.m, c.n), c, out);
        } else if (build_join->parsed()) {
            emit_complex(join(read_complex(c.file), read_complex(c.file2)), c, out);
        } else if (ops_stack->parsed()) {
            emit_complex(stack(read_complex(c.file), c.facet).complex, c, out);
        } else if (ops_delete->parsed()) {
            emit_complex(delete_vertex(read_complex(c.file), c.vertex), c, out);
        } else if (ops_glue->parsed()) {
            emit_complex(glue(read_complex(c.file), read_complex(c.file2), c.sigma1, c.sigma2), c, out);
        } else if (betti->parsed()) {
            return run_betti(c, out);
        } else if (golod->parsed()) {
            return run_golod(c, out);
        } else if (predict_mcg->parsed()) {
            return run_predict_mcgavran(c, out);
        } else if (predict_spheres->parsed()) {
            return run_predict_spheres(c, out);
        } else if (verify_formula->parsed()) {
            return run_verify_formula(c, out);
        } else if (verify_duality->parsed()) {
            return run_verify_duality(c, out);
        } else if (verify_oracle->parsed()) {
            return run_verify_oracle(c, out);
        } else if (verify_torsion->parsed()) {
            return run_verify_torsion(c, out);
        }
        return 0;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.what() << "\n";
    }
    return 2;
}

}  // namespace sring
