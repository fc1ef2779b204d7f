#include "effalg/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace effalg {

namespace {

Json load_json(const std::string& path)
{
    if (path.empty())
        throw InputError("--input is required");
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

FiniteEffectAlgebra load_algebra(const RunConfig& config)
{
    auto in = structure_from_json(load_json(config.input));
    if (in.catalog)
        return build_catalog(*in.catalog, config.guard_elements);
    if (in.group)
        return materialize(*in.group, config.guard_elements);
    if (in.table->n > config.guard_elements)
        throw std::length_error("table has " + std::to_string(in.table->n)
            + " elements, above --guard-elements");
    auto result = validate_axioms(*in.table);
    if (!result.ok())
        throw InputError("input is not an effect algebra: " + result.violation->message);
    return std::move(*result.algebra);
}

Json element_labels(const FiniteEffectAlgebra& e)
{
    return e.labels();
}

} // namespace

CommandResult cmd_validate(const RunConfig& config)
{
    auto in = structure_from_json(load_json(config.input));
    RawSumTable table;
    if (in.table) {
        table = *in.table;
        if (table.n > config.guard_elements)
            throw std::length_error("table has " + std::to_string(table.n)
                + " elements, above --guard-elements");
    } else if (in.catalog) {
        table = build_catalog(*in.catalog, config.guard_elements).raw();
    } else {
        table = materialize(*in.group, config.guard_elements).raw();
    }
    auto result = validate_axioms(table);
    CommandResult r;
    r.report = {{"command", "validate"}, {"n", table.n}, {"valid", result.ok()},
        {"violation", result.violation ? to_json(*result.violation) : Json(nullptr)}};
    r.exit_code = result.ok() ? kPass : kCheckFailed;
    return r;
}

CommandResult cmd_analyze(const RunConfig& config)
{
    auto e = load_algebra(config);
    auto report = analyze_structure(e, config.guard_elements);
    auto ideals = enumerate_ideals(e, nullptr, config.guard_elements);
    CommandResult r;
    r.report = {{"command", "analyze"}, {"n", e.size()}, {"labels", element_labels(e)}};
    auto details = to_json(report, ideals);
    for (auto& [key, value] : details.items())
        r.report[key] = value;
    r.exit_code = report.rdp.formulations_agree() ? kPass : kCheckFailed;
    return r;
}

CommandResult cmd_states(const RunConfig& config)
{
    auto e = load_algebra(config);
    auto states = compute_states(e, {VertexMethod::DoubleDescription, false, config.guard_elements});
    Json vertices = Json::array();
    Json profiles = Json::array();
    for (const auto& v : states.vertices) {
        vertices.push_back(to_json(v));
        profiles.push_back(discrete_profile(v));
    }
    auto od = is_order_determining(e, states);
    auto image = evaluation_image(e, states);
    bool iso = hat_is_order_isomorphism(e, image);
    auto clan = clan_closure_witness(clan_elements(e, image), finite_preimage_solver(e, image));

    Json cross = {{"performed", false}, {"agree", nullptr}};
    bool cross_ok = true;
    if (states.free_dimensions() < 12) {
        auto oracle = compute_states(e, {VertexMethod::ActiveSet, false, config.guard_elements});
        cross_ok = oracle.vertices == states.vertices;
        cross = {{"performed", true}, {"agree", cross_ok}};
    }

    CommandResult r;
    r.report = {
        {"command", "states"},
        {"n", e.size()},
        {"labels", element_labels(e)},
        {"free_dimensions", states.free_dimensions()},
        {"vertex_count", states.vertices.size()},
        {"vertices", vertices},
        {"discrete_profiles", profiles},
        {"order", to_json(od)},
        {"hat_order_isomorphism", iso},
        {"clan_closed", clan.closed},
        {"active_set_cross_check", cross},
    };
    r.exit_code = (cross_ok && iso == od.order_determining && clan.closed) ? kPass : kCheckFailed;
    return r;
}

CommandResult cmd_operators(const RunConfig& config)
{
    const int n = config.n.value_or(2);
    if (n < 1)
        throw InputError("--n must be positive");
    auto e = load_algebra(config);
    auto endos = enumerate_endomorphisms(e, {config.guard_elements, config.guard_endos});
    auto states = compute_states(e, {VertexMethod::DoubleDescription, false, config.guard_elements});
    ProbeSource probes(config.seed);

    Json operators = Json::array();
    std::size_t idempotent = 0, strict = 0;
    bool ok = true;
    for (const auto& f : endos) {
        if (!is_n_potent(f, n))
            continue;
        auto c = classify(e, f);
        if (c.state_operator)
            ++idempotent;
        else
            ++strict;
        auto g = induced_map(e, f, states, n, probes);
        ok = ok && g.ok();
        operators.push_back({{"map", f}, {"classification", to_json(c)},
            {"esp", check_esp(f, states)}, {"induced", to_json(g)}});
    }
    CommandResult r;
    r.report = {
        {"command", "operators"},
        {"n", n},
        {"elements", e.size()},
        {"labels", element_labels(e)},
        {"endomorphisms", endos.size()},
        {"operator_count", operators.size()},
        {"idempotent", idempotent},
        {"strictly_n_potent", strict},
        {"state_vertices", states.vertices.size()},
        {"operators", operators},
    };
    r.exit_code = ok ? kPass : kCheckFailed;
    return r;
}

CommandResult cmd_duality(const RunConfig& config)
{
    auto in = simplex_from_json(load_json(config.input));
    if (config.n)
        in.g.n = *config.n;
    if (in.simplex.size() > config.guard_elements)
        throw std::length_error("simplex has more vertices than --guard-elements");
    ProbeSource probes(config.seed);
    auto evaluation = check_evaluation_map(in.simplex);
    auto round_trip = round_trip_check(in.simplex, in.g, probes);

    Json tau = Json::array();
    if (in.g.is_n_potent()) {
        auto t = functor_T(in.simplex, in.g);
        for (std::size_t j = 0; j < in.simplex.size(); ++j)
            tau.push_back(to_json(t.tau.apply(t.algebra.indicator(j))));
    }
    CommandResult r;
    r.report = {
        {"command", "duality"},
        {"vertices", in.simplex.labels},
        {"g", in.g.images},
        {"n", in.g.n},
        {"n_potent", in.g.is_n_potent()},
        {"tau_g_on_indicators", tau},
        {"evaluation", {{"bijective_on_vertices", evaluation.bijective_on_vertices},
                           {"extremal_states_match", evaluation.extremal_states_match},
                           {"chains_checked", evaluation.chains_checked}}},
        {"round_trip", to_json(round_trip)},
    };
    bool ok = round_trip.ok && evaluation.bijective_on_vertices && evaluation.extremal_states_match;
    r.exit_code = ok ? kPass : kCheckFailed;
    return r;
}

CommandResult cmd_paper_suite(const RunConfig& config)
{
    SuiteOptions options;
    options.seed = config.seed;
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : run_reference_suite(options)) {
        checks.push_back(to_json(c));
        all = all && c.passed;
    }
    CommandResult r;
    r.report = {{"command", "paper-suite"}, {"seed", config.seed}, {"all_passed", all}, {"checks", checks}};
    r.exit_code = all ? kPass : kCheckFailed;
    return r;
}

CommandResult run_command(const RunConfig& config)
{
    try {
        if (config.command == "validate")
            return cmd_validate(config);
        if (config.command == "analyze")
            return cmd_analyze(config);
        if (config.command == "states")
            return cmd_states(config);
        if (config.command == "operators")
            return cmd_operators(config);
        if (config.command == "duality")
            return cmd_duality(config);
        if (config.command == "paper-suite")
            return cmd_paper_suite(config);
        throw InputError("unknown command \"" + config.command + "\"");
    } catch (const std::length_error& e) {
        return {{{"command", config.command}, {"error", std::string("guard exceeded: ") + e.what()}},
            kUsageError};
    } catch (const std::invalid_argument& e) {
        return {{{"command", config.command}, {"error", e.what()}}, kUsageError};
    }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite effect algebras with internal states"};
    app.require_subcommand(1);
    RunConfig config;
    std::string output;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* opt = sub->add_option("--input", config.input, "input JSON file");
        if (needs_input)
            opt->required();
        sub->add_option("--output", output, "write the report here instead of stdout");
        sub->add_option("--seed", config.seed, "seed for random probes");
        sub->add_option("--guard-elements", config.guard_elements, "maximum number of elements")
            ->check(CLI::PositiveNumber);
        sub->add_option("--guard-endos", config.guard_endos, "maximum endomorphism search nodes")
            ->check(CLI::PositiveNumber);
    };
    add_common(app.add_subcommand("validate", "check the effect-algebra axioms"), true);
    add_common(app.add_subcommand("analyze", "RDP, interpolation, lattice class and ideals"), true);
    add_common(app.add_subcommand("states", "state polytope and its extremal states"), true);
    auto* ops = app.add_subcommand("operators", "enumerate and classify n-potent endomorphisms");
    add_common(ops, true);
    ops->add_option("--n", config.n, "potency exponent (default 2)");
    auto* dual = app.add_subcommand("duality", "round trip on a finite simplex");
    add_common(dual, true);
    dual->add_option("--n", config.n, "override the potency exponent of the file");
    add_common(app.add_subcommand("paper-suite", "run every reference check"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsageError;
    }
    config.command = app.get_subcommands().front()->get_name();
    if (!output.empty())
        config.output = output;

    auto result = run_command(config);
    const auto text = result.report.dump(2) + "\n";
    if (config.output) {
        std::ofstream file(*config.output);
        if (!file) {
            err << "cannot write " << *config.output << "\n";
            return kUsageError;
        }
        file << text;
    } else {
        out << text;
    }
    if (result.report.contains("error"))
        err << result.report["error"].get<std::string>() << "\n";
    return result.exit_code;
}

} // namespace effalg
