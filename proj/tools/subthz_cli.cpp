// SPDX-License-Identifier: Apache-2.0
//
// subthz: close-in path loss, angular spread and link budget toolkit
// Copyright (C) 2026 The subthz authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// subthz command line: fit, asa, registry, synth, coverage, validate, report.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 computation.

#include "subthz/angular_stats.hpp"
#include "subthz/ci_model.hpp"
#include "subthz/error.hpp"
#include "subthz/measurement.hpp"
#include "subthz/registry.hpp"
#include "subthz/reports.hpp"
#include "subthz/synthesis.hpp"
#include "subthz/text_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace subthz;

enum ExitCode : int { ok = 0, usage = 1, bad_input = 2, computation = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --category directional | omni | kth N
Category category_from_tokens(const std::vector<std::string>& tokens) {
    if (tokens.empty())
        return Category::directional;
    if (tokens[0] == "kth") {
        if (tokens.size() != 2)
            throw UsageError("--category kth requires N (2 or 3)");
        int k = 0;
        try {
            k = std::stoi(tokens[1]);
        } catch (const std::exception&) {
            throw UsageError("--category kth: N must be an integer");
        }
        if (k != 2 && k != 3)
            throw UsageError("--category kth: N must be 2 or 3, got " + tokens[1]);
        return kth_strongest(k);
    }
    if (tokens.size() != 1)
        throw UsageError("--category takes one value (directional|omni|kth N)");
    try {
        return parse_category(tokens[0]);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

template <typename F>
auto parse_flag(const std::string& flag, const std::string& value, F parse) {
    try {
        return parse(value);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Campaign load_input(const std::string& path, const std::string& format) {
    Campaign c;
    if (format.empty())
        c = load_campaign(path);
    else
        c = load_campaign(path, format == "csv" ? CampaignFormat::csv : CampaignFormat::json);
    for (const auto& w : c.warnings)
        std::cerr << "warning: " << w << "\n";
    return c;
}

std::optional<Environment> resolve_environment(const std::string& env_flag, const Campaign& c) {
    if (!env_flag.empty())
        return parse_flag("--env", env_flag, [](const std::string& s) { return parse_environment(s); });
    if (c.meta)
        return c.meta->environment;
    return std::nullopt;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
    std::filesystem::path p(path);
    p.replace_extension();
    return p.string() + suffix;
}

std::vector<LinkRecord> links_with(const Campaign& c, std::optional<Condition> cond) {
    std::vector<LinkRecord> out;
    for (const auto& l : c.links)
        if (!cond || l.condition == *cond)
            out.push_back(l);
    return out;
}

bool has_condition(const Campaign& c, Condition cond) {
    return std::any_of(c.links.begin(), c.links.end(), [&](const LinkRecord& l) { return l.condition == cond; });
}

void print_series_notes(const SeriesResult& r) {
    for (const auto& w : r.warnings)
        std::cerr << "warning: " << w << "\n";
    if (!r.skipped.empty()) {
        std::cerr << "warning: " << r.skipped.size() << " link(s) skipped for " << to_string(r.series.category) << ":";
        for (const auto& id : r.skipped)
            std::cerr << " " << id;
        std::cerr << "\n";
    }
}

// ---------------------------------------------------------------------------

struct CommonModel {
    double fc_ghz = default_fc_hz / 1e9;
    double d0_m = default_d0_m;
};

struct FitArgs {
    std::string input, output, points, format, env, cond;
    std::vector<std::string> category;
    CommonModel model;
    double floor_db = 25.0;
    int max_mpcs = 16;
};

int cmd_fit(const FitArgs& a) {
    const Category category = category_from_tokens(a.category);
    const Campaign c = load_input(a.input, a.format);
    const auto env = resolve_environment(a.env, c);
    const std::string env_label = env ? std::string(to_string(*env)) : "unknown";
    const MpcOptions mpc{a.max_mpcs, a.floor_db};

    std::vector<std::pair<std::string, std::optional<Condition>>> groups;
    if (a.cond.empty()) {
        for (auto cond : all_conditions)
            if (has_condition(c, cond))
                groups.emplace_back(std::string(to_string(cond)), cond);
    } else if (a.cond == "all") {
        groups.emplace_back("all", std::nullopt);
    } else {
        const auto cond = parse_flag("--cond", a.cond, [](const std::string& s) { return parse_condition(s); });
        groups.emplace_back(std::string(to_string(cond)), cond);
    }
    if (groups.empty())
        throw ComputationError("no links to fit");

    std::vector<FitReport> reports;
    for (const auto& [label, cond] : groups) {
        const auto links = links_with(c, cond);
        if (links.empty())
            throw ComputationError("no " + label + " links in campaign");
        auto result = pathloss_series(links, category, mpc);
        print_series_notes(result);
        auto fit = fit_ci(result.series, a.model.fc_ghz * 1e9, a.model.d0_m);
        reports.push_back({label, env_label, std::move(result.series), std::move(fit)});
    }

    emit(a.output, fit_report_json(reports));
    std::string points = a.points;
    if (points.empty() && !a.output.empty() && a.output != "-")
        points = sibling_path(a.output, ".points.csv");
    if (!points.empty())
        emit(points, fit_points_csv(reports));
    if (!a.output.empty() && a.output != "-")
        std::cout << fit_summary(reports);
    return ok;
}

struct AsaArgs {
    std::string input, output, aggregate, format, env;
    double floor_db = 25.0;
    int max_mpcs = 16;
    bool unwrap = false;
};

int cmd_asa(const AsaArgs& a) {
    const Campaign c = load_input(a.input, a.format);
    const auto env = resolve_environment(a.env, c).value_or(Environment::outdoor);
    const MpcOptions mpc{a.max_mpcs, a.floor_db};
    const AsaOptions opts{a.unwrap};

    std::vector<AsaSample> samples;
    for (const auto& link : c.links)
        samples.push_back(asa_sample(link, env, mpc, opts));

    std::optional<AsaStats> los, nlos;
    if (has_condition(c, Condition::los))
        los = aggregate_asa(samples, env, Condition::los);
    if (has_condition(c, Condition::nlos))
        nlos = aggregate_asa(samples, env, Condition::nlos);

    emit(a.output, asa_csv(samples));
    std::string aggregate = a.aggregate;
    if (aggregate.empty() && !a.output.empty() && a.output != "-")
        aggregate = sibling_path(a.output, ".aggregate.json");
    if (!aggregate.empty())
        emit(aggregate, asa_aggregate_json(env, los, nlos));
    return ok;
}

struct RegistryArgs {
    std::string env, cond, overrides, output, format;
    std::vector<std::string> category;
    bool export_all = false;
};

ModelRegistry registry_with(const std::string& overrides) {
    return overrides.empty() ? ModelRegistry::builtin() : ModelRegistry::builtin().with_overrides_file(overrides);
}

int cmd_registry(const RegistryArgs& a) {
    const ModelRegistry reg = registry_with(a.overrides);
    if (a.export_all || (a.env.empty() && a.cond.empty() && a.category.empty())) {
        emit(a.output, reg.to_json());
        return ok;
    }
    if (a.env.empty() || a.cond.empty())
        throw UsageError("registry query needs --env and --cond");
    const auto env = parse_flag("--env", a.env, [](const std::string& s) { return parse_environment(s); });
    const auto cond = parse_flag("--cond", a.cond, [](const std::string& s) { return parse_condition(s); });

    std::vector<Category> cats;
    if (a.category.empty())
        cats.assign(all_categories.begin(), all_categories.end());
    else
        cats.push_back(category_from_tokens(a.category));

    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["environment"] = to_string(env);
        j["condition"] = to_string(cond);
        auto& arr = j["pathloss"] = nlohmann::ordered_json::array();
        for (auto cat : cats) {
            const auto& e = reg.lookup(env, cond, cat);
            arr.push_back({{"category", to_string(cat)}, {"n", e.n}, {"sigma_db", e.sigma_db}, {"source", e.source}});
        }
        if (a.category.empty()) {
            const auto& s = reg.lookup_asa(env, cond);
            j["asa"] = {{"mean_sa_deg", s.mean_sa_deg}, {"std_sa_deg", s.std_sa_deg}, {"source", s.source}};
        }
        emit(a.output, j.dump(2) + "\n");
        return ok;
    }

    std::string out;
    for (auto cat : cats) {
        const auto& e = reg.lookup(env, cond, cat);
        out += std::string(to_string(cat)) + ": n = " + format_double(e.n) + ", sigma = " + format_double(e.sigma_db) +
               " dB (" + e.source + ")\n";
    }
    if (a.category.empty()) {
        const auto& s = reg.lookup_asa(env, cond);
        out += "asa: mean = " + format_double(s.mean_sa_deg) + " deg, std = " + format_double(s.std_sa_deg) +
               " deg (" + s.source + ")\n";
    }
    emit(a.output, out);
    return ok;
}

// n and sigma from explicit flags, falling back to the registry entry named by
// --env/--cond/--category.
struct ModelChoice {
    std::optional<double> n, sigma;
    std::string env, cond, overrides;
    std::vector<std::string> category;
};

std::pair<double, double> resolve_model(const ModelChoice& m) {
    if (m.n && m.sigma)
        return {*m.n, *m.sigma};
    if (m.env.empty() || m.cond.empty())
        throw UsageError("give --n and --sigma, or --env and --cond to use registry parameters");
    const auto env = parse_flag("--env", m.env, [](const std::string& s) { return parse_environment(s); });
    const auto cond = parse_flag("--cond", m.cond, [](const std::string& s) { return parse_condition(s); });
    const auto& e = registry_with(m.overrides).lookup(env, cond, category_from_tokens(m.category));
    return {m.n.value_or(e.n), m.sigma.value_or(e.sigma_db)};
}

struct SynthArgs {
    ModelChoice model;
    CommonModel ci;
    int links = 10;
    std::uint64_t seed = 1;
    double d_min = 3.0, d_max = 66.0;
    std::vector<double> distances;
    std::string law = "log_uniform", output, format = "json";
};

int cmd_synth(const SynthArgs& a) {
    const auto [n, sigma] = resolve_model(a.model);
    SynthesisConfig cfg;
    cfg.params = {a.ci.fc_ghz * 1e9, a.ci.d0_m, n};
    cfg.sigma_db = sigma;
    cfg.seed = a.seed;
    cfg.num_links = a.links;
    cfg.distance_range_m = {a.d_min, a.d_max};
    if (!a.distances.empty()) {
        cfg.distance_law = DistanceLaw::explicit_list;
        cfg.distances_m = a.distances;
        const auto [lo, hi] = std::minmax_element(a.distances.begin(), a.distances.end());
        cfg.distance_range_m = {*lo, *hi};
    } else if (a.law == "uniform") {
        cfg.distance_law = DistanceLaw::uniform;
    } else if (a.law != "log_uniform") {
        throw UsageError("--law must be log_uniform or uniform");
    }
    cfg.condition = a.model.cond.empty()
                        ? Condition::los
                        : parse_flag("--cond", a.model.cond, [](const std::string& s) { return parse_condition(s); });

    Campaign c;
    c.links = generate_synthetic_campaign(cfg);

    const double band_lo = a.ci.fc_ghz - 2.0, band_hi = a.ci.fc_ghz + 2.0;
    if (band_lo >= 100.0 && band_hi <= 350.0 && cfg.distance_range_m.first >= 1.0) {
        CampaignMeta meta;
        meta.name = "synthetic";
        meta.environment = a.model.env.empty()
                               ? Environment::outdoor
                               : parse_flag("--env", a.model.env, [](const std::string& s) { return parse_environment(s); });
        meta.site = "synthetic";
        meta.rf_band_ghz = {band_lo, band_hi};
        meta.eirp_dbm = LinkBudget{}.eirp_dbm;
        meta.link_distance_range_m = cfg.distance_range_m;
        c.meta = meta;
    }
    emit(a.output, a.format == "csv" ? to_csv_string(c) : to_json_string(c));
    return ok;
}

struct CoverageArgs {
    ModelChoice model;
    CommonModel ci;
    LinkBudget budget;
    Eigen::Index nx = 101, ny = 101;
    double cell_m = 1.0;
    std::optional<double> x0, y0, at_m;
    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;
    std::string output;
};

int cmd_coverage(const CoverageArgs& a) {
    const auto [n, sigma] = resolve_model(a.model);
    const CiParams<double> params{a.ci.fc_ghz * 1e9, a.ci.d0_m, n};

    if (a.at_m) {
        nlohmann::ordered_json j;
        j["distance_m"] = *a.at_m;
        j["n"] = n;
        j["sigma_db"] = sigma;
        j["margin_db"] = link_margin_db(params, a.budget, *a.at_m);
        j["mean_rx_power_dbm"] = a.budget.eirp_dbm + a.budget.rx_gain_dbi - ci_predict(params, *a.at_m);
        j["outage_closed_form"] = outage_probability(params, sigma, a.budget, *a.at_m, ClosedForm{});
        if (a.trials) {
            j["trials"] = *a.trials;
            j["seed"] = a.seed;
            j["outage_monte_carlo"] =
                outage_probability(params, sigma, a.budget, *a.at_m, MonteCarlo{*a.trials, a.seed});
        }
        emit(a.output, j.dump(2) + "\n");
        return ok;
    }

    GridSpec grid = GridSpec::centered(a.nx, a.ny, a.cell_m);
    if (a.x0)
        grid.x0_m = *a.x0;
    if (a.y0)
        grid.y0_m = *a.y0;
    const auto map = coverage_grid(params, sigma, a.budget, grid);
    const auto flagged = (!map.valid).count();
    if (flagged > 0)
        std::cerr << "warning: " << flagged << " cell(s) closer than d0 left blank\n";
    emit(a.output, coverage_csv(map));
    return ok;
}

struct ValidateArgs {
    std::string input, format;
};

int cmd_validate(const ValidateArgs& a) {
    const Campaign c = load_input(a.input, a.format);
    const auto los = std::count_if(c.links.begin(), c.links.end(),
                                   [](const LinkRecord& l) { return l.condition == Condition::los; });
    std::cout << "valid: " << c.links.size() << " links (" << los << " LoS, " << (c.links.size() - std::size_t(los))
              << " NLoS)\n";
    return ok;
}

struct ReportArgs {
    std::string input, output, format, env, overrides;
    CommonModel model;
    double floor_db = 25.0;
    int max_mpcs = 16;
};

int cmd_report(const ReportArgs& a) {
    const Campaign c = load_input(a.input, a.format);
    const auto env = resolve_environment(a.env, c);
    if (!env)
        throw UsageError("report needs --env when the campaign has no meta block");
    const ModelRegistry reg = registry_with(a.overrides);
    const MpcOptions mpc{a.max_mpcs, a.floor_db};

    nlohmann::ordered_json j;
    j["environment"] = to_string(*env);
    j["fc_hz"] = a.model.fc_ghz * 1e9;
    j["d0_m"] = a.model.d0_m;
    auto& pl = j["pathloss"] = nlohmann::ordered_json::array();
    std::vector<AsaSample> samples;
    for (auto cond : all_conditions) {
        const auto links = links_with(c, cond);
        if (links.empty())
            continue;
        for (auto cat : all_categories) {
            SeriesResult r;
            try {
                r = pathloss_series(links, cat, mpc);
            } catch (const ComputationError& e) {
                std::cerr << "warning: " << e.what() << " (" << to_string(cond) << ")\n";
                continue;
            }
            print_series_notes(r);
            if (r.series.size() < 2) {
                std::cerr << "warning: too few points for " << to_string(cat) << " " << to_string(cond) << "\n";
                continue;
            }
            const auto fit = fit_ci(r.series, a.model.fc_ghz * 1e9, a.model.d0_m);
            const auto& ref = reg.lookup(*env, cond, cat);
            nlohmann::ordered_json o;
            o["category"] = to_string(cat);
            o["condition"] = to_string(cond);
            o["n"] = fit.params.n;
            o["sigma_db"] = fit.sigma_db;
            o["num_points"] = fit.num_points;
            o["reference_n"] = ref.n;
            o["reference_sigma_db"] = ref.sigma_db;
            o["reference_source"] = ref.source;
            pl.push_back(std::move(o));
        }
        for (const auto& link : links)
            samples.push_back(asa_sample(link, *env, mpc));
    }
    auto& as = j["asa"] = nlohmann::ordered_json::array();
    for (auto cond : all_conditions) {
        if (!has_condition(c, cond))
            continue;
        const auto stats = aggregate_asa(samples, *env, cond);
        const auto& ref = reg.lookup_asa(*env, cond);
        nlohmann::ordered_json o;
        o["condition"] = to_string(cond);
        o["mean_deg"] = stats.mean_deg;
        o["std_deg"] = stats.std_deg;
        o["count"] = stats.count;
        o["reference_mean_deg"] = ref.mean_sa_deg;
        o["reference_std_deg"] = ref.std_sa_deg;
        o["reference_source"] = ref.source;
        as.push_back(std::move(o));
    }
    emit(a.output, j.dump(2) + "\n");
    return ok;
}

void add_model_flags(CLI::App* cmd, CommonModel& m) {
    cmd->add_option("--fc-ghz", m.fc_ghz, "Carrier frequency in GHz")->check(CLI::PositiveNumber);
    cmd->add_option("--d0-m", m.d0_m, "Reference distance in meters")->check(CLI::PositiveNumber);
}

void add_choice_flags(CLI::App* cmd, ModelChoice& m) {
    cmd->add_option("--n", m.n, "Path loss exponent");
    cmd->add_option("--sigma", m.sigma, "Shadow fading std in dB")->check(CLI::NonNegativeNumber);
    cmd->add_option("--env", m.env, "indoor|outdoor (registry parameters)");
    cmd->add_option("--cond", m.cond, "los|nlos");
    cmd->add_option("--category", m.category, "directional|omni|kth N")->expected(1, 2);
    cmd->add_option("--registry", m.overrides, "Registry override JSON");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subthz: close-in path loss fitting, angular spread and link budget toolkit"};
    app.require_subcommand(1);

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit the CI model to a measurement campaign");
    fit_cmd->add_option("--input", fit.input, "Campaign file (.json or .csv)")->required();
    fit_cmd->add_option("--output", fit.output, "Fit report JSON (default: stdout)");
    fit_cmd->add_option("--points", fit.points, "Per-point CSV (default: <output>.points.csv)");
    fit_cmd->add_option("--category", fit.category, "directional|omni|kth N")->expected(1, 2);
    fit_cmd->add_option("--cond", fit.cond, "los|nlos|all (default: each condition separately)");
    fit_cmd->add_option("--env", fit.env, "indoor|outdoor label override");
    fit_cmd->add_option("--floor-db", fit.floor_db, "MPC dynamic range below peak")->check(CLI::PositiveNumber);
    fit_cmd->add_option("--max-mpcs", fit.max_mpcs, "MPCs extracted per scan")->check(CLI::PositiveNumber);
    fit_cmd->add_option("--format", fit.format, "Input format")->check(CLI::IsMember({"csv", "json"}));
    add_model_flags(fit_cmd, fit.model);

    AsaArgs asa_args;
    auto* asa_cmd = app.add_subcommand("asa", "Azimuth spread of arrival per link and aggregate");
    asa_cmd->add_option("--input", asa_args.input, "Campaign file (.json or .csv)")->required();
    asa_cmd->add_option("--output", asa_args.output, "Per-link CSV (default: stdout)");
    asa_cmd->add_option("--aggregate", asa_args.aggregate, "Aggregate JSON (default: <output>.aggregate.json)");
    asa_cmd->add_option("--env", asa_args.env, "indoor|outdoor");
    asa_cmd->add_option("--floor-db", asa_args.floor_db, "MPC dynamic range below peak")->check(CLI::PositiveNumber);
    asa_cmd->add_option("--max-mpcs", asa_args.max_mpcs, "MPCs extracted per scan")->check(CLI::PositiveNumber);
    asa_cmd->add_flag("--unwrap", asa_args.unwrap, "Unwrap angles about the strongest MPC");
    asa_cmd->add_option("--format", asa_args.format, "Input format")->check(CLI::IsMember({"csv", "json"}));

    RegistryArgs reg;
    auto* reg_cmd = app.add_subcommand("registry", "Query or export the published model parameters");
    reg_cmd->add_option("--env", reg.env, "indoor|outdoor");
    reg_cmd->add_option("--cond", reg.cond, "los|nlos");
    reg_cmd->add_option("--cat,--category", reg.category, "directional|omni|kth N")->expected(1, 2);
    reg_cmd->add_option("--registry", reg.overrides, "Registry override JSON");
    reg_cmd->add_option("--output", reg.output, "Output file (default: stdout)");
    reg_cmd->add_option("--format", reg.format, "Query output format")->check(CLI::IsMember({"text", "json"}));
    auto* export_cmd = reg_cmd->add_subcommand("export", "Emit the full registry as JSON");
    export_cmd->callback([&reg] { reg.export_all = true; });

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic campaign from CI parameters");
    add_choice_flags(synth_cmd, synth.model);
    add_model_flags(synth_cmd, synth.ci);
    synth_cmd->add_option("--links", synth.links, "Number of links")->check(CLI::PositiveNumber);
    synth_cmd->add_option("--seed", synth.seed, "RNG seed");
    synth_cmd->add_option("--d-min-m", synth.d_min, "Minimum distance");
    synth_cmd->add_option("--d-max-m", synth.d_max, "Maximum distance");
    synth_cmd->add_option("--distances", synth.distances, "Explicit distance list");
    synth_cmd->add_option("--law", synth.law, "log_uniform|uniform");
    synth_cmd->add_option("--output", synth.output, "Campaign file (default: stdout)");
    synth_cmd->add_option("--format", synth.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    CoverageArgs cov;
    auto* cov_cmd = app.add_subcommand("coverage", "Coverage grid or single-distance outage");
    add_choice_flags(cov_cmd, cov.model);
    add_model_flags(cov_cmd, cov.ci);
    cov_cmd->add_option("--eirp-dbm", cov.budget.eirp_dbm, "Transmit EIRP");
    cov_cmd->add_option("--rx-gain-dbi", cov.budget.rx_gain_dbi, "Receive antenna gain");
    cov_cmd->add_option("--noise-dbm", cov.budget.noise_floor_dbm, "Noise floor");
    cov_cmd->add_option("--snr-db", cov.budget.required_snr_db, "Required SNR");
    cov_cmd->add_option("--nx", cov.nx, "Grid columns")->check(CLI::PositiveNumber);
    cov_cmd->add_option("--ny", cov.ny, "Grid rows")->check(CLI::PositiveNumber);
    cov_cmd->add_option("--cell-m", cov.cell_m, "Cell size")->check(CLI::PositiveNumber);
    cov_cmd->add_option("--x0-m", cov.x0, "First cell center x (default: centered grid)");
    cov_cmd->add_option("--y0-m", cov.y0, "First cell center y (default: centered grid)");
    cov_cmd->add_option("--at-m", cov.at_m, "Evaluate one distance instead of a grid")->check(CLI::PositiveNumber);
    cov_cmd->add_option("--trials", cov.trials, "Monte Carlo trials for --at-m")->check(CLI::PositiveNumber);
    cov_cmd->add_option("--seed", cov.seed, "Monte Carlo seed");
    cov_cmd->add_option("--output", cov.output, "Output file (default: stdout)");

    ValidateArgs val;
    auto* val_cmd = app.add_subcommand("validate", "Check a campaign file against the schema and invariants");
    val_cmd->add_option("--input", val.input, "Campaign file")->required();
    val_cmd->add_option("--format", val.format, "Input format")->check(CLI::IsMember({"csv", "json"}));

    ReportArgs rep;
    auto* rep_cmd = app.add_subcommand("report", "Fit every category and compare with the registry");
    rep_cmd->add_option("--input", rep.input, "Campaign file")->required();
    rep_cmd->add_option("--output", rep.output, "Report JSON (default: stdout)");
    rep_cmd->add_option("--env", rep.env, "indoor|outdoor");
    rep_cmd->add_option("--registry", rep.overrides, "Registry override JSON");
    rep_cmd->add_option("--floor-db", rep.floor_db, "MPC dynamic range below peak")->check(CLI::PositiveNumber);
    rep_cmd->add_option("--max-mpcs", rep.max_mpcs, "MPCs extracted per scan")->check(CLI::PositiveNumber);
    rep_cmd->add_option("--format", rep.format, "Input format")->check(CLI::IsMember({"csv", "json"}));
    add_model_flags(rep_cmd, rep.model);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (fit_cmd->parsed())
            return cmd_fit(fit);
        if (asa_cmd->parsed())
            return cmd_asa(asa_args);
        if (reg_cmd->parsed())
            return cmd_registry(reg);
        if (synth_cmd->parsed())
            return cmd_synth(synth);
        if (cov_cmd->parsed())
            return cmd_coverage(cov);
        if (val_cmd->parsed())
            return cmd_validate(val);
        if (rep_cmd->parsed())
            return cmd_report(rep);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return bad_input;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return computation;
    }
    return usage;
}
