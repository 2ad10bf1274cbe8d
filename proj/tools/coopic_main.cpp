// coopic — rate-region toolkit for the two-user Gaussian interference channel
// with conferencing decoders
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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coopic/bounds.hpp"
#include "coopic/channel.hpp"
#include "coopic/fm.hpp"
#include "coopic/gdof.hpp"
#include "coopic/ldc.hpp"
#include "coopic/region2d.hpp"
#include "coopic/sweep.hpp"

namespace {

using nlohmann::json;

coopic::ChannelParams load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    json j;
    in >> j;
    return coopic::scenario_from_json(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + out_path);
        out << text;
    }
}

int run_region(const std::string& scenario, const std::string& which, const std::string& out) {
    const auto p = load_scenario(scenario);
    coopic::RateRegion region = [&] {
        if (which == "inner") return coopic::build_inner(p);
        if (which == "outer") return coopic::build_outer(p);
        if (which == "cmac-inner") return coopic::build_cmac(p).inner;
        if (which == "cmac-outer") return coopic::build_cmac(p).outer;
        throw std::runtime_error("unknown region kind: " + which);
    }();
    write_output(out, coopic::region_to_json(region).dump(2) + "\n");
    return 0;
}

int run_gap(const coopic::SweepConfig& cfg, const std::string& out) {
    const coopic::GapReport report = coopic::gap_sweep(cfg);
    write_output(out, coopic::report_to_json(report).dump(2) + "\n");
    std::cerr << "gap sweep (" << coopic::to_string(cfg.kind) << "): " << report.samples_checked
              << " samples, gap " << cfg.gap_bits << " bits, " << report.violations.size()
              << " violations, worst slack " << report.max_observed_excess << " bits\n";
    return report.violations.empty() ? 0 : 2;
}

int run_gdof(double amin, double amax, int asteps, const std::string& kappa_list) {
    std::vector<double> kappas;
    std::stringstream ks(kappa_list);
    std::string tok;
    while (std::getline(ks, tok, ',')) kappas.push_back(std::stod(tok));
    std::cout << "alpha,kappa,d\n";
    for (int i = 0; i < asteps; ++i) {
        const double a = (asteps == 1) ? amin : amin + (amax - amin) * i / (asteps - 1);
        for (double k : kappas)
            std::cout << a << "," << k << "," << coopic::gdof({a, k}) << "\n";
    }
    return 0;
}

int run_gdof_converge(double alpha, double kappa, double theta, double snr_db_min,
                      double snr_db_max, int steps) {
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i)
        grid.push_back(steps == 1 ? snr_db_max
                                  : snr_db_min + (snr_db_max - snr_db_min) * i / (steps - 1));
    const auto rep = coopic::verify_limit({alpha, kappa}, grid, theta);
    std::cout << "alpha,kappa,snr_db,csym_over_logsnr,d_formula,deviation\n";
    for (const auto& pt : rep.points)
        std::cout << alpha << "," << kappa << "," << pt.snr_db << "," << pt.ratio << ","
                  << rep.d_formula << "," << pt.deviation << "\n";
    std::cerr << "terminal deviation: " << rep.terminal_deviation << "\n";
    return 0;
}

int run_sym(const std::string& scenario) {
    const auto p = load_scenario(scenario);
    const double upper = coopic::sym_upper(p);
    const double one_round = coopic::sym_one_round(p);
    std::cout << "sym_upper_bits " << upper << "\n"
              << "sym_one_round_bits " << one_round << "\n"
              << "gap_bits " << (upper - one_round) << "\n";
    return 0;
}

int run_ldc_check(const std::string& channel, const std::string& scheme_path) {
    const auto ch = coopic::LdcChannel::parse(channel);
    const auto scheme = coopic::LdcScheme::parse(read_file(scheme_path), ch.q);
    const auto res = coopic::check_scheme(ch, scheme);
    if (!res.ok) {
        std::cout << "FAIL " << res.error << "\n";
        return 2;
    }
    std::cout << "OK r1=" << res.r1 << " r2=" << res.r2 << " sum=" << (res.r1 + res.r2) << "\n";
    return 0;
}

int run_ldc_search(const std::string& channel, int max_bits) {
    const auto ch = coopic::LdcChannel::parse(channel);
    const auto res = coopic::search_raw(ch, max_bits < 0 ? ch.q : max_bits);
    std::cout << "best sum=" << res.sum << " r1=" << res.r1 << " r2=" << res.r2
              << " (upper bound " << coopic::ldc_sum_upper_bound(ch) << ")\n"
              << res.scheme.format(ch.q);
    return 0;
}

int run_fm_crosscheck(const std::string& regime, std::uint64_t count, std::uint64_t seed) {
    using coopic::StrategyOrder;
    coopic::SweepConfig cfg;
    cfg.kind = coopic::sweep_kind_from_string(regime);
    if (cfg.kind != coopic::SweepKind::Weak && cfg.kind != coopic::SweepKind::Mixed)
        throw std::runtime_error("fm-crosscheck: regime must be weak or mixed");
    cfg.count = count;
    cfg.seed = seed;
    std::uint64_t failures = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto p = coopic::draw_scenario(cfg, i);
        const auto regime_tag = coopic::classify(p);
        std::vector<StrategyOrder> orders;
        if (regime_tag == coopic::Regime::Weak)
            orders = {StrategyOrder::TwoRound212, StrategyOrder::TwoRound121};
        else if (regime_tag == coopic::Regime::Mixed12)
            orders = {StrategyOrder::TwoRound212};
        else
            orders = {StrategyOrder::TwoRound121};
        bool ok = true;
        for (auto order : orders) {
            coopic::IneqSystem sys = coopic::two_round_system(p, order);
            sys = coopic::eliminate(sys, order == StrategyOrder::TwoRound212 ? "R1c" : "R2c");
            if (sys.var_index("R2c") >= 0) sys = coopic::eliminate(sys, "R2c");
            if (sys.var_index("R1c") >= 0) sys = coopic::eliminate(sys, "R1c");
            const coopic::RateRegion projected = coopic::system_to_region(sys);
            const coopic::RateRegion direct = coopic::build_two_round(p, order);
            ok = ok && coopic::regions_equal(projected, direct, 1e-6);
        }
        std::cout << "sample " << i << ": " << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) ++failures;
    }
    std::cerr << "fm-crosscheck (" << regime << "): " << (count - failures) << "/" << count
              << " samples matched\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rate regions for the two-user Gaussian interference channel with "
                 "receiver conferencing"};
    app.require_subcommand(1);

    std::string scenario, which = "inner", out, kappa_list = "0";
    std::string channel, scheme_path, regime = "weak";
    double amin = 0.0, amax = 3.0, alpha = 0.5, kappa = 0.25, theta = 1.5707963267948966;
    double snr_db_min = 10.0, snr_db_max = 200.0;
    int asteps = 61, steps = 20, max_bits = -1;
    coopic::SweepConfig cfg;

    auto* c_region = app.add_subcommand("region", "emit a rate region as JSON");
    c_region->add_option("--scenario", scenario)->required();
    c_region->add_option("--which", which)
        ->check(CLI::IsMember({"inner", "outer", "cmac-inner", "cmac-outer"}));
    c_region->add_option("--out", out);

    auto* c_gap = app.add_subcommand("gap", "randomized constant-gap verification sweep");
    std::string gap_regime = "weak";
    c_gap->add_option("--regime", gap_regime)
        ->check(CLI::IsMember({"weak", "mixed", "strong", "cmac"}));
    c_gap->add_option("--count", cfg.count);
    c_gap->add_option("--seed", cfg.seed);
    c_gap->add_option("--gap-bits", cfg.gap_bits)->required();
    c_gap->add_option("--tol", cfg.tol_bits);
    c_gap->add_option("--snr-db-min", cfg.snr_db_min);
    c_gap->add_option("--snr-db-max", cfg.snr_db_max);
    c_gap->add_option("--inr-db-min", cfg.inr_db_min);
    c_gap->add_option("--inr-db-max", cfg.inr_db_max);
    c_gap->add_option("--cb-min", cfg.cb_min);
    c_gap->add_option("--cb-max", cfg.cb_max);
    c_gap->add_option("--out", out);

    auto* c_gdof = app.add_subcommand("gdof", "generalized degrees of freedom, CSV");
    c_gdof->add_option("--alpha-min", amin);
    c_gdof->add_option("--alpha-max", amax);
    c_gdof->add_option("--alpha-steps", asteps);
    c_gdof->add_option("--kappa", kappa_list, "value or comma-separated list");

    auto* c_conv = app.add_subcommand("gdof-converge", "high-power convergence sweep, CSV");
    c_conv->add_option("--alpha", alpha)->required();
    c_conv->add_option("--kappa", kappa)->required();
    c_conv->add_option("--theta", theta);
    c_conv->add_option("--snr-db-min", snr_db_min);
    c_conv->add_option("--snr-db-max", snr_db_max);
    c_conv->add_option("--steps", steps);

    auto* c_sym = app.add_subcommand("sym", "symmetric-capacity bounds of a scenario");
    c_sym->add_option("--scenario", scenario)->required();

    auto* c_ldc = app.add_subcommand("ldc", "linear deterministic channel tools");
    c_ldc->require_subcommand(1);
    auto* c_check = c_ldc->add_subcommand("check", "verify a scheme file");
    c_check->add_option("--channel", channel)->required();
    c_check->add_option("--scheme", scheme_path)->required();
    auto* c_search = c_ldc->add_subcommand("search", "exhaustive raw-forwarding search");
    c_search->add_option("--channel", channel)->required();
    c_search->add_option("--max-bits", max_bits);

    auto* c_fm = app.add_subcommand("fm-crosscheck",
                                    "re-derive two-round regions by elimination and compare");
    std::uint64_t fm_count = 100, fm_seed = 1;
    c_fm->add_option("--regime", regime)->check(CLI::IsMember({"weak", "mixed"}));
    c_fm->add_option("--count", fm_count);
    c_fm->add_option("--seed", fm_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_region->parsed()) return run_region(scenario, which, out);
        if (c_gap->parsed()) {
            cfg.kind = coopic::sweep_kind_from_string(gap_regime);
            return run_gap(cfg, out);
        }
        if (c_gdof->parsed()) return run_gdof(amin, amax, asteps, kappa_list);
        if (c_conv->parsed())
            return run_gdof_converge(alpha, kappa, theta, snr_db_min, snr_db_max, steps);
        if (c_sym->parsed()) return run_sym(scenario);
        if (c_ldc->parsed()) {
            if (c_check->parsed()) return run_ldc_check(channel, scheme_path);
            return run_ldc_search(channel, max_bits);
        }
        if (c_fm->parsed()) return run_fm_crosscheck(regime, fm_count, fm_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
