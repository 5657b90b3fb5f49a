// Copyright 2026 The cvqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvqkd/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cvqkd/attacks.h"
#include "cvqkd/montecarlo.h"
#include "cvqkd/svg_plot.h"
#include "cvqkd/threshold_csv.h"

namespace cvqkd::cli {

namespace {

struct ChannelFlags {
    double eta = 0;
    double delta = 0;
    double v_a = 0;
    std::string kind = "optimal";
    bool json = false;
};

struct SweepFlags {
    double v_a = 1e6;
    double delta_min = 0;
    double delta_max = 0.6;
    int steps = 61;
    std::string out = "-";
};

struct MonteCarloFlags {
    uint64_t samples = 1000000;
    uint64_t seed = 42;
    unsigned workers = 0;
};

struct PlotFlags {
    std::string in;
    std::string out;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

void add_channel_flags(CLI::App *cmd, ChannelFlags &flags) {
    cmd->add_option("--eta", flags.eta, "line transmission, 0 < eta <= 1")->required();
    cmd->add_option("--delta", flags.delta, "excess noise (shot-noise units), 0 <= delta < 2 eta")->required();
    cmd->add_option("--va", flags.v_a, "modulation variance V_A > 0")->required();
    cmd->add_option("--kind", flags.kind, "attack")
        ->check(CLI::IsMember({"clone", "anticlone", "bma", "optimal"}));
    cmd->add_flag("--json", flags.json, "emit one key-sorted JSON object");
}

AttackKind kind_of(const ChannelFlags &flags) {
    // The option validator has already restricted the spelling.
    return parse_attack_kind(flags.kind).value();
}

void write_file(const std::string &path, const std::string &content, std::ostream &out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << content;
    file.close();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::string read_file(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

void print_rows(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &rows) {
    size_t width = 0;
    for (const auto &[key, value] : rows) {
        width = std::max(width, key.size());
    }
    for (const auto &[key, value] : rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
    }
}

int cmd_attack(const ChannelFlags &flags, std::ostream &out, std::ostream &err) {
    ChannelParams channel(flags.eta, flags.delta, flags.v_a);
    AttackKind kind = kind_of(flags);
    AttackReport report = attack_report(kind, channel, VarianceConvention::ShotNoiseUnits);
    if (report.theta_discrepancy) {
        err << "warning: closed-form theta_opt does not reach the minimum; using the numerical minimizer\n";
    }
    if (flags.json) {
        nlohmann::json j;
        j["kind"] = attack_name(kind);
        j["eta"] = channel.eta();
        j["delta"] = channel.delta();
        j["v_a"] = channel.v_a();
        j["theta"] = report.theta;
        j["v_ba_snu"] = report.v_ba;
        j["v_be_x_snu"] = report.v_be_x;
        j["v_be_p_snu"] = report.v_be_p;
        j["threshold_eta"] = report.threshold_eta.eta;
        j["secure"] = report.secure;
        out << j.dump() << '\n';
        return kOk;
    }
    std::string threshold = format_double(report.threshold_eta.eta);
    if (report.threshold_eta.unreachable) {
        threshold += " (unreachable)";
    }
    print_rows(out, {
                        {"attack", std::string(attack_name(kind))},
                        {"eta", format_double(channel.eta())},
                        {"delta", format_double(channel.delta())},
                        {"v_a", format_double(channel.v_a())},
                        {"theta [rad]", format_double(report.theta)},
                        {"V(B|A) [SNU]", format_double(report.v_ba)},
                        {"V(x_B|x_E) [SNU]", format_double(report.v_be_x)},
                        {"V(p_B|p_E) [SNU]", format_double(report.v_be_p)},
                        {"threshold eta", threshold},
                        {"secure", report.secure ? "yes" : "no"},
                    });
    return kOk;
}

int cmd_thresholds(const SweepFlags &sweep, std::ostream &out) {
    if (!(sweep.v_a > 0) || !std::isfinite(sweep.v_a)) {
        throw DomainError("modulation variance must satisfy v_a > 0");
    }
    if (!(sweep.delta_min >= 0) || !(sweep.delta_min < sweep.delta_max) || !std::isfinite(sweep.delta_max)) {
        throw DomainError("sweep requires 0 <= delta-min < delta-max");
    }
    if (sweep.steps < 2) {
        throw DomainError("sweep requires steps >= 2");
    }
    std::vector<double> grid(static_cast<size_t>(sweep.steps));
    double span = sweep.delta_max - sweep.delta_min;
    for (int i = 0; i < sweep.steps; i++) {
        grid[static_cast<size_t>(i)] =
            i == sweep.steps - 1 ? sweep.delta_max
                                 : sweep.delta_min + span * (static_cast<double>(i) / (sweep.steps - 1));
    }
    write_file(sweep.out, write_threshold_csv(threshold_curve(sweep.v_a, grid)), out);
    return kOk;
}

int cmd_montecarlo(const ChannelFlags &flags, const MonteCarloFlags &mc, std::ostream &out) {
    ChannelParams channel(flags.eta, flags.delta, flags.v_a);
    AttackKind kind = kind_of(flags);
    SimConfig config(channel, kind, mc.samples, mc.seed);
    EmpiricalReport emp = run_simulation(config, mc.workers);
    AttackReport analytic = attack_report(kind, channel, VarianceConvention::ShotNoiseUnits);

    struct Row {
        const char *name;
        double empirical;
        double se;
        double analytic;
    };
    const Row rows[] = {
        {"v_ba_x", to_shot_noise_units(emp.v_ba_x_hat), to_shot_noise_units(emp.se_ba_x), analytic.v_ba},
        {"v_ba_p", to_shot_noise_units(emp.v_ba_p_hat), to_shot_noise_units(emp.se_ba_p), analytic.v_ba},
        {"v_be_x", to_shot_noise_units(emp.v_be_x_hat), to_shot_noise_units(emp.se_be_x), analytic.v_be_x},
        {"v_be_p", to_shot_noise_units(emp.v_be_p_hat), to_shot_noise_units(emp.se_be_p), analytic.v_be_p},
    };

    if (flags.json) {
        nlohmann::json j;
        j["kind"] = attack_name(kind);
        j["eta"] = channel.eta();
        j["delta"] = channel.delta();
        j["v_a"] = channel.v_a();
        j["samples"] = mc.samples;
        j["seed"] = mc.seed;
        j["rounds_x"] = emp.rounds_x;
        j["rounds_p"] = emp.rounds_p;
        for (const Row &r : rows) {
            j["rows"][r.name] = {{"empirical_snu", r.empirical},
                                 {"analytic_snu", r.analytic},
                                 {"se_snu", r.se},
                                 {"z", (r.empirical - r.analytic) / r.se}};
        }
        out << j.dump() << '\n';
        return kOk;
    }
    out << "attack " << attack_name(kind) << "  eta=" << format_double(channel.eta())
        << "  delta=" << format_double(channel.delta()) << "  v_a=" << format_double(channel.v_a())
        << "  samples=" << mc.samples << "  seed=" << mc.seed << '\n';
    out << "rounds: x=" << emp.rounds_x << " p=" << emp.rounds_p << "  (variances in shot-noise units)\n";
    out << std::left << std::setw(10) << "quantity" << std::setw(24) << "empirical" << std::setw(24) << "analytic"
        << std::setw(24) << "std.err" << "z\n";
    for (const Row &r : rows) {
        double z = (r.empirical - r.analytic) / r.se;
        std::ostringstream zs;
        zs << std::fixed << std::setprecision(3) << z;
        out << std::left << std::setw(10) << r.name << std::setw(24) << format_double(r.empirical) << std::setw(24)
            << format_double(r.analytic) << std::setw(24) << format_double(r.se) << zs.str() << '\n';
    }
    return kOk;
}

int cmd_plot(const PlotFlags &flags, std::ostream &out) {
    ThresholdCurve curve = parse_threshold_csv(read_file(flags.in));
    write_file(flags.out, render_threshold_svg(curve), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Attack variances and security thresholds for coherent-state CV-QKD",
                 "cvqkd"};
    app.require_subcommand(1);

    ChannelFlags attack_flags;
    CLI::App *attack = app.add_subcommand("attack", "evaluate one attack on one channel");
    add_channel_flags(attack, attack_flags);

    SweepFlags sweep;
    CLI::App *thresholds = app.add_subcommand("thresholds", "sweep excess noise and write the threshold CSV");
    thresholds->add_option("--va", sweep.v_a, "modulation variance V_A > 0")->capture_default_str();
    thresholds->add_option("--delta-min", sweep.delta_min, "first excess noise value")->capture_default_str();
    thresholds->add_option("--delta-max", sweep.delta_max, "last excess noise value")->capture_default_str();
    thresholds->add_option("--steps", sweep.steps, "number of rows, >= 2")->capture_default_str();
    thresholds->add_option("--out", sweep.out, "output CSV path, '-' for stdout")->capture_default_str();

    ChannelFlags mc_channel;
    MonteCarloFlags mc;
    CLI::App *montecarlo = app.add_subcommand("montecarlo", "sample protocol rounds and compare with closed forms");
    add_channel_flags(montecarlo, mc_channel);
    montecarlo->add_option("--samples", mc.samples, "protocol rounds, >= 1000")->capture_default_str();
    montecarlo->add_option("--seed", mc.seed, "64-bit seed")->capture_default_str();
    montecarlo->add_option("--workers", mc.workers, "threads, 0 = hardware concurrency")->capture_default_str();

    PlotFlags plot_flags;
    CLI::App *plot = app.add_subcommand("plot", "render a threshold CSV as SVG");
    plot->add_option("--in", plot_flags.in, "threshold CSV")->required();
    plot->add_option("--out", plot_flags.out, "output SVG path, '-' for stdout")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*attack) {
            return cmd_attack(attack_flags, out, err);
        }
        if (*thresholds) {
            return cmd_thresholds(sweep, out);
        }
        if (*montecarlo) {
            return cmd_montecarlo(mc_channel, mc, out);
        }
        if (*plot) {
            return cmd_plot(plot_flags, out);
        }
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const MalformedInput &e) {
        err << "malformed input: " << e.what() << '\n';
        return kMalformedInput;
    }
    return kUsage;
}

}  // namespace cvqkd::cli
