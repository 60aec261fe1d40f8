#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gameprice/game_io.hpp"
#include "gameprice/kelly_solver.hpp"
#include "gameprice/oracle.hpp"
#include "gameprice/translation.hpp"
#include "report.hpp"

namespace gameprice::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20070307;

SolverOptions solver_options(const RunConfig& c) {
    SolverOptions o;
    o.tol_residual = c.tol;
    o.tol_proportion = c.tol;
    o.tol_price = c.tol;
    o.max_iter = c.max_iter;
    return o;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = std::string(to_string(c.command));
    j["game"] = c.game_path;
    j["rate"] = optional_json(c.rate);
    j["shift"] = optional_json(c.shift);
    j["shifts"] = optional_json(c.shifts);
    j["tol"] = c.tol;
    j["max_iter"] = c.max_iter;
    j["seed"] = optional_json(c.seed);
    j["format"] = c.output_format == OutputFormat::Json ? "json" : "csv";
    j["normalize"] = c.normalize;
    return j;
}

Json game_json(const Game& g) {
    Json j;
    j["label"] = g.label();
    Json outcomes = Json::array();
    for (const Outcome& o : g.outcomes()) outcomes.push_back({{"payout", o.payout}, {"prob", o.prob}});
    j["outcomes"] = std::move(outcomes);
    j["support_floor"] = optional_json(g.support_floor());
    return j;
}

Json stats_json(const GameStats& s) {
    Json j;
    j["expectation"] = s.expectation;
    j["harmonic_integral"] = s.harmonic_integral;
    j["ess_inf"] = s.ess_inf;
    j["h_xi"] = s.h_xi;  // null when infinite
    j["h_xi_infinite"] = std::isinf(s.h_xi);
    j["lower_price_bound"] = s.lower_price_bound;
    j["fair_price"] = s.fair_price;
    j["log_moment"] = s.log_moment;
    j["boundary_growth"] = boundary_growth(s);
    return j;
}

Json pricing_json(const PricingSolution& p) {
    Json j;
    j["rate"] = p.rate;
    j["optimal_price"] = p.optimal_price;
    j["regime"] = std::string(to_string(p.regime));
    j["proportion"] = p.proportion;
    j["growth_check"] = p.growth_check;
    j["iterations"] = p.iterations;
    return j;
}

Json report_json(const TranslationReport& r) {
    Json j;
    j["shift"] = r.shift;
    j["price"] = r.price;
    j["translated_price"] = r.price + r.shift;
    j["proportion_original"] = r.proportion_original;
    j["proportion_translated"] = r.proportion_translated;
    j["ratio_original"] = r.ratio_original;
    j["ratio_translated"] = r.ratio_translated;
    j["growth_original"] = r.growth_original;
    j["growth_translated"] = r.growth_translated;
    j["ratio_residual"] = r.ratio_residual;
    j["growth_residual"] = r.growth_residual;
    return j;
}

Json threshold_json(const ThresholdResult& t) {
    Json j;
    j["rate"] = t.rate;
    j["n0"] = optional_json(t.n0);
    j["residual"] = t.residual;
    j["regime_note"] = std::string(to_string(t.note));
    j["iterations"] = t.iterations;
    return j;
}

Json row_json(const AsymptoticRow& r) {
    Json j;
    j["n"] = r.shift;
    j["gap"] = r.gap;
    j["boundary_growth"] = r.boundary_growth;
    j["price_ratio"] = r.price_ratio;
    j["monotone_witness"] = r.monotone_witness;
    return j;
}

std::string sweep_csv(const std::vector<AsymptoticRow>& rows) {
    std::string out = "n,gap,boundary_growth,price_ratio,monotone_witness\r\n";
    for (const AsymptoticRow& r : rows) {
        out += format_number(r.shift) + "," + format_number(r.gap) + "," +
               format_number(r.boundary_growth) + "," + format_number(r.price_ratio) + "," +
               format_number(r.monotone_witness) + "\r\n";
    }
    return out;
}

// One verify line: {"name", "status", "value", "tolerance"}.
struct Check {
    std::string name;
    std::string status;
    double value;
    double tolerance;
};

Json verify_json(const Game& g, const RunConfig& c, bool& all_pass) {
    const SolverOptions opt = solver_options(c);
    const GameStats s = compute_stats(g);
    const std::uint64_t seed = c.seed.value_or(kDefaultSeed);
    std::vector<Check> checks;
    const auto record = [&](std::string name, double value, double tol, bool pass) {
        checks.push_back({std::move(name), pass ? "pass" : "fail", value, tol});
        all_pass = all_pass && pass;
    };
    const auto skip = [&](std::string name) {
        checks.push_back({std::move(name), "skipped", std::nan(""), std::nan("")});
    };

    constexpr int kGrid = 25;
    std::vector<double> prices;
    for (int k = 1; k < kGrid; ++k) {
        prices.push_back(s.lower_price_bound + (s.expectation - s.lower_price_bound) * k / kGrid);
    }

    double worst_residual = 0.0;
    bool decreasing = true;
    double prev_t = HUGE_VAL, prev_g = HUGE_VAL;
    for (double u : prices) {
        const ProportionSolution sol = pre_optimal_proportion(g, u, opt);
        worst_residual = std::max(worst_residual, std::abs(proportion_residual(g, u, sol.proportion)));
        decreasing = decreasing && sol.proportion < prev_t && sol.growth < prev_g;
        prev_t = sol.proportion;
        prev_g = sol.growth;
    }
    record("root_correctness", worst_residual, 1e-10, worst_residual <= 1e-10);
    record("monotonicity", decreasing ? 1.0 : 0.0, 0.0, decreasing);

    const double at_fair = std::abs(pre_optimal_proportion(g, s.fair_price, opt).proportion - 1.0);
    record("fair_price_proportion_is_one", at_fair, 1e-9, at_fair <= 1e-9);

    // Probe the interior regime at the optimal price when it is interior,
    // otherwise halfway between 1/H and E.
    double probe = 0.5 * (s.fair_price + s.expectation);
    if (c.rate) {
        const PricingSolution p = optimal_price(g, *c.rate, opt);
        const double err = std::abs(optimal_proportion(g, p.optimal_price, opt).growth -
                                    std::exp(*c.rate)) / std::exp(*c.rate);
        record("pricing_consistency", err, 1e-8, err <= 1e-8);
        if (p.regime == Regime::Interior) probe = p.optimal_price;
    } else {
        skip("pricing_consistency");
    }

    const ProportionSolution at_probe = pre_optimal_proportion(g, probe, opt);
    const GridArgmax grid = grid_argmax_growth(g, probe, 100000);
    const double grid_dist = std::abs(grid.proportion - at_probe.proportion);
    record("grid_maximality", grid_dist, grid.step, grid_dist <= grid.step * (1.0 + 1e-9));

    if (g.size() == 2 && !g.support_floor()) {
        const auto o = g.outcomes();
        const TwoPointGame tp{o[1].payout, o[0].payout, o[1].prob};
        double worst = 0.0;
        for (double u : prices) {
            const ProportionSolution sol = pre_optimal_proportion(g, u, opt);
            const ClosedForm cf = two_point_closed_form(tp, u);
            worst = std::max({worst, std::abs(sol.proportion - cf.proportion) / cf.proportion,
                              std::abs(sol.growth - cf.growth) / cf.growth});
        }
        record("two_point_closed_form", worst, 1e-9, worst <= 1e-9);
    } else {
        skip("two_point_closed_form");
    }

    const double n = c.shift.value_or(1.0);
    const TranslationReport inv = check_ratio_invariance(g, probe, n, opt);
    const double ratio_err = inv.ratio_residual / std::max(1.0, inv.ratio_original);
    const double growth_err = inv.growth_residual / inv.growth_original;
    record("ratio_invariance", ratio_err, 1e-8, ratio_err <= 1e-8);
    record("growth_invariance", growth_err, 1e-8, growth_err <= 1e-8);

    const SimulationResult sim = simulate_wealth(g, probe, at_probe.proportion, 1000, 100, seed);
    const double z = std::abs(sim.mean_log_growth - std::log(at_probe.growth));
    record("monte_carlo_log_growth", z, 3.0 * sim.std_error, z <= 3.0 * sim.std_error);

    Json j;
    j["probe_price"] = probe;
    j["shift"] = n;
    j["seed"] = seed;
    Json list = Json::array();
    for (const Check& ch : checks) {
        list.push_back({{"name", ch.name}, {"status", ch.status}, {"value", ch.value},
                        {"tolerance", ch.tolerance}});
    }
    j["checks"] = std::move(list);
    j["all_pass"] = all_pass;
    return j;
}

}  // namespace

std::string_view to_string(Command command) {
    switch (command) {
        case Command::Analyze: return "analyze";
        case Command::Price: return "price";
        case Command::Translate: return "translate";
        case Command::Threshold: return "threshold";
        case Command::Sweep: return "sweep";
        case Command::Verify: return "verify";
    }
    return "unknown";
}

void check_config(const RunConfig& c) {
    const std::string cmd(to_string(c.command));
    if (c.game_path.empty()) throw ConfigError(cmd + " needs --game PATH");
    const bool needs_rate = c.command == Command::Price || c.command == Command::Translate ||
                            c.command == Command::Threshold || c.command == Command::Sweep;
    if (needs_rate && !c.rate) throw ConfigError(cmd + " needs --rate");
    if (c.command == Command::Translate && !c.shift) throw ConfigError(cmd + " needs --shift");
    if (c.command == Command::Sweep && (!c.shifts || c.shifts->empty())) {
        throw ConfigError(cmd + " needs --shifts n1,n2,...");
    }
    if (c.output_format == OutputFormat::Csv && c.command != Command::Sweep) {
        throw ConfigError("--format csv is only available for sweep");
    }
    if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive, got " + format_number(c.tol));
    if (c.max_iter <= 0) throw ConfigError("--max-iter must be positive, got " + std::to_string(c.max_iter));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        check_config(config);
        const Game game = load_spec_file(config.game_path, {.normalize = config.normalize});
        const SolverOptions opt = solver_options(config);

        Json doc;
        doc["command"] = std::string(to_string(config.command));
        doc["config"] = config_json(config);
        doc["game"] = game_json(game);
        int code = kSuccess;

        switch (config.command) {
            case Command::Analyze:
                doc["result"] = stats_json(compute_stats(game));
                break;
            case Command::Price:
                doc["result"] = pricing_json(optimal_price(game, *config.rate, opt));
                break;
            case Command::Translate: {
                const double r = *config.rate, n = *config.shift;
                const PricingSolution base = optimal_price(game, r, opt);
                const PricingSolution moved = price_translated(game, r, n, opt);
                const GameStats st = compute_stats(translate(game, n));
                Json res;
                res["pricing"] = pricing_json(moved);
                res["base_pricing"] = pricing_json(base);
                res["price_difference"] = moved.optimal_price - base.optimal_price;
                res["translated_expectation"] = st.expectation;
                res["expectation_over_growth"] = st.expectation / std::exp(r);
                const GameStats s = compute_stats(game);
                if (base.optimal_price > s.lower_price_bound && base.optimal_price < s.expectation) {
                    res["invariance"] = report_json(check_ratio_invariance(game, base.optimal_price, n, opt));
                } else {
                    res["invariance"] = nullptr;
                }
                doc["result"] = std::move(res);
                break;
            }
            case Command::Threshold:
                doc["result"] = threshold_json(threshold_shift(game, *config.rate, opt));
                break;
            case Command::Sweep: {
                const auto rows = asymptotic_sweep(game, *config.rate, *config.shifts, opt);
                if (config.output_format == OutputFormat::Csv) {
                    out << sweep_csv(rows);
                    return kSuccess;
                }
                Json list = Json::array();
                for (const auto& r : rows) list.push_back(row_json(r));
                doc["result"] = std::move(list);
                break;
            }
            case Command::Verify: {
                bool all_pass = true;
                doc["result"] = verify_json(game, config, all_pass);
                if (!all_pass) code = kConsistencyError;
                break;
            }
        }
        out << render_json(doc);
        return code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return kConsistencyError;
    }
}

int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Growth-optimal pricing of stochastic payoff games"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string format = "json";
    double rate = 0.0, shift = 0.0;
    std::vector<double> shifts;
    std::uint64_t seed = 0;

    app.add_option("--game", config.game_path, "Game spec JSON file");
    auto* rate_opt = app.add_option("--rate", rate, "Riskless continuously compounded rate per period");
    auto* shift_opt = app.add_option("--shift", shift, "Parallel translation n of the payouts");
    auto* shifts_opt = app.add_option("--shifts", shifts, "Comma-separated increasing shifts")
                           ->delimiter(',');
    app.add_option("--tol", config.tol, "Solver tolerance")->capture_default_str();
    app.add_option("--max-iter", config.max_iter, "Bisection iteration cap")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed for verify");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--normalize", config.normalize, "Rescale weights to sum to one");

    const std::pair<const char*, Command> commands[] = {
        {"analyze", Command::Analyze},     {"price", Command::Price},
        {"translate", Command::Translate}, {"threshold", Command::Threshold},
        {"sweep", Command::Sweep},         {"verify", Command::Verify},
    };
    const char* descriptions[] = {
        "Game statistics (E, H, xi, H_xi, fair price)",
        "Optimal price at --rate",
        "Optimal price of the game translated by --shift, with invariance report",
        "Shift at which pricing switches to full investment",
        "Asymptotic table over --shifts",
        "Oracle cross-checks; prints pass/fail per property",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        const Command cmd = commands[i].second;
        app.add_subcommand(commands[i].first, descriptions[i])->callback([&config, cmd] {
            config.command = cmd;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }

    if (rate_opt->count()) config.rate = rate;
    if (shift_opt->count()) config.shift = shift;
    if (shifts_opt->count()) config.shifts = shifts;
    if (seed_opt->count()) config.seed = seed;
    config.output_format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    return run(config, out, err);
}

}  // namespace gameprice::cli
