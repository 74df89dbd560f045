#include "polyrad/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "polyrad/error.hpp"
#include "polyrad/serialization.hpp"

namespace polyrad::cli {

namespace {

class IoError : public Error {
public:
    using Error::Error;
};

struct Source {
    std::string path;
    std::string inline_json;

    void attach(CLI::App* cmd) {
        auto* in = cmd->add_option("-i,--input", path, "JSON input file");
        auto* js = cmd->add_option("--json", inline_json, "JSON input given inline");
        in->excludes(js);
        js->excludes(in);
    }

    Json load() const {
        if (path.empty() && inline_json.empty()) throw IoError("one of --input or --json is required");
        if (!inline_json.empty()) return parse_json(inline_json);
        std::ifstream file(path);
        if (!file) throw IoError("cannot read " + path);
        std::ostringstream text;
        text << file.rdbuf();
        return parse_json(text.str());
    }
};

struct WosFlags {
    WosParams params;

    void attach(CLI::App* cmd) {
        cmd->add_option("--walks", params.walks, "walk-on-spheres walks")->check(CLI::PositiveNumber);
        cmd->add_option("--eps", params.epsilon_shell, "absorption shell width")->check(CLI::Range(1e-12, 0.5));
        cmd->add_option("--max-steps", params.max_steps, "steps before a walk is truncated")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", params.seed, "random seed")->capture_default_str();
        cmd->add_option("--threads", params.threads, "worker threads")->check(CLI::PositiveNumber);
    }
};

std::string plain_lines(const Json& j) {
    std::string out;
    for (const auto& [key, value] : j.items()) {
        if (value.is_structured()) continue;
        out += key + ": ";
        if (value.is_string()) out += value.get<std::string>();
        else if (value.is_number_float()) out += format_double(value.get<double>());
        else out += value.dump();
        out += '\n';
    }
    return out;
}

std::string render(const Json& j, const std::string& format) {
    if (format == "plain") return plain_lines(j);
    return j.dump(2) + "\n";
}

// Each subcommand computes its output text and exit status.
struct Outcome {
    std::string text;
    int status = kExitOk;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Inner radii, ray-system functionals and the J_m(gamma) bound"};
    app.require_subcommand(1, 1);
    std::string output_path;
    std::string format;
    std::function<Outcome()> action;

    std::map<std::string, std::string> default_format;
    const auto formats = [&](CLI::App* cmd, std::vector<std::string> allowed) {
        default_format[cmd->get_name()] = allowed.front();
        cmd->add_option("--format", format, "output format (default " + allowed.front() + ")")
            ->check(CLI::IsMember(std::move(allowed)));
    };
    const auto output = [&output_path](CLI::App* cmd) {
        cmd->add_option("-o,--output", output_path, "write the result here instead of stdout");
    };

    // bound
    int bound_m = 0;
    double bound_gamma = 0.0;
    bool bound_lax = false;
    auto* bound = app.add_subcommand("bound", "evaluate the extremal bound for J_m(gamma)");
    bound->add_option("--m", bound_m, "number of ray points")->required()->check(CLI::PositiveNumber);
    bound->add_option("--gamma", bound_gamma, "weight of the origin radius")->required();
    bound->add_flag("--lax", bound_lax, "evaluate outside m >= 5, 0 < gamma <= m^(1/3)");
    formats(bound, {"plain", "json"});
    output(bound);
    bound->callback([&] {
        action = [&] {
            const BoundValue b = theorem_bound({bound_m, bound_gamma}, bound_lax ? HypothesisMode::lax
                                                                                 : HypothesisMode::strict);
            Json j{{"m", bound_m}, {"gamma", bound_gamma}};
            j.update(bound_to_json(b));
            return Outcome{render(j, format)};
        };
    });

    // radius
    Source radius_src;
    std::string radius_method = "analytic";
    WosFlags radius_wos;
    auto* radius = app.add_subcommand("radius", "inner radius of a domain at a point");
    radius_src.attach(radius);
    radius->add_option("--method", radius_method, "analytic or wos")->check(CLI::IsMember({"analytic", "wos"}));
    radius_wos.attach(radius);
    formats(radius, {"plain", "json"});
    output(radius);
    radius->callback([&] {
        action = [&] {
            const Json in = radius_src.load();
            if (!in.is_object() || !in.contains("domain") || !in.contains("point"))
                throw ParseError("radius input needs \"domain\" and \"point\"");
            const PlanarDomain domain = domain_from_json(in["domain"]);
            const ComplexPoint point = point_from_json(in["point"]);
            Json j{{"shape", std::string(domain.kind())}, {"point", point_to_json(point)}};
            if (radius_method == "analytic") {
                j.update(radius_to_json(inner_radius_analytic(domain, point)));
            } else {
                const WosEstimate e = wos_inner_radius(domain, point, radius_wos.params);
                j.update(radius_to_json(to_radius_value(e)));
                j.update(wos_estimate_to_json(e));
                j["seed"] = radius_wos.params.seed;
            }
            return Outcome{render(j, format)};
        };
    });

    // lgamma
    Source lgamma_src;
    double lgamma_gamma = 0.0;
    auto* lgamma = app.add_subcommand("lgamma", "L^(gamma) of a ray system or of each column of a poly ray system");
    lgamma_src.attach(lgamma);
    lgamma->add_option("--gamma", lgamma_gamma, "exponent weight")->required()->check(CLI::NonNegativeNumber);
    formats(lgamma, {"plain", "json"});
    output(lgamma);
    lgamma->callback([&] {
        action = [&] {
            const Json in = lgamma_src.load();
            Json j{{"gamma", lgamma_gamma}};
            if (in.is_object() && in.contains("columns")) {
                const PolyRaySystem ps = poly_ray_system_from_json(in);
                j["m"] = ps.m();
                j["n"] = ps.n();
                j["l_gamma"] = l_gamma_vector(ps, lgamma_gamma);
                if (format == "plain") {
                    std::string text = plain_lines(j);
                    for (std::size_t p = 0; p < ps.n(); ++p)
                        text += "l_gamma[" + std::to_string(p + 1) + "]: " + format_double(j["l_gamma"][p]) + "\n";
                    return Outcome{text};
                }
            } else {
                const RaySystem s = ray_system_from_json(in);
                const AlphaVector alpha = alpha_vector(s);
                j["m"] = s.size();
                j["l_gamma"] = l_gamma(s, lgamma_gamma);
                j["log_l_gamma"] = log_l_gamma(s, lgamma_gamma);
                j["alpha"] = alpha.values;
            }
            return Outcome{render(j, format)};
        };
    });

    // verify
    Source verify_src;
    bool verify_lax = false;
    auto* verify = app.add_subcommand("verify", "check the J_m(gamma) inequality on a configuration");
    verify_src.attach(verify);
    verify->add_flag("--lax,--exploratory", verify_lax, "waive the hypotheses and tag the report");
    formats(verify, {"plain", "json"});
    output(verify);
    verify->callback([&] {
        action = [&] {
            const PolyConfiguration c = configuration_from_json(verify_src.load());
            const VerificationReport r =
                verify_theorem(c, verify_lax ? HypothesisMode::lax : HypothesisMode::strict);
            return Outcome{render(report_to_json(r), format), r.holds ? kExitOk : kExitFailure};
        };
    });

    // sweep
    std::size_t sweep_m = 5;
    std::size_t sweep_n = 1;
    double sweep_gamma = 1.0;
    std::size_t sweep_trials = 100;
    std::string sweep_method = "analytic";
    bool sweep_lax = false;
    WosFlags sweep_wos;
    sweep_wos.params.walks = 10000;
    auto* sweep = app.add_subcommand("sweep", "randomized verification over admissible configurations");
    sweep->add_option("--m", sweep_m, "number of ray points")->required()->check(CLI::Range(2, 1000));
    sweep->add_option("--n", sweep_n, "coordinate dimension")->check(CLI::Range(1, 1000))->capture_default_str();
    sweep->add_option("--gamma", sweep_gamma, "weight of the origin radius")->required();
    sweep->add_option("--trials", sweep_trials, "number of trials")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--method", sweep_method, "radii by analytic formulas or wos")
        ->check(CLI::IsMember({"analytic", "wos"}));
    sweep->add_flag("--lax,--exploratory", sweep_lax, "allow m and gamma outside the hypotheses");
    sweep_wos.attach(sweep);
    formats(sweep, {"csv", "json", "jsonl", "plain"});
    output(sweep);
    sweep->callback([&] {
        action = [&] {
            SweepOptions opts;
            opts.method = sweep_method == "wos" ? RadiiMethod::monte_carlo : RadiiMethod::analytic;
            opts.wos = sweep_wos.params;
            opts.mode = sweep_lax ? HypothesisMode::lax : HypothesisMode::strict;
            const SweepResult r = randomized_verification_sweep(sweep_m, sweep_n, sweep_gamma, sweep_trials,
                                                                sweep_wos.params.seed, opts);
            const int status = r.all_hold ? kExitOk : kExitFailure;
            if (format == "csv") return Outcome{sweep_csv(r), status};
            if (format == "jsonl") return Outcome{sweep_json_lines(r), status};
            Json j{{"m", sweep_m},         {"n", sweep_n},
                   {"gamma", sweep_gamma}, {"seed", sweep_wos.params.seed},
                   {"trials", r.trials.size()}, {"skipped", r.skipped},
                   {"all_hold", r.all_hold}, {"min_slack", r.min_slack},
                   {"best_ratio", r.best_ratio}};
            if (format == "json") {
                Json reports = Json::array();
                for (const TrialReport& t : r.trials) {
                    Json line{{"trial", t.trial}};
                    line.update(report_to_json(t.report));
                    reports.push_back(std::move(line));
                }
                j["reports"] = std::move(reports);
            }
            return Outcome{render(j, format), status};
        };
    });

    std::vector<const char*> argv{"polyrad"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitIo;
    }
    if (format.empty()) format = default_format.at(app.get_subcommands().front()->get_name());

    try {
        const Outcome result = action();
        if (output_path.empty()) {
            out << result.text;
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!(file << result.text)) throw IoError("cannot write " + output_path);
        }
        return result.status;
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace polyrad::cli
