// command-line front end: verification suites, beta sweeps, norm queries,
// instance generation
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratineq/errors.hpp"
#include "ratineq/serialize.hpp"
#include "ratineq/suites.hpp"

namespace {

using ratineq::cplx;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct CommonOpts {
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
    double tol_slack = -1.0;
    double tol_identity = -1.0;
    int grid = 128;
    int instances = 50;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "base RNG seed");
    cmd->add_option("--format", o.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--tol-slack", o.tol_slack, "override the inequality slack tolerance");
    cmd->add_option("--tol-identity", o.tol_identity,
                    "override the identity residual tolerances");
    cmd->add_option("--grid", o.grid, "circle grid size per instance");
    cmd->add_option("--instances", o.instances, "instance count per configuration");
}

ratineq::Tolerances resolve_tol(const CommonOpts& o) {
    ratineq::Tolerances tol;
    if (o.tol_slack >= 0.0) tol.slack_rel = o.tol_slack;
    if (o.tol_identity >= 0.0) {
        tol.identity_abs = o.tol_identity;
        tol.identity_rel = o.tol_identity;
        tol.unimod_abs = o.tol_identity;
        tol.lemma4_abs = o.tol_identity;
    }
    return tol;
}

double parse_number(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad numeric value: " + s);
    return v;
}

/// "re,im", "mod@deg", or a plain real number.
cplx parse_complex(const std::string& s) {
    if (const auto at = s.find('@'); at != std::string::npos) {
        const double mod = parse_number(s.substr(0, at));
        const double deg = parse_number(s.substr(at + 1));
        return std::polar(mod, deg * 3.14159265358979323846 / 180.0);
    }
    if (const auto comma = s.find(','); comma != std::string::npos)
        return {parse_number(s.substr(0, comma)), parse_number(s.substr(comma + 1))};
    return {parse_number(s), 0.0};
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return kExitConfig;
    }
    f << text;
    f.flush();
    if (!f.good()) {
        std::cerr << "error: write failed: " << path << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json j;
    f >> j;
    return j;
}

/// Accepts either a gen-style file {"instances": [{"k":..., "fn":...}]} or a
/// single serialized rational function (k defaults to 1).
std::vector<ratineq::SuiteInstance> load_instances(const std::string& path) {
    const nlohmann::json j = load_json(path);
    std::vector<ratineq::SuiteInstance> out;
    if (j.is_object() && j.contains("instances")) {
        for (const auto& e : j["instances"]) {
            if (!e.is_object() || !e.contains("fn"))
                throw std::invalid_argument("instance entries need a fn object");
            const double k = e.contains("k") ? e["k"].get<double>() : 1.0;
            out.push_back({ratineq::rational_from_json(e["fn"]), k, false});
        }
        return out;
    }
    out.push_back({ratineq::rational_from_json(j), 1.0, false});
    return out;
}

int cmd_verify(const CommonOpts& common, const std::string& suite,
               const std::vector<std::string>& beta_strs, const std::vector<double>& ks,
               const std::vector<int>& ns, const std::vector<double>& as,
               const std::string& in_path) {
    ratineq::VerifyConfig cfg;
    cfg.suite = suite;
    cfg.instances = common.instances;
    cfg.grid = common.grid;
    cfg.seed = common.seed;
    cfg.tol = resolve_tol(common);
    if (!ks.empty()) {
        cfg.k_values = ks;
        cfg.sharp_k = ks;
    }
    if (!ns.empty()) cfg.sharp_n = ns;
    if (!as.empty()) cfg.sharp_a = as;
    for (const auto& s : beta_strs) cfg.betas.push_back(parse_complex(s));

    std::optional<std::vector<ratineq::SuiteInstance>> file_instances;
    if (!in_path.empty()) file_instances = load_instances(in_path);

    const ratineq::SuiteReport rep =
        ratineq::run_verify(cfg, file_instances ? &*file_instances : nullptr);

    const std::string text = common.format == "csv"
                                 ? ratineq::reports_csv(rep.reports)
                                 : ratineq::to_json(rep).dump(2) + "\n";
    const int wr = write_output(text, common.out);
    if (wr != kExitOk) return wr;
    return rep.counts.fail > 0 ? kExitViolation : kExitOk;
}

int cmd_sweep_beta(const CommonOpts& common, const std::vector<double>& ks,
                   const std::vector<int>& ns, const std::vector<double>& as,
                   bool extremal, int moduli, int phases) {
    ratineq::SweepConfig cfg;
    cfg.beta_moduli = moduli;
    cfg.beta_phases = phases;
    if (!ks.empty()) cfg.k_values = ks;
    cfg.instances = common.instances;
    cfg.grid = common.grid;
    cfg.seed = common.seed;
    cfg.tol = resolve_tol(common);
    cfg.extremal = extremal;
    if (!ns.empty()) cfg.extremal_n = ns;
    if (!as.empty()) cfg.extremal_a = as;

    const std::vector<ratineq::SweepRow> rows = ratineq::sweep_beta(cfg);

    std::string text;
    if (common.format == "csv") {
        text = ratineq::sweep_csv(rows);
    } else {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& row : rows) {
            jrows.push_back({{"k", row.k},
                             {"beta_mod", row.beta_mod},
                             {"beta_arg", row.beta_arg},
                             {"check_id", row.check_id},
                             {"min_slack", row.min_slack},
                             {"points", row.points}});
        }
        nlohmann::json j{{"rows", std::move(jrows)},
                         {"seed", cfg.seed},
                         {"grid_size", cfg.grid},
                         {"beta_moduli", cfg.beta_moduli},
                         {"beta_phases", cfg.beta_phases},
                         {"extremal", cfg.extremal}};
        text = j.dump(2) + "\n";
    }
    return write_output(text, common.out);
}

int cmd_norm(const CommonOpts& common, const std::string& in_path, int samples) {
    ratineq::NormConfig cfg;
    if (samples > 0) cfg.coarse_samples = samples;
    cfg.validate();

    const nlohmann::json input = load_json(in_path);
    auto estimate_pair = [&](const ratineq::RationalFn& fn) {
        nlohmann::json j;
        j["r"] = ratineq::to_json(ratineq::sup_norm_circle(fn, cfg));
        j["numerator"] = ratineq::to_json(ratineq::sup_norm_circle(fn.numerator(), cfg));
        return j;
    };

    nlohmann::json out;
    std::vector<ratineq::SuiteInstance> instances;
    if (input.is_object() && input.contains("instances")) {
        instances = load_instances(in_path);
        nlohmann::json results = nlohmann::json::array();
        for (const auto& inst : instances) results.push_back(estimate_pair(inst.fn));
        out = nlohmann::json{{"results", std::move(results)}};
    } else {
        out = estimate_pair(ratineq::rational_from_json(input));
    }

    std::string text;
    if (common.format == "csv") {
        auto fmt = [](double v) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            return std::string(buf);
        };
        text = "index,target,value,argmax_theta,samples_used,refined\n";
        int idx = 0;
        auto add_row = [&](const nlohmann::json& pair) {
            for (const char* target : {"r", "numerator"}) {
                const auto& e = pair[target];
                text += std::to_string(idx) + "," + target + "," +
                        fmt(e["value"].get<double>()) + "," +
                        fmt(e["argmax_theta"].get<double>()) + "," +
                        std::to_string(e["samples_used"].get<long>()) + "," +
                        (e["refined"].get<bool>() ? "1" : "0") + "\n";
            }
        };
        if (out.contains("results")) {
            for (const auto& pair : out["results"]) {
                add_row(pair);
                ++idx;
            }
        } else {
            add_row(out);
        }
    } else {
        text = out.dump(2) + "\n";
    }
    return write_output(text, common.out);
}

int cmd_gen(const CommonOpts& common, int n, double k, double zero_width,
            double pole_margin, double pole_width, double boundary_prob,
            bool force_boundary) {
    if (common.format == "csv") {
        std::cerr << "error: gen emits instance JSON only\n";
        return kExitConfig;
    }
    ratineq::InstanceSpec base;
    base.n = n;
    base.k = k;
    base.zero_width = zero_width;
    base.pole_margin = pole_margin;
    base.pole_width = pole_width;
    base.boundary_prob = boundary_prob;
    base.force_boundary = force_boundary;
    base.validate();

    nlohmann::json instances = nlohmann::json::array();
    for (int i = 0; i < common.instances; ++i) {
        ratineq::InstanceSpec spec = base;
        spec.seed = ratineq::split_seed(common.seed, static_cast<std::uint64_t>(i));
        nlohmann::json entry;
        entry["k"] = spec.k;
        entry["fn"] = ratineq::to_json(ratineq::gen_instance(spec));
        entry["spec"] = ratineq::to_json(spec);
        instances.push_back(std::move(entry));
    }
    const nlohmann::json j{{"instances", std::move(instances)}, {"seed", common.seed}};
    return write_output(j.dump(2) + "\n", common.out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational-function inequality toolkit"};
    app.require_subcommand(1);

    CommonOpts vo, so, no, go;
    std::string suite = "all";
    std::vector<std::string> beta_strs;
    std::vector<double> verify_k, verify_a, sweep_k, sweep_a;
    std::vector<int> verify_n, sweep_n;
    std::string verify_in, norm_in;
    bool sweep_extremal = false;
    int sweep_moduli = 8, sweep_phases = 16;
    int norm_samples = 0;
    int gen_n = 4;
    double gen_k = 1.0, gen_zero_width = 1.0, gen_pole_margin = 0.5, gen_pole_width = 1.0,
           gen_boundary_prob = 0.0;
    bool gen_force_boundary = false;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, vo);
    verify->add_option("--suite", suite,
                       "identities|rational|polynomial|lemmas|sharpness|all");
    verify->add_option("--beta", beta_strs,
                       "beta values, each re,im or mod@deg (repeatable)");
    verify->add_option("--k", verify_k, "k radii")->delimiter(',');
    verify->add_option("--n", verify_n, "extremal family orders")->delimiter(',');
    verify->add_option("--a", verify_a, "extremal family poles")->delimiter(',');
    verify->add_option("--in", verify_in, "run over instances from this file");

    CLI::App* sweep = app.add_subcommand("sweep-beta", "min slack over a polar beta grid");
    add_common(sweep, so);
    sweep->add_option("--k", sweep_k, "k radii")->delimiter(',');
    sweep->add_option("--n", sweep_n, "extremal family orders")->delimiter(',');
    sweep->add_option("--a", sweep_a, "extremal family poles")->delimiter(',');
    sweep->add_flag("--extremal", sweep_extremal, "sweep the extremal family");
    sweep->add_option("--beta-moduli", sweep_moduli, "modulus grid size");
    sweep->add_option("--beta-phases", sweep_phases, "phase grid size");

    CLI::App* norm = app.add_subcommand("norm", "sup norm of r and its numerator");
    add_common(norm, no);
    norm->add_option("--in", norm_in, "instance file")->required();
    norm->add_option("--samples", norm_samples, "coarse grid sample count");

    CLI::App* gen = app.add_subcommand("gen", "write deterministic instances");
    add_common(gen, go);
    gen->add_option("--n", gen_n, "numerator/pole order");
    gen->add_option("--k", gen_k, "zero radius");
    gen->add_option("--zero-width", gen_zero_width, "zero modulus band width");
    gen->add_option("--pole-margin", gen_pole_margin, "pole distance from the unit circle");
    gen->add_option("--pole-width", gen_pole_width, "pole modulus band width");
    gen->add_option("--boundary-prob", gen_boundary_prob, "chance of a boundary zero");
    gen->add_flag("--force-boundary", gen_force_boundary, "place every zero on |z| = k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (app.got_subcommand(verify))
            return cmd_verify(vo, suite, beta_strs, verify_k, verify_n, verify_a, verify_in);
        if (app.got_subcommand(sweep))
            return cmd_sweep_beta(so, sweep_k, sweep_n, sweep_a, sweep_extremal,
                                  sweep_moduli, sweep_phases);
        if (app.got_subcommand(norm)) return cmd_norm(no, norm_in, norm_samples);
        if (app.got_subcommand(gen))
            return cmd_gen(go, gen_n, gen_k, gen_zero_width, gen_pole_margin,
                           gen_pole_width, gen_boundary_prob, gen_force_boundary);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
