#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twomeans/im_core.hpp"
#include "twomeans/intervals.hpp"
#include "twomeans/mc_validate.hpp"
#include "twomeans/specfun.hpp"

namespace {

using nlohmann::json;

// all CSV numbers carry 12 significant digits
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Sweep {
    double start;
    double stop;
    long steps;
    double at(long i) const {
        return start + static_cast<double>(i) * (stop - start) / static_cast<double>(steps - 1);
    }
};

// "var:start:stop:steps" with the variable name fixed per subcommand
Sweep parse_sweep(const std::string& text, const std::string& expected_var) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t colon = text.find(':', begin);
        parts.push_back(text.substr(begin, colon - begin));
        if (colon == std::string::npos) break;
        begin = colon + 1;
    }
    if (parts.size() != 4)
        throw std::runtime_error("--sweep expects var:start:stop:steps, got '" + text + "'");
    if (parts[0] != expected_var)
        throw std::runtime_error("--sweep variable must be '" + expected_var + "' here");
    Sweep sweep{};
    std::size_t used = 0;
    try {
        sweep.start = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        sweep.stop = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        sweep.steps = std::stol(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("--sweep has a malformed number in '" + text + "'");
    }
    if (!(sweep.start < sweep.stop))
        throw std::runtime_error("--sweep requires start < stop");
    if (sweep.steps < 2) throw std::runtime_error("--sweep requires steps >= 2");
    return sweep;
}

// stdout unless --out was given
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

twomeans::Method parse_method(const std::string& name) {
    if (name == "standard") return twomeans::Method::standard;
    if (name == "partial") return twomeans::Method::partial_c1;
    return twomeans::Method::regularized_c2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Valid marginal inference for the two-normal-means problem "
                 "under |theta1 - theta2| <= B"};
    app.require_subcommand(1);
    int exit_code = 0;

    const std::vector<std::string> methods{"standard", "partial", "regularized"};

    // ---- contour ----------------------------------------------------------
    double c_y1 = 0.0, c_y2 = 0.0, c_alpha = 0.05, c_B = 0.0, c_lambda = 0.0;
    std::string c_method, c_sweep, c_out;
    auto* contour = app.add_subcommand(
        "contour", "Sweep a marginal possibility contour over theta2 (CSV)");
    contour->add_option("--y1", c_y1, "first observation")->required();
    contour->add_option("--y2", c_y2, "second observation")->required();
    contour->add_option("--alpha", c_alpha, "accepted for flag symmetry; unused");
    contour->add_option("--B", c_B, "constraint radius")->default_val(0.0);
    contour->add_option("--lambda", c_lambda, "penalty weight")->default_val(0.0);
    contour->add_option("--method", c_method, "standard|partial|regularized")
        ->required()
        ->check(CLI::IsMember(methods));
    contour->add_option("--sweep", c_sweep, "theta2:start:stop:steps")->required();
    contour->add_option("--out", c_out, "write CSV here instead of stdout");
    contour->callback([&] {
        const Sweep sweep = parse_sweep(c_sweep, "theta2");
        const twomeans::Observation y(c_y1, c_y2);
        Output out(c_out);
        out.stream() << "theta2,method,lambda,B,possibility\n";
        for (long i = 0; i < sweep.steps; ++i) {
            const double theta2 = sweep.at(i);
            double value;
            if (c_method == "standard") {
                value = twomeans::contour_standard(c_y2, theta2);
            } else if (c_method == "partial") {
                value = twomeans::contour_marginal_t1(y, theta2, c_lambda, c_B);
            } else {
                value = twomeans::contour_marginal_t2(y, theta2, c_lambda, c_B);
            }
            out.stream() << fmt(theta2) << ',' << c_method << ',' << fmt(c_lambda)
                         << ',' << fmt(c_B) << ',' << fmt(value) << '\n';
        }
    });

    // ---- ci ----------------------------------------------------------------
    double i_y1 = 0.0, i_y2 = 0.0, i_alpha = 0.0, i_B = 0.0, i_lambda = 0.0;
    bool i_tune = false;
    std::string i_method, i_out;
    auto* ci = app.add_subcommand("ci", "One confidence interval (JSON)");
    ci->add_option("--y1", i_y1, "first observation")->required();
    ci->add_option("--y2", i_y2, "second observation")->required();
    ci->add_option("--alpha", i_alpha, "miscoverage level")->required();
    ci->add_option("--B", i_B, "constraint radius")->default_val(0.0);
    auto* ci_lambda = ci->add_option("--lambda", i_lambda, "penalty weight");
    auto* ci_tune = ci->add_flag("--tune", i_tune, "use the optimal penalty weight");
    ci_lambda->excludes(ci_tune);
    ci->add_option("--method", i_method, "standard|partial|regularized")
        ->required()
        ->check(CLI::IsMember(methods));
    ci->add_option("--out", i_out, "write JSON here instead of stdout");
    ci->callback([&] {
        const twomeans::Observation y(i_y1, i_y2);
        double lambda = 0.0;
        twomeans::Interval interval{0.0, 0.0};
        if (i_method == "standard") {
            if (i_tune || ci_lambda->count() > 0)
                throw std::runtime_error(
                    "the standard method has no penalty weight; drop --lambda/--tune");
            interval = twomeans::ci_standard(i_y2, i_alpha);
        } else if (i_method == "partial") {
            if (!i_tune && ci_lambda->count() == 0)
                throw std::runtime_error("pass --lambda or --tune for method partial");
            lambda = i_tune ? twomeans::lambda1_star(i_alpha, i_B) : i_lambda;
            interval = twomeans::ci_partial(y, i_alpha, i_B, lambda);
        } else {
            if (!i_tune && ci_lambda->count() == 0)
                throw std::runtime_error("pass --lambda or --tune for method regularized");
            lambda = i_tune ? twomeans::lambda2_star(i_alpha, i_B).lambda_star : i_lambda;
            interval = twomeans::ci_regularized(y, i_alpha, i_B, lambda);
        }
        json report;
        report["method"] = i_method;
        report["lambda"] = lambda;
        report["lower"] = interval.lower;
        report["upper"] = interval.upper;
        report["length"] = interval.length();
        report["alpha"] = i_alpha;
        report["B"] = i_B;
        Output out(i_out);
        out.stream() << report.dump() << '\n';
    });

    // ---- lengths -----------------------------------------------------------
    double l_alpha = 0.0, l_B = 0.0;
    std::string l_sweep, l_out;
    auto* lengths = app.add_subcommand(
        "lengths", "Sweep both interval-length curves over lambda (CSV)");
    lengths->add_option("--alpha", l_alpha, "miscoverage level")->required();
    lengths->add_option("--B", l_B, "constraint radius, > 0")->required();
    lengths->add_option("--sweep", l_sweep, "lambda:start:stop:steps")->required();
    lengths->add_option("--out", l_out, "write CSV here instead of stdout");
    lengths->callback([&] {
        if (!(l_B > 0.0))
            throw std::runtime_error("lengths requires --B > 0; the tuned weights in the "
                                     "argmin rows are undefined at B = 0");
        const Sweep sweep = parse_sweep(l_sweep, "lambda");
        Output out(l_out);
        out.stream() << "lambda,L1,L2\n";
        for (long i = 0; i < sweep.steps; ++i) {
            const double lambda = sweep.at(i);
            out.stream() << fmt(lambda) << ',' << fmt(twomeans::len_l1(lambda, l_alpha, l_B))
                         << ',' << fmt(twomeans::len_l2(lambda, l_alpha, l_B)) << '\n';
        }
        // argmin summary rows, marked by a trailing field
        const double l1_star = twomeans::lambda1_star(l_alpha, l_B);
        out.stream() << fmt(l1_star) << ',' << fmt(twomeans::len_l1(l1_star, l_alpha, l_B))
                     << ',' << fmt(twomeans::len_l2(l1_star, l_alpha, l_B))
                     << ",argmin_L1\n";
        const twomeans::TunedResult tuned = twomeans::lambda2_star(l_alpha, l_B);
        out.stream() << fmt(tuned.lambda_star) << ','
                     << fmt(twomeans::len_l1(tuned.lambda_star, l_alpha, l_B)) << ','
                     << fmt(tuned.length_star) << ",argmin_L2\n";
    });

    // ---- compare -----------------------------------------------------------
    double p_alpha = 0.0;
    std::string p_sweep, p_out;
    auto* compare = app.add_subcommand(
        "compare", "Optimal interval lengths of all three methods over B (CSV)");
    compare->add_option("--alpha", p_alpha, "miscoverage level")->required();
    compare->add_option("--sweep", p_sweep, "B:start:stop:steps")->required();
    compare->add_option("--out", p_out, "write CSV here instead of stdout");
    compare->callback([&] {
        const Sweep sweep = parse_sweep(p_sweep, "B");
        if (!(sweep.start > 0.0))
            throw std::runtime_error(
                "compare requires the B sweep to start above 0; the tuned weights are "
                "defined for B > 0 only");
        Output out(p_out);
        out.stream() << "B,len_standard,len_partial_opt,lambda1_star,"
                        "len_regularized_opt,lambda2_star\n";
        const double len_standard = 2.0 * twomeans::norm_quantile(1.0 - 0.5 * p_alpha);
        for (long i = 0; i < sweep.steps; ++i) {
            const double B = sweep.at(i);
            const double l1_star = twomeans::lambda1_star(p_alpha, B);
            const twomeans::TunedResult tuned = twomeans::lambda2_star(p_alpha, B);
            out.stream() << fmt(B) << ',' << fmt(len_standard) << ','
                         << fmt(twomeans::optimal_length_l1(p_alpha, B)) << ','
                         << fmt(l1_star) << ',' << fmt(tuned.length_star) << ','
                         << fmt(tuned.lambda_star) << '\n';
        }
    });

    // ---- validate ----------------------------------------------------------
    double v_theta1 = 0.0, v_theta2 = 0.0, v_alpha = 0.05, v_B = 0.0, v_lambda = 0.0;
    bool v_tune = false;
    std::int64_t v_reps = 100000;
    std::uint64_t v_seed = 0;
    std::string v_method, v_out;
    auto* validate = app.add_subcommand(
        "validate", "Monte Carlo coverage audit of one method (JSON)");
    validate->add_option("--theta1", v_theta1, "true first mean")->required();
    validate->add_option("--theta2", v_theta2, "true second mean")->required();
    validate->add_option("--alpha", v_alpha, "miscoverage level")->default_val(0.05);
    validate->add_option("--B", v_B, "constraint radius")->required();
    auto* v_lambda_opt = validate->add_option("--lambda", v_lambda, "penalty weight");
    auto* v_tune_flag =
        validate->add_flag("--tune", v_tune, "use the optimal penalty weight");
    v_lambda_opt->excludes(v_tune_flag);
    validate->add_option("--method", v_method, "standard|partial|regularized")
        ->required()
        ->check(CLI::IsMember(methods));
    validate->add_option("--reps", v_reps, "replications")->default_val(100000);
    validate->add_option("--seed", v_seed, "substream seed")->default_val(0);
    validate->add_option("--out", v_out, "write JSON here instead of stdout");
    validate->callback([&] {
        twomeans::McConfig config;
        config.n_reps = v_reps;
        config.seed = v_seed;
        config.alpha = v_alpha;
        config.holder_bound = v_B;
        config.theta_true = twomeans::MeanPair(v_theta1, v_theta2);
        config.method = parse_method(v_method);
        if (v_lambda_opt->count() > 0) config.lambda = v_lambda;
        if (config.method == twomeans::Method::standard) {
            if (v_tune || v_lambda_opt->count() > 0)
                throw std::runtime_error(
                    "the standard method has no penalty weight; drop --lambda/--tune");
        } else if (!v_tune && v_lambda_opt->count() == 0) {
            throw std::runtime_error("pass --lambda or --tune for method " + v_method);
        }

        const twomeans::CoverageReport report = twomeans::simulate_coverage(config);
        json body;
        body["n_reps"] = report.n_reps;
        body["empirical_coverage"] = report.empirical_coverage;
        body["empirical_alpha_exceedance"] = report.empirical_alpha_exceedance;
        body["std_error"] = report.std_error;
        body["mean_length"] = report.mean_length;
        body["seed"] = report.seed;
        Output out(v_out);
        out.stream() << body.dump() << '\n';

        // one-sided validity band at three binomial sigmas
        const double n = static_cast<double>(report.n_reps);
        const double band = 3.0 * std::sqrt(v_alpha * (1.0 - v_alpha) / n);
        if (report.empirical_coverage < 1.0 - v_alpha - band) {
            std::cerr << "validity band violated: coverage "
                      << report.empirical_coverage << " < " << 1.0 - v_alpha - band
                      << "\n";
            exit_code = 4;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
