#include "vpmcf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iostream>

#include "vpmcf/csv.hpp"
#include "vpmcf/harness.hpp"
#include "vpmcf/singularity.hpp"
#include "vpmcf/verify.hpp"

namespace vpmcf::cli {

namespace {

int do_run(const std::string& config_path, bool strict) {
    try {
        const harness::SimConfig cfg = harness::parse_config_file(config_path);
        return harness::run_and_write(cfg, strict);
    } catch (const ConfigError& e) {
        std::cerr << "config error";
        if (e.line > 0) std::cerr << " at line " << e.line;
        std::cerr << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int do_fit(const std::string& path) {
    try {
        const csv::Table table = csv::read_table(path);
        const int tc = table.column("t"), ac = table.column("max_A2");
        if (tc < 0 || ac < 0) {
            std::cerr << "error: " << path << " lacks t and max_A2 columns\n";
            return 1;
        }
        const auto& t = table.columns[tc];
        const auto& a2 = table.columns[ac];
        const auto fit =
            singularity::fit_type1_series(t, a2, a2.empty() ? 0.0 : a2.front());
        std::cout << "T_est = " << csv::format_double(fit.T_est) << "\n";
        std::cout << "C_est = " << csv::format_double(fit.C_est) << "\n";
        std::cout << "r2 = " << csv::format_double(fit.r2) << "\n";
        std::cout << "classification = " << singularity::to_string(fit.cls) << "\n";
        std::cout << "window = (" << csv::format_double(fit.window_lo) << ", "
                  << csv::format_double(fit.window_hi) << ")\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int do_rescale(const std::string& snapshot, const std::string& alpha_arg,
               const std::string& center_arg, double window, int dim,
               const std::string& out_path) {
    try {
        const RadialProfile p = csv::read_profile(snapshot, dim);
        double alpha, center;
        if (alpha_arg == "auto" || center_arg == "auto") {
            const auto it = std::min_element(p.rho.begin(), p.rho.end());
            const int imin = (int)(it - p.rho.begin());
            alpha = alpha_arg == "auto" ? 1.0 / *it : std::stod(alpha_arg);
            center = center_arg == "auto" ? p.grid.node(imin) : std::stod(center_arg);
        } else {
            alpha = std::stod(alpha_arg);
            center = std::stod(center_arg);
        }
        const RadialProfile z = singularity::rescale_profile(p, center, alpha, window);
        csv::write_snapshot(out_path, z, curvature_fields(z));

        const auto tf = singularity::fit_templates(z);
        std::cout << "alpha = " << csv::format_double(alpha)
                  << ", center = " << csv::format_double(center) << "\n";
        std::cout << "cyl_r = " << csv::format_double(tf.cyl_r)
                  << ", cyl_resid = " << csv::format_double(tf.cyl_resid) << "\n";
        std::cout << "cat_c5 = " << csv::format_double(tf.cat_c5)
                  << ", cat_resid = " << csv::format_double(tf.cat_resid) << "\n";
        std::cout << "wrote " << out_path << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, const char* const* argv) {
    CLI::App app{"axially symmetric volume-preserving mean curvature flow toolkit"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "integrate a flow described by a config file");
    std::string config_path;
    bool strict = false;
    run->add_option("--config", config_path, "key = value config file")->required();
    run->add_flag("--strict", strict, "exit 2 when a monitor fails");

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "identities|oracles|sturm|blowup|all");

    auto* fit = app.add_subcommand("fit", "type-I rate fit of a timeseries CSV");
    std::string fit_path;
    fit->add_option("file", fit_path, "CSV with t and max_A2 columns")->required();

    auto* rescale = app.add_subcommand("rescale", "parabolic zoom of a snapshot CSV");
    std::string snapshot, alpha_arg = "auto", center_arg = "auto", out_path = "rescaled.csv";
    double window = singularity::kDefaultRescaleHalfWidth;
    int dim = 2;
    rescale->add_option("snapshot", snapshot, "snapshot CSV (x,rho columns)")->required();
    rescale->add_option("--alpha", alpha_arg, "auto or a positive real");
    rescale->add_option("--center", center_arg, "auto or a coordinate in [a,b]");
    rescale->add_option("--window", window, "half-width of the rescaled window");
    rescale->add_option("--dim", dim, "surface dimension n");
    rescale->add_option("--out", out_path, "output snapshot path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (run->parsed()) return do_run(config_path, strict);
    if (verify->parsed()) {
        try {
            return verify::verify_main(verify::parse_suite(suite), std::cout);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    if (fit->parsed()) return do_fit(fit_path);
    if (rescale->parsed())
        return do_rescale(snapshot, alpha_arg, center_arg, window, dim, out_path);
    return 1;
}

}  // namespace vpmcf::cli
