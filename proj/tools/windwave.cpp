#include <CLI11.hpp>

#include "windwave/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"windwave: laminar families, bifurcation points, and small-amplitude "
                 "wind-driven water waves"};
    app.require_subcommand(1);

    windwave::cli::CommonArgs common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config_path, "configuration JSON")->required();
        sub->add_option("--out", common.out_dir, "output directory (default ./out)");
        sub->add_option("--seed", common.seed, "RNG seed for sampled checks");
        sub->add_option("--threads", common.threads, "OpenMP thread count (0 = default)");
        sub->add_option("--grid-refine", common.grid_refine,
                        "halve every grid spacing this many times");
    };

    double lambda_min = 0.2, lambda_max = 2.0, s_max = 4e-3;
    int count = 25, mode = 1, steps = 4, k_max = 3;

    CLI::App* lam = app.add_subcommand("laminar", "tabulate the laminar family over a λ grid");
    add_common(lam);
    lam->add_option("--lambda-min", lambda_min);
    lam->add_option("--lambda-max", lambda_max);
    lam->add_option("--lambda-count", count);

    CLI::App* bif = app.add_subcommand("bifurcate", "solve the bifurcation point");
    add_common(bif);
    bif->add_option("--mode", mode, "wave mode n (lidded regimes)");

    CLI::App* bra = app.add_subcommand("branch", "continue the bifurcating branch");
    add_common(bra);
    bra->add_option("--s-max", s_max);
    bra->add_option("--steps", steps);

    CLI::App* mul = app.add_subcommand("multiplier", "multiplier tables and fd comparison");
    add_common(mul);
    mul->add_option("--k-max", k_max);
    mul->add_option("--lambda-min", lambda_min);
    mul->add_option("--lambda-max", lambda_max);
    mul->add_option("--lambda-count", count);

    CLI::App* ver = app.add_subcommand("verify", "run the verification suite");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    if (lam->parsed()) return windwave::cli::cmd_laminar(common, lambda_min, lambda_max, count);
    if (bif->parsed()) return windwave::cli::cmd_bifurcate(common, mode);
    if (bra->parsed()) return windwave::cli::cmd_branch(common, s_max, steps);
    if (mul->parsed())
        return windwave::cli::cmd_multiplier(common, k_max, lambda_min, lambda_max, count);
    if (ver->parsed()) return windwave::cli::cmd_verify(common);
    return 4;
}
