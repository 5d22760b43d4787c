#include "windwave/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "windwave/diagnostics.hpp"
#include "windwave/dispersion.hpp"
#include "windwave/height_pde.hpp"
#include "windwave/laminar.hpp"
#include "windwave/parallel.hpp"
#include "windwave/strip_transform.hpp"
#include "windwave/verify.hpp"

namespace windwave::cli {

namespace {

int log_level() {
    const char* env = std::getenv("WINDWAVE_LOG");
    if (!env) return 0;
    std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[windwave] " << msg << "\n";
}

struct Session {
    io::ConfigFile cf;
    std::string manifest_hash;
};

std::string params_json(const io::ConfigFile& cf) {
    // canonical resolved-parameter dump recorded in the manifest
    std::string s = "{\"regime\":\"" + regime_name(cf.physical.regime) + "\"";
    auto add = [&](const char* k, double v) {
        s += ",\"" + std::string(k) + "\":" + io::format_double(v);
    };
    add("g", cf.physical.g);
    add("rho_air", cf.physical.rho_air);
    add("rho_water", cf.physical.rho_water);
    add("p0", cf.physical.p0);
    if (cf.physical.lidded()) {
        add("p1", cf.physical.p1);
        add("ell", cf.physical.ell);
    } else {
        add("depth_d", cf.physical.depth_d);
    }
    if (cf.physical.regime == Regime::UnboundedShear) add("gamma0", cf.physical.gamma0);
    add("period_L", cf.physical.period_L);
    add("nq", cf.numerics.nq);
    add("np_air", cf.numerics.np_air);
    add("np_water", cf.numerics.np_water);
    add("sl_elements", cf.numerics.sl_elements);
    add("strip_nx", cf.numerics.strip_nx);
    add("strip_ny_air", cf.numerics.strip_ny_air);
    add("strip_ymax", cf.numerics.strip_ymax);
    s += "}";
    return s;
}

Session open_session(const CommonArgs& args, const std::string& subcommand) {
    Session s;
    s.cf = io::load_config(args.config_path);
    s.cf.numerics = refined(s.cf.numerics, args.grid_refine);
    set_num_threads(args.threads);
    io::RunManifest m;
    m.config_path = args.config_path.string();
    m.subcommand = subcommand;
    m.resolved_params_json = params_json(s.cf);
    m.seed = args.seed;
    m.out_dir = args.out_dir.string();
    s.manifest_hash = io::write_manifest(m);
    log_info(subcommand + ": manifest " + s.manifest_hash);
    return s;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + p.string());
    out << text;
}

GammaRelProfile profile_for(const io::ConfigFile& cf) {
    const PhysicalConfig& cfg = cf.physical;
    if (cfg.regime == Regime::LiddedRotational)
        return gamma_rel_from_vorticity(cfg, cf.numerics.gamma_grid);
    if (cfg.regime == Regime::LiddedIrrotational)
        return GammaRelProfile(cfg.p1, gamma_rel_ideal(cfg), 65);
    throw ConfigError("lidded regimes only");
}

int guard(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << "error (bad input): " << e.what() << "\n";
        return 4;
    } catch (const InfeasibleError& e) {
        std::cerr << "error (infeasible condition): " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "error (numerical failure): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

io::Numerics refined(io::Numerics n, int k) {
    for (int i = 0; i < k; ++i) {
        n.nq *= 2;
        n.np_air *= 2;
        n.np_water *= 2;
        n.sl_elements *= 2;
        n.strip_nx *= 2;
        n.strip_ny_air *= 2;
        n.strip_ny_water *= 2;
    }
    return n;
}

int cmd_laminar(const CommonArgs& args, double lambda_min, double lambda_max, int count) {
    return guard([&]() {
        if (count < 1) throw ConfigError("cmd_laminar: empty lambda grid");
        if (!(lambda_min > 0.0) && true) {
            // unbounded regimes admit λ = 0; lidded ones do not (checked below)
        }
        Session s = open_session(args, "laminar");
        const PhysicalConfig& cfg = s.cf.physical;
        std::vector<double> lambdas(count);
        for (int i = 0; i < count; ++i)
            lambdas[i] = count == 1
                             ? lambda_min
                             : lambda_min + (lambda_max - lambda_min) * double(i) / (count - 1);

        std::vector<LaminarFlow> flows(count);
        GammaRelProfile prof;
        if (cfg.lidded()) prof = profile_for(s.cf);
        parallel_for(count, [&](std::ptrdiff_t i) {
            switch (cfg.regime) {
                case Regime::LiddedIrrotational:
                    flows[i] = laminar_ideal(cfg, prof.at_p1(), lambdas[i]);
                    break;
                case Regime::LiddedRotational:
                    flows[i] = laminar_shear(cfg, prof, lambdas[i]);
                    break;
                default:
                    flows[i] = laminar_unbounded(cfg, lambdas[i]);
            }
        });
        io::CsvWriter csv({"lambda", "Q", "depth", "width", "manifest_hash"});
        for (const auto& f : flows) {
            csv.add_row({io::format_double(f.lambda), io::format_double(f.Q),
                         io::format_double(f.depth),
                         cfg.lidded() ? io::format_double(f.width) : std::string(),
                         s.manifest_hash});
        }
        csv.write(args.out_dir / "laminar.csv");
        std::cout << csv.str();
        return 0;
    });
}

int cmd_bifurcate(const CommonArgs& args, int mode) {
    return guard([&]() {
        Session s = open_session(args, "bifurcate");
        const PhysicalConfig& cfg = s.cf.physical;
        NuOptions opt;
        opt.elements = s.cf.numerics.sl_elements;
        opt.scan_points = s.cf.numerics.sl_scan_points;
        try {
            BifurcationPoint bp = solve_bifurcation(cfg, mode, opt);
            const std::string text = io::bifurcation_to_json(cfg, bp, s.manifest_hash);
            write_text(args.out_dir / "bifurcation.json", text);
            std::cout << text;
            return 0;
        } catch (const InfeasibleError& e) {
            std::string cond = "LBC";
            const std::string what = e.what();
            for (const char* name : {"SIZE_n", "size condition", "ILBC", "USLBC", "ULBC"}) {
                if (what.find(name) != std::string::npos) {
                    cond = name;
                    break;
                }
            }
            if (cond == "size condition") cond = "SIZE_n";
            const std::string text = io::infeasible_to_json(cfg, cond, what, s.manifest_hash);
            write_text(args.out_dir / "bifurcation.json", text);
            std::cout << text;
            return 2;
        }
    });
}

int cmd_branch(const CommonArgs& args, double s_max, int steps) {
    return guard([&]() {
        Session s = open_session(args, "branch");
        const PhysicalConfig& cfg = s.cf.physical;
        if (!cfg.lidded())
            throw ConfigError("cmd_branch: branch continuation runs in the lidded regimes");
        GammaRelProfile prof = profile_for(s.cf);
        NuOptions nopt;
        nopt.elements = s.cf.numerics.sl_elements;
        nopt.scan_points = s.cf.numerics.sl_scan_points;
        const double lam_star =
            cfg.regime == Regime::LiddedIrrotational
                ? solve_ideal_lambda_n(cfg, prof.at_p1(), 1)
                : solve_shear_lambda_star(cfg, prof, nopt);
        log_info("branch: lambda* = " + io::format_double(lam_star));

        HeightGridOptions gopt{s.cf.numerics.nq, s.cf.numerics.np_air, s.cf.numerics.np_water};
        HeightProblem prob(cfg, prof, gopt);
        auto mhat = normalized_null_profile(cfg, prof, lam_star, nopt);
        NewtonOptions newton;
        newton.tol = s.cf.numerics.newton_tol;
        newton.max_iter = s.cf.numerics.newton_max_iter;
        BranchResult br = prob.continue_branch(lam_star, s_max, steps, mhat, newton);

        io::CsvWriter branch_csv(
            {"s", "Q", "depth", "eta_max", "newton_iters", "fe_dev", "manifest_hash"});
        io::CsvWriter diag_csv({"s", "fe_mean", "fe_spread", "drag", "bernoulli_resid",
                                "kinematic_resid", "circ_err", "manifest_hash"});
        for (const auto& bp : br.points) {
            auto levels = default_levels(prob, bp.field);
            DiagnosticsRow row = diagnose_branch_point(prob, bp, levels);
            const double eta_max = prob.eta_of(bp.field).cwiseAbs().maxCoeff();
            branch_csv.add_row({io::format_double(bp.s), io::format_double(bp.Q),
                                io::format_double(prob.depth_of(bp.field)),
                                io::format_double(eta_max), std::to_string(bp.newton_iters),
                                io::format_double(row.fe_spread), s.manifest_hash});
            diag_csv.add_row({io::format_double(row.s), io::format_double(row.fe_mean),
                              io::format_double(row.fe_spread), io::format_double(row.drag),
                              io::format_double(row.bernoulli_resid),
                              io::format_double(row.kinematic_resid),
                              io::format_double(row.circ_err), s.manifest_hash});
        }
        branch_csv.write(args.out_dir / "branch.csv");
        diag_csv.write(args.out_dir / "branch_diagnostics.csv");
        std::cout << branch_csv.str();
        if (br.abort_reason)
            throw NumericalError("continuation aborted: " + *br.abort_reason);
        return 0;
    });
}

int cmd_multiplier(const CommonArgs& args, int k_max, double lambda_min, double lambda_max,
                   int count) {
    return guard([&]() {
        if (count < 1 || k_max < 1) throw ConfigError("cmd_multiplier: empty grid");
        Session s = open_session(args, "multiplier");
        const PhysicalConfig& cfg = s.cf.physical;
        if (cfg.lidded())
            throw ConfigError("cmd_multiplier: unbounded regimes only");
        StripGrid grid(s.cf.numerics.strip_nx, s.cf.numerics.strip_ny_air,
                       s.cf.numerics.strip_ny_water, s.cf.numerics.strip_ymax);
        io::CsvWriter csv({"k", "lambda", "m", "m_tilde", "fd_value", "analytic_value",
                           "abs_error", "manifest_hash"});
        const bool shear = cfg.regime == Regime::UnboundedShear;
        for (int k = 1; k <= k_max; ++k) {
            SurfaceShape zeta = SurfaceShape::single_mode(k, 1.0, 4);
            for (int i = 0; i < count; ++i) {
                const double lam =
                    count == 1 ? lambda_min
                               : lambda_min + (lambda_max - lambda_min) * double(i) / (count - 1);
                Eigen::VectorXd fd = linearize_G_fd(cfg, lam, zeta, grid);
                const double fdk = grid.xb.mode_coeff(fd, k);
                const double analytic =
                    2.0 * (shear ? multiplier_m_tilde(cfg, k, lam) : multiplier_m(cfg, k, lam));
                csv.add_row({std::to_string(k), io::format_double(lam),
                             io::format_double(multiplier_m(cfg, k, lam)),
                             io::format_double(multiplier_m_tilde(cfg, k, lam)),
                             io::format_double(fdk), io::format_double(analytic),
                             io::format_double(std::abs(fdk - analytic)), s.manifest_hash});
            }
        }
        csv.write(args.out_dir / "multiplier.csv");
        std::cout << csv.str();
        return 0;
    });
}

int cmd_verify(const CommonArgs& args) {
    return guard([&]() {
        Session s = open_session(args, "verify");
        (void)s;
        auto results = run_acceptance(args.seed, true);
        const std::string report = format_report(results);
        write_text(args.out_dir / "verify_report.txt", report);
        std::cout << report;
        bool all = true;
        for (const auto& r : results) all = all && r.pass;
        return all ? 0 : 1;
    });
}

}  // namespace windwave::cli
