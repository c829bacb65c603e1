#include "frozen/characteristic.hpp"
#include "frozen/chebyshev.hpp"
#include "frozen/core_params.hpp"
#include "frozen/errors.hpp"
#include "frozen/frozen_matrix.hpp"
#include "frozen/inverse_pipeline.hpp"
#include "frozen/io.hpp"
#include "frozen/main_equation.hpp"
#include "frozen/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace frozen;
using nlohmann::json;

constexpr int kExitUnknownCommand = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitNumerical = 4;

const std::vector<std::string> kCommands = {"matrix", "classify", "cheb",        "eigs",    "delta",  "forward-w",
                                            "invert", "reconstruct", "isospectral", "example", "verify"};

int report_error(int code, std::string_view kind, std::string_view stage, std::string_view message) {
    json err{{"error", kind}, {"message", message}};
    if (!stage.empty()) err["stage"] = stage;
    std::cerr << err.dump() << '\n';
    return code;
}

/// --config file, or the four flags.
struct ConfigArgs {
    std::string path;
    int alpha = -1;
    int beta = -1;
    int j = -1;
    int k = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", path, "JSON file holding {alpha,beta,j,k}");
        cmd->add_option("--alpha", alpha, "boundary flag at x=0");
        cmd->add_option("--beta", beta, "boundary flag at x=1");
        cmd->add_option("--j", j, "numerator of the frozen argument");
        cmd->add_option("--k", k, "denominator of the frozen argument");
    }

    [[nodiscard]] ProblemConfig resolve() const {
        if (!path.empty()) return config_from_json(read_text_file(path));
        if (alpha < 0 || beta < 0 || j < 0 || k < 0) throw InvalidInput("give --config or all of --alpha --beta --j --k");
        return make_config(alpha, beta, j, k);
    }
};

struct Output {
    std::string path;

    void attach(CLI::App* cmd, const char* what) { cmd->add_option("--out", path, what); }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            write_text_file(path, text);
        }
    }
};

std::string grid_text(const GridFunction& g) {
    std::ostringstream os;
    write_grid_csv(os, g);
    return os.str();
}

GridFunction load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return read_grid_csv(in);
}

/// Potential from a CSV file, or q = 0 on a (k, m) grid when no file is given.
GridFunction load_potential(const std::string& path, int k, int m) {
    if (path.empty()) return GridFunction(k, m);
    GridFunction q = load_grid(path);
    if (q.k() != k) throw InvalidInput("potential grid has k=" + std::to_string(q.k()) + ", config has k=" + std::to_string(k));
    return q;
}

ProblemConfig require_normalized(const ProblemConfig& c) {
    if (!c.normalized()) throw InvalidInput("frozen argument above 1/2: use the reflected configuration (beta,alpha,k-j,k)");
    return c;
}

json classification_json(const Classification& cls) {
    return json{{"kind", to_string(cls.kind)}, {"case", to_string(cls.case_label)}};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2 && argv[1][0] != '-' && std::find(kCommands.begin(), kCommands.end(), argv[1]) == kCommands.end()) {
        return report_error(kExitUnknownCommand, "unknown_command", "", std::string("unknown subcommand '") + argv[1] + "'");
    }

    CLI::App app{"Sturm-Liouville operators with a frozen argument: matrices, spectra and inverse problems"};
    app.require_subcommand(1);
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write a run manifest (JSON) to this path");

    RunManifest manifest;
    std::function<void()> action;

    ConfigArgs cfg;
    Output out;

    auto* matrix_cmd = app.add_subcommand("matrix", "print the main-equation matrix as JSON");
    cfg.attach(matrix_cmd);
    matrix_cmd->callback([&] {
        action = [&] {
            const ProblemConfig c = cfg.resolve();
            manifest.config = c;
            std::cout << build_matrix(c).entries.to_json() << '\n';
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "degenerate / non-degenerate classification");
    cfg.attach(classify_cmd);
    classify_cmd->callback([&] {
        action = [&] {
            const ProblemConfig c = cfg.resolve();
            manifest.config = c;
            std::cout << classification_json(classify(c)).dump() << '\n';
        };
    });

    std::string cheb_kind = "T";
    int cheb_n = 0;
    bool cheb_scaled = false;
    auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev coefficients (ascending) as JSON");
    cheb_cmd->add_option("--kind", cheb_kind, "T or U")->check(CLI::IsMember({"T", "U"}));
    cheb_cmd->add_option("--n", cheb_n, "degree")->required()->check(CLI::NonNegativeNumber);
    cheb_cmd->add_flag("--scaled", cheb_scaled, "2 T_n(x/2) or U_n(x/2)");
    cheb_cmd->callback([&] {
        action = [&] {
            const ChebKind kind = cheb_kind == "T" ? ChebKind::T : ChebKind::U;
            std::cout << (cheb_scaled ? scaled_cheb_int(kind, cheb_n) : cheb(kind, cheb_n)).to_json() << '\n';
        };
    });

    std::string q_path;
    int grid_m = 64;
    int eig_count = 20;
    std::string spectrum_json_path;
    auto* eigs_cmd = app.add_subcommand("eigs", "first eigenvalues of a potential (CSV n,re,im)");
    cfg.attach(eigs_cmd);
    eigs_cmd->add_option("--q", q_path, "potential CSV (default q = 0)");
    eigs_cmd->add_option("--m", grid_m, "samples per subinterval when --q is absent")->check(CLI::PositiveNumber);
    eigs_cmd->add_option("--n", eig_count, "number of eigenvalues")->check(CLI::PositiveNumber);
    eigs_cmd->add_option("--json", spectrum_json_path, "also write the spectrum as JSON");
    out.attach(eigs_cmd, "CSV output path (default stdout)");
    eigs_cmd->callback([&] {
        action = [&] {
            const ProblemConfig c = cfg.resolve();
            const GridFunction q = load_potential(q_path, c.k, grid_m);
            manifest.config = c;
            manifest.k = q.k();
            manifest.m = q.m();
            manifest.tolerances["residual"] = EigenOptions{}.residual_tol;
            const Spectrum spec = eigenvalues(q, c, eig_count);
            std::ostringstream os;
            write_eigs_csv(os, spec);
            out.write(os.str());
            if (!spectrum_json_path.empty()) write_text_file(spectrum_json_path, spectrum_to_json(spec) + "\n");
        };
    });

    double lam_min = -50.0;
    double lam_max = 2000.0;
    double lam_im = 0.0;
    int lam_points = 40;
    int n_used = 200;
    std::string w_path;
    auto* delta_cmd = app.add_subcommand("delta", "characteristic function on a line of lambda values");
    cfg.attach(delta_cmd);
    delta_cmd->add_option("--q", q_path, "potential CSV (direct route)");
    delta_cmd->add_option("--w", w_path, "W CSV (transform route)");
    delta_cmd->add_option("--spectrum", spectrum_json_path, "spectrum JSON (product route)");
    delta_cmd->add_option("--n-used", n_used, "eigenvalues in the product")->check(CLI::PositiveNumber);
    delta_cmd->add_option("--m", grid_m, "samples per subinterval when no data is given");
    delta_cmd->add_option("--lambda-min", lam_min);
    delta_cmd->add_option("--lambda-max", lam_max);
    delta_cmd->add_option("--lambda-im", lam_im, "constant imaginary part");
    delta_cmd->add_option("--points", lam_points)->check(CLI::Range(2, 1000000));
    out.attach(delta_cmd, "CSV output path (default stdout)");
    delta_cmd->callback([&] {
        action = [&] {
            std::optional<DeltaEvaluator> eval;
            if (!spectrum_json_path.empty()) {
                Spectrum spec = spectrum_from_json(read_text_file(spectrum_json_path));
                n_used = std::min<int>(n_used, static_cast<int>(spec.count()));
                eval.emplace(DeltaEvaluator::FromSpectrum{std::move(spec), n_used});
            } else if (!w_path.empty()) {
                const ProblemConfig c = cfg.resolve();
                manifest.config = c;
                eval.emplace(DeltaEvaluator::FromW{load_grid(w_path), c.alpha, c.beta});
            } else {
                const ProblemConfig c = cfg.resolve();
                manifest.config = c;
                eval.emplace(DeltaEvaluator::Direct{load_potential(q_path, c.k, grid_m), c});
            }
            std::ostringstream os;
            os << "re_lambda,im_lambda,re_delta,im_delta\n";
            char buf[128];
            for (int i = 0; i < lam_points; ++i) {
                const cplx lam(lam_min + (lam_max - lam_min) * i / (lam_points - 1), lam_im);
                const cplx d = (*eval)(lam);
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", lam.real(), lam.imag(), d.real(), d.imag());
                os << buf << '\n';
            }
            out.write(os.str());
        };
    });

    std::string fw_method = "direct";
    auto* fw_cmd = app.add_subcommand("forward-w", "W from a potential");
    cfg.attach(fw_cmd);
    fw_cmd->add_option("--q", q_path, "potential CSV")->required();
    fw_cmd->add_option("--method", fw_method, "direct or matrix")->check(CLI::IsMember({"direct", "matrix"}));
    out.attach(fw_cmd, "CSV output path (default stdout)");
    fw_cmd->callback([&] {
        action = [&] {
            const ProblemConfig c = require_normalized(cfg.resolve());
            const GridFunction q = load_potential(q_path, c.k, 0);
            manifest.config = c;
            manifest.k = q.k();
            manifest.m = q.m();
            manifest.inputs = {q_path};
            out.write(grid_text(fw_method == "direct" ? forward_w_direct(q, c) : forward_w_matrix(q, c)));
        };
    });

    std::string kernel_out;
    double consistency_tol = 1e-9;
    std::string solve_method = "auto";
    auto* invert_cmd = app.add_subcommand("invert", "potential from W (main equation)");
    cfg.attach(invert_cmd);
    invert_cmd->add_option("--w", w_path, "W CSV")->required();
    invert_cmd->add_option("--method", solve_method, "auto, lu or lsq")->check(CLI::IsMember({"auto", "lu", "lsq"}));
    invert_cmd->add_option("--tol", consistency_tol, "relative residual tolerance");
    invert_cmd->add_option("--kernel-out", kernel_out, "write the kernel generator (degenerate cases)");
    out.attach(invert_cmd, "CSV output path (default stdout)");
    invert_cmd->callback([&] {
        action = [&] {
            const ProblemConfig c = require_normalized(cfg.resolve());
            const GridFunction w = load_grid(w_path);
            manifest.config = c;
            manifest.k = w.k();
            manifest.m = w.m();
            manifest.tolerances["consistency"] = consistency_tol;
            const SolveMethod method = solve_method == "lu"    ? SolveMethod::LU
                                       : solve_method == "lsq" ? SolveMethod::LeastSquares
                                                               : SolveMethod::Auto;
            const MainEqSolution sol = solve_inverse(w, c, method, consistency_tol);
            out.write(grid_text(sol.particular));
            if (!kernel_out.empty() && sol.kernel_generator) write_text_file(kernel_out, grid_text(*sol.kernel_generator));
        };
    });

    PipelineOptions popts;
    std::string w_out;
    auto* rec_cmd = app.add_subcommand("reconstruct", "potential from a spectrum");
    cfg.attach(rec_cmd);
    rec_cmd->add_option("--spectrum", spectrum_json_path, "spectrum JSON")->required();
    rec_cmd->add_option("--m", popts.m, "samples per subinterval")->check(CLI::PositiveNumber);
    rec_cmd->add_option("--n-used", popts.n_used, "eigenvalues in the product")->check(CLI::PositiveNumber);
    rec_cmd->add_option("--modes", popts.modes, "Fourier modes of W")->check(CLI::PositiveNumber);
    rec_cmd->add_option("--tol", popts.consistency_tol, "relative residual tolerance of the main equation");
    rec_cmd->add_option("--w-out", w_out, "also write the reconstructed W");
    rec_cmd->add_option("--kernel-out", kernel_out, "write the kernel generator (degenerate cases)");
    out.attach(rec_cmd, "CSV output path (default stdout)");
    rec_cmd->callback([&] {
        action = [&] {
            const ProblemConfig c = cfg.resolve();
            const Spectrum spec = spectrum_from_json(read_text_file(spectrum_json_path));
            manifest.config = c;
            manifest.k = c.k;
            manifest.m = popts.m;
            manifest.inputs = {spectrum_json_path};
            manifest.tolerances["consistency"] = popts.consistency_tol;
            if (!w_out.empty()) write_text_file(w_out, grid_text(w_from_spectrum(spec, c, popts)));
            const MainEqSolution sol = invert_from_spectrum(spec, c, popts);
            out.write(grid_text(sol.particular));
            if (!kernel_out.empty() && sol.kernel_generator) write_text_file(kernel_out, grid_text(*sol.kernel_generator));
        };
    });

    std::string f_source;
    std::string q0_path;
    auto* iso_cmd = app.add_subcommand("isospectral", "iso-spectral partner q0 + R^{-1}(X f)");
    cfg.attach(iso_cmd);
    iso_cmd->add_option("--f", f_source, "profile CSV on (0,b), or 'quadratic' for the built-in profile")->required();
    iso_cmd->add_option("--q0", q0_path, "base potential CSV (default q0 = 0)");
    iso_cmd->add_option("--m", grid_m, "samples per subinterval when --q0 is absent");
    out.attach(iso_cmd, "CSV output path (default stdout)");
    iso_cmd->callback([&] {
        action = [&] {
            const ProblemConfig c = require_normalized(cfg.resolve());
            const GridFunction q0 = load_potential(q0_path, c.k, grid_m);
            std::vector<cplx> f;
            if (f_source == "quadratic") {
                f = paper_profile_samples(c.k, q0.m());
            } else {
                std::ifstream in(f_source);
                if (!in) throw InvalidInput("cannot open '" + f_source + "'");
                f = read_profile_csv(in);
            }
            manifest.config = c;
            manifest.k = q0.k();
            manifest.m = q0.m();
            out.write(grid_text(algorithm1(q0, c, f)));
        };
    });

    std::string example_id;
    std::string svg_path;
    std::string csv_path;
    auto* ex_cmd = app.add_subcommand("example", "worked iso-spectral examples I7, I8, II, III, IV");
    ex_cmd->add_option("--id", example_id, "example id")->required();
    ex_cmd->add_option("--m", grid_m, "samples per subinterval")->check(CLI::PositiveNumber);
    ex_cmd->add_option("--svg", svg_path, "write an SVG plot");
    ex_cmd->add_option("--csv", csv_path, "write the sampled profile");
    ex_cmd->callback([&] {
        action = [&] {
            const ExampleReport report = reproduce_example(parse_example_id(example_id), grid_m);
            manifest.config = report.config;
            manifest.k = report.config.k;
            manifest.m = grid_m;
            json doc{{"id", to_string(report.id)},
                     {"config", json::parse(config_to_json(report.config))},
                     {"kernel_vector", report.kernel_vector},
                     {"table", json::array()}};
            for (const auto& row : report.table) doc["table"].push_back(row.to_string());
            std::cout << doc.dump(2) << '\n';
            if (!svg_path.empty()) write_text_file(svg_path, render_svg(report));
            if (!csv_path.empty()) write_text_file(csv_path, grid_text(report.samples));
        };
    });

    int kmax = 24;
    auto* verify_cmd = app.add_subcommand("verify", "exact identity sweeps over k <= kmax");
    verify_cmd->add_option("--kmax", kmax, "largest k")->check(CLI::Range(2, 200));
    int verify_failures = 0;
    verify_cmd->callback([&] {
        action = [&] {
            json report = json::array();
            long total = 0;
            for (const CheckResult& r : verify_all(kmax)) {
                report.push_back({{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
                total += r.cases;
                if (!r.passed) ++verify_failures;
            }
            std::cout << json{{"kmax", kmax}, {"cases", total}, {"failed_checks", verify_failures}, {"checks", report}}.dump(2)
                      << '\n';
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(kExitBadInput, "invalid_arguments", "", e.what());
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        manifest.command = app.get_subcommands().front()->get_name();
        action();
    } catch (const InvalidInput& e) {
        return report_error(kExitBadInput, "invalid_input", "", e.what());
    } catch (const NumericalFailure& e) {
        return report_error(kExitNumerical, "numerical_failure", e.stage(), e.what());
    } catch (const std::exception& e) {
        return report_error(kExitNumerical, "internal", "", e.what());
    }
    if (!manifest_path.empty()) {
        manifest.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!out.path.empty()) manifest.outputs.push_back(out.path);
        write_text_file(manifest_path, manifest.to_json() + "\n");
    }
    return verify_failures == 0 ? 0 : 1;
}
