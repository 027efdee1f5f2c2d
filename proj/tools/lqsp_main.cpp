// Command line front end for the Laurent QSP toolchain. Each subcommand is a
// thin shell around the library: parse flags, move files, never compute. All
// artifact paths are explicit flags; nothing is written implicitly.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lqsp/accessibility.hpp"
#include "lqsp/complete.hpp"
#include "lqsp/decompose.hpp"
#include "lqsp/errors.hpp"
#include "lqsp/format.hpp"
#include "lqsp/json_io.hpp"
#include "lqsp/runconfig.hpp"
#include "lqsp/targets.hpp"
#include "lqsp/threadpool.hpp"
#include "lqsp/verify.hpp"

namespace {

using lqsp::json;
using lqsp::RunConfig;

// CSV files get the RunConfig as a trailing comment line, since their first
// line must stay the exact documented header. JSON artifacts carry it as a
// proper key via save_json.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows, const RunConfig& cfg) {
    std::ofstream file(path);
    if (!file) {
        throw lqsp::Error("cannot open " + path + " for writing");
    }
    file << header << '\n';
    for (const std::string& row : rows) {
        file << row << '\n';
    }
    file << "# run_config " << lqsp::run_config_to_json(cfg).dump() << '\n';
    if (!file) {
        throw lqsp::Error("write to " + path + " failed");
    }
}

void append_run_config(const std::string& path, const RunConfig& cfg) {
    std::ofstream file(path, std::ios::app);
    file << "# run_config " << lqsp::run_config_to_json(cfg).dump() << '\n';
}

lqsp::Basis parse_basis(const std::string& name) {
    if (name == "plus") return lqsp::Basis::plus;
    if (name == "zero") return lqsp::Basis::zero;
    throw lqsp::DomainError("unknown basis \"" + name +
                            "\", expected plus or zero");
}

// Flag bundle for generate and the sweep commands. Which fields matter
// depends on the family; unset ones keep their defaults.
struct FamilyArgs {
    std::string family;
    double tau = 0.0;
    double eps = 1e-14;
    int n = 0;
    std::int64_t seed = 0;
    double delta = 0.0;
    double t = 0.5;
    double a = 0.0;
    double kappa = 0.0;
};

lqsp::TargetPair build_target(const FamilyArgs& args) {
    if (args.family == "hs") {
        return lqsp::build_hamiltonian_sim(args.tau, args.eps);
    }
    if (args.family == "random") {
        return lqsp::build_random(args.n, args.seed);
    }
    if (args.family == "threshold") {
        return lqsp::threshold_pair(args.delta, args.eps);
    }
    if (args.family == "rect") {
        return lqsp::build_rect(args.t, args.delta, args.eps);
    }
    if (args.family == "sign") {
        return lqsp::build_sign(args.a, args.kappa, args.eps);
    }
    if (args.family == "inverse") {
        return lqsp::build_inverse(args.kappa, args.eps);
    }
    if (args.family == "matrix_inversion") {
        return lqsp::build_matrix_inversion(args.kappa, args.eps);
    }
    throw lqsp::DomainError("unknown target family \"" + args.family + "\"");
}

int pair_degree(const lqsp::TargetPair& pair) {
    return std::max(pair.a.degree(), pair.b.degree());
}

// Result of one complete -> decompose -> verify run. On failure `stage` names
// where it stopped and the later numeric fields are absent.
struct PipelineRow {
    std::string family;
    int n = 0;
    int iterations = 0;
    double residual = 0.0;
    double eps_qsp = 0.0;
    double seconds = 0.0;
    std::string stage;  // empty on success
    std::string detail;
};

PipelineRow run_pipeline(const lqsp::TargetPair& target, const RunConfig& cfg,
                         lqsp::Basis basis,
                         lqsp::CompletedQuadruple* quad_out = nullptr,
                         lqsp::QspSequence* seq_out = nullptr,
                         lqsp::VerificationReport* rep_out = nullptr,
                         const std::string& points_path = "") {
    PipelineRow row;
    row.family = target.meta.family;
    row.n = pair_degree(target);
    lqsp::CompletedQuadruple quad;
    try {
        quad = lqsp::complete(target, cfg.eps_fejer, cfg.max_iter);
    } catch (const lqsp::Error& e) {
        row.stage = "complete";
        row.detail = e.what();
        return row;
    }
    row.iterations = quad.report.wilson.iterations;
    row.residual = quad.report.wilson.residual_linf;
    row.seconds = quad.report.elapsed_seconds;
    if (quad_out) *quad_out = quad;

    lqsp::QspSequence seq;
    try {
        seq = lqsp::decompose(lqsp::assemble_matrix_poly(quad));
    } catch (const lqsp::Error& e) {
        row.stage = "decompose";
        row.detail = e.what();
        return row;
    }
    if (seq_out) *seq_out = seq;

    try {
        lqsp::VerificationReport rep = lqsp::verify_sequence(
            seq, target, cfg.grid_points, basis, points_path);
        row.eps_qsp = rep.eps_qsp;
        if (rep_out) *rep_out = rep;
    } catch (const lqsp::Error& e) {
        row.stage = "verify";
        row.detail = e.what();
        return row;
    }
    return row;
}

// family,n,iterations,residual,eps_qsp,seconds with failed(<stage>) replacing
// the first value the failed stage did not produce.
std::string summary_row(const PipelineRow& row) {
    std::string out = row.family + "," + std::to_string(row.n) + ",";
    if (row.stage == "complete" || row.stage == "generate") {
        return out + "failed(" + row.stage + "),,,";
    }
    out += std::to_string(row.iterations) + "," +
           lqsp::format_double(row.residual) + ",";
    if (!row.stage.empty()) {
        return out + "failed(" + row.stage + ")," +
               lqsp::format_double(row.seconds);
    }
    return out + lqsp::format_double(row.eps_qsp) + "," +
           lqsp::format_double(row.seconds);
}

std::string bench_row(const PipelineRow& row, const std::string& param) {
    std::string out = row.family + "," + param + "," + std::to_string(row.n) + ",";
    if (row.stage == "complete" || row.stage == "generate") {
        return out + "failed(" + row.stage + "),,,";
    }
    out += std::to_string(row.iterations) + "," +
           lqsp::format_double(row.residual) + ",";
    if (!row.stage.empty()) {
        return out + "failed(" + row.stage + ")," +
               lqsp::format_double(row.seconds);
    }
    return out + lqsp::format_double(row.eps_qsp) + "," +
           lqsp::format_double(row.seconds);
}

const char kSummaryHeader[] = "family,n,iterations,residual,eps_qsp,seconds";
const char kBenchHeader[] =
    "family,param,n,iterations,residual,eps_qsp,completion_seconds";
const char kAccessHeader[] =
    "family,param,log10_inv_eps,max_log10_coeff,min_log10_nonzero,overflow,"
    "dynamic_range_digits";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laurent polynomial quantum signal processing toolchain"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--threads", cfg.threads,
                   "worker threads for sweeps, 0 = all available");

    FamilyArgs fam;
    std::string in_path, out_path, gates_path, points_path, summary_path;
    std::string quad_path, seq_path, report_path, target_path;
    std::string basis_name = "plus";
    std::vector<int> degrees;
    std::vector<double> taus;
    std::vector<double> params;
    std::vector<int> log_eps;

    auto add_family_flags = [&fam](CLI::App* cmd) {
        cmd->add_option("--family", fam.family,
                        "hs, random, threshold, rect, sign, inverse, "
                        "matrix_inversion")
            ->required();
        cmd->add_option("--tau", fam.tau, "evolution time (hs)");
        cmd->add_option("--eps", fam.eps, "approximation accuracy");
        cmd->add_option("--n", fam.n, "degree (random)");
        cmd->add_option("--seed", fam.seed, "random stream seed");
        cmd->add_option("--delta", fam.delta, "gap or transition width");
        cmd->add_option("--t", fam.t, "window half width (rect)");
        cmd->add_option("--a", fam.a, "sign offset");
        cmd->add_option("--kappa", fam.kappa,
                        "condition number, or sign transition half width");
    };

    CLI::App* generate = app.add_subcommand(
        "generate", "build a bounded target pair and write it as JSON");
    add_family_flags(generate);
    generate->add_option("--out", out_path, "TargetPair JSON path")->required();

    CLI::App* complete = app.add_subcommand(
        "complete", "extend a target pair to a pointwise unitary quadruple");
    complete->add_option("--in", in_path, "TargetPair JSON path")->required();
    complete->add_option("--out", out_path, "CompletedQuadruple JSON path")
        ->required();
    complete->add_option("--eps-fejer", cfg.eps_fejer,
                         "Newton convergence threshold");
    complete->add_option("--max-iter", cfg.max_iter, "Newton iteration budget");

    CLI::App* decompose = app.add_subcommand(
        "decompose", "peel a completed quadruple into a projector sequence");
    decompose->add_option("--in", in_path, "CompletedQuadruple JSON path")
        ->required();
    decompose->add_option("--out", out_path, "QspSequence JSON path")
        ->required();
    decompose->add_option("--gates", gates_path,
                          "also export the circuit gate list here");

    CLI::App* verify = app.add_subcommand(
        "verify", "measure a sequence against its target on a grid");
    verify->add_option("--sequence", in_path, "QspSequence JSON path")
        ->required();
    verify->add_option("--target", target_path, "TargetPair JSON path")
        ->required();
    verify->add_option("--out", out_path, "VerificationReport JSON path")
        ->required();
    verify->add_option("--grid", cfg.grid_points,
                       "grid points, 0 picks 8*(2n+1)");
    verify->add_option("--basis", basis_name, "readout basis, plus or zero");
    verify->add_option("--points", points_path, "per point CSV dump path");

    CLI::App* pipeline = app.add_subcommand(
        "pipeline", "complete, decompose and verify a target pair end to end");
    pipeline->add_option("--in", in_path, "TargetPair JSON path")->required();
    pipeline->add_option("--quadruple", quad_path,
                         "CompletedQuadruple JSON path")
        ->required();
    pipeline->add_option("--sequence", seq_path, "QspSequence JSON path")
        ->required();
    pipeline->add_option("--report", report_path,
                         "VerificationReport JSON path")
        ->required();
    pipeline->add_option("--points", points_path, "per point CSV dump path");
    pipeline->add_option("--summary", summary_path,
                         "also write the summary row as CSV here");
    pipeline->add_option("--eps-fejer", cfg.eps_fejer,
                         "Newton convergence threshold");
    pipeline->add_option("--max-iter", cfg.max_iter, "Newton iteration budget");
    pipeline->add_option("--grid", cfg.grid_points,
                         "grid points, 0 picks 8*(2n+1)");
    pipeline->add_option("--basis", basis_name, "readout basis, plus or zero");

    CLI::App* bench = app.add_subcommand(
        "bench", "run a family sweep and tabulate error and completion time");
    bench->add_option("--family", fam.family, "random or hs")->required();
    bench->add_option("--degrees", degrees,
                      "degree list for the random sweep")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--taus", taus, "evolution time list for the hs sweep")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", fam.seed, "seed for the random sweep");
    bench->add_option("--eps", fam.eps, "approximation accuracy for hs");
    bench->add_option("--out", out_path, "benchmark CSV path")->required();
    bench->add_option("--eps-fejer", cfg.eps_fejer,
                      "Newton convergence threshold");
    bench->add_option("--max-iter", cfg.max_iter, "Newton iteration budget");

    CLI::App* access = app.add_subcommand(
        "accessibility", "survey coefficient magnitudes across a parameter grid");
    access->add_option("--family", fam.family, "threshold or rect")->required();
    access->add_option("--params", params,
                       "gap or width values, default per family")
        ->delimiter(',');
    access->add_option("--log-eps", log_eps,
                       "log10(1/eps) values, default per family")
        ->delimiter(',');
    access->add_option("--out", out_path, "map CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfg.basis = basis_name;
    cfg.seed = fam.seed;

    try {
        if (*generate) {
            cfg.eps_fejer = fam.eps;
            try {
                lqsp::TargetPair pair = build_target(fam);
                lqsp::save_json(out_path, lqsp::target_pair_to_json(pair), cfg);
            } catch (const lqsp::CoefficientOverflowError& e) {
                // The instance exists mathematically but not in binary64; the
                // orderly outcome is a report saying so, not a failure.
                json report{{"kind", "overflow_report"},
                            {"family", fam.family},
                            {"max_log10_coeff", e.max_log10_coeff},
                            {"message", e.what()}};
                lqsp::save_json(out_path, report, cfg);
                std::cerr << "coefficients exceed binary64 range, wrote "
                             "overflow report: " << e.what() << "\n";
            }
            return 0;
        }

        if (*complete) {
            lqsp::TargetPair pair =
                lqsp::target_pair_from_json(lqsp::load_json(in_path));
            lqsp::CompletedQuadruple quad =
                lqsp::complete(pair, cfg.eps_fejer, cfg.max_iter);
            lqsp::save_json(out_path, lqsp::quadruple_to_json(quad), cfg);
            return quad.report.wilson.converged ? 0 : 1;
        }

        if (*decompose) {
            lqsp::CompletedQuadruple quad =
                lqsp::quadruple_from_json(lqsp::load_json(in_path));
            lqsp::QspSequence seq =
                lqsp::decompose(lqsp::assemble_matrix_poly(quad));
            lqsp::save_json(out_path, lqsp::sequence_to_json(seq), cfg);
            if (!gates_path.empty()) {
                lqsp::save_json(gates_path, lqsp::gates_to_json(seq), cfg);
            }
            return 0;
        }

        if (*verify) {
            lqsp::QspSequence seq =
                lqsp::sequence_from_json(lqsp::load_json(in_path));
            lqsp::TargetPair pair =
                lqsp::target_pair_from_json(lqsp::load_json(target_path));
            lqsp::VerificationReport rep = lqsp::verify_sequence(
                seq, pair, cfg.grid_points, parse_basis(basis_name),
                points_path);
            lqsp::save_json(out_path, lqsp::verification_to_json(rep), cfg);
            if (!points_path.empty()) {
                append_run_config(points_path, cfg);
            }
            return 0;
        }

        if (*pipeline) {
            lqsp::TargetPair pair =
                lqsp::target_pair_from_json(lqsp::load_json(in_path));
            lqsp::CompletedQuadruple quad;
            lqsp::QspSequence seq;
            lqsp::VerificationReport rep;
            PipelineRow row =
                run_pipeline(pair, cfg, parse_basis(basis_name), &quad, &seq,
                             &rep, points_path);
            if (row.stage.empty() || row.stage == "verify" ||
                row.stage == "decompose") {
                lqsp::save_json(quad_path, lqsp::quadruple_to_json(quad), cfg);
            }
            if (row.stage.empty() || row.stage == "verify") {
                lqsp::save_json(seq_path, lqsp::sequence_to_json(seq), cfg);
            }
            if (row.stage.empty()) {
                lqsp::save_json(report_path, lqsp::verification_to_json(rep),
                                cfg);
                if (!points_path.empty()) {
                    append_run_config(points_path, cfg);
                }
            }
            std::cout << kSummaryHeader << "\n" << summary_row(row) << "\n";
            if (!summary_path.empty()) {
                write_csv(summary_path, kSummaryHeader, {summary_row(row)},
                          cfg);
            }
            if (!row.stage.empty()) {
                std::cerr << "pipeline failed at " << row.stage << ": "
                          << row.detail << "\n";
                return 1;
            }
            return 0;
        }

        if (*bench) {
            size_t count = 0;
            if (fam.family == "random") {
                if (degrees.empty()) {
                    std::cerr << "bench --family random needs a nonempty "
                                 "--degrees list\n";
                    return 2;
                }
                count = degrees.size();
            } else if (fam.family == "hs") {
                if (taus.empty()) {
                    std::cerr << "bench --family hs needs a nonempty --taus "
                                 "list\n";
                    return 2;
                }
                count = taus.size();
            } else {
                std::cerr << "bench supports families random and hs\n";
                return 2;
            }

            // Instances run concurrently; rows land at their sweep index so
            // the output order never depends on scheduling.
            std::vector<std::string> rows(count);
            bool any_failed = false;
            lqsp::parallel_for(count, lqsp::resolve_threads(cfg),
                               [&](size_t i) {
                FamilyArgs inst = fam;
                std::string param;
                if (fam.family == "random") {
                    inst.n = degrees[i];
                    param = lqsp::format_double(
                        static_cast<double>(fam.seed));
                } else {
                    inst.tau = taus[i];
                    param = lqsp::format_double(taus[i]);
                }
                PipelineRow row;
                try {
                    row = run_pipeline(build_target(inst), cfg,
                                       parse_basis(basis_name));
                } catch (const lqsp::Error& e) {
                    // A builder rejection costs one row, not the sweep.
                    row.family = fam.family;
                    row.n = fam.family == "random" ? inst.n : 0;
                    row.stage = "generate";
                    row.detail = e.what();
                }
                if (!row.stage.empty()) {
                    any_failed = true;
                    std::cerr << row.family << " instance " << param
                              << " failed at " << row.stage << ": "
                              << row.detail << "\n";
                }
                rows[i] = bench_row(row, param);
            });
            write_csv(out_path, kBenchHeader, rows, cfg);
            for (const std::string& row : rows) {
                std::cout << row << "\n";
            }
            return any_failed ? 1 : 0;
        }

        if (*access) {
            if (fam.family != "threshold" && fam.family != "rect") {
                std::cerr << "accessibility supports families threshold and "
                             "rect\n";
                return 2;
            }
            if (params.empty()) {
                params = fam.family == "threshold"
                             ? std::vector<double>{0.1, 0.05, 0.01, 0.005, 0.001}
                             : std::vector<double>{0.3, 0.4, 0.5};
            }
            if (log_eps.empty()) {
                int top = fam.family == "threshold" ? 14 : 3;
                for (int e = 1; e <= top; ++e) log_eps.push_back(e);
            }
            std::vector<lqsp::AccessibilityCell> cells =
                lqsp::accessibility_map(fam.family, params, log_eps);
            std::vector<std::string> rows;
            rows.reserve(cells.size());
            for (const lqsp::AccessibilityCell& cell : cells) {
                rows.push_back(fam.family + "," +
                               lqsp::format_double(cell.param) + "," +
                               std::to_string(cell.log10_inv_eps) + "," +
                               lqsp::format_double(cell.max_log10_coeff) + "," +
                               lqsp::format_double(cell.min_log10_nonzero_coeff) +
                               "," + (cell.overflow ? "1" : "0") + "," +
                               lqsp::format_double(cell.dynamic_range_digits));
            }
            write_csv(out_path, kAccessHeader, rows, cfg);
            return 0;
        }
    } catch (const lqsp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON input: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
