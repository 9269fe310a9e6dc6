// rootd: samples a high-order educated Newton map on a uniform grid and
// distills the real roots of a polynomial on an interval, with per-root
// error estimates.
//
// Subcommands:
//   distill    run the full filtration pipeline, write a root report
//   sample     write the sampled table (CSV), optionally an SVG scatter
//   verify     distill, then compare against the closed-form Chebyshev roots
//   make-poly  write a Chebyshev polynomial file at a chosen precision

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "rootd/distill.hpp"
#include "rootd/io.hpp"
#include "rootd/oracle.hpp"

using namespace rootd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitNumeric = 3;

struct RunConfig {
    long chebyshev = -1;
    std::string poly_path;
    std::vector<std::string> interval;  // two decimal strings
    long prec = 0;                      // 0: take the polynomial file's prec
    std::string h;
    long k = 0;
    std::string bisector_c, residual_threshold, error_tol, dedup_tol;
    std::string out_path;
    std::string format = "json";
    std::string svg_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

void add_common(CLI::App* cmd, RunConfig& rc, bool needs_h) {
    cmd->set_help_flag("--help", "print this help message");  // frees -h for --h
    cmd->add_option("--chebyshev", rc.chebyshev, "Chebyshev polynomial degree d");
    cmd->add_option("--poly", rc.poly_path, "polynomial JSON file");
    cmd->add_option("--interval", rc.interval, "interval bounds a b")->expected(2)->required();
    cmd->add_option("--prec", rc.prec, "working precision in decimal digits");
    auto* h = cmd->add_option("--h", rc.h, "mesh width");
    if (needs_h) h->required();
    cmd->add_option("--k", rc.k, "fold parameter (map order 2^(k+1))");
    cmd->add_option("--bisector-c", rc.bisector_c, "bisector filter constant");
    cmd->add_option("--residual-threshold", rc.residual_threshold, "residual filter threshold");
    cmd->add_option("--error-tol", rc.error_tol, "error estimate tolerance");
    cmd->add_option("--dedup-tol", rc.dedup_tol, "duplicate collapse tolerance");
    cmd->add_option("--out", rc.out_path, "output file path");
    cmd->add_option("--format", rc.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--svg", rc.svg_path, "SVG scatter plot path");
    cmd->add_option("--threads", rc.threads, "grid evaluation threads");
}

struct Resolved {
    PrecContext ctx;
    Polynomial f;
    MPReal a, b;
    Mesh mesh;
    MapConfig cfg;
    FilterParams params;
};

Resolved resolve(const RunConfig& rc) {
    if ((rc.chebyshev >= 0) == !rc.poly_path.empty()) {
        throw std::invalid_argument("exactly one of --chebyshev or --poly is required");
    }

    PrecContext ctx;
    Polynomial f = [&] {
        if (rc.chebyshev >= 0) {
            if (rc.prec < 1) {
                throw std::invalid_argument("--prec is required with --chebyshev");
            }
            if (rc.chebyshev < 1 || rc.chebyshev > 2000) {
                throw std::invalid_argument("--chebyshev degree must be in [1, 2000]");
            }
            ctx = make_context(rc.prec);
            return round_coeffs(chebyshev_T(rc.chebyshev), ctx);
        }
        Polynomial p = load_polynomial(rc.poly_path);
        // File prec is the storage precision; --prec overrides the working
        // precision (widening is exact).
        ctx = rc.prec >= 1 ? make_context(rc.prec) : p.ctx;
        return rc.prec >= 1 ? convert_to_context(p, ctx) : p;
    }();
    if (f.degree() < 1) {
        throw std::invalid_argument("polynomial must have degree >= 1");
    }

    MPReal a = parse_decimal(rc.interval[0], ctx);
    MPReal b = parse_decimal(rc.interval[1], ctx);
    MPReal h = parse_decimal(rc.h.empty() ? "0" : rc.h, ctx);
    Mesh mesh = uniform_mesh(a, b, h);
    MapConfig cfg = make_map_config(f, a, b, rc.k);

    FilterParams params = default_filter_params(ctx);
    if (!rc.bisector_c.empty()) params.bisector_c = parse_decimal(rc.bisector_c, ctx);
    if (!rc.residual_threshold.empty())
        params.residual_threshold = parse_decimal(rc.residual_threshold, ctx);
    if (!rc.error_tol.empty()) params.error_tol = parse_decimal(rc.error_tol, ctx);
    if (!rc.dedup_tol.empty()) params.dedup_tol = parse_decimal(rc.dedup_tol, ctx);

    return Resolved{ctx, f, std::move(a), std::move(b), std::move(mesh), std::move(cfg),
                    std::move(params)};
}

// Display convention for very high precision: first and last 100 digits.
std::string display_value(const MPReal& v, const PrecContext& ctx) {
    std::string s = to_decimal(v, ctx.prec_digits);
    if (ctx.prec_digits <= 200 || s.size() <= 210) return s;
    return s.substr(0, 105) + " ... " + s.substr(s.size() - 105) + "  (" +
           std::to_string(ctx.prec_digits) + " digits)";
}

int cmd_distill(const RunConfig& rc) {
    Resolved r = resolve(rc);
    RootReport rep = distill(r.cfg, r.mesh, r.params, rc.threads);

    std::string desc = describe_run(r.cfg, r.mesh, r.params, rc.threads);
    std::string text = rc.format == "csv" ? report_to_csv(rep, r.ctx, desc)
                                          : report_to_json(rep, r.cfg, r.mesh, r.params, rc.threads);
    if (!rc.out_path.empty()) {
        write_text_file(rc.out_path, text);
    }
    if (!rc.svg_path.empty()) {
        auto L = sample_map(r.cfg, r.mesh, rc.threads);
        write_text_file(rc.svg_path, samples_to_svg(L, r.a, r.b, desc));
    }

    printf("roots: %zu\n", rep.roots.size());
    printf("stages: numeric=%zu data1=%zu data2=%zu union=%zu finalA=%zu final=%zu\n",
           rep.stages.numeric, rep.stages.data1, rep.stages.data2, rep.stages.unions,
           rep.stages.finalA, rep.stages.final_);
    if (!rep.roots.empty()) {
        const auto& top = rep.roots.back();
        printf("largest root: %s\n", display_value(top.root, r.ctx).c_str());
        printf("  residual: %s\n", to_decimal(top.residual, 3).c_str());
        if (!top.error_estimate.is_null()) {
            printf("  error estimate: %s\n", to_decimal(top.error_estimate.numeric(), 3).c_str());
        }
    }
    if (rc.out_path.empty()) {
        // no file requested: emit the report on stdout for piping
        std::cout << text;
    }
    return kExitOk;
}

int cmd_sample(const RunConfig& rc) {
    Resolved r = resolve(rc);
    SampleList L = sample_map(r.cfg, r.mesh, rc.threads);
    std::string desc = describe_run(r.cfg, r.mesh, r.params, rc.threads);
    std::string csv = samples_to_csv(L, r.ctx, desc);
    if (!rc.out_path.empty()) {
        write_text_file(rc.out_path, csv);
        printf("wrote %zu rows to %s\n", L.size(), rc.out_path.c_str());
    } else {
        std::cout << csv;
    }
    if (!rc.svg_path.empty()) {
        write_text_file(rc.svg_path, samples_to_svg(L, r.a, r.b, desc));
        printf("wrote scatter plot to %s\n", rc.svg_path.c_str());
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& rc) {
    if (rc.chebyshev < 1) {
        throw std::invalid_argument("verify requires --chebyshev (closed-form roots)");
    }
    Resolved r = resolve(rc);
    RootReport rep = distill(r.cfg, r.mesh, r.params, rc.threads);
    auto oracle = chebyshev_roots(rc.chebyshev, r.a, r.b, r.ctx);

    MPReal maxdiff(r.ctx);
    std::string table;
    table += "# config: " + describe_run(r.cfg, r.mesh, r.params, rc.threads) + "\n";
    table += "distilled_root, nearest_oracle_root, abs_difference\n";
    for (const auto& root : rep.roots) {
        if (oracle.empty()) break;
        const OracleRoot* nearest = &oracle[0];
        MPReal best = abs(root.root - oracle[0].value);
        for (const auto& o : oracle) {
            MPReal d = abs(root.root - o.value);
            if (d < best) {
                best = d;
                nearest = &o;
            }
        }
        if (best > maxdiff) maxdiff = best;
        table += display_value(root.root, r.ctx) + ", " + display_value(nearest->value, r.ctx) +
                 ", " + to_decimal(best, 3) + "\n";
    }
    table += "count: distilled=" + std::to_string(rep.roots.size()) + " oracle=" +
             std::to_string(oracle.size()) + "\n";
    table += "max_difference: " +
             (rep.roots.empty() ? std::string("n/a") : to_decimal(maxdiff, 3)) + "\n";

    fputs(table.c_str(), stdout);
    if (!rc.out_path.empty()) {
        write_text_file(rc.out_path, table);
    }
    return kExitOk;
}

int cmd_make_poly(long degree, long prec, const std::string& out) {
    if (degree < 0 || degree > 2000) {
        throw std::invalid_argument("degree must be in [0, 2000]");
    }
    auto ctx = make_context(prec);
    auto p = round_coeffs(chebyshev_T(degree), ctx);
    std::string text = polynomial_to_json(p);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
        printf("wrote %s\n", out.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root distiller: global real-root computation on an interval"};
    app.require_subcommand(1);

    RunConfig rc_distill, rc_sample, rc_verify;
    long mp_degree = -1, mp_prec = 8;
    std::string mp_out;

    auto* distill_cmd = app.add_subcommand("distill", "distill roots with error estimates");
    add_common(distill_cmd, rc_distill, true);
    auto* sample_cmd = app.add_subcommand("sample", "write the sampled map table");
    add_common(sample_cmd, rc_sample, true);
    auto* verify_cmd = app.add_subcommand("verify", "compare distilled roots with closed form");
    add_common(verify_cmd, rc_verify, true);

    auto* mp_cmd = app.add_subcommand("make-poly", "write a Chebyshev polynomial file");
    mp_cmd->add_option("--chebyshev", mp_degree, "degree")->required();
    mp_cmd->add_option("--prec", mp_prec, "coefficient precision in decimal digits")->required();
    mp_cmd->add_option("--out", mp_out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (distill_cmd->parsed()) return cmd_distill(rc_distill);
        if (sample_cmd->parsed()) return cmd_sample(rc_sample);
        if (verify_cmd->parsed()) return cmd_verify(rc_verify);
        if (mp_cmd->parsed()) return cmd_make_poly(mp_degree, mp_prec, mp_out);
    } catch (const std::invalid_argument& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return kExitBadConfig;
    } catch (const std::exception& e) {
        fprintf(stderr, "internal error: %s\n", e.what());
        return kExitNumeric;
    }
    return kExitBadConfig;
}
