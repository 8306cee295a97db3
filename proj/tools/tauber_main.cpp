// Command-line front end: expand / sieve / constants / verify / kernels.
//
// Exit codes: 0 success, 2 usage error, 3 numeric-contract violation,
// 4 I/O error. Every failure prints a single diagnostic line to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tauber/errors.hpp"
#include "tauber/euler_factor.hpp"
#include "tauber/euler_product.hpp"
#include "tauber/gamma.hpp"
#include "tauber/io_format.hpp"
#include "tauber/kernels.hpp"
#include "tauber/poly.hpp"
#include "tauber/predict.hpp"
#include "tauber/rational.hpp"
#include "tauber/sieve.hpp"

namespace {

using nlohmann::json;
using namespace tauber;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct CommonOpts {
    std::string c_text = "2/3";
    std::uint64_t x_max = 10'000'000;
    std::uint64_t prime_cutoff = 1'000'000;
    unsigned per_decade = 10;
    std::uint64_t segment_size = 1u << 20;
    std::string out_path;
    std::string format;
    std::string resume_path;
    std::string sums_path;
    std::size_t order = 6;
    std::uint64_t abort_after_segments = 0;
};

Rational parse_weight(const std::string& text) {
    Rational c(0);
    try {
        c = Rational::from_string(text);
    } catch (const std::exception&) {
        throw UsageError("cannot parse --c value '" + text + "' (expected l/m)");
    }
    if (c <= Rational(0) || c > Rational(1))
        throw UsageError("--c must lie in (0, 1], got " + text);
    return c;
}

void check_format(const CommonOpts& opts, const std::string& supported) {
    if (!opts.format.empty() && opts.format != supported)
        throw UsageError("this subcommand only emits " + supported);
}

void emit(const CommonOpts& opts, const std::string& content) {
    if (opts.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::trunc | std::ios::binary);
    if (!out) throw io_error("cannot open output path: " + opts.out_path);
    out << content;
    if (!out) throw io_error("write failed: " + opts.out_path);
}

json rational_coeffs(const std::vector<Rational>& coeffs) {
    json arr = json::array();
    for (const Rational& r : coeffs) arr.push_back(r.str());
    return arr;
}

// ---- expand ---------------------------------------------------------------

int run_expand(const CommonOpts& opts) {
    check_format(opts, "json");
    const Rational c = parse_weight(opts.c_text);
    const RegularizedFactor reg = euler_regularize(c, opts.order);

    json j;
    j["c"] = c.str();
    j["l"] = reg.l;
    j["m"] = reg.m;
    j["order"] = opts.order;
    j["local_factor_power"] = rational_coeffs(local_factor_power(c).coeffs());
    j["cleared_factor"] = rational_coeffs(cleared_factor(c).coeffs());
    j["regularized_series"] = rational_coeffs(reg.series.coeffs());
    j["quintic_identity"] = quintic_identity_check();
    emit(opts, j.dump(2) + "\n");
    return 0;
}

// ---- sieve ----------------------------------------------------------------

std::string csv_row(const PartialSumRow& row) {
    return std::to_string(row.x) + "," + format_double(row.s) + "\n";
}

SieveConfig make_sieve_config(const CommonOpts& opts, const Rational& c) {
    SieveConfig config;
    config.x_max = opts.x_max;
    config.segment_size = opts.segment_size;
    config.c = c;
    config.checkpoints = checkpoint_grid(opts.x_max, opts.per_decade);
    return config;
}

// Existing CSV must be a well-formed prefix of the run: keep the header and
// every complete row with X < next_n, drop anything else (a row written just
// before an interruption may be ahead of the recorded state).
std::vector<std::string> load_csv_prefix(const std::string& path, std::uint64_t next_n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("resume: cannot open existing output CSV: " + path);
    std::vector<std::string> lines;
    std::string line;
    if (!std::getline(in, line) || line != "X,S")
        throw io_error("resume: existing output is not a sieve CSV: " + path);
    lines.push_back(line);
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) break;
        std::uint64_t x = 0;
        try {
            x = parse_u64(line.substr(0, comma));
            (void)parse_double(line.substr(comma + 1));
        } catch (const io_error&) {
            break;  // partial trailing write
        }
        if (x >= next_n) break;
        lines.push_back(line);
    }
    return lines;
}

int run_sieve(const CommonOpts& opts) {
    check_format(opts, "csv");
    const Rational c = parse_weight(opts.c_text);
    const SieveConfig config = make_sieve_config(opts, c);

    if (opts.resume_path.empty()) {
        if (opts.abort_after_segments > 0)
            throw UsageError("--abort-after-segments needs --resume to be useful");
        const PartialSumSeries series = partial_sums(config);
        std::string content = "X,S\n";
        for (const PartialSumRow& row : series.rows) content += csv_row(row);
        emit(opts, content);
        return 0;
    }

    if (opts.out_path.empty())
        throw UsageError("--resume requires --out (the CSV is written incrementally)");

    std::optional<SieveState> resume;
    std::vector<std::string> kept_lines{"X,S"};
    if (std::ifstream probe(opts.resume_path); probe.good()) {
        resume = read_sieve_state(opts.resume_path);
        kept_lines = load_csv_prefix(opts.out_path, resume->next_n);
    }

    std::ofstream out(opts.out_path, std::ios::trunc | std::ios::binary);
    if (!out) throw io_error("cannot open output path: " + opts.out_path);
    for (const std::string& line : kept_lines) out << line << "\n";
    out.flush();
    if (!out) throw io_error("write failed: " + opts.out_path);

    std::uint64_t segments_done = 0;
    bool stopped = false;
    const SegmentCallback on_segment = [&](const SieveState& state,
                                           std::span<const PartialSumRow> rows) {
        for (const PartialSumRow& row : rows) out << csv_row(row);
        out.flush();
        if (!out) throw io_error("write failed: " + opts.out_path);
        write_sieve_state(opts.resume_path, state);
        ++segments_done;
        if (opts.abort_after_segments > 0 && segments_done >= opts.abort_after_segments) {
            stopped = true;
            return false;
        }
        return true;
    };
    partial_sums(config, on_segment, resume ? &*resume : nullptr);
    if (stopped)
        std::cerr << "sieve: stopped after " << segments_done
                  << " segment(s); rerun with --resume to continue\n";
    return 0;
}

// ---- constants ------------------------------------------------------------

json constants_json(const Rational& c, std::uint64_t prime_cutoff) {
    const LeadingConstantReport report = leading_constant_report(c, prime_cutoff);
    json j;
    j["c"] = c.str();
    j["l"] = report.pole.l;
    j["m"] = report.pole.m;
    j["alpha"] = report.pole.alpha;
    j["A"] = report.pole.a;
    j["F1"] = report.cleared.value;
    j["zeta2"] = zeta2();
    j["cutoff"] = report.cutoff;
    j["tail_bound"] = report.log_tail_bound;
    return j;
}

int run_constants(const CommonOpts& opts) {
    check_format(opts, "json");
    const Rational c = parse_weight(opts.c_text);
    emit(opts, constants_json(c, opts.prime_cutoff).dump(2) + "\n");
    return 0;
}

// ---- verify ---------------------------------------------------------------

PartialSumSeries load_sums_csv(const std::string& path, const Rational& c) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open sums CSV: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "X,S")
        throw io_error("sums CSV must start with header 'X,S': " + path);
    PartialSumSeries series;
    series.c = c;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw io_error("malformed sums CSV row: '" + line + "'");
        PartialSumRow row{};
        row.x = parse_u64(line.substr(0, comma));
        row.s = parse_double(line.substr(comma + 1));
        row.compensation = 0.0;
        series.rows.push_back(row);
    }
    if (!series.rows.empty()) series.x_max = series.rows.back().x;
    return series;
}

int run_verify(const CommonOpts& opts) {
    check_format(opts, "csv");
    const Rational c = parse_weight(opts.c_text);

    PartialSumSeries series;
    if (!opts.sums_path.empty()) {
        series = load_sums_csv(opts.sums_path, c);
    } else {
        series = partial_sums(make_sieve_config(opts, c));
    }
    const PoleData pole = leading_constant(c, opts.prime_cutoff);
    const AsymptoticReport report = compare(series, pole);

    std::string content = "X,S,prediction,ratio\n";
    for (const AsymptoticRow& row : report.rows) {
        content += std::to_string(row.x) + "," + format_double(row.s) + "," +
                   format_double(row.prediction) + "," + format_double(row.ratio) + "\n";
    }
    json trailer;
    trailer["decade_medians"] = json::array();
    for (const DecadeStat& stat : report.decade_stats) {
        trailer["decade_medians"].push_back(
            {{"decade", stat.decade},
             {"count", stat.count},
             {"median_abs_dev", stat.median_abs_dev}});
    }
    trailer["pole"] = {{"d", pole.d},     {"l", pole.l},  {"m", pole.m},
                       {"alpha", pole.alpha}, {"A", pole.a}};
    content += "# " + trailer.dump() + "\n";
    emit(opts, content);
    return 0;
}

// ---- kernels --------------------------------------------------------------

int run_kernels(const CommonOpts& opts, std::vector<double> laplace_alphas,
                std::vector<double> limit_alphas, KernelCheckSpec spec) {
    check_format(opts, "csv");
    if (laplace_alphas.empty()) laplace_alphas = {0.5, 2.0 / 3.0, 1.0, 1.5};
    if (limit_alphas.empty()) limit_alphas = {2.0 / 3.0, 1.5};

    std::string content = "alpha,s,residual\n";
    for (const double alpha : laplace_alphas)
        for (const double s : spec.s_samples)
            content += format_double(alpha) + "," + format_double(s) + "," +
                       format_double(laplace_identity_check(alpha, s, spec)) + "\n";

    for (const double alpha : limit_alphas) {
        content += "\n# kernel_limit alpha=" + format_double(alpha) + "\nv,value\n";
        for (const auto& [v, value] : kernel_limit_check(alpha, spec))
            content += format_double(v) + "," + format_double(value) + "\n";
    }
    emit(opts, content);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotics of sum_{n<=X} c^Omega(n): exact Euler-factor algebra, "
                 "segmented sieve, certified Euler-product constants, and comparison "
                 "against the predicted main term."};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<double> laplace_alphas;
    std::vector<double> limit_alphas;
    KernelCheckSpec spec;

    auto add_common = [&](CLI::App* sub, bool with_c = true) {
        if (with_c) sub->add_option("--c", opts.c_text, "weight base c as a rational l/m");
        sub->add_option("--out", opts.out_path, "output path (stdout when omitted)");
        sub->add_option("--format", opts.format, "output format (csv or json)")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "exact Euler-factor expansions");
    add_common(expand);
    expand->add_option("--order", opts.order, "series truncation order");

    CLI::App* sieve = app.add_subcommand("sieve", "partial sums S(X) at checkpoints");
    add_common(sieve);
    sieve->add_option("--x-max", opts.x_max, "sieve upper limit");
    sieve->add_option("--per-decade", opts.per_decade, "checkpoints per decade");
    sieve->add_option("--segment-size", opts.segment_size, "sieve segment length");
    sieve->add_option("--resume", opts.resume_path, "state file for resumable runs");
    sieve->add_option("--abort-after-segments", opts.abort_after_segments,
                      "stop early after this many segments (simulates interruption)");

    CLI::App* constants = app.add_subcommand("constants", "pole data and constant A");
    add_common(constants);
    constants->add_option("--prime-cutoff", opts.prime_cutoff, "Euler product cutoff P");

    CLI::App* verify = app.add_subcommand("verify", "compare sums against the prediction");
    add_common(verify);
    verify->add_option("--x-max", opts.x_max, "sieve upper limit");
    verify->add_option("--per-decade", opts.per_decade, "checkpoints per decade");
    verify->add_option("--segment-size", opts.segment_size, "sieve segment length");
    verify->add_option("--prime-cutoff", opts.prime_cutoff, "Euler product cutoff P");
    verify->add_option("--sums", opts.sums_path, "reuse an existing sieve CSV");

    CLI::App* kernels = app.add_subcommand("kernels", "analytic ingredient spot-checks");
    add_common(kernels, false);
    kernels->add_option("--alpha", laplace_alphas, "Laplace-identity alpha grid");
    kernels->add_option("--s", spec.s_samples, "s samples (> 1)");
    kernels->add_option("--kernel-alpha", limit_alphas, "kernel-limit alpha grid");
    kernels->add_option("--v", spec.v_grid, "kernel-limit v grid (increasing)");
    kernels->add_option("--quad-tol", spec.quad_tol, "quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (expand->parsed()) return run_expand(opts);
        if (sieve->parsed()) return run_sieve(opts);
        if (constants->parsed()) return run_constants(opts);
        if (verify->parsed()) return run_verify(opts);
        if (kernels->parsed()) return run_kernels(opts, laplace_alphas, limit_alphas, spec);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
