// transmute: CSV-emitting front end for the rank-transmutation library.
//
// Subcommands: table, sample, moments, calibrate, region, check.
// Exit codes: 0 ok, 2 spec parse error, 3 invalid map, 4 analytic moments on
// an unsupported base, 5 nonexistent moments, 6 unreachable calibration target.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "transmute/moments.hpp"
#include "transmute/parse.hpp"
#include "transmute/transmuted.hpp"

namespace {

using namespace transmute;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Output sink: --out path or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw std::runtime_error("cannot open output file " + path);
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

struct CommonOpts {
    std::string base_spec = "normal";
    std::string map_spec;
    double lo = 0.0, hi = 0.0;
    long long n = -1;
    std::uint64_t seed = 0;
    int streams = 1;
    std::string mode = "analytic";
    std::string out_path;
    bool grid_set = false;
};

void default_grid(const std::string& base_spec, const BaseDistribution& base,
                  double& lo, double& hi) {
    if (base_spec.rfind("exp", 0) == 0) {
        const auto* e = dynamic_cast<const ExponentialBase*>(&base);
        lo = 0.0;
        hi = 8.0 / e->rate();
    } else if (base_spec.rfind("uniform", 0) == 0) {
        lo = 0.0;
        hi = 1.0;
    } else {
        lo = -4.0;
        hi = 4.0;
    }
}

int cmd_table(const CommonOpts& o) {
    const BaseDistPtr base = parse_base_spec(o.base_spec);
    const MapPtr map = make_map(parse_map_spec(o.map_spec));
    const TransmutedDistribution dist(base, map);
    double lo = o.lo, hi = o.hi;
    if (!o.grid_set)
        default_grid(o.base_spec, *base, lo, hi);
    const long long n = o.n < 0 ? 401 : o.n;
    if (n < 2 || !(lo < hi))
        throw ParseError("table: need --n >= 2 and --lo < --hi");
    Sink sink(o.out_path);
    sink.out() << "x,pdf,cdf\n";
    for (long long i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(n - 1);
        sink.out() << g17(x) << ',' << g17(dist.pdf(x)) << ',' << g17(dist.cdf(x))
                   << '\n';
    }
    return 0;
}

int cmd_sample(const CommonOpts& o) {
    const BaseDistPtr base = parse_base_spec(o.base_spec);
    const MapPtr map = make_map(parse_map_spec(o.map_spec));
    const TransmutedDistribution dist(base, map);
    const long long n = o.n < 0 ? 0 : o.n;
    const int streams = std::max(1, o.streams);
    Sink sink(o.out_path);
    // Chunked round-down split; the first (n mod k) streams take one extra.
    const long long chunk = n / streams, extra = n % streams;
    for (int s = 0; s < streams; ++s) {
        const long long count = chunk + (s < extra ? 1 : 0);
        const SampleStream stream{o.seed, static_cast<std::uint64_t>(s)};
        for (long long i = 0; i < count; ++i)
            sink.out() << g17(dist.quantile(
                              uniform_open01(stream, static_cast<std::uint64_t>(i))))
                       << '\n';
    }
    return 0;
}

void emit_moments(Sink& sink, const MomentSummary& m) {
    sink.out() << "k,value\n";
    for (int k = 1; k <= 4; ++k)
        sink.out() << k << ',' << g17(m.raw[k - 1]) << '\n';
    sink.out() << "mean," << g17(m.mean) << '\n';
    sink.out() << "variance," << g17(m.variance) << '\n';
    sink.out() << "skewness," << g17(m.skewness) << '\n';
    sink.out() << "exkurt," << g17(m.excess_kurtosis) << '\n';
}

int cmd_moments(const CommonOpts& o) {
    const BaseDistPtr base = parse_base_spec(o.base_spec);
    const MapSpec spec = parse_map_spec(o.map_spec);
    Sink sink(o.out_path);
    if (o.mode == "analytic") {
        if (o.base_spec != "normal") {
            std::cerr << "analytic moments require the normal base\n";
            return 4;
        }
        const double a1 = spec.kind == MapKind::quadratic ? -spec.p1
                          : spec.kind == MapKind::polynomial ? spec.p1
                                                             : 0.0;
        const double a2 = spec.kind == MapKind::symmetric_cubic ? spec.p1
                          : spec.kind == MapKind::polynomial    ? spec.p2
                                                                : 0.0;
        emit_moments(sink, analytic_moments_normal(a1, a2));
        return 0;
    }
    const MapPtr map = make_map(spec);
    const auto dist = std::make_shared<TransmutedDistribution>(base, map);
    if (o.mode == "quadrature") {
        emit_moments(sink, quadrature_moments(*dist));
        return 0;
    }
    if (o.mode == "monte-carlo") {
        if (dist->max_finite_moment() < 4)
            throw MomentError("monte-carlo moments of " + dist->name() +
                              " do not converge (moments do not exist)");
        const long long n = o.n < 0 ? 100000 : o.n;
        emit_moments(sink, sample_moments(sample(
                               *dist, {o.seed, 0}, static_cast<std::size_t>(n))));
        return 0;
    }
    throw ParseError("moments: unknown --mode '" + o.mode +
                     "' (analytic|quadrature|monte-carlo)");
}

int cmd_region(const CommonOpts& o) {
    const long long n = o.n < 0 ? 81 : o.n;
    const double lo = o.grid_set ? o.lo : -2.0;
    const double hi = o.grid_set ? o.hi : 4.0;
    if (n < 2 || !(lo < hi))
        throw ParseError("region: need --n >= 2 and --lo < --hi");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(n - 1));
    Sink sink(o.out_path);
    sink.out() << "alpha2,alpha1_min,alpha1_max\n";
    for (const RegionRow& row : trace_region(grid))
        sink.out() << g17(row.alpha2) << ',' << g17(row.alpha1_min) << ','
                   << g17(row.alpha1_max) << '\n';
    return 0;
}

int cmd_calibrate(double skew, double exkurt, const CommonOpts& o) {
    Sink sink(o.out_path);
    const Calibration c = calibrate({skew, exkurt});
    const MomentSummary m = analytic_moments_normal(c.alpha1, c.alpha2);
    sink.out() << "alpha1,alpha2,mu,sigma\n";
    sink.out() << g17(c.alpha1) << ',' << g17(c.alpha2) << ',' << g17(m.mean)
               << ',' << g17(std::sqrt(m.variance)) << '\n';
    return 0;
}

int cmd_check(const std::string& map_spec) {
    const ValidityReport rep = check_map(parse_map_spec(map_spec));
    std::cout << "valid: " << (rep.valid ? "yes" : "no") << '\n';
    std::cout << "min_slope: " << g17(rep.min_slope) << '\n';
    std::cout << "argmin: " << g17(rep.argmin) << '\n';
    std::cout << "endpoint_slopes: " << g17(rep.endpoint_slopes.first) << ','
              << g17(rep.endpoint_slopes.second) << '\n';
    if (rep.clip_intervals.empty()) {
        std::cout << "clip_intervals: none\n";
    } else {
        std::cout << "clip_intervals:";
        for (const ClipInterval& c : rep.clip_intervals)
            std::cout << " [" << g17(c.lo) << ',' << g17(c.hi) << ']';
        std::cout << '\n';
    }
    return rep.valid ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank transmutation maps: tables, samples, moments, calibration"};
    app.require_subcommand(1);

    CommonOpts o;
    double skew = 0.0, exkurt = 0.0;

    auto add_common = [&o](CLI::App* cmd, bool with_map = true) {
        cmd->add_option("--base", o.base_spec, "base distribution spec");
        if (with_map)
            cmd->add_option("--map", o.map_spec, "rank transmutation map spec")
                ->required();
        cmd->add_option("--lo", o.lo, "grid lower bound");
        cmd->add_option("--hi", o.hi, "grid upper bound");
        cmd->add_option("--n", o.n, "grid points / sample count");
        cmd->add_option("--seed", o.seed, "RNG seed");
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
    };

    CLI::App* table = app.add_subcommand("table", "pdf/cdf table on a grid");
    add_common(table);
    CLI::App* samplec = app.add_subcommand("sample", "Monte Carlo samples");
    add_common(samplec);
    samplec->add_option("--streams", o.streams, "independent sub-streams");
    CLI::App* momentsc = app.add_subcommand("moments", "raw and shape moments");
    add_common(momentsc);
    momentsc->add_option("--mode", o.mode, "analytic|quadrature|monte-carlo");
    CLI::App* regionc =
        app.add_subcommand("region", "valid (alpha1, alpha2) region boundary");
    regionc->add_option("--lo", o.lo, "alpha2 lower bound");
    regionc->add_option("--hi", o.hi, "alpha2 upper bound");
    regionc->add_option("--n", o.n, "grid points");
    regionc->add_option("--out", o.out_path, "output file (default stdout)");
    CLI::App* calibratec =
        app.add_subcommand("calibrate", "match standardized skew/kurtosis");
    calibratec->add_option("--skew", skew, "target skewness")->required();
    calibratec->add_option("--exkurt", exkurt, "target excess kurtosis")->required();
    calibratec->add_option("--out", o.out_path, "output file (default stdout)");
    std::string check_spec;
    CLI::App* checkc = app.add_subcommand("check", "map validity report");
    checkc->add_option("--map", check_spec, "map spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    o.grid_set = (table->count("--lo") && table->count("--hi")) ||
                 (regionc->count("--lo") && regionc->count("--hi"));

    try {
        if (table->parsed())
            return cmd_table(o);
        if (samplec->parsed())
            return cmd_sample(o);
        if (momentsc->parsed())
            return cmd_moments(o);
        if (regionc->parsed())
            return cmd_region(o);
        if (calibratec->parsed())
            return cmd_calibrate(skew, exkurt, o);
        if (checkc->parsed())
            return cmd_check(check_spec);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidMapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cerr << "  min_slope=" << e.report.min_slope
                  << " at u=" << e.report.argmin << '\n';
        return 3;
    } catch (const UnreachableTargetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 6;
    } catch (const MomentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
