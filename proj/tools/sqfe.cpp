// Command-line front end: isolate real roots, print amortization bounds,
// run benchmark grids, and cross-verify a single polynomial.

#include "sqfe/amortize.hpp"
#include "sqfe/bench.hpp"
#include "sqfe/errors.hpp"
#include "sqfe/families.hpp"
#include "sqfe/isolator.hpp"
#include "sqfe/sturm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace sqfe;

namespace {

// exit codes: 0 ok, 1 invalid input, 2 invariant violation, 3 non-convergence
constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitNoConverge = 3;

std::vector<IntPolynomial> load_polynomials(const std::string& arg) {
    if (std::filesystem::exists(arg)) return read_polynomial_file(arg);
    return {IntPolynomial::parse(arg)};
}

std::string approx(const Dyadic& d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", d.to_double());
    return buf;
}

nlohmann::json report_to_json(const IntPolynomial& f, const Interval& I,
                              const IsolationReport& rep) {
    nlohmann::json j;
    j["polynomial"] = f.str();
    j["interval"] = {I.lo.str(), I.hi.str()};
    j["square_free_part"] = rep.g.str();
    j["derivative_part"] = rep.h.str();
    auto intervals = nlohmann::json::array();
    for (const auto& J : rep.isolating_intervals)
        intervals.push_back({J.lo.str(), J.hi.str()});
    j["isolating_intervals"] = intervals;
    auto points = nlohmann::json::array();
    for (const auto& r : rep.point_roots) points.push_back(r.str());
    j["point_roots"] = points;
    auto endpoints = nlohmann::json::array();
    for (const auto& r : rep.endpoint_roots) endpoints.push_back(r.str());
    j["endpoint_roots"] = endpoints;
    j["stats"] = {{"partition_size", rep.stats.partition_size},
                  {"bisections", rep.stats.bisections},
                  {"max_depth", rep.stats.max_depth},
                  {"c0_terminations", rep.stats.c0_terminations},
                  {"c1_terminations", rep.stats.c1_terminations}};
    return j;
}

void print_report(const IntPolynomial& f, const Interval& I, const IsolationReport& rep) {
    std::printf("f = %s   (degree %d, L = %u)\n", f.pretty().c_str(), f.degree(),
                bit_length_L(f));
    std::printf("interval %s\n", I.str().c_str());
    std::printf("%zu real root%s\n", rep.root_count(), rep.root_count() == 1 ? "" : "s");
    for (const auto& r : rep.endpoint_roots)
        std::printf("  endpoint root  %s  = %s\n", r.str().c_str(), approx(r).c_str());
    for (const auto& r : rep.point_roots)
        std::printf("  exact root     %s  = %s\n", r.str().c_str(), approx(r).c_str());
    for (const auto& J : rep.isolating_intervals)
        std::printf("  interval       %s  = [%s, %s]\n", J.str().c_str(), approx(J.lo).c_str(),
                    approx(J.hi).c_str());
    std::printf("stats: #P=%llu bisections=%llu max_depth=%llu C0=%llu C1=%llu\n",
                static_cast<unsigned long long>(rep.stats.partition_size),
                static_cast<unsigned long long>(rep.stats.bisections),
                static_cast<unsigned long long>(rep.stats.max_depth),
                static_cast<unsigned long long>(rep.stats.c0_terminations),
                static_cast<unsigned long long>(rep.stats.c1_terminations));
}

int cmd_isolate(const std::string& input, const std::vector<std::string>& interval,
                bool as_json) {
    const auto polys = load_polynomials(input);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : polys) {
        Interval I = interval.empty()
                         ? Interval(-root_bound(f), root_bound(f))
                         : Interval(Dyadic::parse(interval[0]), Dyadic::parse(interval[1]));
        const IsolationReport rep = isolate(f, I);
        if (as_json)
            out.push_back(report_to_json(f, I, rep));
        else
            print_report(f, I, rep);
    }
    if (as_json) std::printf("%s\n", out.dump(2).c_str());
    return kExitOk;
}

int cmd_bound(const std::string& input) {
    for (const auto& f : load_polynomials(input)) {
        const StoppingModel m = make_stopping_model(f);
        const BoundReport b = bound_report(m);
        std::printf("f = %s   (degree %u, L = %u)\n", f.pretty().c_str(), m.degree_d, m.bits_L);
        std::printf("interval %s\n", m.interval.str().c_str());
        std::printf("  integral 2/G          %.6f\n", b.integral_2_over_G);
        std::printf("  integral 2/F          %.6f\n", b.integral_2_over_F);
        std::printf("  closed-form sum       %.6f\n", b.closed_form_sum);
        std::printf("  25dL + 42 d ln d      %.6f\n", b.paper_constant_bound);
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& family, unsigned d, unsigned L,
               std::uint64_t seed) {
    std::vector<IntPolynomial> polys;
    if (!family.empty())
        polys.push_back(family_generate(family_from_string(family), d, L, seed));
    else if (!input.empty())
        polys = load_polynomials(input);
    else
        throw std::invalid_argument("verify needs a polynomial or --family");

    bool ok = true;
    auto check = [&ok](bool cond, const char* what) {
        std::printf("  %-44s %s\n", what, cond ? "ok" : "VIOLATION");
        if (!cond) ok = false;
    };

    for (const auto& f : polys) {
        std::printf("verify %s\n", f.pretty().c_str());
        const IsolationReport rep = isolate_benchmark(f);
        const Dyadic b = root_bound(f);
        const Interval I(-b, b);

        const auto oracle = sturm_isolate(rep.g, I);
        check(rep.root_count() == oracle.size(), "root count matches sturm oracle");
        bool one_each = true;
        for (const auto& J : rep.isolating_intervals)
            if (sturm_count(rep.g, J) != 1) one_each = false;
        check(one_each, "each interval isolates exactly one root");
        bool exact = true;
        for (const auto& r : rep.point_roots)
            if (sign_at(rep.g, r) != 0) exact = false;
        check(exact, "point roots are exact roots");

        const BoundReport br = bound_report(f);
        check(rep.stats.partition_size <=
                  std::ceil(1.01 * std::max(1.0, br.integral_2_over_G)),
              "partition size within integral bound");
        check(br.integral_2_over_G <= 1.01 * br.integral_2_over_F,
              "G-integral within 1.01 of F-integral");
        check(br.integral_2_over_F <= 1.02 * br.closed_form_sum,
              "F-integral within 1.02 of closed form");
        const double d_ = f.degree();
        const double L_ = bit_length_L(f);
        check(rep.stats.partition_size <=
                  25.0 * d_ * L_ + 42.0 * d_ * std::log(d_) + 4.0 * d_ + 16.0,
              "partition size within 25dL + 42 d ln d + 4d + 16");
        std::printf("  #P=%llu  integral=%.3f  closed form=%.3f\n",
                    static_cast<unsigned long long>(rep.stats.partition_size),
                    br.integral_2_over_G, br.closed_form_sum);
    }
    return ok ? kExitOk : kExitInvariant;
}

int cmd_bench(std::vector<std::string> families, unsigned dmin, unsigned dmax,
              std::vector<unsigned> bit_sizes, std::uint64_t seed, const std::string& out_dir) {
    BenchGrid grid;
    for (const auto& name : families) grid.families.push_back(family_from_string(name));
    for (unsigned d = dmin; d <= dmax; ++d) grid.degrees.push_back(d);
    grid.bit_sizes = std::move(bit_sizes);
    grid.seed = seed;

    const BenchRun run = run_benchmark(grid);
    for (const auto& e : run.errors) std::fprintf(stderr, "error: %s\n", e.c_str());

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream(out_dir + "/bench.csv") << to_csv(run.records);
        std::ofstream(out_dir + "/bench.json") << to_json(run.records);
        std::ofstream(out_dir + "/plot.txt") << to_plot(run.records);
    } else {
        std::printf("%s", to_csv(run.records).c_str());
    }
    std::printf("%zu records, %zu errors; max #P / (d (L + ln d)) = %.3f\n",
                run.records.size(), run.errors.size(), max_scaling_ratio(run.records));
    return run.errors.empty() ? kExitOk : kExitInvariant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SqFreeEVAL real-root isolation with continuous-amortization bounds"};
    app.require_subcommand(1);

    std::string input;
    std::vector<std::string> interval;
    bool as_json = false;
    auto* isolate_cmd = app.add_subcommand("isolate", "isolate the real roots of a polynomial");
    isolate_cmd->add_option("poly", input, "coefficient list `a0,a1,...` or a polynomial file")
        ->required();
    isolate_cmd->add_option("--interval", interval, "dyadic endpoints a b")->expected(2);
    isolate_cmd->add_flag("--json", as_json, "machine-readable output");

    std::string bound_input;
    auto* bound_cmd = app.add_subcommand("bound", "print the subdivision-size bound chain");
    bound_cmd->add_option("poly", bound_input, "coefficient list or polynomial file")
        ->required();

    std::string verify_input, verify_family;
    unsigned verify_d = 6, verify_L = 8;
    std::uint64_t verify_seed = default_seed();
    auto* verify_cmd =
        app.add_subcommand("verify", "isolate, cross-check against the oracle, check bounds");
    verify_cmd->add_option("poly", verify_input, "coefficient list or polynomial file");
    verify_cmd->add_option("--family", verify_family, "generate the input from a family");
    verify_cmd->add_option("--d", verify_d, "family degree");
    verify_cmd->add_option("--L", verify_L, "family coefficient bits");
    verify_cmd->add_option("--seed", verify_seed, "random family seed");

    std::vector<std::string> families{"mignotte", "wilkinson", "chebyshev", "random"};
    unsigned dmin = 4, dmax = 8;
    std::vector<unsigned> bits{8, 16};
    std::uint64_t seed = default_seed();
    std::string out_dir;
    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark grid");
    bench_cmd->add_option("--families", families, "comma-separated family names")
        ->delimiter(',');
    bench_cmd->add_option("--dmin", dmin, "smallest degree");
    bench_cmd->add_option("--dmax", dmax, "largest degree");
    bench_cmd->add_option("--L", bits, "comma-separated coefficient bit sizes")->delimiter(',');
    bench_cmd->add_option("--seed", seed, "grid seed (SQFE_SEED overrides the default)");
    bench_cmd->add_option("--out", out_dir, "output directory for csv/json/plot files");

    try {
        app.parse(argc, argv);
        if (isolate_cmd->parsed()) return cmd_isolate(input, interval, as_json);
        if (bound_cmd->parsed()) return cmd_bound(bound_input);
        if (verify_cmd->parsed())
            return cmd_verify(verify_input, verify_family, verify_d, verify_L, verify_seed);
        if (bench_cmd->parsed())
            return cmd_bench(families, dmin, dmax, bits, seed, out_dir);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    } catch (const convergence_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoConverge;
    } catch (const invariant_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvariant;
    }
    return kExitBadInput;
}
