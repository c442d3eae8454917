#pragma once

#include "sqfe/families.hpp"
#include "sqfe/polynomial.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sqfe {

/// One benchmark measurement. degree_d and bits_L are the actual degree and
/// coefficient bit length of the generated polynomial (wilkinson/chebyshev
/// ignore the requested L).
struct BenchmarkRecord {
    std::string family;
    unsigned degree_d = 0;
    unsigned bits_L = 0;
    std::uint64_t partition_size = 0;
    std::uint64_t bisections = 0;
    double integral_bound = 0.0;
    double closed_form_bound = 0.0;
    double paper_constant_bound = 0.0;
    double wall_time_ms = 0.0;

    /// Equality on everything except the timing.
    bool same_measurements(const BenchmarkRecord& o) const;
};

struct BenchGrid {
    std::vector<Family> families;
    std::vector<unsigned> degrees;
    std::vector<unsigned> bit_sizes;
    std::uint64_t seed = 0;
};

struct BenchRun {
    std::vector<BenchmarkRecord> records;
    std::vector<std::string> errors; // per-record failures; the run continues
};

/// Generate + isolate + bound every (family, d, L) cell of the grid.
/// Records come back ordered by (family, d, L).
BenchRun run_benchmark(const BenchGrid& grid);

/// Benchmark one already-built polynomial.
BenchmarkRecord benchmark_polynomial(const IntPolynomial& f, const std::string& family_name);

std::string to_csv(std::span<const BenchmarkRecord> records);
std::vector<BenchmarkRecord> from_csv(const std::string& text);
std::string to_json(std::span<const BenchmarkRecord> records);
std::vector<BenchmarkRecord> from_json(const std::string& text);

/// Two-column plot data: x = d (L + ln d), y = partition_size.
std::string to_plot(std::span<const BenchmarkRecord> records);

/// Largest partition_size / (d (L + ln d)) over the records.
double max_scaling_ratio(std::span<const BenchmarkRecord> records);

/// Polynomial file: one comma-separated coefficient list per line,
/// '#' starts a comment.
std::vector<IntPolynomial> read_polynomial_file(const std::string& path);

} // namespace sqfe
