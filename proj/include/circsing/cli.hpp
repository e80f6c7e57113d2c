#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace circsing::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitStatus : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Parses argv (argv[0] is the program name), runs one command and writes
/// the report to `out`; diagnostics go to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchPoint {
    std::uint64_t n;
    std::size_t runs;
    double exact_median_s;
    double bareiss_median_s;
    double classify_median_s;
    bool results_match;
};

/// Seeded random {0,1} row with a_0 = 0 used by the benchmarks.
std::vector<long long> bench_row(std::uint64_t n, std::uint64_t seed);

/// Times exact_determinant, bareiss_det and singularity on bench_row(n, seed)
/// for every order in `ladder`; medians over `runs` repetitions.
std::vector<BenchPoint> run_bench(const std::vector<std::uint64_t>& ladder, std::size_t runs, std::uint64_t seed);

/// Median wall time of singularity() alone on bench_row(n, seed).
double classify_median(std::uint64_t n, std::size_t runs, std::uint64_t seed);

}  // namespace circsing::cli
