#pragma once

// Brute-force ground truth: fraction-free elimination on the materialized
// matrix, and sweeps comparing every predicate and fast path against it.
// Nothing in here touches polynomial arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include "circsing/circulant.hpp"
#include "circsing/families.hpp"

namespace circsing {

using BigMatrix = std::vector<std::vector<BigInt>>;

/// Determinant of a square integer matrix by Bareiss elimination with row
/// pivoting. Every division is checked to be exact; a nonzero remainder
/// throws std::logic_error.
BigInt bareiss_determinant(BigMatrix m);

/// Row i of the result is the first row shifted right by i.
BigMatrix materialize(const CirculantSpec& spec);

BigInt bareiss_det(const CirculantSpec& spec);

/// Exact prediction: verdict equals (det == 0). Sufficient-only: a fired
/// condition must come with det == 0; silence claims nothing.
bool agrees(const Prediction& p, const BigInt& det);

struct SweepOutcome {
    GraphFamily family;
    Prediction prediction;
    BigInt oracle_det;
    bool agree;
};

struct SweepSummary {
    FamilyKind kind;
    std::uint64_t n_max;
    std::size_t total = 0;
    /// instances predicted singular (for sufficient-only kinds: a condition fired)
    std::size_t predicted_singular = 0;
    std::size_t oracle_singular = 0;
    std::size_t disagreements = 0;
    std::vector<SweepOutcome> outcomes;
    std::vector<std::string> disagreement_details;
};

/// Throws std::invalid_argument when n_max < 3.
SweepSummary sweep_family(FamilyKind kind, std::uint64_t n_max);

/// Uniform {0,1} rows with a_0 = 0 and uniform order in [2, n_max], from a
/// std::mt19937_64 seeded with `seed`.
std::vector<CirculantSpec> random_rows(std::uint64_t n_max, std::size_t samples, std::uint64_t seed);

struct RandomSweepSummary {
    std::uint64_t n_max;
    std::size_t samples;
    std::uint64_t seed;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_details;
};

/// Checks exact_determinant == bareiss_det and singular <=> det == 0 on
/// every row from random_rows(). Throws std::invalid_argument when
/// n_max < 2 or samples == 0.
RandomSweepSummary sweep_random_rows(std::uint64_t n_max, std::size_t samples, std::uint64_t seed);

}  // namespace circsing
