#pragma once

// Cyclotomic polynomials, divisor utilities and the Phi_d | p test.

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "circsing/polycore.hpp"

namespace circsing {

/// All positive divisors of n in ascending order. Throws std::invalid_argument for n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler's totient. Throws std::invalid_argument for n == 0.
std::uint64_t euler_phi(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Prime factorization by trial division, ascending primes. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Exponent of 2 in n (n > 0).
unsigned two_adic_valuation(std::uint64_t n);

/// Memoized Phi_d. Lookups take a shared lock; a miss computes the
/// polynomial (recursively filling smaller divisors) under the exclusive
/// lock, so each key is generated at most once.
class CyclotomicCache {
public:
    const IntPoly& get(std::uint64_t d);
    [[nodiscard]] std::size_t size() const;

    static CyclotomicCache& global();

private:
    const IntPoly& generate_locked(std::uint64_t d);

    mutable std::shared_mutex mutex_;
    // node-based map: references stay valid across inserts
    std::map<std::uint64_t, IntPoly> table_;
};

/// Phi_d from the process-wide cache. Throws std::invalid_argument for d == 0.
const IntPoly& cyclotomic(std::uint64_t d);

/// Phi_d by straight division of x^d - 1 by every Phi_e, e | d, e < d,
/// without any closed-form shortcut or cache. Reference path for tests.
IntPoly cyclotomic_by_division(std::uint64_t d);

/// True iff Phi_d divides p exactly.
bool phi_divides(const IntPoly& p, std::uint64_t d);

enum class OdlyzkoCase {
    PrimePowerUp,            // m/n = p^a
    PrimePowerDownCoprime,   // m/n = p^-a, p does not divide m
    PrimePowerDownDividing,  // m/n = p^-a, p divides m
    Unit,
};

std::string_view to_string(OdlyzkoCase c);

struct OdlyzkoClass {
    OdlyzkoCase kind;
    std::uint64_t prime = 0;  // 0 for Unit
    unsigned alpha = 0;
    /// Predicted |Phi_m(zeta_n)| with zeta_n = exp(2 pi i / n), unit factor taken as modulus 1.
    double predicted_modulus;
    /// |N(Phi_m(zeta_n))| over Q(zeta_n), i.e. |Res(Phi_n, Phi_m)|: p^phi(n),
    /// p^phi(m), p^phi(m) or 1 for the four cases respectively.
    BigInt predicted_norm;
};

/// Four-way classification of m/n for the value of Phi_m at a primitive
/// n-th root of unity. Throws std::invalid_argument when m == n or either is 0.
OdlyzkoClass odlyzko_modulus_class(std::uint64_t m, std::uint64_t n);

}  // namespace circsing
