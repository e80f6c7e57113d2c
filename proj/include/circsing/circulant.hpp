#pragma once

// Circulant matrices described by their first row, and the exact
// singularity / determinant machinery built on cyclotomic divisibility.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circsing/polycore.hpp"

namespace circsing {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An n x n circulant matrix: row i is the first row shifted right by i.
class CirculantSpec {
public:
    /// Throws SpecError on an empty row.
    explicit CirculantSpec(std::vector<long long> row);

    [[nodiscard]] std::size_t order() const noexcept { return row_.size(); }
    [[nodiscard]] const std::vector<long long>& row() const noexcept { return row_; }

    /// True when every entry is 0 or 1 and the diagonal entry is 0.
    [[nodiscard]] bool is_digraph() const noexcept;
    /// row[i] == row[n - i] for 1 <= i < n
    [[nodiscard]] bool is_symmetric() const noexcept;

    /// The same matrix with its first row rotated right by k (i.e. W^k A).
    [[nodiscard]] CirculantSpec rotated(std::size_t k) const;

    friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

private:
    std::vector<long long> row_;
};

/// "n=<int>;row=<ints>" or a bare comma-separated row. When `expected_n`
/// is given the row length must match it.
CirculantSpec parse_spec(std::string_view text, std::optional<std::size_t> expected_n = std::nullopt);
std::string format_spec(const CirculantSpec& spec);

struct SingularityReport {
    bool singular = false;
    /// d > 1, d | n, with Phi_d dividing the representer polynomial
    std::vector<std::uint64_t> witness_divisors;
    /// k in [0, n) with gamma(zeta_n^k) = 0
    std::vector<std::uint64_t> zero_exponents;
};

struct DetReport {
    BigInt determinant;
    /// d -> Res(Phi_d, gamma) for every d | n
    std::map<std::uint64_t, BigInt> factors;
};

/// gamma_A(x) = a_0 + a_1 x + ... + a_{n-1} x^{n-1}
IntPoly representer(const CirculantSpec& spec);

SingularityReport singularity(const CirculantSpec& spec);

/// det A = prod over d | n of Res(Phi_d, gamma_A)
DetReport exact_determinant(const CirculantSpec& spec);

/// Determinant of the circulant with first row [a repeated s times, b repeated n - s times].
/// Throws std::invalid_argument unless 1 <= s <= n.
BigInt two_value_determinant(std::uint64_t n, long long a, std::uint64_t s, long long b);

/// First row [a x s, b x (n - s)].
CirculantSpec two_value_row(std::uint64_t n, long long a, std::uint64_t s, long long b);

/// Eigenvalues gamma(zeta_n^k), k = 0..n-1.
std::vector<std::complex<double>> spectrum_numeric(const CirculantSpec& spec);

/// Row of the complement graph (J - A - I). Requires a symmetric {0,1} row with a_0 = 0.
CirculantSpec complement_row(const CirculantSpec& spec);

}  // namespace circsing
