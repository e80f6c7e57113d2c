#pragma once

// Dense univariate polynomials over the integers (GMP-backed).
//
// Coefficients are stored in ascending order: coeffs()[i] is the
// coefficient of x^i. The representation is kept canonical, i.e. the
// last stored coefficient is never zero and the zero polynomial is the
// empty sequence.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace circsing {

using BigInt = mpz_class;

/// Raised when an operation's precondition on its polynomial arguments fails
/// (zero divisor, non-monic divisor, malformed text form, ...).
class PolyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt& c);
    /// c * x^k
    static IntPoly monomial(std::size_t k, const BigInt& c = 1);
    /// x^n - 1
    static IntPoly x_pow_minus_one(std::size_t n);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, or std::nullopt for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero past the end.
    [[nodiscard]] BigInt coeff(std::size_t i) const;
    /// Leading coefficient. Throws PolyError on the zero polynomial.
    [[nodiscard]] const BigInt& leading() const;
    [[nodiscard]] bool is_monic() const noexcept;

    /// Exact evaluation at an integer point.
    [[nodiscard]] BigInt eval(const BigInt& x) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& c, const IntPoly& a);

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division by a monic divisor; exact over the integers.
DivRem poly_divrem_monic(const IntPoly& num, const IntPoly& den);

/// lc(den)^(deg num - deg den + 1) * num = den * q + r
DivRem poly_pseudo_divrem(const IntPoly& num, const IntPoly& den);

/// Non-negative gcd of the coefficients; zero for the zero polynomial.
BigInt content(const IntPoly& p);

/// p / content(p), sign-normalized so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);

/// Primitive, positive-leading generator of gcd(a, b) over Q[x].
/// Throws PolyError when both arguments are zero.
IntPoly poly_gcd_primitive(const IntPoly& a, const IntPoly& b);

/// Res(a, b) by the subresultant polynomial remainder sequence.
/// Works for arbitrary integer polynomials; returns 0 if either is zero.
BigInt resultant_subresultant(const IntPoly& a, const IntPoly& b);

/// Res(a, b) = prod over roots alpha of a of b(alpha). `a` must be monic.
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// p(x^k)
IntPoly substitute_power(const IntPoly& p, std::size_t k);

/// p mod (x^d - 1), i.e. exponents folded modulo d.
IntPoly fold_cyclic(const IntPoly& p, std::size_t d);

/// Strip the largest monomial factor: p = x^shift * reduced with reduced(0) != 0.
struct GammaStrip {
    std::size_t shift;
    IntPoly reduced;
};
GammaStrip gamma_strip(const IntPoly& p);

/// Numeric value of p at exp(2*pi*i*k/n). Exponents are reduced modulo n
/// before the angle is formed, so no error accumulates from repeated
/// multiplication by the root.
std::complex<double> eval_unit_circle(const IntPoly& p, std::uint64_t n, std::uint64_t k);

/// Comma-separated ascending coefficients; the zero polynomial is "0".
std::string format_poly(const IntPoly& p);
IntPoly parse_poly(std::string_view text);

/// Human-readable form, e.g. "x^3 - 1".
std::string to_pretty(const IntPoly& p);

}  // namespace circsing
