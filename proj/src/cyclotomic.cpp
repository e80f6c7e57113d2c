#include "circsing/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace circsing {

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<PrimePower> factorize(std::uint64_t n)
{
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t result = n;
    for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

unsigned two_adic_valuation(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("two_adic_valuation: n must be positive");
    unsigned v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

CyclotomicCache& CyclotomicCache::global()
{
    static CyclotomicCache cache;
    return cache;
}

std::size_t CyclotomicCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

const IntPoly& CyclotomicCache::get(std::uint64_t d)
{
    if (d == 0) throw std::invalid_argument("cyclotomic: d must be positive");
    {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(d); it != table_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    return generate_locked(d);
}

const IntPoly& CyclotomicCache::generate_locked(std::uint64_t d)
{
    if (auto it = table_.find(d); it != table_.end()) return it->second;

    IntPoly phi;
    const auto fac = factorize(d);
    if (d == 1) {
        phi = IntPoly{-1, 1};
    } else if (fac.size() == 1) {
        // Phi_{p^k} = sum_{j<p} x^(j p^(k-1))
        const std::uint64_t p = fac[0].prime;
        const std::uint64_t stride = d / p;
        std::vector<BigInt> c(static_cast<std::size_t>((p - 1) * stride + 1));
        for (std::uint64_t j = 0; j < p; ++j) c[static_cast<std::size_t>(j * stride)] = 1;
        phi = IntPoly(std::move(c));
    } else if (auto sq = std::find_if(fac.begin(), fac.end(), [](const PrimePower& pp) { return pp.exponent > 1; });
               sq != fac.end()) {
        // Phi_{pm}(x) = Phi_m(x^p) when p | m
        phi = substitute_power(generate_locked(d / sq->prime), static_cast<std::size_t>(sq->prime));
    } else {
        IntPoly rest = IntPoly::x_pow_minus_one(static_cast<std::size_t>(d));
        for (std::uint64_t e : divisors(d)) {
            if (e == d) break;
            rest = poly_divrem_monic(rest, generate_locked(e)).quotient;
        }
        phi = std::move(rest);
    }
    return table_.emplace(d, std::move(phi)).first->second;
}

const IntPoly& cyclotomic(std::uint64_t d) { return CyclotomicCache::global().get(d); }

IntPoly cyclotomic_by_division(std::uint64_t d)
{
    if (d == 0) throw std::invalid_argument("cyclotomic: d must be positive");
    IntPoly rest = IntPoly::x_pow_minus_one(static_cast<std::size_t>(d));
    for (std::uint64_t e : divisors(d)) {
        if (e == d) break;
        auto [q, r] = poly_divrem_monic(rest, cyclotomic_by_division(e));
        if (!r.is_zero()) throw std::logic_error("cyclotomic_by_division: inexact division");
        rest = std::move(q);
    }
    return rest;
}

bool phi_divides(const IntPoly& p, std::uint64_t d)
{
    if (p.is_zero()) return true;
    // Phi_d | x^d - 1, so reducing exponents mod d preserves the residue.
    return poly_divrem_monic(fold_cyclic(p, static_cast<std::size_t>(d)), cyclotomic(d)).remainder.is_zero();
}

std::string_view to_string(OdlyzkoCase c)
{
    switch (c) {
    case OdlyzkoCase::PrimePowerUp: return "prime-power-up";
    case OdlyzkoCase::PrimePowerDownCoprime: return "prime-power-down-coprime";
    case OdlyzkoCase::PrimePowerDownDividing: return "prime-power-down-dividing";
    case OdlyzkoCase::Unit: return "unit";
    }
    return "?";
}

namespace {

double one_minus_root_modulus(std::uint64_t order)
{
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(order);
    return std::abs(1.0 - std::polar(1.0, theta));
}

BigInt pow_u64(std::uint64_t base, std::uint64_t e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return out;
}

}  // namespace

OdlyzkoClass odlyzko_modulus_class(std::uint64_t m, std::uint64_t n)
{
    if (m == 0 || n == 0) throw std::invalid_argument("odlyzko_modulus_class: m and n must be positive");
    if (m == n) throw std::invalid_argument("odlyzko_modulus_class: m must differ from n");

    const std::uint64_t g = std::gcd(m, n);
    const std::uint64_t num = m / g;
    const std::uint64_t den = n / g;

    if (den == 1) {
        const auto f = factorize(num);
        if (f.size() == 1)
            return {OdlyzkoCase::PrimePowerUp, f[0].prime, f[0].exponent, static_cast<double>(f[0].prime),
                    pow_u64(f[0].prime, euler_phi(n))};
    } else if (num == 1) {
        const auto f = factorize(den);
        if (f.size() == 1) {
            const std::uint64_t p = f[0].prime;
            const unsigned alpha = f[0].exponent;
            const BigInt norm = pow_u64(p, euler_phi(m));
            std::uint64_t pa = 1;
            for (unsigned i = 0; i < alpha; ++i) pa *= p;
            if (m % p != 0)
                return {OdlyzkoCase::PrimePowerDownCoprime, p, alpha, one_minus_root_modulus(pa), norm};
            return {OdlyzkoCase::PrimePowerDownDividing, p, alpha,
                    std::pow(one_minus_root_modulus(pa * p), static_cast<double>(p - 1)), norm};
        }
    }
    return {OdlyzkoCase::Unit, 0, 0, 1.0, BigInt(1)};
}

}  // namespace circsing
