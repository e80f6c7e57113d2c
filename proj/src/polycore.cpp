#include "circsing/polycore.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>
#include <sstream>

namespace circsing {

namespace {

std::size_t deg_of(const std::vector<BigInt>& v) { return v.size() - 1; }

void trim(std::vector<BigInt>& v)
{
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

BigInt pow_ui(const BigInt& base, std::size_t e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

// Exact division of every coefficient by a nonzero scalar.
IntPoly divexact(const IntPoly& p, const BigInt& c)
{
    std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(out));
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t k, const BigInt& c)
{
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n)
{
    std::vector<BigInt> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return IntPoly(std::move(v));
}

std::optional<std::size_t> IntPoly::degree() const noexcept
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const
{
    if (coeffs_.empty()) throw PolyError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool IntPoly::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

BigInt IntPoly::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

void IntPoly::normalize() { trim(coeffs_); }

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<BigInt> out(big.coeffs().begin(), big.coeffs().end());
    for (std::size_t i = 0; i < small.size(); ++i) out[i] += small.coeffs()[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a)
{
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1);
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (sgn(ac[i]) == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& c, const IntPoly& a)
{
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : out) x *= c;
    return IntPoly(std::move(out));
}

DivRem poly_divrem_monic(const IntPoly& num, const IntPoly& den)
{
    if (den.is_zero()) throw PolyError("division by the zero polynomial");
    if (!den.is_monic()) throw PolyError("divisor is not monic");

    const std::size_t dd = *den.degree();
    if (num.is_zero() || *num.degree() < dd) return {IntPoly{}, num};

    // Nonzero lower coefficients of the divisor; cyclotomic divisors are sparse.
    std::vector<std::pair<std::size_t, const BigInt*>> terms;
    for (std::size_t j = 0; j < dd; ++j)
        if (sgn(den.coeffs()[j]) != 0) terms.emplace_back(j, &den.coeffs()[j]);

    std::vector<BigInt> r(num.coeffs().begin(), num.coeffs().end());
    std::vector<BigInt> q(deg_of(r) - dd + 1);
    for (std::size_t i = deg_of(r) + 1; i-- > dd;) {
        const BigInt c = r[i];
        if (sgn(c) == 0) continue;
        const std::size_t shift = i - dd;
        q[shift] = c;
        r[i] = 0;
        for (const auto& [j, dj] : terms)
            mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), dj->get_mpz_t());
    }
    r.resize(dd);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

DivRem poly_pseudo_divrem(const IntPoly& num, const IntPoly& den)
{
    if (den.is_zero()) throw PolyError("division by the zero polynomial");
    const std::size_t dd = *den.degree();
    if (num.is_zero() || *num.degree() < dd) {
        if (num.is_zero()) return {IntPoly{}, IntPoly{}};
        // lc^(deg num - deg den + 1) with a negative exponent is taken as 1
        return {IntPoly{}, num};
    }
    const BigInt& lc = den.leading();
    std::vector<BigInt> r(num.coeffs().begin(), num.coeffs().end());
    std::vector<BigInt> q(deg_of(r) - dd + 1);
    // Every step scales by lc, including those with a zero leading term, so
    // after the loop lc^(deg num - deg den + 1) * num = den * q + r.
    for (std::size_t i = deg_of(r) + 1; i-- > dd;) {
        const BigInt c = r[i];
        for (auto& x : q) x *= lc;
        for (std::size_t t = 0; t < i; ++t) r[t] *= lc;
        r[i] = 0;
        const std::size_t shift = i - dd;
        q[shift] += c;
        if (sgn(c) != 0) {
            for (std::size_t j = 0; j < dd; ++j)
                mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), den.coeffs()[j].get_mpz_t());
        }
    }
    r.resize(dd);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

BigInt content(const IntPoly& p)
{
    BigInt g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero()) return {};
    BigInt c = content(p);
    if (sgn(p.leading()) < 0) c = -c;
    return c == 1 ? p : divexact(p, c);
}

IntPoly poly_gcd_primitive(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() && b.is_zero()) throw PolyError("gcd of two zero polynomials");
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);

    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (*x.degree() < *y.degree()) std::swap(x, y);
    while (true) {
        if (*y.degree() == 0) return IntPoly{1};
        IntPoly r = poly_pseudo_divrem(x, y).remainder;
        if (r.is_zero()) return y;
        x = std::move(y);
        y = primitive_part(r);
    }
}

BigInt resultant_subresultant(const IntPoly& a_in, const IntPoly& b_in)
{
    if (a_in.is_zero() || b_in.is_zero()) return 0;
    const std::size_t da = *a_in.degree();
    const std::size_t db = *b_in.degree();
    if (da == 0) return pow_ui(a_in.leading(), db);
    if (db == 0) return pow_ui(b_in.leading(), da);

    const BigInt ca = content(a_in);
    const BigInt cb = content(b_in);
    IntPoly a = divexact(a_in, ca);
    IntPoly b = divexact(b_in, cb);
    const BigInt t = pow_ui(ca, db) * pow_ui(cb, da);

    int s = 1;
    BigInt g = 1;
    BigInt h = 1;
    if (*a.degree() < *b.degree()) {
        std::swap(a, b);
        if ((*a.degree() % 2 == 1) && (*b.degree() % 2 == 1)) s = -1;
    }

    while (true) {
        const std::size_t deg_a = *a.degree();
        const std::size_t deg_b = *b.degree();
        const std::size_t delta = deg_a - deg_b;
        if ((deg_a % 2 == 1) && (deg_b % 2 == 1)) s = -s;

        IntPoly r = poly_pseudo_divrem(a, b).remainder;
        a = std::move(b);
        if (r.is_zero()) return 0;
        b = divexact(r, g * pow_ui(h, delta));
        g = a.leading();
        // h <- g^delta / h^(delta - 1); unchanged when delta == 0
        if (delta > 0) {
            BigInt num = pow_ui(g, delta);
            BigInt den = pow_ui(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }

        if (*b.degree() == 0) {
            const std::size_t dA = *a.degree();
            BigInt num = pow_ui(b.leading(), dA);
            BigInt den = pow_ui(h, dA - 1);
            BigInt out;
            mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * out;
        }
    }
}

BigInt resultant(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero()) throw PolyError("resultant: first argument is zero");
    if (!a.is_monic()) throw PolyError("resultant: first argument is not monic");
    if (b.is_zero()) return 0;
    // Res(a, b) depends on b only modulo a when a is monic.
    const IntPoly r = poly_divrem_monic(b, a).remainder;
    if (r.is_zero()) return 0;
    return resultant_subresultant(a, r);
}

IntPoly substitute_power(const IntPoly& p, std::size_t k)
{
    if (p.is_zero()) return {};
    if (k == 0) return IntPoly::constant(p.eval(1));
    std::vector<BigInt> out((p.size() - 1) * k + 1);
    for (std::size_t i = 0; i < p.size(); ++i) out[i * k] = p.coeffs()[i];
    return IntPoly(std::move(out));
}

IntPoly fold_cyclic(const IntPoly& p, std::size_t d)
{
    if (d == 0) throw PolyError("fold_cyclic: modulus exponent must be positive");
    if (p.size() <= d) return p;
    std::vector<BigInt> out(d);
    for (std::size_t i = 0; i < p.size(); ++i) out[i % d] += p.coeffs()[i];
    return IntPoly(std::move(out));
}

GammaStrip gamma_strip(const IntPoly& p)
{
    if (p.is_zero()) throw PolyError("gamma_strip: zero polynomial");
    const auto c = p.coeffs();
    std::size_t k = 0;
    while (sgn(c[k]) == 0) ++k;
    return {k, IntPoly(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()))};
}

std::complex<double> eval_unit_circle(const IntPoly& p, std::uint64_t n, std::uint64_t k)
{
    if (n == 0) throw PolyError("eval_unit_circle: order must be positive");
    const auto c = p.coeffs();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    const unsigned __int128 kk = k % n;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        const auto e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(i % n) * kk) % n);
        acc += c[i].get_d() * std::polar(1.0, step * static_cast<double>(e));
    }
    return acc;
}

std::string format_poly(const IntPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += p.coeffs()[i].get_str();
    }
    return out;
}

IntPoly parse_poly(std::string_view text)
{
    std::vector<BigInt> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        std::string_view digits = tok;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw PolyError("malformed coefficient '" + std::string(tok) + "': expected an integer");
        if (tok.front() == '+') tok.remove_prefix(1);
        out.emplace_back(std::string(tok), 10);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntPoly(std::move(out));
}

std::string to_pretty(const IntPoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const BigInt& c = p.coeffs()[i];
        if (sgn(c) == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

}  // namespace circsing
