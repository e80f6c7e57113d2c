#include "circsing/circulant.hpp"

#include <charconv>
#include <numeric>
#include <set>

#include "circsing/cyclotomic.hpp"

namespace circsing {

CirculantSpec::CirculantSpec(std::vector<long long> row) : row_(std::move(row))
{
    if (row_.empty()) throw SpecError("circulant order must be at least 1");
}

bool CirculantSpec::is_digraph() const noexcept
{
    if (row_[0] != 0) return false;
    return std::all_of(row_.begin(), row_.end(), [](long long v) { return v == 0 || v == 1; });
}

bool CirculantSpec::is_symmetric() const noexcept
{
    const std::size_t n = row_.size();
    for (std::size_t i = 1; i < n; ++i)
        if (row_[i] != row_[n - i]) return false;
    return true;
}

CirculantSpec CirculantSpec::rotated(std::size_t k) const
{
    const std::size_t n = row_.size();
    std::vector<long long> out(n);
    for (std::size_t i = 0; i < n; ++i) out[(i + k) % n] = row_[i];
    return CirculantSpec(std::move(out));
}

namespace {

std::vector<long long> parse_row(std::string_view text)
{
    std::vector<long long> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw SpecError("row grammar: expected comma-separated integers, got '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

CirculantSpec parse_spec(std::string_view text, std::optional<std::size_t> expected_n)
{
    std::optional<std::size_t> declared;
    std::string_view row_text = text;
    if (text.starts_with("n=")) {
        const std::size_t semi = text.find(';');
        if (semi == std::string_view::npos || !text.substr(semi + 1).starts_with("row="))
            throw SpecError("spec grammar: expected 'n=<int>;row=<comma-separated ints>'");
        const std::string_view n_text = text.substr(2, semi - 2);
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
        if (n_text.empty() || ec != std::errc{} || ptr != n_text.data() + n_text.size())
            throw SpecError("spec grammar: n must be a non-negative integer");
        declared = n;
        row_text = text.substr(semi + 5);
    }
    auto row = parse_row(row_text);
    if (declared && *declared != row.size())
        throw SpecError("row length " + std::to_string(row.size()) + " does not match n=" + std::to_string(*declared));
    if (expected_n && *expected_n != row.size())
        throw SpecError("row length " + std::to_string(row.size()) + " does not match --n " +
                        std::to_string(*expected_n));
    return CirculantSpec(std::move(row));
}

std::string format_spec(const CirculantSpec& spec)
{
    std::string out = "n=" + std::to_string(spec.order()) + ";row=";
    for (std::size_t i = 0; i < spec.order(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.row()[i]);
    }
    return out;
}

IntPoly representer(const CirculantSpec& spec)
{
    std::vector<BigInt> c;
    c.reserve(spec.order());
    for (long long v : spec.row()) c.emplace_back(static_cast<long>(v));
    return IntPoly(std::move(c));
}

SingularityReport singularity(const CirculantSpec& spec)
{
    const std::uint64_t n = spec.order();
    const IntPoly gamma = representer(spec);
    SingularityReport report;

    std::set<std::uint64_t> vanishing;  // orders d of the roots where gamma vanishes
    if (gamma.is_zero()) {
        for (std::uint64_t d : divisors(n)) {
            vanishing.insert(d);
            if (d > 1) report.witness_divisors.push_back(d);
        }
    } else {
        const IntPoly reduced = gamma_strip(gamma).reduced;
        if (sgn(gamma.eval(1)) == 0) vanishing.insert(1);
        for (std::uint64_t d : divisors(n)) {
            if (d == 1 || !phi_divides(reduced, d)) continue;
            report.witness_divisors.push_back(d);
            vanishing.insert(d);
        }
    }

    // zeta_n^k is a primitive (n / gcd(n, k))-th root of unity
    if (!vanishing.empty()) {
        for (std::uint64_t k = 0; k < n; ++k)
            if (vanishing.contains(n / std::gcd(n, k))) report.zero_exponents.push_back(k);
    }
    report.singular = !report.zero_exponents.empty();
    return report;
}

DetReport exact_determinant(const CirculantSpec& spec)
{
    const std::uint64_t n = spec.order();
    const IntPoly gamma = representer(spec);
    DetReport report;
    report.determinant = 1;
    for (std::uint64_t d : divisors(n)) {
        BigInt f = gamma.is_zero() ? BigInt(0) : resultant(cyclotomic(d), fold_cyclic(gamma, static_cast<std::size_t>(d)));
        report.determinant *= f;
        report.factors.emplace(d, std::move(f));
    }
    return report;
}

BigInt two_value_determinant(std::uint64_t n, long long a, std::uint64_t s, long long b)
{
    if (s < 1 || s > n) throw std::invalid_argument("two_value_determinant: run length s must satisfy 1 <= s <= n");
    if (std::gcd(s, n) != 1) return 0;
    const std::uint64_t t = n - s;
    BigInt lead = BigInt(static_cast<long>(s)) * static_cast<long>(a) + BigInt(static_cast<long>(t)) * static_cast<long>(b);
    BigInt diff = BigInt(static_cast<long>(a)) - static_cast<long>(b);
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(n - 1));
    return lead * power;
}

CirculantSpec two_value_row(std::uint64_t n, long long a, std::uint64_t s, long long b)
{
    if (s < 1 || s > n) throw std::invalid_argument("two_value_row: run length s must satisfy 1 <= s <= n");
    std::vector<long long> row(n, b);
    std::fill_n(row.begin(), s, a);
    return CirculantSpec(std::move(row));
}

std::vector<std::complex<double>> spectrum_numeric(const CirculantSpec& spec)
{
    const std::uint64_t n = spec.order();
    const IntPoly gamma = representer(spec);
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(eval_unit_circle(gamma, n, k));
    return out;
}

CirculantSpec complement_row(const CirculantSpec& spec)
{
    const auto& row = spec.row();
    if (row[0] != 0) throw SpecError("complement: diagonal entry a_0 must be 0");
    if (!std::all_of(row.begin(), row.end(), [](long long v) { return v == 0 || v == 1; }))
        throw SpecError("complement: row entries must be 0 or 1");
    if (!spec.is_symmetric()) throw SpecError("complement: row must be symmetric (a graph, not a digraph)");
    std::vector<long long> out(row.size(), 0);
    for (std::size_t i = 1; i < row.size(); ++i) out[i] = 1 - row[i];
    return CirculantSpec(std::move(out));
}

}  // namespace circsing
