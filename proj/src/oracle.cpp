#include "circsing/oracle.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace circsing {

BigInt bareiss_determinant(BigMatrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
    if (n == 0) return 1;

    int sign = 1;
    BigInt prev = 1;
    BigInt num;
    BigInt rem;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m[p][k]) == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        const BigInt& pivot = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const BigInt& lead = m[i][k];
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(num.get_mpz_t(), m[i][j].get_mpz_t(), pivot.get_mpz_t());
                mpz_submul(num.get_mpz_t(), lead.get_mpz_t(), m[k][j].get_mpz_t());
                if (k == 0) {
                    mpz_swap(m[i][j].get_mpz_t(), num.get_mpz_t());
                    continue;
                }
                mpz_tdiv_qr(m[i][j].get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (sgn(rem) != 0) throw std::logic_error("bareiss_determinant: inexact division");
            }
            m[i][k] = 0;
        }
        prev = pivot;
    }
    return sign * m[n - 1][n - 1];
}

BigMatrix materialize(const CirculantSpec& spec)
{
    const std::size_t n = spec.order();
    BigMatrix m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(spec.row()[(j + n - i) % n]);
    return m;
}

BigInt bareiss_det(const CirculantSpec& spec) { return bareiss_determinant(materialize(spec)); }

bool agrees(const Prediction& p, const BigInt& det)
{
    const bool oracle_singular = sgn(det) == 0;
    if (p.kind == PredictionKind::Exact) return p.singular == oracle_singular;
    return !p.singular || oracle_singular;
}

SweepSummary sweep_family(FamilyKind kind, std::uint64_t n_max)
{
    if (n_max < 3) throw std::invalid_argument("sweep_family: n_max must be at least 3");
    SweepSummary summary{kind, n_max};
    for (auto& family : enumerate_valid(kind, n_max)) {
        Prediction prediction = predict(family);
        BigInt det = bareiss_det(build(family));
        const bool ok = agrees(prediction, det);
        ++summary.total;
        if (prediction.singular) ++summary.predicted_singular;
        if (sgn(det) == 0) ++summary.oracle_singular;
        if (!ok) {
            ++summary.disagreements;
            summary.disagreement_details.push_back(format_family(family) + ": predicted " +
                                                   (prediction.singular ? "singular" : "non-singular") + " (" +
                                                   std::string(to_string(prediction.kind)) + "), oracle det " +
                                                   det.get_str());
        }
        summary.outcomes.push_back({std::move(family), std::move(prediction), std::move(det), ok});
    }
    return summary;
}

std::vector<CirculantSpec> random_rows(std::uint64_t n_max, std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> order(2, n_max);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<CirculantSpec> out;
    out.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<long long> row(order(rng), 0);
        for (std::size_t i = 1; i < row.size(); ++i) row[i] = bit(rng);
        out.emplace_back(std::move(row));
    }
    return out;
}

RandomSweepSummary sweep_random_rows(std::uint64_t n_max, std::size_t samples, std::uint64_t seed)
{
    if (n_max < 2) throw std::invalid_argument("sweep_random_rows: n_max must be at least 2");
    if (samples == 0) throw std::invalid_argument("sweep_random_rows: samples must be at least 1");
    RandomSweepSummary summary{n_max, samples, seed};
    for (const auto& spec : random_rows(n_max, samples, seed)) {
        const BigInt oracle = bareiss_det(spec);
        const DetReport fast = exact_determinant(spec);
        const bool singular = singularity(spec).singular;
        std::string problem;
        if (fast.determinant != oracle)
            problem = "exact_determinant " + fast.determinant.get_str() + " != oracle " + oracle.get_str();
        else if (singular != (sgn(oracle) == 0))
            problem = std::string("singularity verdict ") + (singular ? "singular" : "non-singular") +
                      " but oracle det " + oracle.get_str();
        if (problem.empty()) {
            ++summary.passes;
        } else {
            ++summary.failures;
            summary.failure_details.push_back(format_spec(spec) + ": " + problem);
        }
    }
    return summary;
}

}  // namespace circsing
