#pragma once

// Named circulant graph/digraph families: first-row constructors paired
// with closed-form singularity predicates.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circsing/circulant.hpp"

namespace circsing {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// C_n^i: the i-th distance matrix of the cycle C_n.
struct DistancePower {
    std::uint64_t n, i;
};
struct DistancePowerComplement {
    std::uint64_t n, i;
};
/// C_n^(r): vertices adjacent when their cycle distance is at most r.
struct PowerCycle {
    std::uint64_t n, r;
};
struct PowerCycleComplement {
    std::uint64_t n, r;
};
/// C(2n, r): C_2n^(r) plus the antipodal perfect matching. Order is 2n.
struct C2nr {
    std::uint64_t n, r;
};
struct C2nrComplement {
    std::uint64_t n, r;
};
/// First row: k ones followed by n - k zeros.
struct KElement {
    std::uint64_t n, k;
};
/// First row: r ones, t zeros, s ones, then zeros.
struct RstDigraph {
    std::uint64_t n, r, s, t;
};
/// Representer polynomial sum_{t<=k} sum_{s=i}^{i+l} x^(s + t j).
struct Ijkl {
    std::uint64_t n, i, j, k, l;
};

using GraphFamily = std::variant<DistancePower, DistancePowerComplement, PowerCycle, PowerCycleComplement, C2nr,
                                 C2nrComplement, KElement, RstDigraph, Ijkl>;

enum class FamilyKind {
    DistancePower,
    DistancePowerComplement,
    PowerCycle,
    PowerCycleComplement,
    C2nr,
    C2nrComplement,
    KElement,
    RstDigraph,
    Ijkl,
};

inline constexpr FamilyKind kAllFamilyKinds[] = {
    FamilyKind::DistancePower, FamilyKind::DistancePowerComplement, FamilyKind::PowerCycle,
    FamilyKind::PowerCycleComplement, FamilyKind::C2nr, FamilyKind::C2nrComplement,
    FamilyKind::KElement, FamilyKind::RstDigraph, FamilyKind::Ijkl,
};

FamilyKind kind_of(const GraphFamily& f);
/// CLI name, e.g. "power-cycle".
std::string_view kind_name(FamilyKind k);
std::optional<FamilyKind> parse_kind(std::string_view name);

/// Matrix order of the built circulant (2n for the C(2n, r) families).
std::uint64_t order_of(const GraphFamily& f);

/// Throws FamilyError naming the violated constraint.
void validate(const GraphFamily& f);

CirculantSpec build(const GraphFamily& f);

enum class PredictionKind { Exact, SufficientOnly };
std::string_view to_string(PredictionKind k);

struct Prediction {
    PredictionKind kind;
    /// For SufficientOnly, false means no sufficient condition fired.
    bool singular;
    /// Identifier of the governing result, e.g. "Ruivivar-Theorem".
    std::string rule;
    /// Sufficient conditions that fired (RstDigraph only).
    std::vector<std::string> fired;
};

Prediction predict(const GraphFamily& f);

/// Every valid instance of `kind` with matrix order <= n_max, in
/// lexicographic parameter order.
std::vector<GraphFamily> enumerate_valid(FamilyKind kind, std::uint64_t n_max);

/// "<kind>:<k=v>(,<k=v>)*", e.g. "power-cycle:n=8,r=3".
GraphFamily parse_family(std::string_view text);
std::string format_family(const GraphFamily& f);

}  // namespace circsing
