#include "circsing/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "circsing/cyclotomic.hpp"

namespace circsing {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using std::gcd;

[[noreturn]] void fail(std::string_view kind, const std::string& constraint)
{
    throw FamilyError(std::string(kind) + ": constraint violated: " + constraint);
}

void require(bool ok, FamilyKind kind, const std::string& constraint)
{
    if (!ok) fail(kind_name(kind), constraint);
}

std::vector<long long> symmetric_row(std::uint64_t n, const std::vector<std::uint64_t>& distances)
{
    std::vector<long long> row(n, 0);
    for (auto d : distances) {
        row[d % n] = 1;
        row[(n - d) % n] = 1;
    }
    return row;
}

std::vector<long long> distance_power_row(std::uint64_t n, std::uint64_t i) { return symmetric_row(n, {i}); }

std::vector<long long> power_cycle_row(std::uint64_t n, std::uint64_t r)
{
    std::vector<std::uint64_t> ds;
    for (std::uint64_t k = 1; k <= r; ++k) ds.push_back(k);
    return symmetric_row(n, ds);
}

std::vector<long long> c2nr_row(std::uint64_t n, std::uint64_t r)
{
    auto row = power_cycle_row(2 * n, r);
    row[n] = 1;
    return row;
}

CirculantSpec complement_of(std::vector<long long> row) { return complement_row(CirculantSpec(std::move(row))); }

Prediction exact(bool singular, std::string rule) { return {PredictionKind::Exact, singular, std::move(rule), {}}; }

Prediction predict_rst(const RstDigraph& f)
{
    const auto [n, r, s, t] = f;
    if (r == 0 || s == 0) {
        // a rotated (r + s)-element digraph
        return exact(gcd(n, r + s) != 1, "K-Element-Lemma");
    }
    Prediction p{PredictionKind::SufficientOnly, false, "RST-Lemma", {}};
    if (gcd(gcd(n, s), r) > 1) p.fired.push_back("gcd(n,s,r)>1");
    if (gcd(n, s) == 1 && s % r == 0) {
        const std::uint64_t ell = s / r;
        // Both branches evaluate at zeta_n^(n/d), so d must divide n.
        for (std::uint64_t d : divisors(n)) {
            if (d < 2) continue;
            if (t % d == 0 && (ell + 1) % d == 0) p.fired.push_back("d|t,l=-1(mod d):d=" + std::to_string(d));
            if (d % 2 == 0) {
                const std::uint64_t half = d / 2;
                if ((r + t) % half == 0 && ((r + t) / half) % 2 == 1 && (ell - 1) % d == 0)
                    p.fired.push_back("(r+t)=odd*d/2,l=1(mod d):d=" + std::to_string(d));
            }
        }
    }
    p.singular = !p.fired.empty();
    return p;
}

struct KindInfo {
    FamilyKind kind;
    std::string_view name;
    std::vector<std::string_view> params;
};

const std::vector<KindInfo>& kind_table()
{
    static const std::vector<KindInfo> table = {
        {FamilyKind::DistancePower, "distance-power", {"n", "i"}},
        {FamilyKind::DistancePowerComplement, "distance-power-complement", {"n", "i"}},
        {FamilyKind::PowerCycle, "power-cycle", {"n", "r"}},
        {FamilyKind::PowerCycleComplement, "power-cycle-complement", {"n", "r"}},
        {FamilyKind::C2nr, "c2nr", {"n", "r"}},
        {FamilyKind::C2nrComplement, "c2nr-complement", {"n", "r"}},
        {FamilyKind::KElement, "k-element", {"n", "k"}},
        {FamilyKind::RstDigraph, "rst", {"n", "r", "s", "t"}},
        {FamilyKind::Ijkl, "ijkl", {"n", "i", "j", "k", "l"}},
    };
    return table;
}

const KindInfo& info(FamilyKind k)
{
    for (const auto& e : kind_table())
        if (e.kind == k) return e;
    throw std::logic_error("unknown family kind");
}

std::vector<std::uint64_t> params_of(const GraphFamily& f)
{
    return std::visit(overloaded{
                          [](const DistancePower& x) { return std::vector<std::uint64_t>{x.n, x.i}; },
                          [](const DistancePowerComplement& x) { return std::vector<std::uint64_t>{x.n, x.i}; },
                          [](const PowerCycle& x) { return std::vector<std::uint64_t>{x.n, x.r}; },
                          [](const PowerCycleComplement& x) { return std::vector<std::uint64_t>{x.n, x.r}; },
                          [](const C2nr& x) { return std::vector<std::uint64_t>{x.n, x.r}; },
                          [](const C2nrComplement& x) { return std::vector<std::uint64_t>{x.n, x.r}; },
                          [](const KElement& x) { return std::vector<std::uint64_t>{x.n, x.k}; },
                          [](const RstDigraph& x) { return std::vector<std::uint64_t>{x.n, x.r, x.s, x.t}; },
                          [](const Ijkl& x) { return std::vector<std::uint64_t>{x.n, x.i, x.j, x.k, x.l}; },
                      },
                      f);
}

GraphFamily make_family(FamilyKind kind, const std::vector<std::uint64_t>& v)
{
    switch (kind) {
    case FamilyKind::DistancePower: return DistancePower{v[0], v[1]};
    case FamilyKind::DistancePowerComplement: return DistancePowerComplement{v[0], v[1]};
    case FamilyKind::PowerCycle: return PowerCycle{v[0], v[1]};
    case FamilyKind::PowerCycleComplement: return PowerCycleComplement{v[0], v[1]};
    case FamilyKind::C2nr: return C2nr{v[0], v[1]};
    case FamilyKind::C2nrComplement: return C2nrComplement{v[0], v[1]};
    case FamilyKind::KElement: return KElement{v[0], v[1]};
    case FamilyKind::RstDigraph: return RstDigraph{v[0], v[1], v[2], v[3]};
    case FamilyKind::Ijkl: return Ijkl{v[0], v[1], v[2], v[3], v[4]};
    }
    throw std::logic_error("unknown family kind");
}

}  // namespace

FamilyKind kind_of(const GraphFamily& f) { return static_cast<FamilyKind>(f.index()); }

std::string_view kind_name(FamilyKind k) { return info(k).name; }

std::optional<FamilyKind> parse_kind(std::string_view name)
{
    for (const auto& e : kind_table())
        if (e.name == name) return e.kind;
    return std::nullopt;
}

std::uint64_t order_of(const GraphFamily& f)
{
    return std::visit(overloaded{
                          [](const C2nr& x) { return 2 * x.n; },
                          [](const C2nrComplement& x) { return 2 * x.n; },
                          [](const auto& x) { return x.n; },
                      },
                      f);
}

void validate(const GraphFamily& f)
{
    const FamilyKind kind = kind_of(f);
    std::visit(overloaded{
                   [&](const DistancePower& x) {
                       require(x.n >= 3, kind, "n >= 3");
                       require(x.i >= 1 && x.i <= x.n / 2, kind, "1 <= i <= floor(n/2)");
                   },
                   [&](const DistancePowerComplement& x) {
                       require(x.n >= 3, kind, "n >= 3");
                       require(x.i >= 1 && x.i <= x.n / 2, kind, "1 <= i <= floor(n/2)");
                   },
                   [&](const PowerCycle& x) {
                       require(x.n >= 3, kind, "n >= 3");
                       require(x.r >= 1 && x.r < x.n / 2, kind, "1 <= r < floor(n/2)");
                   },
                   [&](const PowerCycleComplement& x) {
                       require(x.n >= 3, kind, "n >= 3");
                       require(x.r >= 1 && x.r < x.n / 2, kind, "1 <= r < floor(n/2)");
                   },
                   [&](const C2nr& x) {
                       require(x.n >= 2, kind, "n >= 2");
                       require(x.r >= 1 && x.r < x.n, kind, "1 <= r < n");
                   },
                   [&](const C2nrComplement& x) {
                       require(x.n >= 2, kind, "n >= 2");
                       require(x.r >= 1 && x.r < x.n, kind, "1 <= r < n");
                   },
                   [&](const KElement& x) { require(x.k >= 1 && x.k <= x.n, kind, "1 <= k <= n"); },
                   [&](const RstDigraph& x) {
                       require(x.r + x.s + x.t <= x.n, kind, "r + s + t <= n");
                       require(x.r + x.s >= 1, kind, "r + s >= 1");
                   },
                   [&](const Ijkl& x) {
                       require(x.j >= 1, kind, "j >= 1");
                       require(x.j > x.l, kind, "j > l");
                       require(x.k * x.j + x.i + x.l < x.n, kind, "k*j + i + l < n");
                   },
               },
               f);
}

CirculantSpec build(const GraphFamily& f)
{
    validate(f);
    return std::visit(overloaded{
                          [](const DistancePower& x) { return CirculantSpec(distance_power_row(x.n, x.i)); },
                          [](const DistancePowerComplement& x) { return complement_of(distance_power_row(x.n, x.i)); },
                          [](const PowerCycle& x) { return CirculantSpec(power_cycle_row(x.n, x.r)); },
                          [](const PowerCycleComplement& x) { return complement_of(power_cycle_row(x.n, x.r)); },
                          [](const C2nr& x) { return CirculantSpec(c2nr_row(x.n, x.r)); },
                          [](const C2nrComplement& x) { return complement_of(c2nr_row(x.n, x.r)); },
                          [](const KElement& x) {
                              std::vector<long long> row(x.n, 0);
                              std::fill_n(row.begin(), x.k, 1);
                              return CirculantSpec(std::move(row));
                          },
                          [](const RstDigraph& x) {
                              std::vector<long long> row(x.n, 0);
                              std::fill_n(row.begin(), x.r, 1);
                              std::fill_n(row.begin() + static_cast<std::ptrdiff_t>(x.r + x.t), x.s, 1);
                              return CirculantSpec(std::move(row));
                          },
                          [](const Ijkl& x) {
                              std::vector<long long> row(x.n, 0);
                              for (std::uint64_t t = 0; t <= x.k; ++t)
                                  for (std::uint64_t s = x.i; s <= x.i + x.l; ++s) row[s + t * x.j] = 1;
                              return CirculantSpec(std::move(row));
                          },
                      },
                      f);
}

std::string_view to_string(PredictionKind k) { return k == PredictionKind::Exact ? "exact" : "sufficient-only"; }

Prediction predict(const GraphFamily& f)
{
    validate(f);
    return std::visit(
        overloaded{
            [](const DistancePower& x) {
                const auto n = x.n;
                return exact(n % 4 == 0 && (n / 4) % gcd(x.i, n / 2) == 0, "Distance-Power-Lemma");
            },
            [](const DistancePowerComplement& x) {
                const auto n = x.n;
                const bool singular =
                    x.i == n / 2 ? (n % 2 == 0 || n % 6 == 3) : (n % 3 == 0 && (n / 3) % gcd(x.i, n) == 0);
                return exact(singular, "Distance-Power-Complement-Lemma");
            },
            [](const PowerCycle& x) {
                const auto n = x.n;
                const bool singular = gcd(n, x.r) > 1 || (n % 2 == 0 && (n / 2) % gcd(x.r + 1, n) == 0);
                return exact(singular, "Ruivivar-Theorem");
            },
            [](const PowerCycleComplement& x) {
                return exact(gcd(x.n, 2 * x.r + 1) != 1, "Power-Cycle-Complement-Corollary");
            },
            [](const C2nr& x) { return exact(gcd(x.n, 2 * x.r + 1) >= 3, "C2nr-Theorem"); },
            [](const C2nrComplement& x) {
                const bool nonsingular = (x.n % 2 == x.r % 2) && gcd(x.n, x.r + 1) == 1 &&
                                         two_adic_valuation(x.n) < two_adic_valuation(x.n - x.r);
                return exact(!nonsingular, "C2nr-Complement-Lemma");
            },
            [](const KElement& x) { return exact(gcd(x.n, x.k) != 1, "K-Element-Lemma"); },
            [](const RstDigraph& x) { return predict_rst(x); },
            [](const Ijkl& x) {
                const bool singular = gcd(x.l + 1, x.n) >= 2 || gcd(x.k + 1, x.n / gcd(x.n, x.j)) >= 2;
                return exact(singular, "Ijkl-Theorem");
            },
        },
        f);
}

std::vector<GraphFamily> enumerate_valid(FamilyKind kind, std::uint64_t n_max)
{
    std::vector<GraphFamily> out;
    switch (kind) {
    case FamilyKind::DistancePower:
    case FamilyKind::DistancePowerComplement:
        for (std::uint64_t n = 3; n <= n_max; ++n)
            for (std::uint64_t i = 1; i <= n / 2; ++i) out.push_back(make_family(kind, {n, i}));
        break;
    case FamilyKind::PowerCycle:
    case FamilyKind::PowerCycleComplement:
        for (std::uint64_t n = 3; n <= n_max; ++n)
            for (std::uint64_t r = 1; r < n / 2; ++r) out.push_back(make_family(kind, {n, r}));
        break;
    case FamilyKind::C2nr:
    case FamilyKind::C2nrComplement:
        for (std::uint64_t n = 2; 2 * n <= n_max; ++n)
            for (std::uint64_t r = 1; r < n; ++r) out.push_back(make_family(kind, {n, r}));
        break;
    case FamilyKind::KElement:
        for (std::uint64_t n = 1; n <= n_max; ++n)
            for (std::uint64_t k = 1; k <= n; ++k) out.push_back(KElement{n, k});
        break;
    case FamilyKind::RstDigraph:
        for (std::uint64_t n = 1; n <= n_max; ++n)
            for (std::uint64_t r = 0; r <= n; ++r)
                for (std::uint64_t s = 0; r + s <= n; ++s)
                    for (std::uint64_t t = 0; r + s + t <= n; ++t)
                        if (r + s >= 1) out.push_back(RstDigraph{n, r, s, t});
        break;
    case FamilyKind::Ijkl:
        // j is capped at n - 1: with k = 0 the row does not depend on j.
        for (std::uint64_t n = 1; n <= n_max; ++n)
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = 1; j < n; ++j)
                    for (std::uint64_t k = 0; k * j + i < n; ++k)
                        for (std::uint64_t l = 0; l < j && k * j + i + l < n; ++l)
                            out.push_back(Ijkl{n, i, j, k, l});
        break;
    }
    return out;
}

GraphFamily parse_family(std::string_view text)
{
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw FamilyError("family grammar: expected '<kind>:<k=v>(,<k=v>)*', missing ':'");
    const std::string_view name = text.substr(0, colon);
    const auto kind = parse_kind(name);
    if (!kind) throw FamilyError("family grammar: unknown kind '" + std::string(name) + "'");
    const auto& names = info(*kind).params;

    std::map<std::string, std::uint64_t, std::less<>> values;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw FamilyError("family grammar: expected '<k>=<v>', got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const std::string_view val = item.substr(eq + 1);
        if (std::find(names.begin(), names.end(), key) == names.end())
            throw FamilyError("family grammar: unknown parameter '" + std::string(key) + "' for " + std::string(name));
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (val.empty() || ec != std::errc{} || ptr != val.data() + val.size())
            throw FamilyError("family grammar: parameter '" + std::string(key) + "' must be a non-negative integer");
        if (!values.emplace(std::string(key), v).second)
            throw FamilyError("family grammar: duplicate parameter '" + std::string(key) + "'");
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw FamilyError("family grammar: trailing ','");
    }
    std::vector<std::uint64_t> ordered;
    for (auto key : names) {
        auto it = values.find(key);
        if (it == values.end())
            throw FamilyError("family grammar: missing parameter '" + std::string(key) + "' for " + std::string(name));
        ordered.push_back(it->second);
    }
    GraphFamily f = make_family(*kind, ordered);
    validate(f);
    return f;
}

std::string format_family(const GraphFamily& f)
{
    const auto& ki = info(kind_of(f));
    const auto vals = params_of(f);
    std::string out(ki.name);
    out += ':';
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ',';
        out += std::string(ki.params[i]) + "=" + std::to_string(vals[i]);
    }
    return out;
}

}  // namespace circsing
