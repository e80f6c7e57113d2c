#include "circsing/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circsing/circulant.hpp"
#include "circsing/families.hpp"
#include "circsing/oracle.hpp"

namespace circsing::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::optional<std::string> row;
    std::optional<std::size_t> n;
    std::optional<std::string> family;
    std::string format = "json";
    std::optional<std::uint64_t> n_max;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    bool check = false;
    double tolerance = 1e-8;
};

json u64_array(const std::vector<std::uint64_t>& v) { return json(v); }

// Target of classify / det / spectrum: exactly one of --row or --family.
struct Target {
    CirculantSpec spec;
    json input;
};

Target resolve_target(const Options& o)
{
    if (o.row.has_value() == o.family.has_value())
        throw UsageError(o.command + ": exactly one of --row or --family is required");
    if (o.row) {
        CirculantSpec spec = parse_spec(*o.row, o.n);
        return {spec, json{{"spec", format_spec(spec)}}};
    }
    const GraphFamily f = parse_family(*o.family);
    CirculantSpec spec = build(f);
    if (o.n && *o.n != spec.order())
        throw UsageError("--n " + std::to_string(*o.n) + " does not match family order " +
                         std::to_string(spec.order()));
    return {spec, json{{"family", format_family(f)}, {"spec", format_spec(spec)}}};
}

json singularity_json(const SingularityReport& r)
{
    return json{{"singular", r.singular},
                {"witness_divisors", u64_array(r.witness_divisors)},
                {"zero_exponents", u64_array(r.zero_exponents)}};
}

json det_json(const DetReport& r)
{
    json factors = json::array();
    for (const auto& [d, v] : r.factors) factors.push_back(json{{"d", d}, {"resultant", v.get_str()}});
    return json{{"determinant", r.determinant.get_str()}, {"factors", factors}};
}

struct Outcome {
    json input;
    json result;
    int status = kOk;
    std::optional<std::uint64_t> seed;
};

Outcome cmd_classify(const Options& o)
{
    auto [spec, input] = resolve_target(o);
    return {input, singularity_json(singularity(spec))};
}

Outcome cmd_det(const Options& o)
{
    auto [spec, input] = resolve_target(o);
    const DetReport report = exact_determinant(spec);
    json result = det_json(report);
    int status = kOk;
    if (o.check) {
        const BigInt oracle = bareiss_det(spec);
        const bool match = oracle == report.determinant;
        result["oracle_determinant"] = oracle.get_str();
        result["oracle_agrees"] = match;
        if (!match) status = kVerificationFailed;
    }
    return {input, result, status};
}

Outcome cmd_spectrum(const Options& o)
{
    auto [spec, input] = resolve_target(o);
    json values = json::array();
    const auto spectrum = spectrum_numeric(spec);
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const auto z = spectrum[k];
        values.push_back(json{{"k", k},
                              {"re", z.real()},
                              {"im", z.imag()},
                              {"abs", std::abs(z)},
                              {"near_zero", std::abs(z) < o.tolerance}});
    }
    json result{{"eigenvalues", values}, {"tolerance", o.tolerance}};
    int status = kOk;
    if (o.check) {
        // numeric near-zeros must coincide with the exact zero exponents
        const auto exact = singularity(spec).zero_exponents;
        std::vector<std::uint64_t> numeric;
        for (std::size_t k = 0; k < spectrum.size(); ++k)
            if (std::abs(spectrum[k]) < o.tolerance) numeric.push_back(k);
        result["exact_zero_exponents"] = u64_array(exact);
        result["numeric_agrees"] = numeric == exact;
        if (numeric != exact) status = kVerificationFailed;
    }
    return {input, result, status};
}

Outcome cmd_predict(const Options& o)
{
    if (!o.family) throw UsageError("predict: --family is required");
    if (o.row) throw UsageError("predict: --row is not accepted; give a family");
    const GraphFamily f = parse_family(*o.family);
    const Prediction p = predict(f);
    json result{{"kind", to_string(p.kind)}, {"singular", p.singular}, {"rule", p.rule}, {"order", order_of(f)}};
    if (p.kind == PredictionKind::SufficientOnly) result["fired"] = p.fired;
    int status = kOk;
    if (o.check) {
        const BigInt det = bareiss_det(build(f));
        const bool ok = agrees(p, det);
        result["oracle_determinant"] = det.get_str();
        result["oracle_agrees"] = ok;
        if (!ok) status = kVerificationFailed;
    }
    return {json{{"family", format_family(f)}}, result, status};
}

json sweep_json(const SweepSummary& s)
{
    return json{{"kind", kind_name(s.kind)},
                {"n_max", s.n_max},
                {"total", s.total},
                {"predicted_singular", s.predicted_singular},
                {"oracle_singular", s.oracle_singular},
                {"disagreements", s.disagreements},
                {"disagreement_details", s.disagreement_details}};
}

Outcome cmd_verify(const Options& o)
{
    const std::uint64_t n_max = o.n_max.value_or(24);
    json input{{"n_max", n_max}};
    json result = json::object();
    std::size_t disagreements = 0;

    if (o.row) {
        if (o.family) throw UsageError("verify: give either --row or --family, not both");
        const CirculantSpec spec = parse_spec(*o.row, o.n);
        const BigInt oracle = bareiss_det(spec);
        const DetReport fast = exact_determinant(spec);
        const SingularityReport sing = singularity(spec);
        const bool ok = fast.determinant == oracle && sing.singular == (sgn(oracle) == 0);
        input = json{{"spec", format_spec(spec)}};
        result["row"] = json{{"determinant", fast.determinant.get_str()},
                             {"oracle_determinant", oracle.get_str()},
                             {"singular", sing.singular},
                             {"agree", ok}};
        if (!ok) ++disagreements;
    } else {
        if (n_max < 3) throw UsageError("verify: --n-max must be at least 3");
        const std::string which = o.family.value_or("all");
        std::vector<FamilyKind> kinds;
        if (which == "all") {
            kinds.assign(std::begin(kAllFamilyKinds), std::end(kAllFamilyKinds));
        } else {
            const auto k = parse_kind(which);
            if (!k) throw UsageError("verify: unknown family kind '" + which + "' (use a kind name or 'all')");
            kinds.push_back(*k);
        }
        input["family"] = which;
        json families = json::array();
        for (FamilyKind k : kinds) {
            const SweepSummary s = sweep_family(k, n_max);
            disagreements += s.disagreements;
            families.push_back(sweep_json(s));
        }
        result["families"] = families;
    }

    if (o.samples) {
        const std::uint64_t seed = o.seed.value_or(42);
        const RandomSweepSummary r = sweep_random_rows(std::max<std::uint64_t>(n_max, 2), *o.samples, seed);
        disagreements += r.failures;
        result["random_rows"] = json{{"n_max", r.n_max},
                                     {"samples", r.samples},
                                     {"seed", r.seed},
                                     {"passes", r.passes},
                                     {"failures", r.failures},
                                     {"failure_details", r.failure_details}};
        input["samples"] = *o.samples;
    }
    result["disagreements"] = disagreements;
    std::optional<std::uint64_t> seed;
    if (o.samples) seed = o.seed.value_or(42);
    return {input, result, disagreements == 0 ? kOk : kVerificationFailed, seed};
}

Outcome cmd_bench(const Options& o)
{
    const std::uint64_t n_max = o.n_max.value_or(512);
    const std::size_t runs = o.samples.value_or(5);
    const std::uint64_t seed = o.seed.value_or(1);
    if (runs == 0) throw UsageError("bench: --samples (runs per size) must be positive");
    std::vector<std::uint64_t> ladder;
    for (std::uint64_t n : {64, 128, 256, 512})
        if (n <= n_max) ladder.push_back(n);
    if (ladder.empty()) throw UsageError("bench: --n-max must be at least 64");

    json points = json::array();
    bool all_match = true;
    for (const auto& p : run_bench(ladder, runs, seed)) {
        points.push_back(json{{"n", p.n},
                              {"runs", p.runs},
                              {"exact_median_s", p.exact_median_s},
                              {"bareiss_median_s", p.bareiss_median_s},
                              {"classify_median_s", p.classify_median_s},
                              {"speedup", p.bareiss_median_s / p.exact_median_s},
                              {"results_match", p.results_match}});
        all_match = all_match && p.results_match;
    }
    constexpr std::uint64_t kProbe = 4096;
    const json probe{{"n", kProbe}, {"runs", runs}, {"classify_median_s", classify_median(kProbe, runs, seed)}};
    return {json{{"n_max", n_max}, {"runs", runs}}, json{{"points", points}, {"classify_probe", probe}},
            all_match ? kOk : kVerificationFailed, seed};
}

void print_table(std::ostream& out, const json& doc)
{
    // flat "path  value" listing; arrays of scalars stay on one line
    std::function<void(const std::string&, const json&)> walk = [&](const std::string& path, const json& v) {
        const bool scalar_array =
            v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
        if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it) walk(path.empty() ? it.key() : path + "." + it.key(), *it);
        } else if (v.is_array() && !scalar_array) {
            for (std::size_t i = 0; i < v.size(); ++i) walk(path + "[" + std::to_string(i) + "]", v[i]);
        } else {
            out << std::left << std::setw(40) << path << ' ' << (v.is_string() ? v.get<std::string>() : v.dump())
                << '\n';
        }
    };
    walk("", doc);
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<long long> bench_row(std::uint64_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<long long> row(n, 0);
    for (std::size_t i = 1; i < n; ++i) row[i] = bit(rng);
    return row;
}

std::vector<BenchPoint> run_bench(const std::vector<std::uint64_t>& ladder, std::size_t runs, std::uint64_t seed)
{
    std::vector<BenchPoint> out;
    for (std::uint64_t n : ladder) {
        const CirculantSpec spec(bench_row(n, seed));
        std::vector<double> exact_t, oracle_t, classify_t;
        BigInt fast, oracle;
        for (std::size_t r = 0; r < runs; ++r) {
            exact_t.push_back(seconds([&] { fast = exact_determinant(spec).determinant; }));
            oracle_t.push_back(seconds([&] { oracle = bareiss_det(spec); }));
            classify_t.push_back(seconds([&] { (void)singularity(spec); }));
        }
        out.push_back({n, runs, median(exact_t), median(oracle_t), median(classify_t), fast == oracle});
    }
    return out;
}

double classify_median(std::uint64_t n, std::size_t runs, std::uint64_t seed)
{
    const CirculantSpec spec(bench_row(n, seed));
    std::vector<double> t;
    for (std::size_t r = 0; r < runs; ++r) t.push_back(seconds([&] { (void)singularity(spec); }));
    return median(t);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact singularity and determinants of circulant graphs and digraphs", "circsing"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--row", o.row, "first row: comma-separated integers or 'n=<int>;row=<ints>'");
        sub->add_option("--n", o.n, "order; the row length must match");
        sub->add_option("--family", o.family, "family '<kind>:<k=v>,...' (verify: a kind name or 'all')");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--n-max", o.n_max, "largest order for sweeps / bench ladder");
        sub->add_option("--samples", o.samples, "random rows (verify) or runs per size (bench)");
        sub->add_option("--seed", o.seed, "seed for randomized sweeps");
        sub->add_flag("--check", o.check, "cross-check against the elimination oracle");
        sub->add_option("--tolerance", o.tolerance, "near-zero threshold for numeric eigenvalues")
            ->check(CLI::PositiveNumber);
    };
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify", "exact singularity verdict with witness divisors"},
        {"det", "exact determinant via cyclotomic resultants"},
        {"spectrum", "numeric eigenvalues"},
        {"predict", "closed-form prediction for a named family"},
        {"verify", "sweep predictions and fast paths against the oracle"},
        {"bench", "wall-time comparison of the resultant path and the oracle"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub);
        sub->callback([&o, name = name] { o.command = name; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    Outcome outcome;
    try {
        if (o.command == "classify") outcome = cmd_classify(o);
        else if (o.command == "det") outcome = cmd_det(o);
        else if (o.command == "spectrum") outcome = cmd_spectrum(o);
        else if (o.command == "predict") outcome = cmd_predict(o);
        else if (o.command == "verify") outcome = cmd_verify(o);
        else outcome = cmd_bench(o);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    json meta{{"version", kVersion}};
    meta["seed"] = outcome.seed ? json(*outcome.seed) : json(nullptr);
    const json doc{{"command", o.command}, {"input", outcome.input}, {"result", outcome.result}, {"meta", meta}};
    if (o.format == "table") print_table(out, doc);
    else out << doc.dump(2) << '\n';
    out.flush();
    return outcome.status;
}

}  // namespace circsing::cli
