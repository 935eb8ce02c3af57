#include "cli.hpp"

#include "carlson/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace carlson::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv };

struct Config {
    std::optional<double> a, b, x;
    int grid = 0;
    std::string families;
    Format format = Format::Json;
    std::uint64_t seed = 7;
    std::optional<unsigned> precision;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Params require_params(const Config& cfg) {
    if (!cfg.a || !cfg.b) throw Usage("--a and --b are required");
    return {*cfg.a, *cfg.b};
}

double require_x(const Config& cfg) {
    if (!cfg.x) throw Usage("--x is required");
    return *cfg.x;
}

std::vector<BoundFamily> enabled_families(const Config& cfg) {
    if (cfg.families.empty()) return default_families();
    auto fams = parse_families(cfg.families);
    if (fams.empty()) throw Usage("--families is empty");
    return fams;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_line(std::initializer_list<std::string> fields) {
    std::string out;
    for (const auto& f : fields) out += (out.empty() ? "" : ",") + f;
    return out + "\n";
}

std::string opt_csv(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

Outcome run_classify(const Config& cfg) {
    const Params p = require_params(cfg);
    const RegionClass symbolic = classify_symbolic(p);
    const RegionClass numeric = classify_numeric(p);
    const bool necessary = necessary_increasing(p);
    std::optional<ExtremaReport> extrema;
    try {
        extrema = extrema_points(p);
    } catch (const DegenerateParams&) {
    }

    Outcome o;
    if (symbolic != RegionClass::Indeterminate && numeric != RegionClass::Indeterminate && symbolic != numeric) {
        o.code = kExitFailure;
        o.err = "conflict: symbolic " + std::string(to_string(symbolic)) + ", numeric " + std::string(to_string(numeric)) + "\n";
    }
    if (cfg.format == Format::Csv) {
        o.out = "a,b,symbolic_class,numeric_class,necessary_increasing,x1,x2\n"
                + csv_line({format_double(p.a), format_double(p.b), std::string(to_string(symbolic)),
                            std::string(to_string(numeric)), necessary ? "true" : "false",
                            extrema ? opt_csv(extrema->x1) : "", extrema ? opt_csv(extrema->x2) : ""});
    } else {
        o.out = dump({{"a", p.a},
                      {"b", p.b},
                      {"symbolic_class", to_string(symbolic)},
                      {"numeric_class", to_string(numeric)},
                      {"necessary_increasing", necessary},
                      {"extrema", extrema ? to_json(*extrema) : json(nullptr)}});
    }
    return o;
}

Outcome run_extrema(const Config& cfg) {
    const Params p = require_params(cfg);
    const ExtremaReport r = extrema_points(p);
    if (cfg.format == Format::Csv) {
        return {kExitOk,
                "a,b,disc_closed,disc_quadratic,x1,x2,max_coeff,min_coeff\n"
                    + csv_line({format_double(p.a), format_double(p.b), format_double(r.disc_closed),
                                format_double(r.disc_quadratic), opt_csv(r.x1), opt_csv(r.x2), opt_csv(r.max_coeff),
                                opt_csv(r.min_coeff)}),
                ""};
    }
    json j = to_json(r);
    j["a"] = p.a;
    j["b"] = p.b;
    return {kExitOk, dump(j), ""};
}

Outcome run_bounds(const Config& cfg) {
    const double x = require_x(cfg);
    const auto fams = enabled_families(cfg);
    const BoundInterval env = best_envelope(x, fams);
    json per = json::array();
    std::string csv = "family,lower,upper\n";
    if (x > 0.0 && x < 1.0) {
        for (const auto& fam : fams) {
            const BoundInterval iv = family_bounds(fam, x);
            json item = to_json(iv);
            item["family"] = fam.id();
            per.push_back(std::move(item));
            csv += csv_line({fam.id(), opt_csv(iv.lower), opt_csv(iv.upper)});
        }
    }
    csv += csv_line({"envelope", opt_csv(env.lower), opt_csv(env.upper)});
    if (cfg.format == Format::Csv) return {kExitOk, csv, ""};
    json j{{"x", x}, {"envelope", to_json(env)}, {"families", std::move(per)}};
    if (cfg.precision) j["reference"] = oracle::arccos_hp(x, *cfg.precision).decimal;
    return {kExitOk, dump(j), ""};
}

Outcome run_approx(const Config& cfg) {
    const double x = require_x(cfg);
    const Approximation ap = approx_arccos(x);
    if (cfg.format == Format::Csv) {
        return {kExitOk, "x,value,radius\n" + csv_line({format_double(x), format_double(ap.value), format_double(ap.radius)}), ""};
    }
    json j{{"x", x}, {"value", ap.value}, {"radius", ap.radius}};
    if (cfg.precision) j["reference"] = oracle::arccos_hp(x, *cfg.precision).decimal;
    return {kExitOk, dump(j), ""};
}

Outcome run_table(const Config& cfg) {
    if (cfg.grid < 2) throw Usage("--grid must be at least 2");
    const auto fams = enabled_families(cfg);
    std::vector<double> xs(static_cast<std::size_t>(cfg.grid));
    for (int i = 0; i < cfg.grid; ++i) xs[i] = static_cast<double>(i + 1) / static_cast<double>(cfg.grid + 1);
    const auto rows = bound_table(xs, fams);
    return {kExitOk, cfg.format == Format::Csv ? table_to_csv(rows) : table_to_json(rows), ""};
}

Outcome run_verify(const Config& cfg) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.digits = cfg.precision.value_or(default_digits());
    const auto reports = run_suite(opts);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    return {ok ? kExitOk : kExitFailure, cfg.format == Format::Csv ? reports_to_csv(reports) : reports_to_json(reports), ""};
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Certified arccos bounds, region classification and verification", "carlson"};
    app.require_subcommand(1, 1);

    Config cfg;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
               "--format", [&](const std::string& f) { cfg.format = f == "csv" ? Format::Csv : Format::Json; },
               "Output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.a, "Parameter a")->required();
        sub->add_option("--b", cfg.b, "Parameter b")->required();
    };
    auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--precision", cfg.precision, "Decimal digits for high-precision work")
            ->check(CLI::Range(static_cast<unsigned>(kMinDigits), static_cast<unsigned>(kMaxWorkingDigits)));
    };

    auto* classify = app.add_subcommand("classify", "Region class of f_{a,b}");
    add_params(classify);
    add_format(classify);
    add_precision(classify);

    auto* extrema = app.add_subcommand("extrema", "Discriminant, extreme points and coefficients");
    add_params(extrema);
    add_format(extrema);

    auto* bounds = app.add_subcommand("bounds", "Certified bounds at one point");
    bounds->add_option("--x", cfg.x, "Point in (-1, 1]")->required();
    bounds->add_option("--families", cfg.families, "Comma-separated family ids");
    add_format(bounds);
    add_precision(bounds);

    auto* approx = app.add_subcommand("approx", "Midpoint approximation with certified radius");
    approx->add_option("--x", cfg.x, "Point in (-1, 1]")->required();
    add_format(approx);
    add_precision(approx);

    auto* table = app.add_subcommand("table", "Bound table on a uniform grid");
    table->add_option("--grid", cfg.grid, "Number of interior grid points")->required();
    table->add_option("--families", cfg.families, "Comma-separated family ids");
    add_format(table);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--seed", cfg.seed, "Sampling seed");
    add_format(verify);
    add_precision(verify);

    Outcome usage;
    usage.code = kExitUsage;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kExitOk, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        help << e.what() << "\n" << app.help();
        usage.err = help.str();
        return usage;
    }

    try {
        if (*classify) return run_classify(cfg);
        if (*extrema) return run_extrema(cfg);
        if (*bounds) return run_bounds(cfg);
        if (*approx) return run_approx(cfg);
        if (*table) return run_table(cfg);
        return run_verify(cfg);
    } catch (const Usage& e) {
        usage.err = std::string(e.what()) + "\n" + app.help();
    } catch (const std::exception& e) {
        // Domain, precision, family and parameter errors all come from bad input.
        usage.err = std::string("error: ") + e.what() + "\n";
    }
    return usage;
}

}  // namespace carlson::cli
