// xiforge command-line tool.
//
//   xiforge eval   <target> [--q --j --ell --s --b --x --form]   one value as JSON (or CSV)
//   xiforge verify <suite>  [--qmax --jmax --j --s --b-list]     per-case table, exit 3 on failure
//   xiforge scan   <target> [--q --t a:b:step | --from --to --step]  CSV stream
//   xiforge zeros  --q N    [--t-max --grid-step]               critical-line zeros of P_q
//
// Exit codes: 0 success, 1 domain / input error, 2 tolerance or convergence
// failure, 3 verification failure or zero-count mismatch.
// Complex arguments are written "re,im" (or just "re").

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xiforge.hpp"

namespace {

using json = nlohmann::json;
using xiforge::ComplexValue;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitTolerance = 2;
constexpr int kExitVerification = 3;

constexpr const char* kVersion = "0.1.0";

// Input that cannot be turned into a valid request; reported with exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw InputError("invalid number for " + what + ": '" + text + "'");
    return value;
}

ComplexValue parse_complex(const std::string& text, const std::string& what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_double(text, what), 0.0};
    return {parse_double(text.substr(0, comma), what), parse_double(text.substr(comma + 1), what)};
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string::npos ? text.size() : comma;
        values.push_back(parse_double(text.substr(start, end - start), what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

struct Range {
    double from;
    double to;
    double step;

    // Inclusive grid: round((to - from) / step) + 1 points.
    std::size_t count() const { return static_cast<std::size_t>(std::llround((to - from) / step)) + 1; }
    double at(std::size_t i) const { return i + 1 == count() ? to : from + static_cast<double>(i) * step; }
};

Range make_range(double from, double to, double step) {
    if (!(step > 0.0)) throw InputError("scan step must be positive");
    if (!(to >= from)) throw InputError("scan range end must not precede its start");
    if ((to - from) / step > 1e7) throw InputError("scan range has too many points");
    return {from, to, step};
}

Range parse_range(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) throw InputError("range must be written from:to:step, got '" + text + "'");
    return make_range(parse_double(text.substr(0, first), "range"),
                      parse_double(text.substr(first + 1, second - first - 1), "range"),
                      parse_double(text.substr(second + 1), "range"));
}

// Signed zeros print as 0.
double unsign_zero(double x) {
    return x == 0.0 ? 0.0 : x;
}

json complex_json(ComplexValue z) {
    return {{"re", unsign_zero(z.real())}, {"im", unsign_zero(z.imag())}};
}

std::string csv_number(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", unsign_zero(x));
    return buffer;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

// Tolerances: built-in defaults, then XIFORGE_* variables, then flags.
struct ToleranceOptions {
    std::optional<double> abs_tol;
    std::optional<double> rel_tol;
    std::optional<double> tail_tol;

    static std::optional<double> from_env(const char* name) {
        const char* raw = std::getenv(name);
        if (raw == nullptr || *raw == '\0') return std::nullopt;
        return parse_double(raw, name);
    }

    xiforge::QuadratureConfig quadrature() const {
        const xiforge::QuadratureConfig defaults;
        const double a = abs_tol ? *abs_tol : from_env("XIFORGE_ABS_TOL").value_or(defaults.abs_tol());
        const double r = rel_tol ? *rel_tol : from_env("XIFORGE_REL_TOL").value_or(defaults.rel_tol());
        try {
            return {a, r, defaults.max_subdivisions(), defaults.ray_cutoff()};
        } catch (const xiforge::DomainError& e) {
            throw InputError(e.what());
        }
    }

    xiforge::SeriesControl series() const {
        const double t = tail_tol ? *tail_tol
                                  : from_env("XIFORGE_TAIL_TOL").value_or(xiforge::SeriesControl::kDefaultTailTol);
        try {
            return {t, xiforge::SeriesControl::kDefaultMaxTerms};
        } catch (const xiforge::DomainError& e) {
            throw InputError(e.what());
        }
    }
};

struct OutputOptions {
    std::string format = "json";
    bool no_meta = false;
};

struct Record {
    std::string command;
    json params = json::object();
    json value;
    std::optional<double> err_estimate;
    std::vector<std::string> warnings;
    json extra = json::object();
};

void print_record(const Record& r, const OutputOptions& out) {
    json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["value"] = r.value;
    j["err_estimate"] = r.err_estimate ? json(*r.err_estimate) : json(nullptr);
    j["warnings"] = r.warnings;
    for (const auto& [key, value] : r.extra.items()) j[key] = value;
    if (!out.no_meta) j["meta"] = {{"timestamp", utc_timestamp()}, {"version", kVersion}};
    std::cout << j.dump() << '\n';
}

void print_eval_csv(const Record& r, const std::string& target) {
    std::cout << "command,target,re,im,err_estimate,warnings\n";
    std::string warnings;
    for (std::size_t i = 0; i < r.warnings.size(); ++i) warnings += (i ? "; " : "") + r.warnings[i];
    std::cout << r.command << ',' << target << ',' << csv_number(r.value["re"].get<double>()) << ','
              << csv_number(r.value["im"].get<double>()) << ','
              << (r.err_estimate ? csv_number(*r.err_estimate) : std::string()) << ',' << csv_field(warnings) << '\n';
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
    std::string target;
    std::optional<unsigned> q, j, ell;
    std::string s, b, x;
    std::string form = "i";
};

template <class T>
T require(const std::optional<T>& value, const char* flag, const std::string& target) {
    if (!value) throw InputError("eval " + target + " requires " + flag);
    return *value;
}

ComplexValue require_complex(const std::string& text, const char* flag, const std::string& target) {
    if (text.empty()) throw InputError("eval " + target + " requires " + flag);
    return parse_complex(text, flag);
}

void add_quadrature(Record& r, const xiforge::QuadratureResult& q) {
    r.value = complex_json(q.value);
    r.err_estimate = q.err_estimate;
    r.params["subdivisions_used"] = q.subdivisions_used;
}

Record run_eval(const EvalArgs& a, const ToleranceOptions& tol) {
    Record r;
    r.command = "eval";
    r.params["target"] = a.target;
    const auto qc = tol.quadrature();
    const auto ctl = tol.series();
    const std::string& t = a.target;

    if (t == "pq") {
        const unsigned q = require(a.q, "--q", t);
        const ComplexValue s = require_complex(a.s, "--s", t);
        r.params["q"] = q;
        r.params["s"] = complex_json(s);
        const auto v = xiforge::P_q_detailed(q, s);
        r.value = complex_json(v.value);
        r.warnings = v.warnings;
    } else if (t == "zeta-family") {
        const unsigned q = require(a.q, "--q", t);
        const unsigned ell = a.ell.value_or(0);
        const ComplexValue s = require_complex(a.s, "--s", t);
        r.params["q"] = q;
        r.params["ell"] = ell;
        r.params["s"] = complex_json(s);
        const auto v = xiforge::zeta_family_checked({q, ell, s});
        r.value = complex_json(v.value);
        r.warnings = v.warnings;
        for (const auto& note : v.notes) r.warnings.push_back("note: " + note);
    } else if (t == "theta") {
        const unsigned j = require(a.j, "--j", t);
        const unsigned ell = a.ell.value_or(0);
        const ComplexValue x = require_complex(a.x, "--x", t);
        r.params["j"] = j;
        r.params["ell"] = ell;
        r.params["x"] = complex_json(x);
        const auto v = xiforge::omega(2 * j, ell, x, ctl);
        r.value = complex_json(v.value);
        r.err_estimate = v.tail_bound;
        r.params["terms"] = v.terms;
    } else if (t == "psi") {
        const unsigned j = require(a.j, "--j", t);
        const ComplexValue x = require_complex(a.x, "--x", t);
        r.params["j"] = j;
        r.params["x"] = complex_json(x);
        const auto v = xiforge::psi_j_series(j, x, ctl);
        r.value = complex_json(v.value);
        r.err_estimate = v.tail_bound;
        r.params["terms"] = v.terms;
    } else if (t == "xi-direct") {
        const ComplexValue s = require_complex(a.s, "--s", t);
        r.params["s"] = complex_json(s);
        r.value = complex_json(xiforge::xi_direct(s));
    } else if (t == "xi-prop3") {
        const unsigned j = require(a.j, "--j", t);
        const ComplexValue s = require_complex(a.s, "--s", t);
        const ComplexValue b = a.b.empty() ? ComplexValue(1.0) : parse_complex(a.b, "--b");
        if (b.imag() != 0.0) throw xiforge::DomainError("xi-prop3: b must be real and positive");
        r.params["j"] = j;
        r.params["s"] = complex_json(s);
        r.params["b"] = complex_json(b);
        add_quadrature(r, xiforge::xi_prop3(j, s, b.real(), qc, ctl));
    } else if (t == "xi-prop4") {
        const unsigned j = require(a.j, "--j", t);
        const ComplexValue s = require_complex(a.s, "--s", t);
        const ComplexValue b = a.b.empty() ? ComplexValue(1.0) : parse_complex(a.b, "--b");
        if (a.form != "i" && a.form != "ii") throw InputError("--form must be i or ii");
        const auto form = a.form == "i" ? xiforge::Prop4Form::Inversion : xiforge::Prop4Form::Conjugate;
        r.params["j"] = j;
        r.params["s"] = complex_json(s);
        r.params["b"] = complex_json(b);
        r.params["form"] = a.form;
        add_quadrature(r, xiforge::xi_prop4(j, s, b, form, qc, ctl));
    } else if (t == "mellin") {
        const ComplexValue s = require_complex(a.s, "--s", t);
        r.params["s"] = complex_json(s);
        if (a.j) {
            r.params["j"] = *a.j;
            add_quadrature(r, xiforge::mellin_psi_integral(*a.j, s, qc, ctl));
        } else {
            const unsigned q = require(a.q, "--j or --q", t);
            const unsigned ell = a.ell.value_or(0);
            r.params["q"] = q;
            r.params["ell"] = ell;
            add_quadrature(r, xiforge::mellin_omega_integral(q, ell, s, qc, ctl));
        }
    } else {
        throw InputError("unknown eval target '" + t + "'");
    }
    return r;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::optional<unsigned> qmax, jmax, j, samples;
    std::string s;
    std::string b_list;
};

int run_verify(const VerifyArgs& a, const ToleranceOptions& tol, const OutputOptions& out) {
    const xiforge::SuiteEntry* entry = nullptr;
    for (const auto& e : xiforge::suite_registry())
        if (a.suite == e.name) entry = &e;
    if (entry == nullptr) throw InputError("unknown verify suite '" + a.suite + "'");

    xiforge::VerifyOptions opt;
    opt.qmax = a.qmax;
    opt.jmax = a.jmax;
    opt.j = a.j;
    if (a.samples) opt.samples = *a.samples;
    if (!a.s.empty()) opt.s = parse_complex(a.s, "--s");
    if (!a.b_list.empty()) opt.b_list = parse_list(a.b_list, "--b-list");
    opt.qc = tol.quadrature();
    opt.ctl = tol.series();

    auto result = entry->run(opt);
    xiforge::detail::sort_cases(result);

    if (out.format == "csv") {
        std::cout << "key,passed,deviation,tolerance,detail\n";
        for (const auto& c : result.cases)
            std::cout << csv_field(c.key) << ',' << (c.passed ? "true" : "false") << ',' << csv_number(c.deviation)
                      << ',' << csv_number(c.tolerance) << ',' << csv_field(c.detail) << '\n';
    } else {
        Record r;
        r.command = "verify";
        r.params["suite"] = a.suite;
        if (a.qmax) r.params["qmax"] = *a.qmax;
        if (a.jmax) r.params["jmax"] = *a.jmax;
        if (a.j) r.params["j"] = *a.j;
        if (opt.s) r.params["s"] = complex_json(*opt.s);
        if (!opt.b_list.empty()) r.params["b_list"] = opt.b_list;
        r.value = json::array();
        for (const auto& c : result.cases) {
            r.value.push_back({{"case", c.key},
                               {"passed", c.passed},
                               {"deviation", std::isnan(c.deviation) ? json(nullptr) : json(c.deviation)},
                               {"tolerance", c.tolerance},
                               {"detail", c.detail}});
        }
        r.warnings = result.notes;
        r.extra["passed"] = result.passed();
        print_record(r, out);
    }
    return result.passed() ? kExitOk : kExitVerification;
}

// ---- scan -------------------------------------------------------------------

struct ScanArgs {
    std::string target;
    std::optional<unsigned> q, j;
    std::string t;
    std::optional<double> from, to, step;
};

int run_scan(const ScanArgs& a, const ToleranceOptions& tol) {
    const auto ctl = tol.series();
    if (a.target == "pq-line" || a.target == "xi-line") {
        if (a.t.empty()) throw InputError("scan " + a.target + " requires --t from:to:step");
        const Range range = parse_range(a.t);
        std::optional<unsigned> q;
        if (a.target == "pq-line") {
            if (!a.q) throw InputError("scan pq-line requires --q");
            q = a.q;
        }
        std::cout << "t,re,im,section\n";
        for (std::size_t i = 0; i < range.count(); ++i) {
            const double t = range.at(i);
            const ComplexValue v = q ? xiforge::P_q(*q, {0.5, t}) : xiforge::xi_direct({0.5, t});
            const double section = q ? (*q % 2 == 0 ? v.real() : v.imag()) : v.real();
            std::cout << csv_number(t) << ',' << csv_number(v.real()) << ',' << csv_number(v.imag()) << ','
                      << csv_number(section) << '\n';
        }
        return kExitOk;
    }
    if (a.target == "psi-ray") {
        if (!a.j) throw InputError("scan psi-ray requires --j");
        if (!a.from || !a.to || !a.step) throw InputError("scan psi-ray requires --from, --to and --step");
        const Range range = make_range(*a.from, *a.to, *a.step);
        if (!(range.from > 0.0)) throw InputError("scan psi-ray requires --from > 0");
        std::cout << "x,re,im,abs,tail_bound\n";
        for (std::size_t i = 0; i < range.count(); ++i) {
            const double x = range.at(i);
            const auto v = xiforge::psi_j_series(*a.j, ComplexValue(x), ctl);
            std::cout << csv_number(x) << ',' << csv_number(v.value.real()) << ',' << csv_number(v.value.imag())
                      << ',' << csv_number(std::abs(v.value)) << ',' << csv_number(v.tail_bound) << '\n';
        }
        return kExitOk;
    }
    throw InputError("unknown scan target '" + a.target + "'");
}

// ---- zeros ------------------------------------------------------------------

struct ZerosArgs {
    std::optional<unsigned> q;
    std::string t_max = "auto";
    double grid_step = xiforge::kDefaultZeroGridStep;
};

int run_zeros(const ZerosArgs& a, const OutputOptions& out) {
    if (!a.q) throw InputError("zeros requires --q");
    const unsigned q = *a.q;
    if (q > xiforge::kPolyValidityCeiling) throw xiforge::DomainError("zeros: q must not exceed 25");
    if (!(a.grid_step > 0.0)) throw InputError("--grid-step must be positive");
    std::optional<double> t_max;
    if (a.t_max != "auto") t_max = parse_double(a.t_max, "--t-max");

    const auto report = xiforge::verify_exhaustive(q, t_max, a.grid_step);
    Record r;
    r.command = "zeros";
    r.params["q"] = q;
    r.params["t_max"] = t_max ? json(*t_max) : json(q == 0 ? 0.0 : xiforge::default_scan_range(q));
    r.params["grid_step"] = a.grid_step;
    r.value = json::array();
    for (const auto& z : report.zeros)
        r.value.push_back(
            {{"t", z.t}, {"residual", z.residual}, {"bracket_width", z.bracket_width}, {"scale", z.scale}});
    r.warnings = report.warnings;
    if (!report.diagnostics.empty()) r.warnings.push_back(report.diagnostics);
    r.extra["verdict"] = {{"count", report.count},
                          {"expected", q},
                          {"exhaustive", report.passed},
                          {"min_gap", std::isfinite(report.min_gap) ? json(report.min_gap) : json(nullptr)}};
    print_record(r, out);
    return report.passed ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite-theta zeta family and xi-function representations"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    ToleranceOptions tol;
    OutputOptions out;
    app.add_option("--abs-tol", tol.abs_tol, "Absolute quadrature tolerance (env XIFORGE_ABS_TOL)");
    app.add_option("--rel-tol", tol.rel_tol, "Relative quadrature tolerance (env XIFORGE_REL_TOL)");
    app.add_option("--tail-tol", tol.tail_tol, "Theta series tail tolerance (env XIFORGE_TAIL_TOL)");
    app.add_flag("--no-meta", out.no_meta, "Omit the timestamp block from JSON output");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one quantity");
    eval->add_option("target", eval_args.target, "Quantity to evaluate")
        ->required()
        ->check(CLI::IsMember({"pq", "zeta-family", "theta", "psi", "xi-direct", "xi-prop3", "xi-prop4", "mellin"}));
    eval->add_option("--q", eval_args.q, "Degree q");
    eval->add_option("--j", eval_args.j, "Theta index j");
    eval->add_option("--ell", eval_args.ell, "Power ell");
    eval->add_option("--s", eval_args.s, "Complex s as re,im");
    eval->add_option("--b", eval_args.b, "Split point b as re,im");
    eval->add_option("--x", eval_args.x, "Theta argument x as re,im");
    eval->add_option("--form", eval_args.form, "Wedge form for xi-prop4: i or ii");
    eval->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", verify_args.suite, "Suite name")->required();
    verify->add_option("--qmax", verify_args.qmax, "Largest q");
    verify->add_option("--jmax", verify_args.jmax, "Largest j");
    verify->add_option("--j", verify_args.j, "Single j");
    verify->add_option("--s", verify_args.s, "Single s as re,im");
    verify->add_option("--b-list", verify_args.b_list, "Comma-separated real split points");
    verify->add_option("--samples", verify_args.samples, "Random sample count");
    verify->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Tabulate along a line as CSV");
    scan->add_option("target", scan_args.target, "Scan target")
        ->required()
        ->check(CLI::IsMember({"pq-line", "xi-line", "psi-ray"}));
    scan->add_option("--q", scan_args.q, "Degree q (pq-line)");
    scan->add_option("--j", scan_args.j, "Theta index j (psi-ray)");
    scan->add_option("--t", scan_args.t, "Ordinate range from:to:step");
    scan->add_option("--from", scan_args.from, "Ray start (psi-ray)");
    scan->add_option("--to", scan_args.to, "Ray end (psi-ray)");
    scan->add_option("--step", scan_args.step, "Ray step (psi-ray)");

    ZerosArgs zeros_args;
    auto* zeros = app.add_subcommand("zeros", "Locate the critical-line zeros of P_q");
    zeros->add_option("--q", zeros_args.q, "Degree q (0..25)")->required();
    zeros->add_option("--t-max", zeros_args.t_max, "Scan range, or 'auto'");
    zeros->add_option("--grid-step", zeros_args.grid_step, "Scan grid step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomain;
    }

    try {
        if (*eval) {
            const Record r = run_eval(eval_args, tol);
            if (out.format == "csv")
                print_eval_csv(r, eval_args.target);
            else
                print_record(r, out);
            return kExitOk;
        }
        if (*verify) return run_verify(verify_args, tol, out);
        if (*scan) return run_scan(scan_args, tol);
        if (*zeros) return run_zeros(zeros_args, out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const xiforge::CountMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const xiforge::ToleranceNotMet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTolerance;
    } catch (const xiforge::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTolerance;
    } catch (const xiforge::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}
