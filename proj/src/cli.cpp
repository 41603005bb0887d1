#include "irratio/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "irratio/combinatorics.hpp"
#include "irratio/errors.hpp"
#include "irratio/pi_engine.hpp"
#include "irratio/polynomials.hpp"
#include "irratio/report_json.hpp"
#include "irratio/series.hpp"

namespace irratio::cli {

unsigned max_digits_from_env() {
    const char* raw = std::getenv("IRRATIO_MAX_DIGITS");
    if (raw == nullptr || *raw == '\0')
        return default_max_digits;
    const Integer v = Integer::parse(raw);
    if (v.sign() <= 0 || v > Integer(1u << 24))
        throw InvalidInput("IRRATIO_MAX_DIGITS must be a positive integer, got '" + std::string(raw) + "'");
    return static_cast<unsigned>(v.to_long());
}

namespace {

// "A/B" or "A" with positive decimal integers, kept unreduced.
std::pair<Integer, Integer> parse_candidate(const std::string& text) {
    const auto slash = text.find('/');
    Integer a = Integer::parse(text.substr(0, slash));
    Integer b = slash == std::string::npos ? Integer(1) : Integer::parse(text.substr(slash + 1));
    if (a.sign() <= 0 || b.sign() <= 0)
        throw InvalidInput("candidate must be A/B with positive integers, got '" + text + "'");
    return {std::move(a), std::move(b)};
}

std::string render_value(const Json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_object() && v.size() == 2 && v.contains("lo") && v.contains("hi"))
        return "[" + render_value(v.at("lo")) + ", " + render_value(v.at("hi")) + "]";
    if (v.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, x] : v.items()) {
            s += (first ? "" : ", ") + k + ": " + render_value(x);
            first = false;
        }
        return s + "}";
    }
    return v.dump();
}

// Text mode prints the same fields as JSON mode, one "key: value" per line.
void emit(const Json& report, bool json, std::ostream& out) {
    if (json) {
        out << report.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : report.items())
        out << k << ": " << render_value(v) << "\n";
}

int cmd_digits(const CliConfig& cfg, std::ostream& out) {
    RationalInterval value;
    std::string method;
    unsigned effort = 0;
    const unsigned guarded = cfg.digits + 3;
    if (cfg.target == "e") {
        const Enclosure e = e_enclosure(guarded);
        value = e.value;
        method = "series";
        effort = e.terms_used;
    } else if (cfg.method == "archimedes") {
        const auto rows = archimedes_table(60, guarded);
        const Rational target = ten_to_minus(guarded);
        const PolygonBounds* hit = nullptr;
        for (const auto& r : rows)
            if (r.circumscribed.hi() - r.inscribed.lo() < target) {
                hit = &r;
                break;
            }
        if (hit == nullptr)
            throw ResourceCap("archimedes reaches " + std::to_string(cfg.digits) +
                              " digits only beyond 60 doublings; use --method cos-root");
        value = RationalInterval(hit->inscribed.lo(), hit->circumscribed.hi());
        method = "archimedes";
        effort = hit->doublings;
    } else {
        const PiEnclosure pi = pi_by_cos_root(guarded, cfg.limits.max_digits);
        value = pi.value;
        method = to_string(pi.method);
        effort = pi.effort;
    }
    const DecimalString d = to_decimal(value, cfg.digits);
    if (cfg.json) {
        out << Json{{"constant", cfg.target},
                    {"digits", d.digits},
                    {"truncated", d.truncated},
                    {"method", method},
                    {"effort", effort},
                    {"enclosure", value}}
                   .dump(2)
            << "\n";
    } else {
        out << d.str() << "\n";
        out << "method: " << method << ", effort: " << effort << "\n";
        out << "enclosure: [" << value.lo() << ", " << value.hi() << "]\n";
    }
    return ok;
}

int cmd_witness(const CliConfig& cfg, std::ostream& out) {
    if (cfg.subcommand == "sqrt") {
        const Integer m = Integer::parse(cfg.target);
        const SqrtRationality r = sqrt_rationality(m);
        if (cfg.json) {
            emit(sqrt_rationality_json(m, r), true, out);
        } else if (const auto* sq = std::get_if<PerfectSquare>(&r)) {
            out << "sqrt(" << m << ") = " << sq->root << " (perfect square)\n";
        } else {
            const auto& irr = std::get<IrrationalRoot>(r);
            const Integer next = irr.floor_root + Integer(1);
            out << "sqrt(" << m << ") is irrational: " << irr.floor_root << "^2 = " << irr.floor_root * irr.floor_root
                << " < " << m << " < " << next * next << " = " << next << "^2, and a rational square root of an "
                << "integer must be an integer\n";
        }
        return ok;
    }
    const auto [a, b] = parse_candidate(cfg.target);
    if (cfg.subcommand == "pi2") {
        emit(Json(pi_witness(a, b, cfg.n_override, cfg.limits)), cfg.json, out);
    } else {
        emit(Json(e_witness(a, b, cfg.limits)), cfg.json, out);
    }
    return ok;
}

int cmd_archimedes(const CliConfig& cfg, std::ostream& out) {
    const auto rows = archimedes_table(cfg.doublings, cfg.digits);
    if (cfg.json) {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"doublings", r.doublings},
                               {"sides", r.sides},
                               {"inscribed", r.inscribed},
                               {"circumscribed", r.circumscribed}});
        out << arr.dump(2) << "\n";
        return ok;
    }
    out << std::left << std::setw(10) << "doublings" << std::setw(22) << "sides"
        << "bounds on pi\n";
    for (const auto& r : rows) {
        out << std::setw(10) << r.doublings << std::setw(22) << r.sides.to_string()
            << to_decimal(r.inscribed.lo(), cfg.digits).str() << " < pi < "
            << to_decimal(r.circumscribed.hi(), cfg.digits).str() << "\n";
    }
    return ok;
}

int cmd_pascal(const CliConfig& cfg, std::ostream& out) {
    const PascalTriangle t = pascal_rows(cfg.rows);
    if (cfg.json) {
        out << Json(t.rows).dump() << "\n";
        return ok;
    }
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? " " : "") << row[k];
        out << "\n";
    }
    return ok;
}

int cmd_growth(const CliConfig& cfg, std::ostream& out) {
    const auto rows = growth_table(cfg.max_n);
    out << std::right;
    out << std::setw(4) << "n" << std::setw(8) << "n^2" << std::setw(8) << "n^3" << std::setw(10) << "2^n"
        << std::setw(12) << "n!" << "\n";
    for (const auto& r : rows)
        out << std::setw(4) << r.n << std::setw(8) << r.square.to_string() << std::setw(8) << r.cube.to_string()
            << std::setw(10) << r.power_of_two.to_string() << std::setw(12) << r.factorial.to_string() << "\n";
    return ok;
}

int cmd_cf(const CliConfig& cfg, std::ostream& out) {
    // Each quotient consumes roughly one decimal digit of the enclosure.
    const unsigned digits = 2 * cfg.depth + 20;
    if (digits > cfg.limits.max_digits)
        throw ResourceCap("continued fraction depth needs " + std::to_string(digits) + " digits");
    const RationalInterval x =
        cfg.target == "e" ? e_enclosure(digits).value : pi_by_cos_root(digits, cfg.limits.max_digits).value;
    const CFExpansion cf = continued_fraction(x, cfg.depth);
    if (cfg.json) {
        out << Json{{"constant", cfg.target},
                    {"partial_quotients", cf.partial_quotients},
                    {"convergents", cf.convergents},
                    {"certified_depth", cf.certified_depth}}
                   .dump(2)
            << "\n";
        return ok;
    }
    out << "partial_quotients: [";
    for (std::size_t i = 0; i < cf.partial_quotients.size(); ++i)
        out << (i == 0 ? "" : i == 1 ? "; " : ", ") << cf.partial_quotients[i];
    out << "]\nconvergents:";
    for (const auto& c : cf.convergents)
        out << " " << c;
    out << "\ncertified_depth: " << cf.certified_depth << "\n";
    return ok;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
    if (cfg.subcommand == "squeeze") {
        const SqueezeReport r = squeeze_check(Rational::parse(cfg.target), cfg.digits);
        emit(squeeze_json(r), cfg.json, out);
        return r.certified() ? ok : internal_fault;
    }
    bool all = true;
    Json results = Json::array();
    for (unsigned n = 1; n <= cfg.max_n; ++n) {
        const ProofCheck ode = verify_ode_identity(Integer(1), Integer(1), n);
        bool integral = true;
        try {
            niven_endpoint_derivatives(n);
        } catch (const InternalFault&) {
            integral = false;
        }
        all = all && ode.passed && integral;
        results.push_back(Json{{"n", n}, {"ode_identity", ode.passed}, {"endpoint_integrality", integral}});
        if (!cfg.json) {
            out << "n=" << n << ": ode identity " << (ode.passed ? "pass" : "FAIL") << ", endpoint integrality "
                << (integral ? "pass" : "FAIL");
            if (!ode.passed)
                out << " (" << ode.failed_identity << ": " << ode.detail << ")";
            out << "\n";
        }
    }
    if (cfg.json)
        out << Json{{"checks", results}, {"passed", all}}.dump(2) << "\n";
    else
        out << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? ok : internal_fault;
}

int dispatch(const CliConfig& cfg, std::ostream& out) {
    if (cfg.command == "digits")
        return cmd_digits(cfg, out);
    if (cfg.command == "witness")
        return cmd_witness(cfg, out);
    if (cfg.command == "archimedes")
        return cmd_archimedes(cfg, out);
    if (cfg.command == "pascal")
        return cmd_pascal(cfg, out);
    if (cfg.command == "growth")
        return cmd_growth(cfg, out);
    if (cfg.command == "cf")
        return cmd_cf(cfg, out);
    if (cfg.command == "check")
        return cmd_check(cfg, out);
    throw InvalidInput("unknown command: " + cfg.command);
}

void validate(const CliConfig& cfg) {
    if (cfg.command == "digits" || cfg.command == "cf") {
        if (cfg.target != "pi" && cfg.target != "e")
            throw InvalidInput("constant must be 'pi' or 'e'");
    }
    if (cfg.command == "digits") {
        if (cfg.digits == 0)
            throw InvalidInput("--digits must be positive");
        if (cfg.target == "e" && cfg.method != "cos-root")
            throw InvalidInput("--method applies to pi only");
        if (cfg.digits + 3 > cfg.limits.max_digits)
            throw ResourceCap("--digits exceeds the precision cap (IRRATIO_MAX_DIGITS)");
    }
    if (cfg.command == "witness") {
        if (cfg.subcommand == "sqrt") {
            if (Integer::parse(cfg.target).sign() <= 0)
                throw InvalidInput("M must be a positive integer");
        } else {
            parse_candidate(cfg.target);
        }
    }
    if (cfg.command == "check" && cfg.subcommand == "squeeze") {
        const Rational h = Rational::parse(cfg.target);
        if (h.sign() <= 0 || h > Rational(3, 2))
            throw InvalidInput("--h must satisfy 0 < h <= 3/2");
        if (cfg.digits == 0)
            throw InvalidInput("--digits must be positive");
    }
    if (cfg.command == "archimedes" && (cfg.doublings > 60 || cfg.digits == 0))
        throw InvalidInput("--doublings must be at most 60 and --digits positive");
    if (cfg.command == "cf" && cfg.depth == 0)
        throw InvalidInput("--depth must be positive");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"irratio: certified irrationality witnesses for pi and e"};
    app.require_subcommand(1);

    auto* digits = app.add_subcommand("digits", "certified decimal digits of pi or e");
    digits->add_option("constant", cfg.target, "pi or e")->required();
    digits->add_option("--digits", cfg.digits, "fractional digits to certify")->required();
    digits->add_option("--method", cfg.method, "pi method")->check(CLI::IsMember({"cos-root", "archimedes"}));
    digits->add_flag("--json", cfg.json, "machine-readable output");

    auto* witness = app.add_subcommand("witness", "contradiction certificate for a rational candidate");
    witness->require_subcommand(1);
    auto* w_pi2 = witness->add_subcommand("pi2", "refute pi^2 = A/B");
    w_pi2->add_option("candidate", cfg.target, "A/B")->required();
    w_pi2->add_option("--n", cfg.n_override, "Niven degree parameter");
    w_pi2->add_option("--max-n", cfg.limits.max_n, "cap on n");
    w_pi2->add_flag("--json", cfg.json);
    auto* w_e = witness->add_subcommand("e", "refute e = A/B");
    w_e->add_option("candidate", cfg.target, "A/B")->required();
    w_e->add_option("--max-n", cfg.limits.max_n, "cap on the denominator B");
    w_e->add_flag("--json", cfg.json);
    auto* w_sqrt = witness->add_subcommand("sqrt", "decide whether sqrt(M) is rational");
    w_sqrt->add_option("M", cfg.target, "positive integer")->required();
    w_sqrt->add_flag("--json", cfg.json);

    auto* arch = app.add_subcommand("archimedes", "polygon bounds on pi");
    arch->add_option("--doublings", cfg.doublings, "doublings of the hexagon")->required();
    arch->add_option("--digits", cfg.digits, "working precision and displayed digits");
    arch->add_flag("--json", cfg.json);

    auto* pascal = app.add_subcommand("pascal", "Pascal's triangle");
    pascal->add_option("--rows", cfg.rows, "last row index")->required();
    pascal->add_flag("--json", cfg.json);

    auto* growth = app.add_subcommand("growth", "n^2, n^3, 2^n and n! side by side");
    growth->add_option("--max-n", cfg.max_n, "last n")->default_val(7);

    auto* cf = app.add_subcommand("cf", "certified continued fraction of pi or e");
    cf->add_option("constant", cfg.target, "pi or e")->required();
    cf->add_option("--depth", cfg.depth, "maximum number of partial quotients")->required();
    cf->add_flag("--json", cfg.json);

    auto* check = app.add_subcommand("check", "symbolic and numeric proof checks");
    check->require_subcommand(1);
    auto* c_id = check->add_subcommand("identities", "ODE identity and endpoint integrality for n = 1..N");
    c_id->add_option("--max-n", cfg.max_n, "largest n")->required();
    c_id->add_flag("--json", cfg.json);
    auto* c_sq = check->add_subcommand("squeeze", "cos h < sin h/h < 1 and 0 <= (1-cos h)/h <= h/2");
    c_sq->set_help_flag("--help", "print this help message and exit");
    c_sq->add_option("--h", cfg.target, "P/Q with 0 < h <= 3/2")->required();
    c_sq->add_option("--digits", cfg.digits, "enclosure precision")->default_val(30);
    c_sq->add_flag("--json", cfg.json);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    }

    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        for (auto* inner : sub->get_subcommands())
            cfg.subcommand = inner->get_name();
    }

    try {
        cfg.limits.max_digits = max_digits_from_env();
        validate(cfg);
        return dispatch(cfg, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const PrecisionExhausted& e) {
        err << "precision cap reached: " << e.what() << "\n";
        return resource_cap;
    } catch (const ResourceCap& e) {
        err << "resource cap reached: " << e.what() << "\n";
        return resource_cap;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_fault;
    }
}

} // namespace irratio::cli
