#include "hmsector/cli.hpp"

#include "hmsector/contfrac.hpp"
#include "hmsector/errors.hpp"
#include "hmsector/euclid.hpp"
#include "hmsector/factor.hpp"
#include "hmsector/hurwitz.hpp"
#include "hmsector/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hmsector {

using Json = nlohmann::ordered_json;

namespace {

struct Section {
    Json doc;
    std::string text;
    int code = exit_code::ok;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items, const char* sep = ", ")
{
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k)
            out += sep;
        out += items[k];
    }
    return out;
}

std::string fmt(double x, int precision = 10)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

std::string fmt_complex(std::complex<double> z)
{
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

Json finite_or_null(double x)
{
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

std::string index_set_text(const IndexSet& s)
{
    std::vector<std::string> items;
    for (int v : s)
        items.push_back(std::to_string(v));
    return "{" + join(items, ",") + "}";
}

void require_m(const std::optional<int>& M, int lo, int hi, const char* command)
{
    if (!M)
        throw UsageError(std::string(command) + " requires --m");
    if (*M < lo || *M > hi)
        throw UsageError(std::string(command) + ": --m " + std::to_string(*M) + " outside " + std::to_string(lo) + ".."
                         + std::to_string(hi));
}

Section table_section(const RationalPolynomial& f, int M)
{
    const EuclidTable table = run_generalized_euclid(f, M);
    Section s;
    Json polys = Json::array();
    for (int i = 0; i <= table.n; ++i) {
        const auto& p = table.polys[static_cast<std::size_t>(i)];
        polys.push_back({{"index", i},
                         {"poly", p.to_text()},
                         {"degree", p.is_zero() ? Json(nullptr) : Json(p.degree())},
                         {"coefficients", to_strings(p.coeffs())},
                         {"leading", to_string(table.leading[static_cast<std::size_t>(i)])}});
    }
    Json steps = Json::array();
    for (std::size_t i = 0; i < table.rules.size(); ++i)
        steps.push_back({{"step", i}, {"rule", to_string(table.rules[i])}, {"quotient", table.quotients[i].to_text()}});

    const auto rows = table.rows();
    std::size_t width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.size());
    Json layout = Json::array();
    for (const auto& r : rows) {
        Json line = Json::array();
        for (std::size_t c = 0; c < width; ++c)
            line.push_back(c < r.size() ? "f_" + std::to_string(r[c]) : std::string("absent"));
        layout.push_back(line);
    }
    s.doc = {{"command", "table"},
             {"M", M},
             {"n", table.n},
             {"polys", polys},
             {"steps", steps},
             {"h", to_strings(table.leading)},
             {"nondegenerate", table.nondegenerate},
             {"layout", layout}};

    std::ostringstream os;
    os << "generalized Euclidean table, M=" << M << ", n=" << table.n << "\n";
    for (const auto& r : rows) {
        os << " ";
        for (int i : r)
            os << " | f_" << i << " = " << table.polys[static_cast<std::size_t>(i)].to_text();
        os << "\n";
    }
    os << "quotients:\n";
    for (std::size_t i = 0; i < table.rules.size(); ++i)
        os << "  d_" << i << " = " << table.quotients[i].to_text() << "  (" << to_string(table.rules[i]) << ")\n";
    os << "h: " << join(to_strings(table.leading)) << "\n";
    os << "nondegenerate: " << (table.nondegenerate ? "yes" : "no") << "\n";
    s.text = os.str();
    return s;
}

Json witness_json(const std::optional<MinorWitness>& w)
{
    if (!w)
        return nullptr;
    return {{"rows", w->rows}, {"cols", w->cols}, {"value", to_string(w->value)}};
}

Section minors_section(const RationalPolynomial& f, int M, int cap, bool witness_search)
{
    const TNVerdict verdict = tn_verdict(f, M, cap);
    std::optional<MinorWitness> witness = verdict.witness;
    if (witness_search && !witness) {
        const HurwitzMatrix h(f, M);
        witness = find_negative_minor(h, verdict.window_rows, verdict.window_cols, cap);
    }

    Section s;
    Json special = Json::array();
    std::ostringstream os;
    os << "generalized Hurwitz matrix H_" << M << ", n=" << f.degree() << "\n";
    if (verdict.special) {
        os << "special minors (p: H(k,r) = value):\n";
        for (std::size_t q = 0; q < verdict.special->values.size(); ++q) {
            const auto& idx = verdict.special->index[q];
            const auto value = to_string(verdict.special->values[q]);
            special.push_back({{"p", idx.p}, {"k", idx.k}, {"r", idx.r}, {"value", value}});
            os << "  " << idx.p << ": H(" << idx.k << "," << idx.r << ") = " << value << "\n";
        }
    }
    s.doc = {{"command", "minors"},
             {"M", M},
             {"n", f.degree()},
             {"special_minors", special},
             {"status", to_string(verdict.status)},
             {"method", to_string(verdict.method)},
             {"witness", witness_json(witness)},
             {"cap", cap},
             {"window", {{"rows", verdict.window_rows}, {"cols", verdict.window_cols}}}};
    os << "status: " << to_string(verdict.status) << " (" << to_string(verdict.method) << ")\n";
    if (witness)
        os << "negative minor: rows " << index_set_text(witness->rows) << " cols " << index_set_text(witness->cols)
           << " = " << to_string(witness->value) << "\n";
    else if (verdict.status != TNStatus::tn_certified || witness_search)
        os << "no negative minor of order <= " << cap << " in rows 1.." << verdict.window_rows << ", cols 1.."
           << verdict.window_cols << "\n";
    s.text = os.str();
    s.code = verdict.status == TNStatus::tn_certified ? exit_code::ok : exit_code::informational;
    return s;
}

Section cfrac_section(const RationalPolynomial& f, int M, std::pair<int, int> pair)
{
    const PairExpansion e = try_expand_pair(f, M, pair.first, pair.second);
    Section s;
    Json remainders = Json::array();
    for (const auto& r : e.remainders)
        remainders.push_back(r.to_text());
    s.doc = {{"command", "cfrac"},
             {"M", M},
             {"pair", {pair.first, pair.second}},
             {"coefficients", to_strings(e.fraction.coefficients)},
             {"exponents", e.fraction.exponents()},
             {"length", e.fraction.length()},
             {"complete", e.complete},
             {"failed_step", e.failed_step ? Json(*e.failed_step) : Json(nullptr)},
             {"leading", to_strings(e.leading)},
             {"remainders", remainders}};
    std::ostringstream os;
    os << "f_" << pair.first << "/f_" << pair.second << " continued fraction, M=" << M << "\n";
    for (int t = 1; t <= e.fraction.length(); ++t)
        os << "  term " << t << ": " << to_string(e.fraction.coefficients[static_cast<std::size_t>(t - 1)]) << " * z^"
           << e.fraction.exponent(t) << "\n";
    if (e.complete) {
        os << "complete, length " << e.fraction.length() << "\n";
    } else {
        os << "degenerate pair: leading coefficient vanishes at step " << *e.failed_step << "\n";
        s.code = exit_code::informational;
    }
    s.text = os.str();
    return s;
}

Section factor_section(const RationalPolynomial& f, int M, std::optional<int> window)
{
    Section s;
    const int n = f.degree();
    const int N = window.value_or(n + M + 2);
    if (N < n + M)
        throw UsageError("factor: --window " + std::to_string(N) + " below n + M = " + std::to_string(n + M));
    try {
        const FactorizationResult r = factor_hm(f, M);
        const bool ok = verify_factorization(f, M, r, N);
        s.doc = {{"command", "factor"},
                 {"M", M},
                 {"n", n},
                 {"status", ok ? "VERIFIED" : "MISMATCH"},
                 {"cs", to_strings(r.cs)},
                 {"terminal", to_string(r.terminal)},
                 {"window", N},
                 {"verified", ok}};
        std::ostringstream os;
        os << "H~_" << M << "(f) = J(c_1)...J(c_" << n << ") H~_" << M << "(" << to_string(r.terminal) << ")\n";
        for (int i = 1; i <= n; ++i)
            os << "  c_" << i << " = " << to_string(r.cs[static_cast<std::size_t>(i - 1)]) << "\n";
        os << "verification on the " << N << "x" << N << " window: " << (ok ? "exact match" : "MISMATCH") << "\n";
        s.text = os.str();
        s.code = ok ? exit_code::ok : exit_code::internal;
    } catch (const FactorizationInapplicable& e) {
        s.doc = {{"command", "factor"},
                 {"M", M},
                 {"n", n},
                 {"status", "INAPPLICABLE"},
                 {"zero_index", e.index()},
                 {"message", e.what()}};
        s.text = std::string(e.what()) + "\n";
        s.code = exit_code::informational;
    }
    return s;
}

Json roots_json(const RootReport& r)
{
    Json roots = Json::array();
    for (const auto& z : r.roots)
        roots.push_back({z.real(), z.imag()});
    return {{"roots", roots},
            {"residual", r.residual},
            {"converged", r.converged},
            {"clustered", r.clustered},
            {"iterations", r.iterations},
            {"min_arg_radians", r.min_arg}};
}

void add_clearance(Json& oracle, const SectorClearance& c)
{
    oracle["sector_radians"] = c.boundary;
    oracle["min_clearance_radians"] = finite_or_null(c.clearance);
    oracle["boundary_slope"] = finite_or_null(c.boundary_slope);
    oracle["closest_root_slope"] = finite_or_null(c.closest_slope);
    oracle["slack"] = c.slack;
    oracle["origin_roots"] = c.origin_roots;
}

void clearance_text(std::ostream& os, const SectorClearance& c)
{
    if (!c.any_nonzero_root) {
        os << "clearance: no nonzero roots\n";
        return;
    }
    os << "clearance: min |arg z| - pi/" << c.M << " = " << fmt(c.clearance) << " rad (slack " << fmt(c.slack) << ")\n";
    os << "slope: closest root +-" << fmt(c.closest_slope, 6) << " vs boundary +-" << fmt(c.boundary_slope, 6) << "\n";
}

void roots_text(std::ostream& os, const RootReport& r)
{
    os << "roots:\n";
    for (const auto& z : r.roots)
        os << "  " << fmt_complex(z) << "\n";
    os << "residual: " << fmt(r.residual, 3) << (r.converged ? "" : "  (NOT CONVERGED)")
       << (r.clustered ? "  (clustered roots)" : "") << "\n";
}

Section roots_section(const RationalPolynomial& f, std::optional<int> M, std::uint64_t seed)
{
    const RootReport r = find_roots(f, RootOptions{.seed = seed});
    Section s;
    Json oracle = roots_json(r);
    std::ostringstream os;
    roots_text(os, r);
    if (M) {
        const SectorClearance c = sector_clearance(r, *M);
        add_clearance(oracle, c);
        clearance_text(os, c);
    }
    s.doc = {{"command", "roots"}, {"M", M ? Json(*M) : Json(nullptr)}, {"n", f.degree()}, {"oracle", oracle}};
    s.text = os.str();
    s.code = r.converged ? exit_code::ok : exit_code::internal;
    return s;
}

Section certify_section(const RationalPolynomial& f, int M, MethodChoice method, std::uint64_t seed)
{
    const SectorCertificate cert = certify(f, M, method, CertifyOptions{.run_oracle = true, .seed = seed});
    Section s;

    Json evidence = Json::object();
    if (!cert.h.empty())
        evidence["h"] = to_strings(cert.h);
    if (!cert.deltas.empty())
        evidence["special_minors"] = to_strings(cert.deltas);
    if (!cert.pairs.empty()) {
        Json pairs = Json::array();
        for (const auto& p : cert.pairs)
            pairs.push_back({{"pair", {p.i, p.j}}, {"m", p.m}, {"minors", to_strings(p.minors)}});
        evidence["pairs"] = pairs;
    }
    if (!cert.coefficients.empty())
        evidence["coefficients"] = to_strings(cert.coefficients);

    Json attempts = Json::array();
    for (const auto& a : cert.attempts)
        attempts.push_back({{"method", to_string(a.method)},
                            {"applicable", a.applicable},
                            {"success", a.success},
                            {"detail", a.detail}});

    Json oracle = nullptr;
    if (cert.oracle) {
        oracle = roots_json(*cert.oracle);
        add_clearance(oracle, *cert.clearance);
        if (cert.all_roots_real_negative)
            oracle["all_roots_real_negative"] = *cert.all_roots_real_negative;
    }

    Rational degrees(180, M);
    degrees.canonicalize();
    s.doc = {{"command", "certify"},
             {"status", to_string(cert.status)},
             {"method", cert.method ? Json(to_string(*cert.method)) : Json(nullptr)},
             {"M", M},
             {"n", cert.n},
             {"sector", "|arg z| < pi/" + std::to_string(M)},
             {"sector_degrees", to_string(degrees)},
             {"claim", cert.claim ? Json(to_string(*cert.claim)) : Json(nullptr)},
             {"closed_sector_note", cert.closed_sector_note},
             {"evidence", evidence},
             {"attempts", attempts},
             {"oracle", oracle}};

    std::ostringstream os;
    os << "status: " << to_string(cert.status) << "\n";
    if (cert.method)
        os << "method: " << to_string(*cert.method) << "\n";
    os << "sector: |arg z| < pi/" << M << " (" << to_string(degrees) << " degrees)\n";
    if (cert.claim) {
        if (*cert.claim == SectorClaim::exterior)
            os << "claim: every root has |arg z| > pi/" << M << "\n";
        else
            os << "claim: no roots with |arg z| < pi/" << M << " (a root at the origin is not excluded)\n";
    }
    if (cert.closed_sector_note)
        os << "note: a3/a0 > a4/a1 > a5/a2 with h > 0; the closed sector |arg z| <= pi/3 is zero-free\n";
    if (!cert.h.empty())
        os << "h: " << join(to_strings(cert.h)) << "\n";
    if (!cert.deltas.empty())
        os << "special minors: " << join(to_strings(cert.deltas)) << "\n";
    for (const auto& p : cert.pairs)
        os << "pair (" << p.i << "," << p.j << "), m=" << p.m << ": " << join(to_strings(p.minors)) << "\n";
    if (!cert.coefficients.empty())
        os << "coefficients: " << join(to_strings(cert.coefficients)) << "\n";
    for (const auto& a : cert.attempts)
        os << "  " << to_string(a.method) << ": " << (a.success ? "ok" : (a.applicable ? "failed" : "not applicable"))
           << " - " << a.detail << "\n";
    if (cert.all_roots_real_negative)
        os << "all roots real and negative: " << (*cert.all_roots_real_negative ? "yes" : "no") << "\n";
    if (cert.oracle) {
        roots_text(os, *cert.oracle);
        clearance_text(os, *cert.clearance);
    }
    s.text = os.str();

    switch (cert.status) {
    case CertStatus::certified:
        s.code = exit_code::ok;
        break;
    case CertStatus::refuted_by_oracle:
        s.code = exit_code::internal;
        break;
    default:
        s.code = exit_code::informational;
    }
    return s;
}

Section report_section(const RationalPolynomial& f, const RunConfig& config, int M)
{
    Section table = table_section(f, M);
    Section minors = minors_section(f, M, config.cap, config.witness_search);
    Section cert = certify_section(f, M, config.method, config.seed);
    Section roots = roots_section(f, M, config.seed);
    Section s;
    s.doc = {{"command", "report"},
             {"table", table.doc},
             {"minors", minors.doc},
             {"certificate", cert.doc},
             {"roots", roots.doc}};
    s.text = "== table ==\n" + table.text + "\n== minors ==\n" + minors.text + "\n== certificate ==\n" + cert.text
             + "\n== roots ==\n" + roots.text;
    s.code = std::max(cert.code, roots.code == exit_code::internal ? exit_code::internal : exit_code::ok);
    return s;
}

Section run_one(const RationalPolynomial& f, const RunConfig& config)
{
    const int n = f.degree();
    switch (config.command) {
    case Command::table:
        require_m(config.M, 2, n, "table");
        return table_section(f, *config.M);
    case Command::minors:
        require_m(config.M, 1, n, "minors");
        return minors_section(f, *config.M, config.cap, config.witness_search);
    case Command::cfrac:
        require_m(config.M, 2, n, "cfrac");
        if (!config.pair)
            throw UsageError("cfrac requires --pair i,j");
        return cfrac_section(f, *config.M, *config.pair);
    case Command::factor:
        require_m(config.M, 2, std::numeric_limits<int>::max(), "factor");
        return factor_section(f, *config.M, config.window);
    case Command::roots:
        if (config.M && *config.M < 1)
            throw UsageError("roots: --m must be >= 1");
        return roots_section(f, config.M, config.seed);
    case Command::certify:
        require_m(config.M, 1, n, "certify");
        return certify_section(f, *config.M, config.method, config.seed);
    case Command::report:
        require_m(config.M, 2, n, "report");
        return report_section(f, config, *config.M);
    }
    throw std::logic_error("unknown command");
}

std::vector<RationalPolynomial> load_inputs(const RunConfig& config)
{
    const bool inline_given = !config.poly.empty();
    const bool file_given = !config.poly_file.empty();
    if (inline_given == file_given)
        throw UsageError("give exactly one of --poly or --poly-file");
    std::vector<RationalPolynomial> out;
    if (inline_given) {
        out.push_back(parse_polynomial(config.poly));
        return out;
    }
    std::ifstream in(config.poly_file);
    if (!in)
        throw UsageError("cannot read polynomial file '" + config.poly_file + "'");
    for (const auto& line : read_polynomial_lines(in))
        out.push_back(parse_polynomial(line));
    if (out.empty())
        throw UsageError("polynomial file '" + config.poly_file + "' has no polynomials");
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<std::string> read_polynomial_lines(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const auto inputs = load_inputs(config);
        std::vector<Section> sections;
        sections.reserve(inputs.size());
        for (const auto& f : inputs)
            sections.push_back(run_one(f, config));

        int code = exit_code::ok;
        for (const auto& s : sections)
            code = std::max(code, s.code);

        if (config.json) {
            if (sections.size() == 1 && config.poly_file.empty()) {
                out << sections.front().doc.dump(2) << "\n";
            } else {
                Json all = Json::array();
                for (auto& s : sections)
                    all.push_back(std::move(s.doc));
                out << all.dump(2) << "\n";
            }
        } else {
            for (std::size_t k = 0; k < sections.size(); ++k) {
                if (sections.size() > 1)
                    out << (k ? "\n" : "") << "# polynomial " << (k + 1) << ": " << inputs[k].to_text() << "\n";
                out << sections[k].text;
            }
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::internal;
    }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"hmsector: exact sector certificates for real polynomials via generalized Hurwitz matrices"};
    app.require_subcommand(1);
    RunConfig config;
    std::string method = "auto";
    std::string pair;

    auto common = [&](CLI::App* sub, bool needs_m) {
        sub->add_option("--poly", config.poly, "coefficients a_0,...,a_n (CSV or JSON array)");
        sub->add_option("--poly-file", config.poly_file, "file with one polynomial per line");
        sub->add_option("--m", config.M, needs_m ? "step M" : "step M (optional)");
        sub->add_flag("--json", config.json, "JSON output");
        sub->add_option("--seed", config.seed, "oracle seed");
    };

    struct Entry {
        const char* name;
        const char* help;
        Command command;
    };
    const Entry entries[] = {
        {"certify", "certify that no roots lie in |arg z| < pi/M", Command::certify},
        {"table", "generalized Euclidean algorithm table", Command::table},
        {"minors", "special minors and total nonnegativity verdict", Command::minors},
        {"cfrac", "continued fraction of a residue pair ratio", Command::cfrac},
        {"factor", "bidiagonal factorization of the tilde Hurwitz matrix", Command::factor},
        {"roots", "floating-point roots and sector clearance", Command::roots},
        {"report", "table, minors, certificate and roots together", Command::report},
    };
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        common(sub, e.command != Command::roots);
        subs.emplace_back(sub, e.command);
        if (e.command == Command::certify || e.command == Command::report)
            sub->add_option("--method", method, "auto|h|tn|pairwise|ct|rh");
        if (e.command == Command::minors || e.command == Command::report) {
            sub->add_option("--cap", config.cap, "largest minor order searched");
            sub->add_flag("--witness-search", config.witness_search, "always search for a negative minor");
        }
        if (e.command == Command::cfrac)
            sub->add_option("--pair", pair, "residue pair i,j");
        if (e.command == Command::factor)
            sub->add_option("--window", config.window, "verification window size N");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_code::ok : exit_code::usage;
    }

    for (const auto& [sub, command] : subs)
        if (sub->parsed())
            config.command = command;

    const auto choice = parse_method_choice(method);
    if (!choice) {
        err << "error: unknown --method '" << method << "'\n";
        return exit_code::usage;
    }
    config.method = *choice;

    if (!pair.empty()) {
        const auto comma = pair.find(',');
        try {
            if (comma == std::string::npos)
                throw std::invalid_argument("missing comma");
            config.pair = std::make_pair(std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1)));
        } catch (const std::exception&) {
            err << "error: --pair expects i,j\n";
            return exit_code::usage;
        }
    }
    if (config.cap < 1) {
        err << "error: --cap must be >= 1\n";
        return exit_code::usage;
    }

    if (const char* env = std::getenv("HMSECTOR_SEED")) {
        try {
            config.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: HMSECTOR_SEED must be a nonnegative integer\n";
            return exit_code::usage;
        }
    }
    return run(config, out, err);
}

} // namespace hmsector
