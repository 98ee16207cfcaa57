#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "zetaval/appendix.hpp"
#include "zetaval/bernoulli.hpp"
#include "zetaval/dirichlet.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/lvalues.hpp"
#include "zetaval/padic.hpp"
#include "zetaval/suites.hpp"
#include "zetaval/sums.hpp"

namespace zetaval::cli {

namespace {

// Bad input detected after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    while (true) {
        const auto pos = text.find(sep);
        out.emplace_back(text.substr(0, pos));
        if (pos == std::string_view::npos) {
            return out;
        }
        text.remove_prefix(pos + 1);
    }
}

Rational parse_rational(const std::string& text, const char* what)
{
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
}

std::pair<std::string, std::string> split_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        return {text, text};
    }
    return {text.substr(0, dots), text.substr(dots + 2)};
}

long parse_long(const std::string& text, const char* what)
{
    const Rational r = parse_rational(text, what);
    if (!r.is_integer() || !r.numerator().fits_slong_p()) {
        throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
    }
    return r.numerator().get_si();
}

// `table:k:v1,...` literals contain commas, so entries that do not start a new
// literal are glued back onto the preceding table literal.
std::vector<std::string> split_character_list(const std::string& text)
{
    std::vector<std::string> out;
    for (auto& token : split(text, ',')) {
        const bool continuation = !out.empty() && out.back().starts_with("table:") &&
                                  token.find(':') == std::string::npos && token != "chi4" && token != "B";
        if (continuation) {
            out.back() += "," + token;
        } else {
            out.push_back(token);
        }
    }
    return out;
}

RealCharacter character_arg(const std::string& literal)
{
    if (literal.empty()) {
        throw UsageError("--char is required");
    }
    try {
        return parse_character(literal);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

// Value commands take s = -n for the zeta-type functions.
std::size_t negated(long s, const char* command)
{
    if (s > 0) {
        throw UsageError(std::string(command) + ": --n must be a non-positive integer s");
    }
    return static_cast<std::size_t>(-s);
}

struct ValueArgs {
    std::string function;
    std::string n = "0";
    std::string a = "1";
    std::string chi;
    std::string c = "1";
    std::string k = "1";
    std::optional<std::string> route;
};

std::string compute_value(const ValueArgs& v, Route route)
{
    const auto unsupported = [&] {
        return UsageError("route '" + std::string(route_name(route)) + "' is not available for " + v.function);
    };
    const long n = parse_long(v.n, "--n");
    const Rational a = parse_rational(v.a, "--a");

    if (v.function == "zeta") {
        if (n > 0) {
            if (n % 2 != 0) {
                throw UsageError("zeta: no exact value at odd positive s");
            }
            if (route != Route::closed_form) {
                throw unsupported();
            }
            return zeta_even_positive(static_cast<std::size_t>(n / 2)).to_string();
        }
        const std::size_t m = negated(n, "zeta");
        switch (route) {
        case Route::closed_form: return riemann_neg(m).to_string();
        case Route::integral: return riemann_neg_integral(m).to_string();
        default: throw unsupported();
        }
    }
    if (v.function == "hurwitz") {
        const std::size_t m = negated(n, "hurwitz");
        switch (route) {
        case Route::closed_form: return hurwitz_neg(m, a).to_string();
        case Route::integral: return hurwitz_neg_integral(m, a).to_string();
        default: throw unsupported();
        }
    }
    if (v.function == "lvalue") {
        const RealCharacter chi = character_arg(v.chi);
        const std::size_t m = negated(n, "lvalue");
        switch (route) {
        case Route::closed_form: return l_neg(chi, m).to_string();
        case Route::integral: return l_neg_integral(chi, m).to_string();
        case Route::hurwitz_scaled: return l_neg_hurwitz(chi, m).to_string();
        default: throw unsupported();
        }
    }
    if (v.function == "twisted") {
        const RealCharacter chi = character_arg(v.chi);
        const std::size_t m = negated(n, "twisted");
        switch (route) {
        case Route::closed_form: return twisted_l_neg(chi, m, a).to_string();
        case Route::integral: return twisted_l_neg_integral(chi, m, a).to_string();
        case Route::hurwitz_scaled: return twisted_l_neg_hurwitz(chi, m, a).to_string();
        default: throw unsupported();
        }
    }
    if (v.function == "chi4") {
        const std::size_t m = negated(n, "chi4");
        switch (route) {
        case Route::closed_form: return (m == 0 ? chi4_second_rep(0) : l_neg(chi4(), m)).to_string();
        case Route::integral:
            if (m == 0) {
                throw UsageError("chi4: the integral route needs s <= -1");
            }
            return chi4_first_rep(m).to_string();
        case Route::euler_poly: return chi4_second_rep(m).to_string();
        case Route::hurwitz_scaled:
            if (m % 2 != 0) {
                throw UsageError("chi4: the scaled Hurwitz route needs even -s");
            }
            return chi4_scaled_hurwitz(m).to_string();
        }
    }
    if (v.function == "lerch") {
        if (route != Route::closed_form && route != Route::euler_poly) {
            throw unsupported();
        }
        const long k = parse_long(v.k, "--k");
        if (k < 1) {
            throw UsageError("lerch: --k must be positive");
        }
        const EulerParameter<Rational> c(parse_rational(v.c, "--c"));
        return lerch_special(c, static_cast<std::size_t>(k), a).to_string();
    }
    if (v.function == "bernoulli" || v.function == "gbernoulli") {
        if (route != Route::closed_form) {
            throw unsupported();
        }
        if (n < 0) {
            throw UsageError(v.function + ": --n must be a non-negative index");
        }
        if (v.function == "bernoulli") {
            return bernoulli_number(static_cast<std::size_t>(n)).to_string();
        }
        return generalized_bernoulli_number(character_arg(v.chi), static_cast<std::size_t>(n)).to_string();
    }
    throw UsageError("unknown value function '" + v.function + "'");
}

int cmd_value(const ValueArgs& v, std::ostream& out)
{
    Route route = Route::closed_form;
    if (v.route) {
        const auto parsed = parse_route(*v.route);
        if (!parsed) {
            throw UsageError("unknown route '" + *v.route + "'");
        }
        route = *parsed;
    }
    std::string value;
    try {
        value = compute_value(v, route);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    out << value << '\n';
    if (v.route) {
        out << "route: " << route_name(route) << '\n';
    }
    return ok;
}

struct TableArgs {
    std::string chars;
    std::string n_range = "0..12";
    std::string format = "markdown";
    std::optional<std::string> golden;
};

using GoldenLookup = std::function<std::optional<std::string>(const std::string&, long)>;

// Reads a table in the csv output format: header `n,label,...`, one row per n.
GoldenLookup load_golden_csv(const std::string& path, std::ostream& err)
{
    std::ifstream in(path);
    std::string line;
    if (!in || !std::getline(in, line)) {
        err << "error: cannot read golden file " << path << '\n';
        return {};
    }
    const std::vector<std::string> header = split(line, ',');
    if (header.empty() || header.front() != "n") {
        throw UsageError("golden file " + path + " must start with an 'n,...' header");
    }
    std::vector<std::string> columns;
    for (const auto& h : split_character_list(line.substr(2))) {
        columns.push_back(h == "B" ? h : character_arg(h).label());
    }
    auto cells = std::make_shared<std::map<std::pair<std::string, long>, std::string>>();
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        const long n = parse_long(line.substr(0, comma), "golden row");
        const std::vector<std::string> row = comma == std::string::npos ? std::vector<std::string>{}
                                                                         : split(line.substr(comma + 1), ',');
        if (row.size() != columns.size()) {
            throw UsageError("golden file " + path + ": row " + std::to_string(n) + " has the wrong number of cells");
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            (*cells)[{columns[j], n}] = row[j];
        }
    }
    return [cells](const std::string& label, long n) -> std::optional<std::string> {
        const auto it = cells->find({label, n});
        return it == cells->end() ? std::nullopt : std::optional<std::string>(it->second);
    };
}

int cmd_table(const TableArgs& t, std::ostream& out, std::ostream& err)
{
    const auto [lo_text, hi_text] = split_range(t.n_range);
    const long lo = parse_long(lo_text, "--n");
    const long hi = parse_long(hi_text, "--n");
    if (lo < 0 || hi > 64 || lo > hi) {
        throw UsageError("--n range must satisfy 0 <= lo <= hi <= 64");
    }

    std::vector<std::string> labels;
    std::vector<std::optional<RealCharacter>> columns;
    for (const auto& literal : split_character_list(t.chars)) {
        if (literal == "B") {
            labels.emplace_back("B");
            columns.emplace_back(std::nullopt);
        } else {
            columns.emplace_back(character_arg(literal));
            labels.push_back(columns.back()->label());
        }
    }
    if (labels.empty() || t.chars.empty()) {
        throw UsageError("--chars must name at least one column");
    }
    GoldenLookup golden;
    if (t.golden) {
        if (*t.golden == "appendix") {
            golden = [](const std::string& label, long n) -> std::optional<std::string> {
                const auto cell = golden_cell(label, static_cast<std::size_t>(n));
                return cell ? std::optional<std::string>(*cell) : std::nullopt;
            };
        } else {
            golden = load_golden_csv(*t.golden, err);
            if (!golden) {
                return failure;
            }
        }
        for (const auto& label : labels) {
            for (long n = lo; n <= hi; ++n) {
                if (!golden(label, n)) {
                    throw UsageError("no golden data for column '" + label + "' at n = " + std::to_string(n));
                }
            }
        }
    }

    std::vector<std::vector<std::string>> cells;
    for (long n = lo; n <= hi; ++n) {
        auto& row = cells.emplace_back();
        for (const auto& chi : columns) {
            const auto idx = static_cast<std::size_t>(n);
            row.push_back(chi ? generalized_bernoulli_number(*chi, idx).to_string() : bernoulli_number(idx).to_string());
        }
    }

    if (t.format == "csv") {
        out << 'n';
        for (const auto& label : labels) {
            out << ',' << label;
        }
        out << '\n';
        for (long n = lo; n <= hi; ++n) {
            out << n;
            for (const auto& cell : cells[static_cast<std::size_t>(n - lo)]) {
                out << ',' << cell;
            }
            out << '\n';
        }
    } else if (t.format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = {lo, hi};
        doc["columns"] = nlohmann::json::array();
        for (std::size_t j = 0; j < labels.size(); ++j) {
            nlohmann::ordered_json col;
            col["label"] = labels[j];
            col["values"] = nlohmann::json::array();
            for (const auto& row : cells) {
                col["values"].push_back(row[j]);
            }
            doc["columns"].push_back(col);
        }
        out << doc.dump(2) << '\n';
    } else if (t.format == "markdown") {
        out << "| n |";
        for (const auto& label : labels) {
            out << ' ' << label << " |";
        }
        out << "\n|---|";
        for (std::size_t j = 0; j < labels.size(); ++j) {
            out << "---|";
        }
        out << '\n';
        for (long n = lo; n <= hi; ++n) {
            out << "| " << n << " |";
            for (const auto& cell : cells[static_cast<std::size_t>(n - lo)]) {
                out << ' ' << cell << " |";
            }
            out << '\n';
        }
    } else {
        throw UsageError("unknown format '" + t.format + "'");
    }

    if (!t.golden) {
        return ok;
    }
    std::size_t mismatches = 0;
    for (long n = lo; n <= hi; ++n) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            const std::string& got = cells[static_cast<std::size_t>(n - lo)][j];
            const std::string want = *golden(labels[j], n);
            if (got != want) {
                ++mismatches;
                out << "- n=" << n << ' ' << labels[j] << ": " << want << '\n';
                out << "+ n=" << n << ' ' << labels[j] << ": " << got << '\n';
            }
        }
    }
    const std::size_t total = labels.size() * static_cast<std::size_t>(hi - lo + 1);
    out << "golden " << *t.golden << ": " << total - mismatches << '/' << total << " cells match\n";
    return mismatches == 0 ? ok : failure;
}

struct VerifyArgs {
    std::string suite;
    std::optional<std::size_t> n_max;
    std::string primes;
    std::string offsets;
    unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& v, std::ostream& out)
{
    SuiteParams params;
    params.n_max = v.n_max;
    params.jobs = std::max(1U, v.jobs);
    if (!v.primes.empty()) {
        for (const auto& p : split(v.primes, ',')) {
            const long value = parse_long(p, "--primes");
            if (value < 3 || (value != 4 && !is_prime(static_cast<std::uint64_t>(value)))) {
                throw UsageError("--primes entries must be odd primes (or 4 for chi4), got " + p);
            }
            params.primes.push_back(static_cast<std::uint64_t>(value));
        }
    }
    if (!v.offsets.empty()) {
        for (const auto& a : split(v.offsets, ',')) {
            const Rational r = parse_rational(a, "--a");
            if (r <= Rational(0) || r > Rational(1)) {
                throw UsageError("--a entries must lie in (0, 1], got " + a);
            }
            params.a_set.push_back(r);
        }
    }

    std::vector<std::string> to_run;
    if (v.suite == "all") {
        for (auto name : suite_names()) {
            to_run.emplace_back(name);
        }
    } else {
        const auto names = suite_names();
        if (std::find(names.begin(), names.end(), v.suite) == names.end()) {
            std::string known;
            for (auto name : names) {
                known += known.empty() ? "" : ", ";
                known += name;
            }
            throw UsageError("unknown suite '" + v.suite + "' (known: " + known + ", all)");
        }
        to_run.push_back(v.suite);
    }

    bool all_passed = true;
    for (const auto& name : to_run) {
        const VerificationReport report = run_suite(name, params);
        report.print_summary(out);
        all_passed = all_passed && report.passed();
    }
    return all_passed ? ok : failure;
}

struct PlotArgs {
    std::string target;
    std::string ns;
    std::string a = "1";
    std::string range = "0..1";
    long samples = 101;
    std::optional<std::string> out_path;
    std::optional<std::string> format;
};

struct Series {
    std::string label;
    std::vector<std::pair<Rational, Rational>> points;
};

int cmd_plot(const PlotArgs& p, std::ostream& out, std::ostream& err)
{
    if (p.samples < 2) {
        throw UsageError("--samples must be at least 2");
    }
    const auto [lo_text, hi_text] = split_range(p.range);
    const Rational lo = parse_rational(lo_text, "--range");
    const Rational hi = parse_rational(hi_text, "--range");
    if (!(lo < hi)) {
        throw UsageError("--range must be lo..hi with lo < hi");
    }
    const Rational a = parse_rational(p.a, "--a");
    std::string format = p.format.value_or("");
    if (format.empty()) {
        format = p.out_path && p.out_path->ends_with(".json") ? "json" : "csv";
    }
    if (format != "csv" && format != "json") {
        throw UsageError("unknown format '" + format + "'");
    }
    if (p.ns.empty()) {
        throw UsageError("--n is required");
    }

    std::vector<Series> series;
    for (const auto& item : split(p.ns, ',')) {
        const long n = parse_long(item, "--n");
        if (n < 0) {
            throw UsageError("--n entries must be non-negative");
        }
        const auto idx = static_cast<std::size_t>(n);
        RationalPolynomial poly;
        std::string label;
        try {
            if (p.target == "sn") {
                poly = s_n(idx);
                label = "S_" + std::to_string(n);
            } else if (p.target == "sna") {
                poly = s_na(PartialSumSpec(idx, a));
                label = "S_{" + std::to_string(n) + "," + a.to_string() + "}";
            } else if (p.target == "phi") {
                poly = signed_area_integrand(idx);
                label = "phi_" + std::to_string(n);
            } else {
                throw UsageError("unknown plot target '" + p.target + "'");
            }
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        Series& s = series.emplace_back(Series{label, {}});
        const Rational step = (hi - lo) / Rational(p.samples - 1);
        for (long i = 0; i < p.samples; ++i) {
            const Rational x = i == p.samples - 1 ? hi : lo + step * Rational(i);
            s.points.emplace_back(x, poly.evaluate(x));
        }
    }

    std::ostringstream body;
    if (format == "csv") {
        body << "series,x,y,x_decimal,y_decimal\n";
        for (const auto& s : series) {
            for (const auto& [x, y] : s.points) {
                body << s.label << ',' << x.to_string() << ',' << y.to_string() << ',' << x.to_decimal(12) << ','
                     << y.to_decimal(12) << '\n';
            }
        }
    } else {
        nlohmann::ordered_json doc;
        doc["series"] = nlohmann::json::array();
        for (const auto& s : series) {
            nlohmann::ordered_json js;
            js["label"] = s.label;
            js["points"] = nlohmann::json::array();
            for (const auto& [x, y] : s.points) {
                js["points"].push_back(nlohmann::ordered_json{{"x", x.to_string()},
                                                              {"y", y.to_string()},
                                                              {"xf", std::stod(x.to_decimal(12))},
                                                              {"yf", std::stod(y.to_decimal(12))}});
            }
            doc["series"].push_back(js);
        }
        body << doc.dump(2) << '\n';
    }

    if (!p.out_path) {
        out << body.str();
        return ok;
    }
    std::ofstream file(*p.out_path, std::ios::binary | std::ios::trunc);
    if (file) {
        file << body.str();
        file.flush();
    }
    if (!file) {
        err << "error: cannot write " << *p.out_path << '\n';
        return failure;
    }
    out << "wrote " << series.size() << " series to " << *p.out_path << '\n';
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact special values of zeta and L-functions at non-positive integers", "zetaval"};
    app.require_subcommand(1);

    ValueArgs value;
    auto* value_cmd = app.add_subcommand("value", "Compute one exact value");
    value_cmd->add_option("function", value.function, "zeta, hurwitz, lvalue, twisted, chi4, lerch, bernoulli, gbernoulli")
        ->required()
        ->check(CLI::IsMember({"zeta", "hurwitz", "lvalue", "twisted", "chi4", "lerch", "bernoulli", "gbernoulli"}));
    value_cmd->add_option("--n", value.n, "Argument s (zeta-type functions) or index (bernoulli, gbernoulli)");
    value_cmd->add_option("--a", value.a, "Offset a in (0, 1]");
    value_cmd->add_option("--char", value.chi, "Character literal: kronecker:p, chi4, trivial:k, table:k:v1,...");
    value_cmd->add_option("--c", value.c, "Euler parameter c for lerch");
    value_cmd->add_option("--k", value.k, "k for lerch, giving the value at s = 1 - k");
    value_cmd->add_option("--route", value.route, "closed_form, integral, euler_poly or hurwitz_scaled");

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Table of generalized Bernoulli numbers");
    table_cmd->add_option("--chars", table.chars, "Comma-separated columns; B is the Bernoulli column")->required();
    table_cmd->add_option("--n", table.n_range, "Row range lo..hi within 0..64");
    table_cmd->add_option("--format", table.format, "markdown, csv or json");
    table_cmd->add_option("--golden", table.golden, "Compare against the embedded appendix data, or a csv file");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", verify.suite, "Suite name, or all")->required();
    verify_cmd->add_option("--nmax", verify.n_max, "Largest n checked");
    verify_cmd->add_option("--primes", verify.primes, "Comma-separated primes (4 selects chi4)");
    verify_cmd->add_option("--a", verify.offsets, "Comma-separated offsets in (0, 1]");
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "Sample partial-sum polynomials for plotting");
    plot_cmd->add_option("target", plot.target, "sn, sna or phi")->required()->check(CLI::IsMember({"sn", "sna", "phi"}));
    plot_cmd->add_option("--n", plot.ns, "Comma-separated degrees")->required();
    plot_cmd->add_option("--a", plot.a, "Offset a for sna");
    plot_cmd->add_option("--range", plot.range, "Abscissa range lo..hi");
    plot_cmd->add_option("--samples", plot.samples, "Number of equally spaced samples (>= 2)");
    plot_cmd->add_option("--out", plot.out_path, "Output file (stdout if omitted)");
    plot_cmd->add_option("--format", plot.format, "csv or json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*value_cmd) {
            return cmd_value(value, out);
        }
        if (*table_cmd) {
            return cmd_table(table, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        return cmd_plot(plot, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        err << "run 'zetaval " << app.get_subcommands().front()->get_name() << " --help' for usage\n";
        return usage;
    }
}

} // namespace zetaval::cli
