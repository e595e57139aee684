#include <telegraph/app.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <telegraph/convergence.hpp>
#include <telegraph/errors.hpp>

namespace telegraph
{

using nlohmann::json;

std::string format_double(double v)
{
    if (v == 0) {
        // keep -0 and +0 byte-identical
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace
{

std::string format_short(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2E", v);
    return buf;
}

const char *report_name(report_kind r)
{
    switch (r) {
        case report_kind::deltas:
            return "deltas";
        case report_kind::errors:
            return "errors";
        case report_kind::surface:
            return "surface";
    }
    return "?";
}

report_kind parse_report(const std::string &s)
{
    if (s == "deltas") {
        return report_kind::deltas;
    }
    if (s == "errors") {
        return report_kind::errors;
    }
    if (s == "surface") {
        return report_kind::surface;
    }
    throw parse_error("unknown report '" + s + "' (expected deltas, errors, surface or all)");
}

void add_report(std::vector<report_kind> &reports, report_kind r)
{
    if (std::find(reports.begin(), reports.end(), r) == reports.end()) {
        reports.push_back(r);
    }
}

telegraph::backend parse_backend(const std::string &s)
{
    if (s == "symbolic") {
        return backend::symbolic;
    }
    if (s == "grid") {
        return backend::grid;
    }
    throw parse_error("unknown backend '" + s + "' (expected symbolic or grid)");
}

output_format parse_format(const std::string &s)
{
    if (s == "csv") {
        return output_format::csv;
    }
    if (s == "text") {
        return output_format::text;
    }
    throw parse_error("unknown format '" + s + "' (expected csv or text)");
}

void reject_unknown_keys(const json &j, const std::set<std::string> &allowed, const std::string &where)
{
    if (!j.is_object()) {
        throw parse_error(where + " must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (!allowed.count(key)) {
            throw parse_error("unknown key '" + key + "' in " + where);
        }
    }
}

template <typename T>
T get_or(const json &j, const char *key, T fallback)
{
    if (!j.contains(key)) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw parse_error(std::string("bad value for '") + key + "': " + e.what());
    }
}

} // namespace

void RunConfig::validate() const
{
    if (builtin.has_value() == inline_problem.has_value()) {
        throw std::invalid_argument("config needs exactly one of a builtin problem or an inline problem");
    }
    if (order < 2) {
        throw std::invalid_argument("order must be at least 2");
    }
    if (backend == backend::grid && grid_points < 8) {
        throw std::invalid_argument("grid backend needs at least 8 grid points");
    }
    if (!(x_step > 0)) {
        throw std::invalid_argument("x_step must be positive");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("t must be finite");
    }
    if (inline_problem) {
        inline_problem->domain.validate();
    }
}

RunConfig config_from_json(const json &j)
{
    reject_unknown_keys(j,
                        {"schema_version", "problem", "order", "backend", "grid_points", "t", "reports", "format",
                         "sampling"},
                        "config");
    const int version = get_or<int>(j, "schema_version", -1);
    if (version != config_schema_version) {
        throw parse_error("unsupported schema_version " + std::to_string(version) + " (expected "
                          + std::to_string(config_schema_version) + ")");
    }
    RunConfig c;
    if (!j.contains("problem")) {
        throw parse_error("config has no 'problem' section");
    }
    const json &p = j.at("problem");
    if (p.contains("builtin")) {
        reject_unknown_keys(p, {"builtin"}, "problem");
        c.builtin = get_or<std::string>(p, "builtin", "");
    } else {
        reject_unknown_keys(p, {"alpha", "beta", "forcing", "nonlinearity", "h0", "h1", "domain", "exact", "boundary"},
                            "problem");
        InlineProblem ip;
        ip.alpha = get_or<double>(p, "alpha", 0.0);
        ip.beta = get_or<double>(p, "beta", 0.0);
        ip.forcing = get_or<std::string>(p, "forcing", "0");
        ip.nonlinearity = get_or<std::string>(p, "nonlinearity", "0");
        ip.h0 = get_or<std::string>(p, "h0", "0");
        ip.h1 = get_or<std::string>(p, "h1", "0");
        if (p.contains("domain")) {
            const json &d = p.at("domain");
            reject_unknown_keys(d, {"x_lo", "x_hi", "T"}, "problem.domain");
            ip.domain.x_lo = get_or<double>(d, "x_lo", 0.0);
            ip.domain.x_hi = get_or<double>(d, "x_hi", 1.0);
            ip.domain.T = get_or<double>(d, "T", 1.0);
        }
        if (p.contains("exact")) {
            ip.exact = get_or<std::string>(p, "exact", "");
        }
        if (p.contains("boundary")) {
            const json &b = p.at("boundary");
            reject_unknown_keys(b, {"g0", "g1"}, "problem.boundary");
            if (b.contains("g0")) {
                ip.g0 = get_or<std::string>(b, "g0", "");
            }
            if (b.contains("g1")) {
                ip.g1 = get_or<std::string>(b, "g1", "");
            }
        }
        c.inline_problem = ip;
    }
    c.order = get_or<std::size_t>(j, "order", c.order);
    c.backend = parse_backend(get_or<std::string>(j, "backend", "symbolic"));
    c.grid_points = get_or<std::size_t>(j, "grid_points", c.grid_points);
    c.t = get_or<double>(j, "t", c.t);
    if (j.contains("reports")) {
        c.reports.clear();
        for (const auto &r : get_or<std::vector<std::string>>(j, "reports", {})) {
            add_report(c.reports, parse_report(r));
        }
    }
    c.format = parse_format(get_or<std::string>(j, "format", "csv"));
    if (j.contains("sampling")) {
        const json &s = j.at("sampling");
        reject_unknown_keys(s, {"x_step", "t_values"}, "sampling");
        c.x_step = get_or<double>(s, "x_step", c.x_step);
        c.surface_t = get_or<std::vector<double>>(s, "t_values", {});
    }
    try {
        c.validate();
    } catch (const std::invalid_argument &e) {
        throw parse_error(e.what());
    }
    return c;
}

json config_to_json(const RunConfig &c)
{
    json j;
    j["schema_version"] = config_schema_version;
    if (c.builtin) {
        j["problem"] = {{"builtin", *c.builtin}};
    } else {
        const auto &ip = *c.inline_problem;
        json p = {{"alpha", ip.alpha},
                  {"beta", ip.beta},
                  {"forcing", ip.forcing},
                  {"nonlinearity", ip.nonlinearity},
                  {"h0", ip.h0},
                  {"h1", ip.h1},
                  {"domain", {{"x_lo", ip.domain.x_lo}, {"x_hi", ip.domain.x_hi}, {"T", ip.domain.T}}}};
        if (ip.exact) {
            p["exact"] = *ip.exact;
        }
        if (ip.g0 || ip.g1) {
            json b = json::object();
            if (ip.g0) {
                b["g0"] = *ip.g0;
            }
            if (ip.g1) {
                b["g1"] = *ip.g1;
            }
            p["boundary"] = b;
        }
        j["problem"] = p;
    }
    j["order"] = c.order;
    j["backend"] = c.backend == backend::grid ? "grid" : "symbolic";
    j["grid_points"] = c.grid_points;
    j["t"] = c.t;
    json reports = json::array();
    for (auto r : c.reports) {
        reports.push_back(report_name(r));
    }
    j["reports"] = reports;
    j["format"] = c.format == output_format::text ? "text" : "csv";
    j["sampling"] = {{"x_step", c.x_step}, {"t_values", c.surface_t}};
    return j;
}

ResolvedProblem resolve_problem(const RunConfig &c)
{
    ResolvedProblem r;
    if (c.builtin) {
        const auto &b = builtin_problem(*c.builtin);
        r.label = b.name;
        r.problem = b.problem;
        r.exact = b.exact;
    } else {
        const auto &ip = *c.inline_problem;
        r.label = "inline";
        r.problem.alpha = ip.alpha;
        r.problem.beta = ip.beta;
        r.problem.forcing = parse_expr(ip.forcing);
        r.problem.nonlinearity = parse_nonlinearity(ip.nonlinearity);
        r.problem.h0 = parse_expr(ip.h0);
        r.problem.h1 = parse_expr(ip.h1);
        if (r.problem.h0.depends_on(var::t) || r.problem.h1.depends_on(var::t)) {
            throw parse_error("initial data h0, h1 must not depend on t");
        }
        r.problem.domain = ip.domain;
        if (ip.exact) {
            r.exact = parse_expr(*ip.exact);
        }
        if (ip.g0) {
            r.problem.g0 = parse_expr(*ip.g0);
        }
        if (ip.g1) {
            r.problem.g1 = parse_expr(*ip.g1);
        }
    }
    r.problem.order = c.order;
    return r;
}

namespace
{

std::vector<Artifact> render_deltas(const ResolvedProblem &rp, const SeriesSolution &sol, const RunConfig &c)
{
    const auto rep = analyze_convergence(sol);
    std::vector<Artifact> out;
    if (c.format == output_format::csv) {
        std::ostringstream d;
        d << "n,i,j,delta,rate\n";
        for (std::size_t n = 0; n < rep.deltas.size(); ++n) {
            const auto &e = rep.deltas[n];
            d << n << ',' << e.i << ',' << e.j << ',' << format_double(e.value) << ',' << format_double(e.rate)
              << '\n';
        }
        out.push_back({"deltas.csv", d.str()});
        std::ostringstream t;
        t << "i,term_norm,strict_delta\n";
        for (std::size_t i = 0; i < rep.term_norms.size(); ++i) {
            t << i << ',' << format_double(rep.term_norms[i]) << ',';
            if (i < rep.strict_deltas.size()) {
                t << format_double(rep.strict_deltas[i]);
            }
            t << '\n';
        }
        out.push_back({"terms.csv", t.str()});
        return out;
    }

    std::ostringstream s;
    s << "problem: " << rp.label << ", order " << sol.order() << ", "
      << (sol.backend == backend::grid ? "grid" : "symbolic") << " backend\n";
    s << "zero threshold: " << format_double(rep.zero_threshold) << '\n';
    s << "skipped zero terms:";
    if (rep.skipped.empty()) {
        s << " none";
    }
    for (auto i : rep.skipped) {
        s << ' ' << i;
    }
    s << '\n';
    for (std::size_t n = 0; n < rep.deltas.size(); ++n) {
        const auto &e = rep.deltas[n];
        s << "delta_" << n << " = ||w_" << e.j << "|| / ||w_" << e.i << "|| = " << format_double(e.value) << '\n';
    }
    if (rep.vacuous) {
        s << "verdict: fewer than two nonzero terms, nothing to test\n";
    } else {
        s << "verdict: every delta < 1: " << (rep.verdict ? "yes" : "no") << '\n';
        s << "largest delta: " << format_double(rep.delta_max) << '\n';
        const std::size_t m = std::min<std::size_t>(10, sol.order());
        if (auto b = tail_bound(rep.rate_max, m, sol.order(), rep.w0_norm)) {
            s << "tail bound ||S_" << sol.order() << " - S_" << m << "|| <= " << format_double(*b) << '\n';
        } else {
            s << "tail bound unavailable: largest per-order rate " << format_double(rep.rate_max) << " >= 1\n";
        }
    }
    out.push_back({"deltas.txt", s.str()});
    return out;
}

std::vector<std::size_t> table_orders_for(std::size_t order)
{
    std::vector<std::size_t> orders;
    for (auto n : table_orders()) {
        if (n <= order) {
            orders.push_back(n);
        }
    }
    if (orders.empty()) {
        orders.push_back(order);
    }
    return orders;
}

std::vector<Artifact> render_errors(const ResolvedProblem &rp, const SeriesSolution &sol, const RunConfig &c)
{
    if (!rp.exact) {
        throw parse_error("the errors report needs an exact solution");
    }
    const auto orders = table_orders_for(sol.order());
    std::vector<double> xs;
    for (double x : table_xs()) {
        if (x >= rp.problem.domain.x_lo && x <= rp.problem.domain.x_hi) {
            xs.push_back(x);
        }
    }
    const auto table = error_table(sol, *rp.exact, orders, xs, c.t);
    const bool with_reference = c.builtin && c.t == 1 && orders == table_orders();

    std::vector<Artifact> out;
    if (c.format == output_format::csv) {
        std::ostringstream s;
        s << 'x';
        for (auto n : orders) {
            s << ",n=" << n;
        }
        s << '\n';
        for (std::size_t r = 0; r < xs.size(); ++r) {
            s << format_double(xs[r]);
            for (double e : table.errors[r]) {
                s << ',' << format_double(e);
            }
            s << '\n';
        }
        out.push_back({"errors.csv", s.str()});
        if (with_reference) {
            std::ostringstream ref;
            ref << "method,x";
            for (auto n : orders) {
                ref << ",n=" << n;
            }
            ref << '\n';
            for (const auto &row : published_errors(*c.builtin)) {
                auto line = [&](const char *name, const std::array<double, 6> &v) {
                    ref << name << ',' << format_double(row.x);
                    for (double e : v) {
                        ref << ',' << format_double(e);
                    }
                    ref << '\n';
                };
                line("published", row.taylor);
                line("adm", row.adm);
                line("ham", row.ham);
            }
            out.push_back({"errors_reference.csv", ref.str()});
        }
        return out;
    }

    std::ostringstream s;
    s << "absolute errors at t = " << format_double(c.t) << " (" << rp.label << ")\n";
    s << "method     x    ";
    for (auto n : orders) {
        char buf[16];
        std::snprintf(buf, sizeof buf, " %-9s", ("n=" + std::to_string(n)).c_str());
        s << buf;
    }
    s << '\n';
    for (std::size_t r = 0; r < xs.size(); ++r) {
        auto line = [&](const char *name, const std::vector<double> &v, bool show_x) {
            char xbuf[16] = "";
            if (show_x) {
                std::snprintf(xbuf, sizeof xbuf, "%.2f", xs[r]);
            }
            char head[40];
            std::snprintf(head, sizeof head, "%-10s %-4s ", name, xbuf);
            s << head;
            for (double e : v) {
                s << ' ' << format_short(e);
            }
            s << '\n';
        };
        line("series", table.errors[r], true);
        if (with_reference) {
            const auto &row = published_errors(*c.builtin)[r];
            line("published", {row.taylor.begin(), row.taylor.end()}, false);
            line("adm", {row.adm.begin(), row.adm.end()}, false);
            line("ham", {row.ham.begin(), row.ham.end()}, false);
        }
    }
    out.push_back({"errors.txt", s.str()});
    return out;
}

std::vector<Artifact> render_surface(const ResolvedProblem &rp, const SeriesSolution &sol, const RunConfig &c)
{
    const auto &d = rp.problem.domain;
    const auto count = static_cast<std::size_t>(std::max<long>(1, std::lround((d.x_hi - d.x_lo) / c.x_step)));
    const std::vector<double> ts = c.surface_t.empty() ? std::vector<double>{c.t} : c.surface_t;
    const char sep = c.format == output_format::csv ? ',' : ' ';
    std::ostringstream s;
    s << "x" << sep << "t" << sep << "w_approx";
    if (rp.exact) {
        s << sep << "w_exact" << sep << "abs_err";
    }
    s << '\n';
    for (double t : ts) {
        for (std::size_t i = 0; i <= count; ++i) {
            const double x = (i == count) ? d.x_hi : d.x_lo + (d.x_hi - d.x_lo) * static_cast<double>(i) / count;
            const real_ext approx = eval_solution_ext(sol, x, t);
            s << format_double(x) << sep << format_double(t) << sep << format_double(approx.convert_to<double>());
            if (rp.exact) {
                const real_ext exact = eval_ext(*rp.exact, x, t);
                s << sep << format_double(exact.convert_to<double>()) << sep
                  << format_double(boost::multiprecision::fabs(approx - exact).convert_to<double>());
            }
            s << '\n';
        }
    }
    return {{c.format == output_format::csv ? "surface.csv" : "surface.txt", s.str()}};
}

} // namespace

std::vector<Artifact> run(const RunConfig &c, std::vector<std::string> &warnings)
{
    c.validate();
    const ResolvedProblem rp = resolve_problem(c);
    SolverOptions opts;
    opts.backend = c.backend;
    opts.grid_points = c.grid_points;
    const SeriesSolution sol = solve(rp.problem, opts);
    warnings.insert(warnings.end(), sol.warnings.begin(), sol.warnings.end());

    std::vector<Artifact> out;
    for (auto r : c.reports) {
        std::vector<Artifact> part;
        switch (r) {
            case report_kind::deltas:
                part = render_deltas(rp, sol, c);
                break;
            case report_kind::errors:
                part = render_errors(rp, sol, c);
                break;
            case report_kind::surface:
                part = render_surface(rp, sol, c);
                break;
        }
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace
{

void diagnostic(std::ostream &err, const char *kind, const std::string &message)
{
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

} // namespace

int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Truncated time-Taylor series solutions of the telegraph equation"};
    std::string problem, config_path, backend_name, report, table, out_dir, format;
    std::size_t order = 0, grid_points = 0;
    double t = 0, x_step = 0;
    app.add_option("--problem", problem, "builtin problem: example1, example2, example3");
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--order", order, "truncation order N (default 15)");
    app.add_option("--backend", backend_name, "symbolic or grid");
    app.add_option("--grid-points", grid_points, "Chebyshev nodes for the grid backend (default 64)");
    app.add_option("--t", t, "evaluation time for error tables and surfaces (default 1)");
    app.add_option("--report", report, "deltas, errors, surface or all");
    app.add_option("--table", table, "alias: --table errors adds the error table");
    app.add_option("--out", out_dir, "directory for artifacts (default: print to stdout)");
    app.add_option("--format", format, "csv or text");
    app.add_option("--x-step", x_step, "surface sampling step in x (default 0.001)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        diagnostic(err, "parse", e.what());
        return 2;
    }

    RunConfig config;
    std::vector<Artifact> artifacts;
    std::vector<std::string> warnings;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                diagnostic(err, "io", "cannot read config file '" + config_path + "'");
                return 4;
            }
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception &e) {
                throw parse_error(std::string("config file: ") + e.what());
            }
            config = config_from_json(j);
        } else if (problem.empty()) {
            throw parse_error("give --problem or --config");
        }
        if (!problem.empty()) {
            builtin_problem(problem);
            config.builtin = problem;
            config.inline_problem.reset();
        }
        if (app.count("--order")) {
            config.order = order;
        }
        if (!backend_name.empty()) {
            config.backend = parse_backend(backend_name);
        }
        if (app.count("--grid-points")) {
            config.grid_points = grid_points;
        }
        if (app.count("--t")) {
            config.t = t;
        }
        if (app.count("--x-step")) {
            config.x_step = x_step;
        }
        if (!report.empty()) {
            config.reports.clear();
            if (report == "all") {
                config.reports = {report_kind::deltas, report_kind::errors, report_kind::surface};
            } else {
                config.reports.push_back(parse_report(report));
            }
        }
        if (!table.empty()) {
            if (table != "errors") {
                throw parse_error("--table accepts only 'errors'");
            }
            if (report.empty()) {
                config.reports.clear();
            }
            add_report(config.reports, report_kind::errors);
        }
        if (!format.empty()) {
            config.format = parse_format(format);
        }
        try {
            config.validate();
        } catch (const std::invalid_argument &e) {
            throw parse_error(e.what());
        }
        artifacts = run(config, warnings);
    } catch (const parse_error &e) {
        diagnostic(err, "parse", e.what());
        return 2;
    } catch (const numeric_error &e) {
        diagnostic(err, "numeric", e.what());
        return 3;
    } catch (const expr_size_error &e) {
        diagnostic(err, "numeric", e.what());
        return 3;
    } catch (const domain_error &e) {
        diagnostic(err, "numeric", e.what());
        return 3;
    } catch (const std::invalid_argument &e) {
        diagnostic(err, "parse", e.what());
        return 2;
    }

    for (const auto &w : warnings) {
        err << json{{"warning", w}}.dump() << '\n';
    }

    if (out_dir.empty()) {
        for (const auto &a : artifacts) {
            if (artifacts.size() > 1) {
                out << "# " << a.name << '\n';
            }
            out << a.content;
        }
        return 0;
    }

    try {
        std::filesystem::create_directories(out_dir);
        artifacts.push_back({"config.json", config_to_json(config).dump(2) + "\n"});
        for (const auto &a : artifacts) {
            const auto path = std::filesystem::path(out_dir) / a.name;
            std::ofstream f(path, std::ios::binary);
            f << a.content;
            if (!f) {
                diagnostic(err, "io", "cannot write '" + path.string() + "'");
                return 4;
            }
        }
    } catch (const std::filesystem::filesystem_error &e) {
        diagnostic(err, "io", e.what());
        return 4;
    }
    return 0;
}

} // namespace telegraph
