#pragma once

#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gegen/gegen.hpp"

namespace gegen::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_io = 2;

struct RunSpec {
    std::string model = "pole";
    std::string z0 = "2,0";
    std::optional<double> lambda;
    std::string family = "gegenbauer";
    std::optional<double> rho;
    std::optional<double> M;
    std::optional<double> gamma;
    std::optional<double> delta;
    double alpha = 0.5;
    double b = 2.0;
    double x0 = 0.25;
    int sign = -1;
    int nmin = 1;
    int nmax = 10;
    std::string kind;
    std::string method = "auto";
    int nodes = 0;
    int id = 0;
    std::string out;
};

inline cplx parse_complex(const std::string& s)
{
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return {re, 0.0};
        }
        const std::string a = s.substr(0, comma);
        const std::string c = s.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) {
            throw std::invalid_argument(s);
        }
        const double im = std::stod(c, &used);
        if (used != c.size()) {
            throw std::invalid_argument(s);
        }
        return {re, im};
    } catch (const std::logic_error&) {
        throw DomainError("--z0 expects \"re,im\", got \"" + s + "\"");
    }
}

inline ModelFunction make_model(const RunSpec& s)
{
    const std::string& m = s.model;
    if (m == "pole") {
        return ModelFunction::pole(parse_complex(s.z0));
    }
    if (m == "algebraic-outside") {
        return ModelFunction::algebraic_outside(s.b, s.alpha);
    }
    if (m == "log-outside") {
        return ModelFunction::log_outside(s.b);
    }
    if (m == "algebraic-endpoint") {
        return ModelFunction::algebraic_endpoint(s.alpha, s.sign);
    }
    if (m == "log-endpoint") {
        return ModelFunction::log_endpoint(s.sign);
    }
    if (m == "algebraic-interior") {
        return ModelFunction::algebraic_interior(s.x0, s.alpha);
    }
    if (m == "log-interior") {
        return ModelFunction::log_interior(s.x0);
    }
    throw DomainError("unknown --model \"" + m + "\"");
}

inline GegenbauerParam make_param(const RunSpec& s)
{
    if (s.family == "legendre") {
        return GegenbauerParam(0.5);
    }
    if (s.family == "chebyshev_u") {
        return GegenbauerParam(1.0);
    }
    if (s.family == "chebyshev_t") {
        return GegenbauerParam::chebyshev_t_limit();
    }
    if (s.family != "gegenbauer") {
        throw DomainError("unknown --family \"" + s.family + "\"");
    }
    if (!s.lambda) {
        throw DomainError("--lambda is required for the gegenbauer family");
    }
    return GegenbauerParam(*s.lambda);
}

inline void check_range(const RunSpec& s, int lowest)
{
    if (s.nmin < lowest) {
        throw DomainError("--nmin must be >= " + std::to_string(lowest));
    }
    if (s.nmax < s.nmin) {
        throw DomainError("--nmax must be >= --nmin");
    }
}

inline double require(const std::optional<double>& v, const char* flag)
{
    if (!v) {
        throw DomainError(std::string(flag) + " is required");
    }
    return *v;
}

/// --M if given, otherwise the witness derived from --model on E_rho.
inline AnalyticityWitness make_witness_from(const RunSpec& s)
{
    const double rho = require(s.rho, "--rho");
    if (s.M) {
        return {rho, *s.M};
    }
    return make_witness(make_model(s), rho);
}

inline void push_value(std::vector<double>& row, cplx v, bool complex_cols)
{
    row.push_back(v.real());
    if (complex_cols) {
        row.push_back(v.imag());
    }
}

inline void value_header(CsvTable& t, const std::string& name, bool complex_cols)
{
    if (complex_cols) {
        t.header.push_back(name + "_re");
        t.header.push_back(name + "_im");
    } else {
        t.header.push_back(name);
    }
}

inline CsvTable cmd_coeffs(const RunSpec& s)
{
    if (s.nmax < 0) {
        throw DomainError("--nmax must be >= 0");
    }
    const ModelFunction f = make_model(s);
    const GegenbauerParam p = make_param(s);
    const int count = s.nmax + 1;
    std::string method = s.method;
    if (method == "auto") {
        using K = ModelFunction::Kind;
        const K k = f.kind();
        method = (k == K::pole || k == K::algebraic_endpoint) ? "closed" : "numeric";
    }
    std::vector<cplx> vals;
    if (method == "closed") {
        const int first = f.kind() == ModelFunction::Kind::log_endpoint ? 1 : 0;
        vals = model_coeffs(f, count, p, first).values;
        if (first == 1) {
            vals[0] = nan_cplx;
        }
    } else if (method == "numeric") {
        const int nodes = s.nodes > 0 ? s.nodes : std::max(1024, 16 * (count + 2 * std::max(20, count)));
        const double rho = s.rho.value_or(1.0);
        vals = gegen_coeffs_numeric(f, count, p, nodes, 0, rho).values;
    } else if (method == "contour") {
        const double rho = require(s.rho, "--rho");
        const int nodes = s.nodes > 0 ? s.nodes : 1024;
        for (int n = 0; n < count; ++n) {
            vals.push_back(coeff_contour_oracle(f, n, p, rho, nodes));
        }
    } else {
        throw DomainError("--method must be auto, closed, numeric or contour");
    }
    const bool cx = f.is_complex_valued();
    CsvTable t;
    t.header.push_back("n");
    value_header(t, "value", cx);
    for (int n = 0; n < count; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        push_value(row, vals[n], cx);
        t.add_row(std::move(row));
    }
    return t;
}

inline CsvTable cmd_bound(const RunSpec& s)
{
    const std::string kind = s.kind.empty() ? "optimal" : s.kind;
    check_range(s, kind == "optimal" ? 0 : 1);
    const AnalyticityWitness w = make_witness_from(s);
    GegenbauerParam p = kind == "zhao_legendre" ? GegenbauerParam(0.5) : make_param(s);
    CsvTable t;
    t.header = {"n", "bound", "log10_bound"};
    for (int n = s.nmin; n <= s.nmax; ++n) {
        double l = 0.0;
        if (kind == "optimal") {
            l = log10_coeff_bound(n, p, w, CoeffBoundKind::optimal);
        } else if (kind == "explicit") {
            l = log10_coeff_bound(n, p, w, CoeffBoundKind::explicit_estimate);
        } else if (kind == "zhao_legendre") {
            l = log10_comparator_bound(n, p, w, Comparator::zhao_legendre);
        } else if (kind == "zhao_gegenbauer") {
            l = log10_comparator_bound(n, p, w, Comparator::zhao_gegenbauer);
        } else {
            throw DomainError("--kind must be optimal, explicit, zhao_legendre or zhao_gegenbauer");
        }
        t.add_row({static_cast<double>(n), std::pow(10.0, l), l});
    }
    return t;
}

inline CsvTable cmd_truncation(const RunSpec& s)
{
    check_range(s, 1);
    const AnalyticityWitness w = make_witness_from(s);
    const std::string kind = s.kind.empty() ? "series" : s.kind;
    TruncationKind tk;
    GegenbauerParam p(1.0);
    if (kind == "diagonal") {
        tk = TruncDiagonal{require(s.gamma, "--gamma")};
    } else {
        p = make_param(s);
        if (kind == "series") {
            tk = TruncSeries{};
        } else if (kind == "lambda_one") {
            tk = TruncLambdaOne{};
        } else if (kind == "simple") {
            tk = TruncSimple{};
        } else {
            throw DomainError("--kind must be series, lambda_one, simple or diagonal");
        }
    }
    CsvTable t;
    t.header = {"N", "bound", "log10_bound"};
    for (int N = s.nmin; N <= s.nmax; ++N) {
        const double l = log10_truncation_bound(N, p, w, tk);
        t.add_row({static_cast<double>(N), std::pow(10.0, l), l});
    }
    return t;
}

inline CsvTable cmd_qbound(const RunSpec& s)
{
    check_range(s, 1);
    const double d = require(s.delta, "--delta");
    if (!(d > 0.0)) {
        throw DomainError("--delta must be > 0");
    }
    CsvTable t;
    t.header = {"n", "ours", "log10_ours", "rokhlin", "log10_rokhlin", "exact", "log10_exact"};
    for (int n = s.nmin; n <= s.nmax; ++n) {
        const double o = q_bound(n, d, QBoundKind::ours);
        const double r = q_bound(n, d, QBoundKind::rokhlin);
        const double e = std::abs(cauchy_q(n, GegenbauerParam(0.5), cplx(1.0 + d)));
        t.add_row({static_cast<double>(n), o, std::log10(o), r, std::log10(r), e, std::log10(e)});
    }
    return t;
}

inline CsvTable cmd_ratio(const RunSpec& s)
{
    if (s.nmax < 1) {
        throw DomainError("--nmax must be >= 1");
    }
    const ModelFunction f = make_model(s);
    const RatioReport r = gamma_series(f, s.nmax);
    const bool cx = f.is_complex_valued();
    CsvTable t;
    t.header.push_back("n");
    value_header(t, "legendre", cx);
    value_header(t, "chebyshev", cx);
    value_header(t, "gamma", cx);
    value_header(t, "prediction", cx);
    t.header.push_back("residual");
    for (int n = 1; n <= s.nmax; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        push_value(row, r.legendre[n], cx);
        push_value(row, r.chebyshev[n], cx);
        push_value(row, r.gamma_values[n], cx);
        push_value(row, r.prediction[n], cx);
        row.push_back(r.residuals[n]);
        t.add_row(std::move(row));
    }
    return t;
}

inline CsvTable cmd_figure(const RunSpec& s, bool nmax_given)
{
    FigureOptions opt;
    opt.gamma = s.gamma;
    if (nmax_given) {
        opt.nmax = s.nmax;
    }
    return figure(s.id, opt);
}

/// Parses args (without the program name) and writes CSV to `out` or --out.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gegenbauer coefficients, bounds and coefficient ratios"};
    app.require_subcommand(1);
    app.fallthrough();
    RunSpec s;

    const auto model_opts = [&s](CLI::App* c) {
        c->add_option("--model", s.model, "pole | algebraic-outside | log-outside | "
                                          "algebraic-endpoint | log-endpoint | "
                                          "algebraic-interior | log-interior");
        c->add_option("--z0", s.z0, "pole location \"re,im\"");
        c->add_option("--alpha", s.alpha, "exponent");
        c->add_option("--b", s.b, "exterior singularity b > 1");
        c->add_option("--x0", s.x0, "interior singular point");
        c->add_option("--sign", s.sign, "endpoint sign: f(1 + sign*x)");
    };
    const auto param_opts = [&s](CLI::App* c) {
        c->add_option("--lambda", s.lambda, "Gegenbauer index");
        c->add_option("--family", s.family, "gegenbauer | legendre | chebyshev_t | chebyshev_u");
    };
    const auto range_opts = [&s](CLI::App* c) {
        c->add_option("--nmin", s.nmin, "first index");
        c->add_option("--nmax", s.nmax, "last index");
    };

    CLI::App* coeffs = app.add_subcommand("coeffs", "expansion coefficients a_0..a_nmax");
    model_opts(coeffs);
    param_opts(coeffs);
    coeffs->add_option("--nmax", s.nmax, "last degree");
    coeffs->add_option("--method", s.method, "auto | closed | numeric | contour");
    coeffs->add_option("--nodes", s.nodes, "quadrature nodes");
    coeffs->add_option("--rho", s.rho, "contour radius");

    CLI::App* bound = app.add_subcommand("bound", "coefficient bounds");
    model_opts(bound);
    param_opts(bound);
    range_opts(bound);
    bound->add_option("--kind", s.kind, "optimal | explicit | zhao_legendre | zhao_gegenbauer");
    bound->add_option("--rho", s.rho, "ellipse parameter")->required();
    bound->add_option("--M", s.M, "max |f| on the ellipse (default: from --model)");

    CLI::App* trunc = app.add_subcommand("truncation", "truncation-error bounds");
    model_opts(trunc);
    param_opts(trunc);
    range_opts(trunc);
    trunc->add_option("--kind", s.kind, "series | lambda_one | simple | diagonal");
    trunc->add_option("--rho", s.rho, "ellipse parameter")->required();
    trunc->add_option("--M", s.M, "max |f| on the ellipse (default: from --model)");
    trunc->add_option("--gamma", s.gamma, "lambda = gamma N for the diagonal kind");

    CLI::App* ratio = app.add_subcommand("ratio", "Legendre-to-Chebyshev coefficient ratio");
    model_opts(ratio);
    ratio->add_option("--nmax", s.nmax, "last degree");

    CLI::App* qb = app.add_subcommand("qbound", "bounds for the Legendre function of the second kind");
    range_opts(qb);
    qb->add_option("--delta", s.delta, "distance from 1")->required();

    CLI::App* fig = app.add_subcommand("figure", "figure data presets 1-6");
    fig->add_option("--id", s.id, "figure number")->required()->check(CLI::Range(1, 6));
    fig->add_option("--gamma", s.gamma, "figure 5: single gamma");
    CLI::Option* fig_nmax = fig->add_option("--nmax", s.nmax, "override the last index");

    app.add_option("--out", s.out, "output path (default stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CsvTable table;
    try {
        if (*coeffs) {
            table = cmd_coeffs(s);
        } else if (*bound) {
            table = cmd_bound(s);
        } else if (*trunc) {
            table = cmd_truncation(s);
        } else if (*ratio) {
            table = cmd_ratio(s);
        } else if (*qb) {
            table = cmd_qbound(s);
        } else {
            table = cmd_figure(s, fig_nmax->count() > 0);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (s.out.empty()) {
        write_csv(out, table);
        out.flush();
        return out ? exit_ok : exit_io;
    }
    std::ofstream f(s.out, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << s.out << " for writing\n";
        return exit_io;
    }
    write_csv(f, table);
    f.close();
    if (!f) {
        err << "error: write to " << s.out << " failed\n";
        return exit_io;
    }
    return exit_ok;
}

}  // namespace gegen::cli
