#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "coeffs.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "ratio.hpp"

namespace gegen {

struct FigureOptions {
    std::optional<double> gamma;  // figure 5 only
    std::optional<int> nmax;
};

namespace detail {

inline std::string tag(double v) { return fmt_num(v); }

inline double nan() { return std::numeric_limits<double>::quiet_NaN(); }

/// Ratio of explicit bound to the Zhao comparator for each rho, n = 1..nmax.
inline CsvTable comparator_figure(const std::vector<double>& lambdas, int nmax)
{
    const std::vector<double> rhos{1.05, 1.2, 1.5, 2.0};
    CsvTable t;
    t.header.push_back("n");
    for (double l : lambdas) {
        for (double r : rhos) {
            t.header.push_back("ratio_lambda" + tag(l) + "_rho" + tag(r));
        }
    }
    for (int n = 1; n <= nmax; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        for (double l : lambdas) {
            const GegenbauerParam p(l);
            const Comparator c = l == 0.5 ? Comparator::zhao_legendre : Comparator::zhao_gegenbauer;
            for (double r : rhos) {
                const AnalyticityWitness w(r, 1.0);
                row.push_back(std::pow(10.0, log10_coeff_bound(n, p, w, CoeffBoundKind::explicit_estimate) -
                                                 log10_comparator_bound(n, p, w, c)));
            }
        }
        t.add_row(std::move(row));
    }
    return t;
}

inline CsvTable qbound_figure(int nmax)
{
    CsvTable t;
    t.header.push_back("n");
    const std::vector<double> deltas{0.1, 1.0};
    for (double d : deltas) {
        for (const char* k : {"ours", "rokhlin", "exact"}) {
            t.header.push_back(std::string(k) + "_delta" + tag(d));
            t.header.push_back(std::string("log10_") + k + "_delta" + tag(d));
        }
    }
    for (int n = 1; n <= nmax; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        for (double d : deltas) {
            const double vals[3] = {q_bound(n, d, QBoundKind::ours), q_bound(n, d, QBoundKind::rokhlin),
                                    std::abs(cauchy_q(n, GegenbauerParam(0.5), cplx(1.0 + d)))};
            for (double v : vals) {
                row.push_back(v);
                row.push_back(std::log10(v));
            }
        }
        t.add_row(std::move(row));
    }
    return t;
}

inline CsvTable normalized_ratio_figure(const std::vector<std::pair<std::string, ModelFunction>>& fs,
                                        int nmax, bool divide_by_g)
{
    CsvTable t;
    t.header.push_back("n");
    std::vector<RatioReport> reps;
    for (const auto& [name, f] : fs) {
        t.header.push_back(name);
        reps.push_back(gamma_series(f, nmax));
    }
    for (int n = 1; n <= nmax; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const cplx g = reps[i].gamma_values[n];
            double scale = std::sqrt(n * std::numbers::pi);
            if (divide_by_g) {
                scale *= g_factor(*fs[i].second.singularity()).real();
            }
            row.push_back(RatioReport::masked(g) ? nan() : g.real() / scale);
        }
        t.add_row(std::move(row));
    }
    return t;
}

inline constexpr double diagonal_rho = 3.6;

inline CsvTable diagonal_figure(const std::vector<double>& gammas, int nmax)
{
    const ModelFunction f = ModelFunction::pole(2.0);
    const AnalyticityWitness w = make_witness(f, diagonal_rho);
    CsvTable t;
    t.header.push_back("N");
    const bool single = gammas.size() == 1;
    for (double g : gammas) {
        const std::string suf = single ? "" : "_gamma" + tag(g);
        t.header.push_back("log10_bound" + suf);
        t.header.push_back("log10_measured_error" + suf);
    }
    for (int N = 8; N <= nmax; ++N) {
        std::vector<double> row{static_cast<double>(N)};
        for (double g : gammas) {
            row.push_back(log10_truncation_bound(N, GegenbauerParam(1.0), w, TruncDiagonal{g}));
            const double e = measured_truncation_error(f, N, GegenbauerParam(g * N));
            row.push_back(e >= 1e-12 ? std::log10(e) : nan());
        }
        t.add_row(std::move(row));
    }
    return t;
}

}  // namespace detail

/// Data behind figures 1-6.
inline CsvTable figure(int id, const FigureOptions& opt = {})
{
    switch (id) {
    case 1:
        return detail::comparator_figure({0.5, 3.5}, opt.nmax.value_or(50));
    case 2:
        return detail::comparator_figure({5.5, 9.5}, opt.nmax.value_or(50));
    case 3:
        return detail::qbound_figure(opt.nmax.value_or(50));
    case 4: {
        std::vector<std::pair<std::string, ModelFunction>> fs;
        for (double b : {1.2, 2.0, 5.0}) {
            fs.emplace_back("log_b" + detail::tag(b), ModelFunction::log_outside(b));
        }
        for (double b : {1.2, 2.0, 5.0}) {
            fs.emplace_back("alg_b" + detail::tag(b), ModelFunction::algebraic_outside(b, 2.0 / 3.0));
        }
        return detail::normalized_ratio_figure(fs, opt.nmax.value_or(100), true);
    }
    case 5: {
        if (opt.gamma && !(*opt.gamma > 0.0)) {
            throw DomainError("figure 5: need gamma > 0");
        }
        const std::vector<double> gs =
            opt.gamma ? std::vector<double>{*opt.gamma} : std::vector<double>{0.25, 0.125};
        return detail::diagonal_figure(gs, opt.nmax.value_or(80));
    }
    case 6: {
        std::vector<std::pair<std::string, ModelFunction>> fs;
        fs.emplace_back("log_abs_x0.25", ModelFunction::log_interior(0.25));
        fs.emplace_back("sqrt_abs_x0.25", ModelFunction::algebraic_interior(0.25, 0.5));
        return detail::normalized_ratio_figure(fs, opt.nmax.value_or(50), false);
    }
    default:
        throw DomainError("figure: id must be 1..6");
    }
}

}  // namespace gegen
