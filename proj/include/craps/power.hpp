#pragma once

// Normal-approximation power functions for the three analytic tests of the
// no-control hypothesis, and emitters for the three standard power tables.
//
// The tests observe, respectively: the sample proportion of sevens among
// individual rolls, the sample proportion of pass-line wins among resolved
// decisions, and the sample mean of hand lengths. Simple nulls center the
// critical region at the no-control parameter; composite nulls center at the
// boundary of the unfavorable region (break-even for the mean-length test,
// zero gain for the pass-line test). Sample sizes need not be integral: the
// table captions scale a common hand count into rolls (factor eta) or
// pass-line decisions (factor gamma).

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "craps/dice_models.hpp"
#include "craps/hand_chain.hpp"
#include "craps/normal.hpp"
#include "craps/reparam.hpp"

namespace craps {

enum class TestKind { prop7, passline, lbar };
enum class NullKind { simple, composite };
enum class Parameterization { theta, rho1, rho2 };

struct PowerQuery {
    TestKind test = TestKind::lbar;
    Model model = Model::ss;
    NullKind null_kind = NullKind::simple;
    Parameterization param = Parameterization::theta;
    double alternative = 0.0;
    double n = 0.0;      // sample size, non-integral allowed
    double alpha = 0.05;
};

struct PowerResult {
    double power = 0.0;
    const char* method = "normal_approx";
};

namespace power_detail {

inline double clamp01(double p) { return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p); }

} // namespace power_detail

// Power of the one-sided test that rejects for a low proportion of sevens.
// eta is the expected rolls per seven under the alternative, n the number of
// rolls, and eta0 the null value (6 for fair dice).
inline PowerResult power_prop7(double eta, double n, double alpha, double eta0 = 6.0) {
    const double z = normal_quantile(1.0 - alpha);
    const double p0 = 1.0 / eta0, p1 = 1.0 / eta;
    const double num = std::sqrt(n) * (p0 - p1) - z * std::sqrt(p0 * (1.0 - p0));
    const double den = std::sqrt(p1 * (1.0 - p1));
    return {power_detail::clamp01(normal_cdf(num / den))};
}

// Power of the one-sided test that rejects for a high proportion of pass-line
// wins. eta is the expected gain per decision under the alternative, n the
// number of decisions, and null_eta0 the centering gain: -7/495 for the
// simple no-control null, 0 for the composite break-even null.
inline PowerResult power_passline(double eta, double n, double alpha, double null_eta0) {
    const double z = normal_quantile(1.0 - alpha);
    const double c = null_eta0;
    const double num = std::sqrt(n) * (c - eta) + z * std::sqrt(1.0 - c * c);
    const double den = std::sqrt(1.0 - eta * eta);
    return {power_detail::clamp01(1.0 - normal_cdf(num / den))};
}

// Power of the one-sided test that rejects for a high mean hand length over
// n hands, at the native control parameter theta. The simple null centers at
// theta = 0; the composite null centers at the model's break-even theta (the
// upper boundary of the unfavorable region, where the power is smallest).
inline PowerResult power_lbar(Model model, double theta, double n, double alpha,
                              NullKind null_kind) {
    const double z = normal_quantile(1.0 - alpha);
    const double theta_c =
        (null_kind == NullKind::simple) ? 0.0 : break_even_theta(model);
    const double mean_c = mean_hand_length(model, theta_c);
    const double sd_c = std::sqrt(var_hand_length(model, theta_c));
    const double mean_a = mean_hand_length(model, theta);
    const double sd_a = std::sqrt(var_hand_length(model, theta));
    const double num = std::sqrt(n) * (mean_c - mean_a) + z * sd_c;
    return {power_detail::clamp01(1.0 - normal_cdf(num / sd_a))};
}

// Resolve a PowerQuery's alternative to the native theta of its model.
inline double query_theta(const PowerQuery& q) {
    switch (q.param) {
        case Parameterization::theta: return q.alternative;
        case Parameterization::rho1: return rho1_inv(q.model, q.alternative);
        case Parameterization::rho2: return rho2_inv(q.model, q.alternative);
    }
    throw std::logic_error("query_theta: bad parameterization");
}

inline PowerResult evaluate_power(const PowerQuery& q) {
    switch (q.test) {
        case TestKind::prop7:
            return power_prop7(q.alternative, q.n, q.alpha);
        case TestKind::passline: {
            const double c = (q.null_kind == NullKind::simple) ? kGainNoControl : 0.0;
            return power_passline(q.alternative, q.n, q.alpha, c);
        }
        case TestKind::lbar:
            return power_lbar(q.model, query_theta(q), q.n, q.alpha, q.null_kind);
    }
    throw std::logic_error("evaluate_power: bad test kind");
}

// ---------------------------------------------------------------------------
// Table emitters
// ---------------------------------------------------------------------------

struct PowerTable {
    int id = 0;
    std::string title;
    std::string row_label;                       // name of the eta column
    std::vector<double> etas;                    // row values
    std::vector<double> ns;                      // column values (hand counts)
    std::vector<std::string> panel_names;
    // panels[p][i][j]: panel p, eta i, n j
    std::vector<std::vector<std::vector<double>>> panels;
};

// Table 1: power against eta = expected rolls per seven, H0: eta = 6.
// Panels: mean-length test under each model, then the proportion-of-sevens
// test with roll count n*eta.
inline PowerTable emit_power_table_1(double alpha = 0.05) {
    PowerTable t;
    t.id = 1;
    t.title = "Power of the mean-length and proportion-of-sevens tests of eta = 6";
    t.row_label = "eta";
    t.etas = {6.125, 6.25, 6.5, 7.0, 8.0};
    t.ns = {100.0, 200.0, 500.0, 1000.0};
    t.panel_names = {"lbar SS", "lbar WS", "prop7"};
    t.panels.assign(3, {});
    for (int p = 0; p < 3; ++p) {
        for (double eta : t.etas) {
            std::vector<double> row;
            for (double n : t.ns) {
                if (p < 2) {
                    const Model m = (p == 0) ? Model::ss : Model::ws;
                    row.push_back(
                        power_lbar(m, rho1_inv(m, eta), n, alpha, NullKind::simple).power);
                } else {
                    row.push_back(power_prop7(eta, n * eta, alpha).power);
                }
            }
            t.panels[p].push_back(std::move(row));
        }
    }
    return t;
}

namespace power_detail {

// Shared grid for the gain-parameterized tables (2: simple, 3: composite).
inline PowerTable gain_table(int id, NullKind null_kind, double alpha) {
    PowerTable t;
    t.id = id;
    t.title = (null_kind == NullKind::simple)
                  ? "Power of the mean-length and pass-line tests of eta = -7/495"
                  : "Power of the mean-length and pass-line tests of eta <= 0";
    t.row_label = "eta";
    t.etas = {0.0, 0.025, 0.05, 0.1, 0.2};
    t.ns = {100.0, 200.0, 500.0, 1000.0};
    t.panel_names = {"lbar SS", "lbar WS", "passline SS", "passline WS"};
    t.panels.assign(4, {});
    const double c = (null_kind == NullKind::simple) ? kGainNoControl : 0.0;
    for (int p = 0; p < 4; ++p) {
        const Model m = (p % 2 == 0) ? Model::ss : Model::ws;
        for (double eta : t.etas) {
            const double theta = rho2_inv(m, eta);
            std::vector<double> row;
            for (double n : t.ns) {
                if (p < 2) {
                    row.push_back(power_lbar(m, theta, n, alpha, null_kind).power);
                } else {
                    const double decisions = n * gamma_rate(m, theta);
                    row.push_back(power_passline(eta, decisions, alpha, c).power);
                }
            }
            t.panels[p].push_back(std::move(row));
        }
    }
    return t;
}

} // namespace power_detail

inline PowerTable emit_power_table(int table_id, double alpha = 0.05) {
    switch (table_id) {
        case 1: return emit_power_table_1(alpha);
        case 2: return power_detail::gain_table(2, NullKind::simple, alpha);
        case 3: return power_detail::gain_table(3, NullKind::composite, alpha);
        default: throw std::invalid_argument("emit_power_table: table_id must be 1, 2, or 3");
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace power_detail {

inline std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline std::string trimmed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace power_detail

inline std::string render_table_text(const PowerTable& t) {
    using power_detail::fixed4;
    using power_detail::trimmed;
    std::string out = t.title + "\n";
    for (std::size_t p = 0; p < t.panels.size(); ++p) {
        out += "\n[" + t.panel_names[p] + "]\n";
        out += "  " + t.row_label;
        for (double n : t.ns) out += "\tn=" + trimmed(n);
        out += "\n";
        for (std::size_t i = 0; i < t.etas.size(); ++i) {
            out += "  " + trimmed(t.etas[i]);
            for (std::size_t j = 0; j < t.ns.size(); ++j)
                out += "\t" + fixed4(t.panels[p][i][j]);
            out += "\n";
        }
    }
    return out;
}

inline std::string render_table_csv(const PowerTable& t) {
    using power_detail::fixed4;
    using power_detail::trimmed;
    std::string out = "panel," + t.row_label;
    for (double n : t.ns) out += ",n=" + trimmed(n);
    out += "\n";
    for (std::size_t p = 0; p < t.panels.size(); ++p) {
        for (std::size_t i = 0; i < t.etas.size(); ++i) {
            out += t.panel_names[p] + "," + trimmed(t.etas[i]);
            for (std::size_t j = 0; j < t.ns.size(); ++j)
                out += "," + fixed4(t.panels[p][i][j]);
            out += "\n";
        }
    }
    return out;
}

} // namespace craps
