// Acceptance gate: nine numbered criteria covering the golden constants, the
// spectral form, the power tables, the simulated likelihood-ratio operating
// characteristics, the worked likelihood example, oracle equivalence, the
// dice-set combinatorics, and the tail-monotonicity apparatus.
//
// Each criterion prints exactly one [PASS]/[FAIL] line with its elapsed time.
// Run with no arguments for all nine, or pass criterion numbers to run a
// subset. Exit status is zero iff every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "craps/craps.hpp"

using namespace craps;

namespace {

// ---------------------------------------------------------------------------
// Tiny check harness
// ---------------------------------------------------------------------------

struct Checker {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }

    // |actual - want| <= tol, reported with context on failure.
    void close(double actual, double want, double tol, const std::string& label) {
        if (!(std::fabs(actual - want) <= tol)) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: got %.10g want %.10g (tol %.3g)",
                          label.c_str(), actual, want, tol);
            failures.push_back(buf);
        }
    }

    // |actual - want| <= rel * |want|
    void close_rel(double actual, double want, double rel, const std::string& label) {
        close(actual, want, rel * std::fabs(want), label);
    }

    void note(const std::string& s) { notes.push_back(s); }
};

std::string paren(double v, int prec = 7) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

// ---------------------------------------------------------------------------
// Reference data
// ---------------------------------------------------------------------------

// Power-table reference values, laid out as [panel][n index][eta index] with
// n in {100, 200, 500, 1000}.
// Table 1: eta = rolls per seven in {6.125, 6.25, 6.5, 7, 8};
// panels: mean-length SS, mean-length WS, proportion-of-sevens.
const double kTable1[3][4][5] = {
    {{0.0823, 0.1258, 0.2452, 0.5470, 0.9209},
     {0.0967, 0.1658, 0.3618, 0.7701, 0.9936},
     {0.1308, 0.2666, 0.6230, 0.9757, 1.0000},
     {0.1782, 0.4086, 0.8565, 0.9996, 1.0000}},
    {{0.0839, 0.1302, 0.2576, 0.5742, 0.9358},
     {0.0995, 0.1735, 0.3835, 0.7995, 0.9960},
     {0.1364, 0.2833, 0.6580, 0.9836, 1.0000},
     {0.1881, 0.4368, 0.8848, 0.9998, 1.0000}},
    {{0.0762, 0.1117, 0.2138, 0.5192, 0.9563},
     {0.0907, 0.1517, 0.3380, 0.7864, 0.9993},
     {0.1252, 0.2560, 0.6280, 0.9885, 1.0000},
     {0.1740, 0.4073, 0.8781, 1.0000, 1.0000}}};

// Tables 2 and 3: eta = expected gain in {0, 0.025, 0.05, 0.1, 0.2};
// panels: mean-length SS/WS, pass-line SS/WS. Table 2 tests the simple
// no-control null, Table 3 the composite unfavorable-gain null.
const double kTable2[4][4][5] = {
    {{0.0661, 0.1034, 0.1532, 0.2899, 0.6358},
     {0.0726, 0.1296, 0.2106, 0.4326, 0.8530},
     {0.0869, 0.1945, 0.3556, 0.7231, 0.9927},
     {0.1056, 0.2874, 0.5473, 0.9266, 1.0000}},
    {{0.0848, 0.1835, 0.3291, 0.6715, 0.9816},
     {0.1009, 0.2620, 0.4946, 0.8827, 0.9997},
     {0.1391, 0.4554, 0.7987, 0.9962, 1.0000},
     {0.1927, 0.6844, 0.9637, 1.0000, 1.0000}},
    {{0.0779, 0.1542, 0.2698, 0.5843, 0.9750},
     {0.0924, 0.2240, 0.4265, 0.8379, 0.9997},
     {0.1269, 0.4038, 0.7467, 0.9941, 1.0000},
     {0.1756, 0.6320, 0.9475, 1.0000, 1.0000}},
    {{0.0780, 0.1560, 0.2764, 0.6099, 0.9869},
     {0.0926, 0.2271, 0.4376, 0.8598, 0.9999},
     {0.1274, 0.4101, 0.7607, 0.9962, 1.0000},
     {0.1764, 0.6406, 0.9539, 1.0000, 1.0000}}};

const double kTable3[4][4][5] = {
    {{0.0500, 0.0810, 0.1239, 0.2480, 0.5916},
     {0.0500, 0.0948, 0.1626, 0.3664, 0.8141},
     {0.0500, 0.1271, 0.2603, 0.6301, 0.9863},
     {0.0500, 0.1719, 0.3982, 0.8624, 0.9999}},
    {{0.0500, 0.1225, 0.2445, 0.5852, 0.9712},
     {0.0500, 0.1609, 0.3623, 0.8101, 0.9992},
     {0.0500, 0.2580, 0.6261, 0.9859, 1.0000},
     {0.0500, 0.3954, 0.8602, 0.9999, 1.0000}},
    {{0.0500, 0.1066, 0.2001, 0.4926, 0.9572},
     {0.0500, 0.1402, 0.3059, 0.7449, 0.9991},
     {0.0500, 0.2266, 0.5614, 0.9774, 1.0000},
     {0.0500, 0.3523, 0.8161, 0.9998, 1.0000}},
    {{0.0500, 0.1074, 0.2044, 0.5158, 0.9754},
     {0.0500, 0.1417, 0.3136, 0.7706, 0.9997},
     {0.0500, 0.2297, 0.5750, 0.9835, 1.0000},
     {0.0500, 0.3577, 0.8289, 0.9999, 1.0000}}};

// Simulated LR-test reference (n = 500, alpha = 0.05, 10,000 replications):
// gain eta in {0, 0.025, 0.05, 0.1, 0.2} maps to the thetas below; lbar is
// the companion normal-approximation column, lr the simulated power with its
// standard error.
struct LrRow {
    double eta, theta, lbar, lr, se;
};

const LrRow kTable4Ss[5] = {
    {0.000, 0.0445299, 0.0869, 0.0441, 0.0021},
    {0.025, 0.1225830, 0.1945, 0.1156, 0.0032},
    {0.050, 0.1998030, 0.3556, 0.2450, 0.0043},
    {0.100, 0.3518320, 0.7231, 0.6118, 0.0049},
    {0.200, 0.6468240, 0.9927, 0.9868, 0.0011}};

const LrRow kTable4Ws[5] = {
    {0.000, 0.0313088, 0.1391, 0.0733, 0.0026},
    {0.025, 0.0859974, 0.4554, 0.3206, 0.0047},
    {0.050, 0.1398350, 0.7987, 0.6855, 0.0046},
    {0.100, 0.2449310, 0.9962, 0.9932, 0.0008},
    {0.200, 0.4446420, 1.0000, 1.0000, 0.0000}};

// Worked likelihood example: 500 observed hand lengths, counts for 2..43.
const std::vector<long long> kExampleCounts = {
    45, 64, 41, 43, 30, 35, 38, 31, 18, 22, 22, 11, 11, 15, 12, 10, 7, 7, 7, 2, 5,
    3,  1,  2,  2,  2,  2,  1,  1,  0,  2,  0,  2,  0,  2,  1,  1, 1, 0, 0, 0, 1};

// Fair-dice spectral constants (18 significant digits).
const double kEigen0[4] = {0.862473751659322030, 0.741708271459795977,
                           0.709206775794379015, 0.186611201086502979};
const double kCoeff0[4] = {1.211844812464518572, -0.006375542263784777,
                           -0.004042671248651503, -0.201426598952082292};

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

void criterion1(Checker& c) {
    for (Model m : {Model::ss, Model::ws}) {
        const std::string tag = model_name(m);
        c.close_rel(mean_hand_length(m, 0.0), 1671.0 / 196, 1e-6, tag + " E0[L]");
        c.close_rel(var_hand_length(m, 0.0), 1768701.0 / 38416, 1e-6, tag + " Var0(L)");
    }
    c.close_rel(mean_hand_length(Model::ss, 1.0), 296.0 / 27, 1e-6, "ss E1[L]");
    c.close_rel(mean_hand_length(Model::ws, 1.0), 306.0 / 13, 1e-6, "ws E1[L]");
    c.close_rel(var_hand_length(Model::ss, 1.0), 63880.0 / 729, 1e-6, "ss Var1(L)");
    c.close_rel(var_hand_length(Model::ws, 1.0), 79506.0 / 169, 1e-6, "ws Var1(L)");

    c.close(break_even_theta(Model::ss), 0.0445299, 1e-5, "ss theta0");
    c.close(break_even_theta(Model::ws), 0.0313088, 1e-5, "ws theta0");
    c.close(rho1(Model::ss, break_even_theta(Model::ss)), 6.06755, 1e-4,
            "ss rho1 break-even");
    c.close(rho1(Model::ws, break_even_theta(Model::ws)), 6.12790, 1e-4,
            "ws rho1 break-even");

    // rational mode: gamma(0) and delta(0) from the exact no-control rates
    const mpq_class gamma_ss = mpq_class(144 * 10 * 44) / (4 * 8 * 28 * 28);
    const mpq_class gamma_ws = mpq_class(27 * 5 * 11) / (3 * 196);
    c.expect(gamma_ss == mpq_class(495, 196), "ss gamma(0) != 495/196 exactly");
    c.expect(gamma_ws == mpq_class(495, 196), "ws gamma(0) != 495/196 exactly");
    mpq_class delta_ss(24, 4), delta_ws(18, 3);
    delta_ss.canonicalize();
    delta_ws.canonicalize();
    c.expect(delta_ss == 6, "ss delta(0) != 6 exactly");
    c.expect(delta_ws == 6, "ws delta(0) != 6 exactly");
    // and the floating-point implementations sit on the same values
    for (Model m : {Model::ss, Model::ws}) {
        const std::string tag = model_name(m);
        c.close_rel(gamma_rate(m, 0.0), 495.0 / 196, 1e-12, tag + " gamma(0)");
        c.close_rel(rho1(m, 0.0), 6.0, 1e-12, tag + " delta(0)");
    }
}

void criterion2(Checker& c) {
    for (Model m : {Model::ss, Model::ws}) {
        const std::string tag = model_name(m);
        const auto closed = eigenvalues_closed_form(m, 0.0);
        const auto quart = eigenvalues_quartic(m, 0.0);
        const auto coeff = mixture_coefficients(m, closed, 0.0);
        const auto coeff_q = mixture_coefficients(m, quart, 0.0);
        for (int i = 0; i < 4; ++i) {
            const std::string idx = std::to_string(i + 1);
            c.close_rel(closed[i], kEigen0[i], 1e-12, tag + " e" + idx + " closed");
            c.close_rel(coeff[i], kCoeff0[i], 1e-12, tag + " c" + idx + " closed");
            c.close_rel(quart[i], kEigen0[i], 1e-10, tag + " e" + idx + " quartic");
            c.close_rel(coeff_q[i], kCoeff0[i], 1e-10, tag + " c" + idx + " quartic");
        }
    }
}

void criterion3(Checker& c) {
    const int x = 154;
    c.close_rel(1.0 / hand_tail(Model::ss, 0.0, x), 5.590e9, 1e-3, "ss 1/t(154, 0)");
    c.close_rel(1.0 / hand_tail(Model::ws, 0.0, x), 5.590e9, 1e-3, "ws 1/t(154, 0)");
    c.close_rel(1.0 / hand_tail(Model::ss, 4.0 / 7, x), 1.488e8, 1e-3, "ss 1/t(154, 4/7)");
    c.close_rel(1.0 / hand_tail(Model::ss, 1.0, x), 1.131e7, 1e-3, "ss 1/t(154, 1)");
    c.close_rel(1.0 / hand_tail(Model::ws, 3.0 / 14, x), 1.679e8, 1e-3, "ws 1/t(154, 3/14)");
    c.close_rel(1.0 / hand_tail(Model::ws, 3.0 / 8, x), 1.307e7, 1e-3, "ws 1/t(154, 3/8)");
}

void criterion4(Checker& c) {
    int logged = 0;
    auto sweep = [&](const PowerTable& t, const double ref[][4][5]) {
        for (std::size_t p = 0; p < t.panels.size(); ++p)
            for (std::size_t i = 0; i < t.etas.size(); ++i)
                for (std::size_t j = 0; j < t.ns.size(); ++j) {
                    const double got = t.panels[p][i][j];
                    const double want = ref[p][j][i];
                    const double diff = std::fabs(got - want);
                    if (diff <= 1e-4 + 1e-12) continue;
                    char buf[160];
                    std::snprintf(buf, sizeof buf,
                                  "table %d %s eta=%g n=%g: got %.4f want %.4f",
                                  t.id, t.panel_names[p].c_str(), t.etas[i], t.ns[j],
                                  got, want);
                    if (diff <= 1e-3) {
                        ++logged;
                        c.note(std::string("logged mismatch: ") + buf);
                    } else {
                        c.expect(false, buf);
                    }
                }
    };
    sweep(emit_power_table(1), kTable1);
    sweep(emit_power_table(2), kTable2);
    sweep(emit_power_table(3), kTable3);
    c.expect(logged <= 2, "more than 2 cells beyond 1e-4 (logged " +
                              std::to_string(logged) + ")");
}

void criterion5(Checker& c) {
    const long long reps = 10000, n = 500;
    const std::uint64_t seed = 1;
    for (Model m : {Model::ss, Model::ws}) {
        const LrRow* rows = (m == Model::ss) ? kTable4Ss : kTable4Ws;
        const std::string tag = model_name(m);
        for (int r = 0; r < 5; ++r) {
            const LrRow& row = rows[r];
            const std::string label = tag + " eta=" + paren(row.eta, 3);
            const double theta = rho2_inv(m, row.eta);
            c.close(theta, row.theta, 1e-5, label + " theta");
            // companion normal-approximation column
            c.close(power_lbar(m, theta, double(n), 0.05, NullKind::simple).power,
                    row.lbar, 1e-4, label + " lbar power");
            // the reference and this run are independent Monte Carlo
            // estimates, so gate their difference at 3 combined standard
            // errors; the floor covers rows whose s.e. rounds to zero
            const LrPowerResult sim = simulate_lr_power(m, theta, n, reps, seed);
            const double sd = std::sqrt(row.se * row.se + sim.std_error * sim.std_error);
            const double tol = std::max(3.0 * sd, 2e-4);
            c.close(sim.power, row.lr, tol, label + " lr power");
            c.note(label + ": lr " + paren(sim.power, 4) + " (ref " +
                   paren(row.lr, 4) + " +- " + paren(row.se, 2) + ")");
        }
    }
}

void criterion6(Checker& c) {
    const HandSample s = HandSample::from_counts_by_length(kExampleCounts, 2);
    c.expect(s.n == 500, "example sample size != 500");
    const LrOutcome out = lr_test(Model::ss, s, 0.05);
    c.close(out.theta_hat, 0.231991, 1e-3, "theta hat");
    c.close(out.statistic, 2.12142, 1e-3, "LR statistic");
    c.expect(!out.reject, "example should not reject at alpha = 0.05");
}

void criterion7(Checker& c) {
    // spectral tail vs matrix-power oracle
    double worst = 0.0;
    for (Model m : {Model::ss, Model::ws})
        for (int k = 0; k <= 20; ++k) {
            const double theta = k / 20.0;
            const GeometricMixture gm = geometric_mixture(m, theta);
            for (int x = 2; x <= 300; ++x) {
                const double diff =
                    std::fabs(gm.tail(x) - hand_tail_oracle(m, theta, x));
                if (diff > worst) worst = diff;
            }
        }
    c.expect(worst <= 1e-9,
             "tail vs oracle worst diff " + paren(worst) + " > 1e-9");
    c.note("tail vs oracle worst diff " + paren(worst, 3));

    // samplers vs analytic pmfs at one million draws
    const int draws = 1000000;
    std::uint64_t seed = 100;
    for (double theta : {0.3, 0.7}) {
        struct Job {
            Model m;
            int point;
            const char* name;
        };
        const Job jobs[5] = {{Model::ss, 0, "ss come-out"},
                             {Model::ss, 8, "ss point 8"},
                             {Model::ss, 5, "ss point 5"},
                             {Model::ws, 0, "ws come-out"},
                             {Model::ws, 10, "ws point 10"}};
        for (const Job& job : jobs) {
            RngStream rng(seed++);
            std::array<long, 13> freq{};
            for (int i = 0; i < draws; ++i)
                ++freq[sample_total(job.m, job.point, theta, rng)];
            const TotalPmf pmf = (job.point == 0)
                                     ? comeout_pmf(job.m, theta)
                                     : point_pmf(job.m, job.point, theta);
            for (int t = 2; t <= 12; ++t) {
                const double p = pmf(t);
                const double se = std::sqrt(p * (1.0 - p) / draws);
                const double diff = std::fabs(freq[t] / double(draws) - p);
                char buf[120];
                std::snprintf(buf, sizeof buf,
                              "%s theta=%g total=%d: |diff| %.3g > 5 se %.3g",
                              job.name, theta, t, diff, 5.0 * se);
                c.expect(diff <= 5.0 * se + 1e-12, buf);
            }
        }
    }
}

void criterion8(Checker& c) {
    c.expect(enumerate_dice_sets().size() == 576, "|D| != 576");

    const auto wong_orbits = orbit_partition(GroupKind::wong);
    c.expect(wong_orbits.size() == 45, "wong orbit count != 45");
    int size8 = 0, size16 = 0;
    for (const auto& o : wong_orbits) {
        if (o.size() == 8) ++size8;
        else if (o.size() == 16) ++size16;
        else c.expect(false, "wong orbit of size " + std::to_string(o.size()));
    }
    c.expect(size8 == 18 && size16 == 27,
             "wong orbit profile " + std::to_string(size8) + "x8 + " +
                 std::to_string(size16) + "x16 != 18x8 + 27x16");

    const auto axis_orbits = orbit_partition(GroupKind::axis);
    c.expect(axis_orbits.size() == 6, "axis orbit count != 6");
    int size64 = 0, size128 = 0;
    for (const auto& o : axis_orbits) {
        if (o.size() == 64) ++size64;
        else if (o.size() == 128) ++size128;
        else c.expect(false, "axis orbit of size " + std::to_string(o.size()));
    }
    c.expect(size64 == 3 && size128 == 3, "axis orbit profile != 3x64 + 3x128");

    const BurnsideSummary bw = burnside(GroupKind::wong);
    c.expect(bw.order == 16, "wong group order != 16");
    c.expect(bw.fixed_point_sum == 720, "wong fixed-point sum != 720");
    c.expect(bw.orbit_count == 45, "wong Burnside count != 45");

    const BurnsideSummary ba = burnside(GroupKind::axis);
    c.expect(ba.order == 128, "axis group order != 128");
    c.expect(ba.fixed_point_sum == 768, "axis fixed-point sum != 768");
    c.expect(ba.orbit_count == 6, "axis Burnside count != 6");
}

void criterion9(Checker& c) {
    const int grid = 10000;

    const TailMonotonicityReport ss = verify_tail_monotonicity(Model::ss, 75, grid);
    c.expect(ss.exceptions.empty(), "ss has exceptions up to x = 75");
    c.expect(ss.all_verified, "ss not fully verified");

    const TailMonotonicityReport ws = verify_tail_monotonicity(Model::ws, 75, grid);
    c.expect(ws.exceptions == std::vector<int>{3, 6, 7, 8, 9},
             "ws exception set is not {3, 6, 7, 8, 9}");
    c.expect(ws.all_verified, "ws exceptions not all resolved");

    // grid bounds against the reference floors/ceilings; the c2' e2 minimum
    // is exactly zero (attained at theta = 1), so it gets a small numerical
    // allowance for the finite-difference derivative
    const LargeXBounds bss = large_x_bounds(Model::ss, grid);
    const double ss_min_floor[4] = {0.0394, -0.0966, -0.0000464, -0.0000793};
    c.expect(bss.min_c_eprime[0] >= ss_min_floor[0], "ss min c1 e1' below 0.0394");
    c.expect(bss.min_cprime_e[0] >= ss_min_floor[1], "ss min c1' e1 below -0.0966");
    c.expect(bss.min_c_eprime[1] >= ss_min_floor[2], "ss min c2 e2' below -4.64e-5");
    c.expect(bss.min_cprime_e[1] >= -1e-7, "ss min c2' e2 below 0");
    c.expect(bss.min_c_eprime[2] >= ss_min_floor[3], "ss min c3 e3' below -7.93e-5");
    c.expect(bss.min_cprime_e[2] >= -0.00413, "ss min c3' e3 below -0.00413");
    c.expect(bss.min_c_eprime[3] >= 0.0142, "ss min c4 e4' below 0.0142");
    c.expect(bss.min_cprime_e[3] >= 0.00437, "ss min c4' e4 below 0.00437");
    c.expect(bss.max_ratio[0] <= 0.860, "ss max e2/e1 above 0.860");
    c.expect(bss.max_ratio[1] <= 0.823, "ss max e3/e1 above 0.823");
    c.expect(bss.min_ratio[2] >= 0.0754, "ss min e4/e1 below 0.0754");

    const LargeXBounds bws = large_x_bounds(Model::ws, grid);
    c.expect(bws.min_c_eprime[0] >= 0.0967, "ws min c1 e1' below 0.0967");
    c.expect(bws.min_cprime_e[0] >= -0.141, "ws min c1' e1 below -0.141");
    c.expect(bws.min_c_eprime[1] >= -0.000575, "ws min c2 e2' below -0.000575");
    c.expect(bws.min_cprime_e[1] >= -1e-7, "ws min c2' e2 below 0");
    c.expect(bws.min_c_eprime[2] >= -0.000489, "ws min c3 e3' below -0.000489");
    c.expect(bws.min_cprime_e[2] >= -0.00297, "ws min c3' e3 below -0.00297");
    c.expect(bws.min_c_eprime[3] >= -0.0104, "ws min c4 e4' below -0.0104");
    c.expect(bws.min_cprime_e[3] >= 0.0281, "ws min c4' e4 below 0.0281");
    c.expect(bws.max_ratio[0] <= 0.873, "ws max e2/e1 above 0.873");
    c.expect(bws.max_ratio[1] <= 0.843, "ws max e3/e1 above 0.843");
    c.expect(bws.min_ratio[2] >= 0.216, "ws min e4/e1 below 0.216");

    // the bounds settle every x beyond the small-x sweeps
    const LargeXSufficiency sss = check_large_x_sufficiency(Model::ss, bss);
    c.expect(sss.holds && sss.x_start == 4, "ss large-x bound fails from x = 4");
    const LargeXSufficiency sws = check_large_x_sufficiency(Model::ws, bws);
    c.expect(sws.holds && sws.x_start == 3, "ws large-x bound fails from x = 3");
}

struct Criterion {
    int id;
    const char* summary;
    double budget_seconds;
    std::function<void(Checker&)> run;
};

const Criterion kCriteria[] = {
    {1, "golden constants and break-even points", 1.0, criterion1},
    {2, "fair-dice spectral constants on both eigenvalue paths", 1.0, criterion2},
    {3, "tail reciprocals 1/t(154, .)", 1.0, criterion3},
    {4, "power tables 1-3 cell-by-cell", 10.0, criterion4},
    {5, "simulated LR power table (10,000 replications per row)", 7200.0, criterion5},
    {6, "worked likelihood-ratio example", 1.0, criterion6},
    {7, "tail oracle equivalence and sampler checks", 300.0, criterion7},
    {8, "dice-set orbits and Burnside counts", 1.0, criterion8},
    {9, "tail-monotonicity apparatus", 600.0, criterion9},
};

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long v = std::strtol(argv[i], &end, 10);
        if (end == argv[i] || *end != '\0' || v < 1 || v > 9) {
            std::fprintf(stderr, "usage: %s [criterion numbers in 1..9]\n", argv[0]);
            return 2;
        }
        selected.insert(int(v));
    }

    bool all_pass = true;
    for (const Criterion& cr : kCriteria) {
        if (!selected.empty() && !selected.count(cr.id)) continue;
        Checker ch;
        const auto t0 = std::chrono::steady_clock::now();
        cr.run(ch);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.budget_seconds) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "runtime %.2fs exceeds budget %.0fs",
                          secs, cr.budget_seconds);
            ch.failures.push_back(buf);
        }
        const bool pass = ch.failures.empty();
        all_pass = all_pass && pass;
        std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL",
                    cr.id, cr.summary, secs);
        for (const auto& n : ch.notes) std::printf("        note: %s\n", n.c_str());
        for (const auto& f : ch.failures) std::printf("        fail: %s\n", f.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
