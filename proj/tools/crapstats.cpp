// crapstats: command-line front end for the dice-control statistics library.
//
// Subcommands:
//   model     control-model summary: parameters on all scales, gain, moments
//   dist      hand-length distribution: eigenvalues, pmf/tail table, 1/t(x)
//   power     normal-approximation power: one query or a standard table
//   simulate  draw hand lengths and emit a sample file
//   lrtest    likelihood-ratio test of no control on a sample file
//   lrpower   simulated power of the likelihood-ratio test
//   verify    golden constants plus the tail-monotonicity apparatus
//
// The control level may be given natively (--theta) or on a common scale
// (--eta with --param recip7|gain); the two flags are mutually exclusive.
// Tables print with --precision decimals (default 4); JSON output carries
// full precision and sample JSON round-trips through the lrtest parser.
// Simulation commands take --seed (else the CRAPSTATS_SEED environment
// variable, else 0 with a warning). Errors go to standard error with a
// nonzero exit; data goes to standard output.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "craps/craps.hpp"

using namespace craps;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Shared option plumbing
// ---------------------------------------------------------------------------

struct CliConfig {
    std::string format = "text";  // text | csv | json
    int precision = 4;
    std::optional<std::uint64_t> seed;
};

struct ParamChoice {
    std::string model = "ss";
    std::optional<double> theta;
    std::optional<double> eta;
    std::string param;  // theta | recip7 | gain; defaults per flag used
};

Model parse_model(const std::string& name) {
    if (name == "ss") return Model::ss;
    if (name == "ws") return Model::ws;
    throw CLI::ValidationError("--model", "must be 'ss' or 'ws'");
}

// Register --model/--theta/--eta/--param on a subcommand. theta_required
// restricts to the native scale (used by simulate, whose samplers are
// defined in theta).
void add_param_flags(CLI::App* cmd, ParamChoice& pc, bool require_value = true) {
    cmd->add_option("--model", pc.model, "control model")
        ->check(CLI::IsMember({"ss", "ws"}))
        ->capture_default_str();
    auto* t = cmd->add_option("--theta", pc.theta, "native control level in [0,1]");
    auto* e = cmd->add_option("--eta", pc.eta,
                              "control level on the scale named by --param");
    cmd->add_option("--param", pc.param,
                    "scale of the supplied level: theta, recip7 (expected rolls "
                    "per seven), or gain (expected pass-line gain)")
        ->check(CLI::IsMember({"theta", "recip7", "gain"}));
    t->excludes(e);
    e->excludes(t);
    if (require_value) {
        cmd->callback([&pc, cmd]() {
            if (!pc.theta && !pc.eta)
                throw CLI::RequiredError(cmd->get_name() +
                                         " requires one of --theta/--eta");
        });
    }
}

// Resolve the flags to a native theta.
double resolve_theta(const ParamChoice& pc) {
    const Model m = parse_model(pc.model);
    if (pc.theta) {
        if (!pc.param.empty() && pc.param != "theta")
            throw std::invalid_argument("--theta is the native scale; use --eta with --param " +
                                        pc.param);
        require_theta(*pc.theta);
        return *pc.theta;
    }
    if (pc.param.empty() || pc.param == "theta")
        throw std::invalid_argument("--eta needs --param recip7 or --param gain");
    if (pc.param == "recip7") return rho1_inv(m, *pc.eta);
    return rho2_inv(m, *pc.eta);
}

std::uint64_t resolve_seed(const CliConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv("CRAPSTATS_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::invalid_argument(std::string("CRAPSTATS_SEED is not an integer: ") + env);
        return v;
    }
    std::cerr << "warning: no --seed given and CRAPSTATS_SEED unset; using seed 0\n";
    return 0;
}

std::string fixed(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

void emit(const CliConfig& cfg, const json& j, const std::string& text,
          const std::string& csv) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (cfg.format == "csv")
        std::cout << csv;
    else
        std::cout << text;
}

// ---------------------------------------------------------------------------
// model
// ---------------------------------------------------------------------------

void run_model(const CliConfig& cfg, const ParamChoice& pc) {
    const Model m = parse_model(pc.model);
    const double theta = resolve_theta(pc);
    const int prec = cfg.precision;

    struct NamedPmf {
        std::string name;
        TotalPmf pmf;
    };
    std::vector<NamedPmf> pmfs;
    if (m == Model::ss) {
        pmfs.push_back({"come-out (AA)", comeout_pmf(m, theta)});
        pmfs.push_back({"points 4/5/9/10 (AC)", point_pmf(m, 4, theta)});
        pmfs.push_back({"points 6/8 (AB)", point_pmf(m, 6, theta)});
    } else {
        pmfs.push_back({"come-out (1,5,6,2)", comeout_pmf(m, theta)});
        pmfs.push_back({"points (2,4,2,4)", point_pmf(m, 4, theta)});
    }

    json j = {{"model", model_name(m)},
              {"theta", theta},
              {"eta_recip7", rho1(m, theta)},
              {"eta_gain", rho2(m, theta)},
              {"expected_gain", expected_gain(m, theta)},
              {"break_even_theta", break_even_theta(m)},
              {"mean_hand_length", mean_hand_length(m, theta)},
              {"var_hand_length", var_hand_length(m, theta)}};
    for (const auto& np : pmfs) {
        json row = json::array();
        for (int t = 2; t <= 12; ++t) row.push_back(np.pmf(t));
        j["pmfs"][np.name] = row;
    }

    std::ostringstream text;
    text << "model " << model_name(m) << "\n"
         << "  theta             " << sig(theta, prec + 3) << "\n"
         << "  eta (recip7)      " << fixed(rho1(m, theta), prec) << "\n"
         << "  eta (gain)        " << fixed(rho2(m, theta), prec) << "\n"
         << "  expected gain     " << fixed(expected_gain(m, theta), prec) << "\n"
         << "  break-even theta  " << sig(break_even_theta(m), prec + 3) << "\n"
         << "  E[L]              " << fixed(mean_hand_length(m, theta), prec) << "\n"
         << "  Var(L)            " << fixed(var_hand_length(m, theta), prec) << "\n";
    for (const auto& np : pmfs) {
        text << "  pmf " << np.name << "\n    total";
        for (int t = 2; t <= 12; ++t) text << "\t" << t;
        text << "\n    p";
        for (int t = 2; t <= 12; ++t) text << "\t" << fixed(np.pmf(t), prec);
        text << "\n";
    }

    std::ostringstream csv;
    csv << "quantity,value\n"
        << "theta," << sig(theta, 17) << "\n"
        << "eta_recip7," << sig(rho1(m, theta), 17) << "\n"
        << "eta_gain," << sig(rho2(m, theta), 17) << "\n"
        << "expected_gain," << sig(expected_gain(m, theta), 17) << "\n"
        << "break_even_theta," << sig(break_even_theta(m), 17) << "\n"
        << "mean_hand_length," << sig(mean_hand_length(m, theta), 17) << "\n"
        << "var_hand_length," << sig(var_hand_length(m, theta), 17) << "\n"
        << "set,total,probability\n";
    for (const auto& np : pmfs)
        for (int t = 2; t <= 12; ++t)
            csv << "\"" << np.name << "\"," << t << "," << sig(np.pmf(t), 17) << "\n";

    emit(cfg, j, text.str(), csv.str());
}

// ---------------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------------

void run_dist(const CliConfig& cfg, const ParamChoice& pc,
              const std::optional<int>& x_max, const std::optional<int>& tail_at) {
    const Model m = parse_model(pc.model);
    const double theta = resolve_theta(pc);
    if (!x_max && !tail_at)
        throw std::invalid_argument("dist needs --x-max and/or --tail-at");
    if ((x_max && *x_max < 2) || (tail_at && *tail_at < 2))
        throw std::invalid_argument("hand lengths start at x = 2");
    const GeometricMixture gm = geometric_mixture(m, theta);
    const int prec = cfg.precision;

    json j = {{"model", model_name(m)}, {"theta", theta}};
    std::ostringstream text, csv;
    text << "hand-length distribution, model " << model_name(m) << ", theta "
         << sig(theta, prec + 3) << "\n";
    csv << "quantity,i,value\n";
    for (int i = 0; i < 4; ++i) {
        j["eigenvalues"].push_back(gm.e[i]);
        j["coefficients"].push_back(gm.c[i]);
        csv << "eigenvalue," << i + 1 << "," << sig(gm.e[i], 17) << "\n";
        csv << "coefficient," << i + 1 << "," << sig(gm.c[i], 17) << "\n";
    }
    text << "  eigenvalues ";
    for (int i = 0; i < 4; ++i) text << " " << sig(gm.e[i], prec + 3);
    text << "\n  coefficients";
    for (int i = 0; i < 4; ++i) text << " " << sig(gm.c[i], prec + 3);
    text << "\n";

    if (x_max) {
        text << "  x\tpmf\ttail\n";
        csv << "x,pmf,tail\n";
        json rows = json::array();
        for (int x = 2; x <= *x_max; ++x) {
            const double f = gm.pmf(x), t = gm.tail(x);
            rows.push_back({{"x", x}, {"pmf", f}, {"tail", t}});
            text << "  " << x << "\t" << sig(f, prec) << "\t" << sig(t, prec) << "\n";
            csv << x << "," << sig(f, 17) << "," << sig(t, 17) << "\n";
        }
        j["table"] = std::move(rows);
    }
    if (tail_at) {
        const double t = gm.tail(*tail_at);
        j["tail_at"] = {{"x", *tail_at}, {"tail", t}, {"reciprocal_tail", 1.0 / t}};
        text << "  t(" << *tail_at << ") = " << sig(t, prec + 2) << ",  1/t("
             << *tail_at << ") = " << sig(1.0 / t, prec + 2) << "\n";
        csv << "tail_at," << *tail_at << "," << sig(t, 17) << "\n"
            << "reciprocal_tail," << *tail_at << "," << sig(1.0 / t, 17) << "\n";
    }
    emit(cfg, j, text.str(), csv.str());
}

// ---------------------------------------------------------------------------
// power
// ---------------------------------------------------------------------------

json table_to_json(const PowerTable& t) {
    json j = {{"id", t.id},       {"title", t.title}, {"row_label", t.row_label},
              {"etas", t.etas},   {"ns", t.ns},       {"panel_names", t.panel_names},
              {"panels", t.panels}};
    return j;
}

void run_power(const CliConfig& cfg, const ParamChoice& pc,
               const std::optional<int>& table_id, const std::string& test,
               double n, double alpha, const std::string& null_kind) {
    if (table_id) {
        const PowerTable t = emit_power_table(*table_id, alpha);
        emit(cfg, table_to_json(t), render_table_text(t), render_table_csv(t));
        return;
    }
    if (!pc.theta && !pc.eta)
        throw std::invalid_argument("power needs --table or a query with --theta/--eta");
    if (n <= 0.0) throw std::invalid_argument("power query needs --n > 0");
    const Model m = parse_model(pc.model);
    const NullKind nk = (null_kind == "composite") ? NullKind::composite : NullKind::simple;

    PowerQuery q;
    q.model = m;
    q.null_kind = nk;
    q.n = n;
    q.alpha = alpha;
    // every supplied scale converts to the scale each test is stated in
    const double theta = resolve_theta(pc);
    if (test == "prop7") {
        q.test = TestKind::prop7;
        q.param = Parameterization::rho1;
        q.alternative = rho1(m, theta);
    } else if (test == "passline") {
        q.test = TestKind::passline;
        q.param = Parameterization::rho2;
        q.alternative = rho2(m, theta);
    } else {
        q.test = TestKind::lbar;
        q.param = Parameterization::theta;
        q.alternative = theta;
    }
    const PowerResult r = evaluate_power(q);
    json j = {{"test", test},   {"model", model_name(m)},
              {"theta", theta}, {"null", null_kind},
              {"n", n},         {"alpha", alpha},
              {"power", r.power}, {"method", r.method}};
    emit(cfg, j, "power = " + fixed(r.power, cfg.precision) + "\n",
         "power\n" + sig(r.power, 17) + "\n");
}

// ---------------------------------------------------------------------------
// simulate / lrtest / lrpower
// ---------------------------------------------------------------------------

json sample_to_json(const HandSample& s) {
    json j = json::object();
    for (const auto& [len, cnt] : s.counts) j[std::to_string(len)] = cnt;
    return j;
}

void run_simulate(const CliConfig& cfg, const ParamChoice& pc, long long n,
                  std::uint64_t stream, const std::string& out_path) {
    if (n <= 0) throw std::invalid_argument("simulate needs --n >= 1");
    const Model m = parse_model(pc.model);
    const double theta = resolve_theta(pc);
    RngStream rng(resolve_seed(cfg), stream);
    std::vector<int> lengths;
    lengths.reserve(std::size_t(n));
    HandSample s;
    for (long long i = 0; i < n; ++i) {
        lengths.push_back(simulate_hand(m, theta, rng));
        s.add(lengths.back());
    }

    std::ostringstream text;  // raw length list, one hand per line
    for (int len : lengths) text << len << "\n";
    std::ostringstream csv;
    csv << "length,count\n";
    for (const auto& [len, cnt] : s.counts) csv << len << "," << cnt << "\n";

    std::string payload;
    if (cfg.format == "json")
        payload = sample_to_json(s).dump(2) + "\n";
    else if (cfg.format == "csv")
        payload = csv.str();
    else
        payload = text.str();

    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << payload;
}

// Sample files: run-length JSON ({"2": 45, ...}) or a raw length list
// (one integer per line). Malformed content names the offending line/key.
HandSample parse_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sample file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();

    const std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::runtime_error(path + ": empty sample file");

    HandSample s;
    if (content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        } catch (const json::parse_error& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
        for (const auto& [key, value] : j.items()) {
            int len = 0;
            try {
                std::size_t pos = 0;
                len = std::stoi(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw std::runtime_error(path + ": key '" + key +
                                         "' is not a hand length");
            }
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw std::runtime_error(path + ": count for key '" + key +
                                         "' is not a nonnegative integer");
            const long long cnt = value.get<long long>();
            if (cnt == 0) continue;
            try {
                s.add(len, cnt);
            } catch (const std::exception& e) {
                throw std::runtime_error(path + ": key '" + key + "': " + e.what());
            }
        }
    } else {
        std::istringstream lines(content);
        std::string line;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            const std::size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            char* end = nullptr;
            const long v = std::strtol(line.c_str() + a, &end, 10);
            std::string rest = end ? std::string(end) : std::string();
            if (end == line.c_str() + a ||
                rest.find_first_not_of(" \t\r") != std::string::npos)
                throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                                         " is not an integer: '" + line + "'");
            try {
                s.add(int(v));
            } catch (const std::exception& e) {
                throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                                         ": " + e.what());
            }
        }
    }
    if (s.n == 0) throw std::runtime_error(path + ": sample has no observations");
    return s;
}

void run_lrtest(const CliConfig& cfg, const ParamChoice& pc, const std::string& sample_path,
                double alpha, double theta_max) {
    const Model m = parse_model(pc.model);
    const HandSample s = parse_sample_file(sample_path);
    const LrOutcome out = lr_test(m, s, alpha, theta_max);
    json j = {{"model", model_name(m)},
              {"n", s.n},
              {"alpha", alpha},
              {"theta_hat", out.theta_hat},
              {"log_lik_null", out.log_lik_null},
              {"log_lik_hat", out.log_lik_hat},
              {"statistic", out.statistic},
              {"reject", out.reject}};
    const int prec = cfg.precision;
    std::ostringstream text;
    text << "n           " << s.n << "\n"
         << "theta_hat   " << sig(out.theta_hat, prec + 2) << "\n"
         << "log L(0)    " << sig(out.log_lik_null, prec + 4) << "\n"
         << "log L(hat)  " << sig(out.log_lik_hat, prec + 4) << "\n"
         << "statistic   " << sig(out.statistic, prec + 2) << "\n"
         << "decision    " << (out.reject ? "reject" : "no-reject") << "\n";
    std::ostringstream csv;
    csv << "quantity,value\n"
        << "n," << s.n << "\n"
        << "theta_hat," << sig(out.theta_hat, 17) << "\n"
        << "log_lik_null," << sig(out.log_lik_null, 17) << "\n"
        << "log_lik_hat," << sig(out.log_lik_hat, 17) << "\n"
        << "statistic," << sig(out.statistic, 17) << "\n"
        << "reject," << (out.reject ? "true" : "false") << "\n";
    emit(cfg, j, text.str(), csv.str());
}

void run_lrpower(const CliConfig& cfg, const ParamChoice& pc, long long n, double alpha,
                 long long reps, std::uint64_t stream_base) {
    if (n <= 0 || reps <= 0)
        throw std::invalid_argument("lrpower needs --n >= 1 and --reps >= 1");
    const Model m = parse_model(pc.model);
    const double theta = resolve_theta(pc);
    const LrPowerResult r =
        simulate_lr_power(m, theta, n, reps, resolve_seed(cfg), alpha, 1.0, stream_base);
    json j = {{"model", model_name(m)}, {"theta", theta},
              {"n", n},                 {"alpha", alpha},
              {"replications", r.replications},
              {"rejections", r.rejections},
              {"power", r.power},
              {"std_error", r.std_error}};
    const int prec = cfg.precision;
    std::ostringstream text;
    text << "power       " << fixed(r.power, prec) << " +- " << fixed(r.std_error, prec)
         << "\n"
         << "rejections  " << r.rejections << " / " << r.replications << "\n";
    std::ostringstream csv;
    csv << "power,std_error,rejections,replications\n"
        << sig(r.power, 17) << "," << sig(r.std_error, 17) << "," << r.rejections << ","
        << r.replications << "\n";
    emit(cfg, j, text.str(), csv.str());
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(int x_max, int grid) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };
    auto close = [](double a, double b, double tol) { return std::fabs(a - b) <= tol; };

    check(close(mean_hand_length(Model::ss, 0.0), 1671.0 / 196, 1e-9),
          "E[L] at theta = 0 equals 1671/196");
    check(close(var_hand_length(Model::ss, 0.0), 1768701.0 / 38416, 1e-8),
          "Var(L) at theta = 0 equals 1768701/38416");
    check(close(break_even_theta(Model::ss), 0.0445299, 1e-5), "ss break-even theta");
    check(close(break_even_theta(Model::ws), 0.0313088, 1e-5), "ws break-even theta");
    check(close(gamma_rate(Model::ss, 0.0), 495.0 / 196, 1e-12) &&
              close(gamma_rate(Model::ws, 0.0), 495.0 / 196, 1e-12),
          "gamma(0) equals 495/196 in both models");

    const double e0[4] = {0.862473751659322030, 0.741708271459795977,
                          0.709206775794379015, 0.186611201086502979};
    bool spectral_ok = true;
    for (Model m : {Model::ss, Model::ws}) {
        const auto e = eigenvalues_closed_form(m, 0.0);
        for (int i = 0; i < 4; ++i)
            spectral_ok = spectral_ok && close(e[i], e0[i], 1e-12);
    }
    check(spectral_ok, "fair-dice eigenvalues to 12 digits");

    for (Model m : {Model::ss, Model::ws}) {
        const std::string tag = model_name(m);
        const TailMonotonicityReport rep = verify_tail_monotonicity(m, x_max, grid);
        if (m == Model::ss) {
            check(rep.exceptions.empty() && rep.all_verified,
                  tag + " coefficient conditions hold for x = 3.." + std::to_string(x_max));
        } else {
            std::vector<int> expected;
            for (int x : {3, 6, 7, 8, 9})
                if (x <= x_max) expected.push_back(x);
            check(rep.exceptions == expected && rep.all_verified,
                  tag + " exceptions are exactly {3,6,7,8,9} and all resolve (x <= " +
                      std::to_string(x_max) + ")");
        }
        const LargeXBounds b = large_x_bounds(m, grid);
        const LargeXSufficiency suff = check_large_x_sufficiency(m, b);
        check(suff.holds, tag + " large-x lower bound positive from x = " +
                              std::to_string(suff.x_start));
    }
    std::cout << (failures == 0 ? "verify: all checks passed\n"
                                : "verify: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dice-control statistics: models, hand-length distribution, "
                 "power analysis, and likelihood-ratio testing"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision, "decimal places for text tables")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for simulation commands (else CRAPSTATS_SEED)");

    ParamChoice pc_model, pc_dist, pc_power, pc_sim, pc_lrp;
    std::string lrt_model = "ss";

    auto* cmd_model = app.add_subcommand("model", "control-model summary");
    add_param_flags(cmd_model, pc_model);

    auto* cmd_dist = app.add_subcommand("dist", "hand-length distribution");
    add_param_flags(cmd_dist, pc_dist);
    std::optional<int> x_max, tail_at;
    cmd_dist->add_option("--x-max", x_max, "print pmf/tail for x = 2..x_max");
    cmd_dist->add_option("--tail-at", tail_at, "print t(x) and 1/t(x) at this x");

    auto* cmd_power = app.add_subcommand("power", "power of the no-control tests");
    add_param_flags(cmd_power, pc_power, /*require_value=*/false);
    std::optional<int> table_id;
    std::string test = "lbar", null_kind = "simple";
    double power_n = 0.0, power_alpha = 0.05;
    cmd_power->add_option("--table", table_id, "emit a standard table")
        ->check(CLI::Range(1, 3));
    cmd_power->add_option("--test", test, "test statistic")
        ->check(CLI::IsMember({"lbar", "prop7", "passline"}))
        ->capture_default_str();
    cmd_power->add_option("--n", power_n, "sample size (hands, rolls, or decisions)");
    cmd_power->add_option("--alpha", power_alpha, "significance level")
        ->capture_default_str();
    cmd_power->add_option("--null", null_kind, "null hypothesis kind")
        ->check(CLI::IsMember({"simple", "composite"}))
        ->capture_default_str();

    auto* cmd_sim = app.add_subcommand("simulate", "draw hand lengths");
    add_param_flags(cmd_sim, pc_sim);
    long long sim_n = 0;
    std::uint64_t sim_stream = 0;
    std::string sim_out;
    cmd_sim->add_option("--n", sim_n, "number of hands")->required();
    cmd_sim->add_option("--stream", sim_stream, "stream id within the seed")
        ->capture_default_str();
    cmd_sim->add_option("--out", sim_out, "output file (default standard output)");

    auto* cmd_lrt = app.add_subcommand("lrtest", "likelihood-ratio test of no control");
    cmd_lrt->add_option("--model", lrt_model, "control model")
        ->check(CLI::IsMember({"ss", "ws"}))
        ->capture_default_str();
    std::string lrt_sample;
    double lrt_alpha = 0.05, lrt_theta_max = 1.0;
    cmd_lrt->add_option("--sample", lrt_sample, "sample file (run-length JSON or raw lengths)")
        ->required();
    cmd_lrt->add_option("--alpha", lrt_alpha, "significance level")->capture_default_str();
    cmd_lrt->add_option("--theta-max", lrt_theta_max, "upper end of the MLE search range")
        ->capture_default_str();

    auto* cmd_lrp = app.add_subcommand("lrpower", "simulated power of the LR test");
    add_param_flags(cmd_lrp, pc_lrp);
    long long lrp_n = 0, lrp_reps = 10000;
    double lrp_alpha = 0.05;
    std::uint64_t lrp_stream_base = 0;
    cmd_lrp->add_option("--n", lrp_n, "hands per replication")->required();
    cmd_lrp->add_option("--reps", lrp_reps, "number of replications")->capture_default_str();
    cmd_lrp->add_option("--alpha", lrp_alpha, "significance level")->capture_default_str();
    cmd_lrp->add_option("--stream-base", lrp_stream_base,
                        "stream id of the first replication")
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand(
        "verify", "golden constants and the tail-monotonicity apparatus");
    for (CLI::App* sub : {cmd_model, cmd_dist, cmd_power, cmd_sim, cmd_lrt, cmd_lrp,
                          cmd_verify})
        sub->fallthrough();
    int verify_x_max = 75, verify_grid = 10000;
    cmd_verify->add_option("--x-max", verify_x_max, "largest x for the coefficient sweep")
        ->check(CLI::Range(3, 200))
        ->capture_default_str();
    cmd_verify->add_option("--grid", verify_grid, "theta grid points for bounds/resolution")
        ->check(CLI::Range(10, 1000000))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_model->parsed()) run_model(cfg, pc_model);
        else if (cmd_dist->parsed()) run_dist(cfg, pc_dist, x_max, tail_at);
        else if (cmd_power->parsed())
            run_power(cfg, pc_power, table_id, test, power_n, power_alpha, null_kind);
        else if (cmd_sim->parsed()) run_simulate(cfg, pc_sim, sim_n, sim_stream, sim_out);
        else if (cmd_lrt->parsed()) {
            ParamChoice pc;
            pc.model = lrt_model;
            run_lrtest(cfg, pc, lrt_sample, lrt_alpha, lrt_theta_max);
        } else if (cmd_lrp->parsed())
            run_lrpower(cfg, pc_lrp, lrp_n, lrp_alpha, lrp_reps, lrp_stream_base);
        else if (cmd_verify->parsed())
            return run_verify(verify_x_max, verify_grid);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
