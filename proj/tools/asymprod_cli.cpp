// Command-line front end: single evaluations, schedules, lemma-check suites,
// and the convergence study, with CSV/JSON output for plots and baselines.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymprod/asymprod.hpp"

using nlohmann::json;
using namespace asymprod;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Options {
    std::string function = "sin";
    double a = 5, b = 3, c = 4, d = 1;
    double eps = 0;  // 0 = auto via find_epsilon
    long long n0 = 1000;
    double ratio = 2;
    int count = 11;
    std::string out;
    std::string format = "csv";
    std::string suite = "all";
    std::string series_csv;  // convergence: read series instead of computing
    bool compat_override = false;
    int threads = 1;
    std::string config_path;
};

// Flat key=value config; command-line flags (and env) take precedence.
void apply_config(const CLI::App* cmd, Options& o) {
    std::ifstream in(o.config_path);
    if (!in) throw std::invalid_argument("cannot read config file '" + o.config_path + "'");
    auto unset = [&](const char* flag) { return cmd->count(flag) == 0; };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
        };
        const std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = strip(t.substr(0, eq));
        const std::string val = strip(t.substr(eq + 1));
        if (key == "function") { if (unset("--function")) o.function = val; }
        else if (key == "a") { if (unset("--a")) o.a = std::stod(val); }
        else if (key == "b") { if (unset("--b")) o.b = std::stod(val); }
        else if (key == "c") { if (unset("--c")) o.c = std::stod(val); }
        else if (key == "d") { if (unset("--d")) o.d = std::stod(val); }
        else if (key == "eps") { if (unset("--eps")) o.eps = std::stod(val); }
        else if (key == "n0") { if (unset("--n0")) o.n0 = std::stoll(val); }
        else if (key == "ratio") { if (unset("--ratio")) o.ratio = std::stod(val); }
        else if (key == "count") { if (unset("--count")) o.count = std::stoi(val); }
        else if (key == "out") { if (unset("--out")) o.out = val; }
        else if (key == "format") { if (unset("--format")) o.format = val; }
        else if (key == "suite") { if (unset("--suite")) o.suite = val; }
        else if (key == "series_csv") { if (unset("--series-csv")) o.series_csv = val; }
        else if (key == "threads") { if (unset("--threads")) o.threads = std::stoi(val); }
        else if (key == "compat_override") {
            if (unset("--compat-override")) o.compat_override = val == "1" || val == "true";
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (o.format != "csv" && o.format != "json")
        throw std::invalid_argument("config: format must be csv or json");
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--function", o.function, "catalog name or combinator expression");
    cmd->add_option("--a", o.a);
    cmd->add_option("--b", o.b);
    cmd->add_option("--c", o.c);
    cmd->add_option("--d", o.d);
    cmd->add_option("--eps", o.eps, "omit for automatic selection")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n0", o.n0);
    cmd->add_option("--ratio", o.ratio);
    cmd->add_option("--count", o.count);
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--compat-override", o.compat_override);
    cmd->add_option("--threads", o.threads)->envname("ASYMPROD_THREADS");
    cmd->add_option("--config", o.config_path, "flat key=value config file; flags win");
}

struct Resolved {
    FunctionSpec f;        // as named (original coordinates)
    FunctionSpec f_norm;   // argument scaled by d (d=1 coordinates)
    FunctionSpec H;        // C-side function for E products (d=1 coordinates)
    bool s_side = false;
    double eps = 0;        // original coordinates
    double eps_norm = 0;   // = eps / d
};

Resolved resolve(const Options& o) {
    Resolved r;
    r.f = resolve_expression(o.function);
    r.f_norm = o.d == 1 ? r.f : scale_argument(r.f, o.d);
    r.s_side = r.f.kind == FnKind::S || r.f.kind == FnKind::Identity;
    r.H = r.s_side ? to_C(r.f_norm) : r.f_norm;
    if (o.eps > 0) {
        r.eps = o.eps;
    } else {
        r.eps = find_epsilon(r.H, o.c) * o.d;
    }
    r.eps_norm = r.eps / o.d;
    return r;
}

Schedule make_schedule(const Options& o) {
    return Schedule::geometric(o.n0, o.ratio, o.count);
}

std::ostream& open_out(const Options& o, std::ofstream& file) {
    if (o.out.empty()) return std::cout;
    file.open(o.out);
    if (!file) throw std::invalid_argument("cannot open output file '" + o.out + "'");
    return file;
}

json report_json(const CheckReport& rep) {
    json j{{"check", rep.check},
           {"passed", rep.passed},
           {"n_min", rep.n_min},
           {"n_max", rep.n_max},
           {"pairs_checked", rep.pairs_checked},
           {"margin", rep.margin},
           {"note", rep.note}};
    if (rep.first_violation)
        j["first_violation"] = {{"n", rep.first_violation->n},
                                {"j", rep.first_violation->j},
                                {"lhs", rep.first_violation->lhs},
                                {"rhs", rep.first_violation->rhs}};
    return j;
}

json estimate_json(const LimitEstimate& est) {
    return json{{"e_infinity", est.e_infinity},
                {"c_constant", est.c_constant},
                {"model", model_name(est.model)},
                {"fit_params", est.fit_params},
                {"residual_norm", est.residual_norm},
                {"range_warning", est.range_warning}};
}

int cmd_eval(const Options& o) {
    const Resolved r = resolve(o);
    const Schedule sched = make_schedule(o);
    std::ofstream file;
    std::ostream& os = open_out(o, file);

    json rows = json::array();
    if (o.format == "csv") os << "n,m,log_D,D,log_K,K,E\n";
    for (long long n : sched.n_values) {
        ProductParams p(o.a, o.b, o.c, o.d, r.eps, n, o.compat_override);
        const ProductValue D = eval_D(p, r.f);
        const ProductValue K = eval_K(p);
        double E;
        if (r.s_side) {
            ProductParams pe(o.a, o.b, o.c, 1.0, r.eps_norm, n, true);
            E = eval_E(pe, r.H).value();
        } else {
            E = std::exp(D.log_value - K.log_value);
        }
        if (o.format == "csv") {
            os << n << ',' << D.m << ',' << fmt17(D.log_value) << ',' << fmt17(D.value())
               << ',' << fmt17(K.log_value) << ',' << fmt17(K.value()) << ',' << fmt17(E)
               << '\n';
        } else {
            rows.push_back({{"n", n},
                            {"m", D.m},
                            {"log_D", D.log_value},
                            {"D", D.value()},
                            {"log_K", K.log_value},
                            {"K", K.value()},
                            {"E", E}});
        }
    }
    if (o.format == "json") os << rows.dump(2) << '\n';
    return 0;
}

int cmd_asymptote(const Options& o) {
    const Resolved r = resolve(o);
    const Asymptote asym = k_asymptote(o.a, o.b, o.c, r.eps_norm);
    json j{{"exponent", asym.exponent},
           {"constant", asym.constant},
           {"eps", r.eps},
           {"function", o.function}};
    if (o.a > o.b)
        j["upper_bound"] = c_upper_bound(o.a, o.b, o.c, r.eps_norm);
    else
        j["upper_bound"] = nullptr;
    std::ofstream file;
    open_out(o, file) << j.dump(2) << '\n';
    return 0;
}

int cmd_estimate(const Options& o) {
    const Resolved r = resolve(o);
    if (!r.s_side)
        throw std::invalid_argument("estimate requires an S-side function");
    const Schedule sched = make_schedule(o);
    const LimitEstimate est =
        estimate_C(o.a, o.b, o.c, r.eps_norm, r.f_norm, sched, o.threads);
    std::cout << estimate_json(est).dump(2) << '\n';
    if (!o.out.empty()) {
        const Series series =
            sequence_E(o.a, o.b, o.c, r.eps_norm, r.H, sched, o.threads);
        std::ofstream file(o.out);
        if (!file) throw std::invalid_argument("cannot open output file '" + o.out + "'");
        file << "n,E\n";
        for (const auto& [n, e] : series) file << n << ',' << fmt17(e) << '\n';
    }
    return 0;
}

int cmd_check(const Options& o) {
    const Resolved r = resolve(o);
    const bool all = o.suite == "all";
    std::vector<CheckReport> reports;

    if (all || o.suite == "logconcavity")
        reports.push_back(check_logconcavity(r.H, r.eps_norm));

    if (all || o.suite == "lower_bound") {
        const BoundWitness w =
            compute_bound_witness(r.H, o.a - o.b, o.b, r.eps_norm, o.c);
        for (long long n : make_schedule(o).n_values) {
            ProductParams p(o.a, o.b, o.c, 1.0, r.eps_norm, n, o.compat_override);
            reports.push_back(check_lower_bound(p, r.H, w));
        }
    }

    if (all || o.suite == "monotone") {
        ProductParams tmpl(o.a, o.b, o.c, 1.0, r.eps_norm, o.n0, o.compat_override);
        reports.push_back(check_term_monotonicity(tmpl, r.H, o.n0, o.n0 + 10));
        Schedule window;
        for (long long n = 5 * o.n0; n <= 5 * o.n0 + 50; ++n) window.n_values.push_back(n);
        const Series series =
            sequence_E(o.a, o.b, o.c, r.eps_norm, r.H, window, o.threads);
        reports.push_back(check_E_monotone(series, tmpl));
    }

    if (all || o.suite == "upper_bound") {
        if (o.a > o.b) {
            const LimitEstimate est = estimate_C(o.a, o.b, o.c, r.eps_norm, r.f_norm,
                                                 make_schedule(o), o.threads);
            reports.push_back(check_upper_bound(est, o.a, o.b, o.c, r.eps_norm));
        } else if (!all) {
            throw std::invalid_argument("upper_bound suite requires a > b");
        }
    }

    json out = json::array();
    bool ok = true;
    for (const auto& rep : reports) {
        out.push_back(report_json(rep));
        ok = ok && rep.passed;
    }
    std::ofstream file;
    open_out(o, file) << out.dump(2) << '\n';
    return ok ? 0 : 1;
}

Series read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read series file '" + path + "'");
    Series s;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string ncol, vcol;
        std::getline(row, ncol, ',');
        std::getline(row, vcol, ',');
        s.push_back({std::stoll(ncol), std::stod(vcol)});
    }
    return s;
}

int cmd_convergence(const Options& o) {
    Series series;
    if (!o.series_csv.empty()) {
        series = read_series_csv(o.series_csv);
    } else {
        const Resolved r = resolve(o);
        series = sequence_E(o.a, o.b, o.c, r.eps_norm, r.H, make_schedule(o), o.threads);
    }
    const LimitEstimate lg = extrapolate(series, DecayModel::inv_log);
    const LimitEstimate ln = extrapolate(series, DecayModel::inv_n);
    const double e_inf = (lg.residual_norm <= ln.residual_norm ? lg : ln).e_infinity;
    const ConvergenceReport rep = fit_convergence_rate(series, e_inf);

    json models = json::array();
    for (const auto& m : rep.ranked) {
        json jm{{"model", model_name(m.model)},
                {"amplitude", m.amplitude},
                {"residual_norm", m.residual_norm},
                {"e_infinity", m.e_infinity}};
        if (m.model == DecayModel::power) jm["power"] = m.power;
        models.push_back(jm);
    }
    json j{{"e_infinity", e_inf},
           {"ranked_models", models},
           {"degenerate", rep.degenerate},
           {"max_pairwise_limit_gap", rep.max_pairwise_limit_gap}};
    std::cout << j.dump(2) << '\n';

    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) throw std::invalid_argument("cannot open output file '" + o.out + "'");
        file << "n,E,abs_residual\n";
        for (const auto& [n, e] : series)
            file << n << ',' << fmt17(e) << ',' << fmt17(std::abs(e - e_inf)) << '\n';
    }
    return 0;
}

int cmd_catalog(const Options& o) {
    json out = json::array();
    for (const auto& f : catalog()) {
        json j{{"name", f.name},
               {"kind", kind_name(f.kind)},
               {"paper_listed_only", f.paper_listed_only}};
        if (f.closed_form_epsilon)
            j["closed_form_epsilon"] = *f.closed_form_epsilon;
        else
            j["closed_form_epsilon"] = nullptr;
        out.push_back(j);
    }
    std::ofstream file;
    std::ostream& os = open_out(o, file);
    if (o.format == "csv") {
        os << "name,kind,closed_form_epsilon,paper_listed_only\n";
        for (const auto& j : out)
            os << j["name"].get<std::string>() << ',' << j["kind"].get<std::string>() << ','
               << (j["closed_form_epsilon"].is_null()
                       ? std::string()
                       : fmt17(j["closed_form_epsilon"].get<double>()))
               << ',' << (j["paper_listed_only"].get<bool>() ? 1 : 0) << '\n';
    } else {
        os << out.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite products of S-function quotients: evaluation, asymptotics, checks"};
    app.require_subcommand(1);

    Options o;
    auto* eval = app.add_subcommand("eval", "per-n table of D, K, E");
    auto* asym = app.add_subcommand("asymptote", "growth exponent, constant, upper bound");
    auto* est = app.add_subcommand("estimate", "extrapolated E-limit and constant C");
    auto* chk = app.add_subcommand("check", "lemma-check suites");
    auto* conv = app.add_subcommand("convergence", "convergence-rate model ranking");
    auto* cat = app.add_subcommand("catalog", "list catalog functions");
    for (auto* cmd : {eval, asym, est, chk, conv, cat}) add_common(cmd, o);
    chk->add_option("--suite", o.suite)
        ->check(CLI::IsMember({"lower_bound", "monotone", "logconcavity", "upper_bound", "all"}));
    conv->add_option("--series-csv", o.series_csv,
                     "read the (n,value) series from CSV instead of computing it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        for (const CLI::App* cmd : {eval, asym, est, chk, conv, cat})
            if (cmd->parsed() && !o.config_path.empty()) apply_config(cmd, o);
        if (*eval) return cmd_eval(o);
        if (*asym) return cmd_asymptote(o);
        if (*est) return cmd_estimate(o);
        if (*chk) return cmd_check(o);
        if (*conv) return cmd_convergence(o);
        if (*cat) return cmd_catalog(o);
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
