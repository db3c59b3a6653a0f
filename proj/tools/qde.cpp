#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qde/analytic.hpp"
#include "qde/error.hpp"
#include "qde/operator.hpp"
#include "qde/partition.hpp"
#include "qde/series.hpp"
#include "qde/symfunc.hpp"
#include "qde/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qde;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 2;
    std::string lambda = "1";
    std::string t1 = "0.31", t2 = "0.47";
    int prec = 256;
    int order = 30;
    double tol = 1e-20;
    std::string format = "json";
    std::string out;
    // command specific
    std::string which = "MD", theta = "-t2/t1";
    std::string level;
    std::string branch = "real-axis";
    std::string around = "zero";
    long a = 1, b = 0;
    std::string q = "-0.5", q_im = "0";
    int degree = 4;
    std::string suite = "all";
    int n_max = 3;
};

int default_precision() {
    if (const char* env = std::getenv("QDE_PRECISION_BITS")) {
        try {
            int p = std::stoi(env);
            if (p >= 64) return p;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("QDE_PRECISION_BITS must be an integer >= 64, got '") + env + "'");
    }
    return 256;
}

Rational rational(const std::string& s, const char* what) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": cannot read '" + s + "' as a rational or decimal number");
    }
}

Partition partition(const std::string& s) {
    try {
        Partition p = Partition::parse(s);
        if (p.str() != s) throw std::invalid_argument("parts must be positive and weakly decreasing");
        return p;
    } catch (const std::exception& e) {
        throw UsageError("--lambda: '" + s + "' is not a partition (expected parts like 2,1): " + e.what());
    }
}

void require_energy(int n) {
    if (n < 1) throw UsageError("--n must be at least 1");
}

NumericConfig numeric(const Options& o) {
    if (o.prec < 64) throw UsageError("--prec must be at least 64");
    if (o.order < 1) throw UsageError("--order must be at least 1");
    if (!(o.tol > 0)) throw UsageError("--tol must be positive");
    NumericConfig c;
    c.prec = o.prec;
    c.series_order = o.order;
    return c;
}

Params params(const Options& o) { return {rational(o.t1, "--t1"), rational(o.t2, "--t2")}; }

json to_json(const Complex& z) { return json{{"re", z.re.str(40)}, {"im", z.im.str(40)}}; }

json to_json(const NumMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const FockVector& v) {
    json o = json::object();
    for (const auto& [mu, c] : v.coeffs()) o[mu.str()] = c.str();
    return o;
}

json basis_json(int n) {
    json b = json::array();
    for (const auto& mu : partitions(n)) b.push_back(mu.str());
    return b;
}

json header(const std::string& command) { return json{{"schema", 1}, {"command", command}}; }

json params_json(const Params& t) { return json{{"t1", to_string(t.t1)}, {"t2", to_string(t.t2)}}; }

double num(const Real& x) { return x.to_double(); }

// Commands return the report; "pass": false yields exit code 1.

json cmd_matrix(const Options& o) {
    require_energy(o.n);
    OperatorMatrix M;
    if (o.which == "M") M = build_M(o.n);
    else if (o.which == "MD") M = build_MD(o.n);
    else if (o.which == "M0") M = build_M0(o.n);
    else if (o.which == "CS") {
        RatFunc theta;
        try {
            theta = RatFunc::parse(o.theta);
        } catch (const std::exception& e) {
            throw UsageError("--theta: " + std::string(e.what()));
        }
        M = build_CS(o.n, theta);
    } else
        throw UsageError("--which must be one of M, MD, M0, CS");
    json r = header("matrix");
    r["n"] = o.n;
    r["which"] = o.which;
    r["basis"] = basis_json(o.n);
    json rows = json::array();
    for (int i = 0; i < M.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < M.dim(); ++j) row.push_back(M(i, j).str());
        rows.push_back(row);
    }
    r["entries"] = rows;
    return r;
}

json cmd_jack(const Options& o) {
    Partition lambda = partition(o.lambda);
    json r = header("jack");
    r["lambda"] = lambda.str();
    r["vector"] = to_json(jack(lambda).vector);
    r["norm"] = jack_norm(lambda).str();
    r["content"] = content_sum(lambda).str();
    return r;
}

json cmd_macdonald(const Options& o) {
    Partition lambda = partition(o.lambda);
    MacdonaldVector p = macdonald_P(lambda);
    json r = header("macdonald");
    r["lambda"] = lambda.str();
    r["variables"] = "Q = T1, T = T2";
    r["vector"] = to_json(p.vector);
    json mono = json::object();
    auto basis = partitions(lambda.size());
    for (size_t i = 0; i < basis.size(); ++i)
        if (!p.mono[i].is_zero()) mono[basis[i].str()] = p.mono[i].str();
    r["monomial"] = mono;
    return r;
}

json cmd_haiman(const Options& o) {
    Partition lambda = partition(o.lambda);
    json r = header("haiman");
    r["lambda"] = lambda.str();
    r["vector"] = to_json(haiman_H(lambda));
    return r;
}

json cmd_series(const Options& o) {
    Partition lambda = partition(o.lambda);
    if (o.order < 0) throw UsageError("--order must be nonnegative");
    json r = header("series");
    r["lambda"] = lambda.str();
    r["order"] = o.order;
    SeriesSolution s = [&] {
        if (o.level.empty()) return frobenius(lambda, o.order);
        long l;
        try {
            l = std::stol(o.level);
        } catch (const std::exception&) {
            throw UsageError("--level must be an integer");
        }
        r["level"] = l;
        return frobenius_level(lambda, int(l), o.order);
    }();
    r["exponent"] = s.exponent.str();
    json coeffs = json::array();
    int last = -1;
    for (int k = 0; k <= s.order(); ++k) {
        FockVector u = s.coefficient(k);
        if (!u.is_zero()) last = k;
        coeffs.push_back(to_json(u));
    }
    r["coefficients"] = coeffs;
    if (s.level) r["last_nonzero_order"] = last;
    return r;
}

json cmd_connect(const Options& o) {
    require_energy(o.n);
    NumericConfig cfg = numeric(o);
    Params t = params(o);
    LogBranch branch;
    if (o.branch == "real-axis") branch = LogBranch::real_axis;
    else if (o.branch == "principal") branch = LogBranch::principal;
    else throw UsageError("--branch must be real-axis or principal");
    json r = header("connect");
    r["n"] = o.n;
    r["params"] = params_json(t);
    r["prec"] = o.prec;
    r["order"] = o.order;
    r["branch"] = o.branch;
    Genericity g = genericity(o.n, t, Context::connect);
    if (!g.ok) r["warning"] = g.description;
    ConnectReport c = verify_connect(o.n, t, cfg, branch);
    r["basis"] = basis_json(o.n);
    r["lhs"] = to_json(c.lhs);
    r["rhs"] = to_json(c.rhs);
    json ent = json::array();
    for (int i = 0; i < c.lhs.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < c.lhs.cols(); ++j) row.push_back(num(abs(c.lhs(i, j) - c.rhs(i, j))));
        ent.push_back(row);
    }
    r["entry_errors"] = ent;
    r["error"] = num(c.error);
    r["tolerance"] = o.tol;
    r["pass"] = c.error.to_double() <= o.tol;
    return r;
}

json cmd_monodromy(const Options& o) {
    require_energy(o.n);
    NumericConfig cfg = numeric(o);
    Params t = params(o);
    const mpfr_prec_t P = cfg.prec;
    json r = header("monodromy");
    r["n"] = o.n;
    r["params"] = params_json(t);
    r["prec"] = o.prec;
    r["around"] = o.around;
    r["basis"] = basis_json(o.n);
    auto finite = finite_singularities(o.n, P);
    auto diag_eigen = [&](const std::vector<Rational>& exps) {
        std::vector<Complex> e;
        for (const auto& x : exps) e.push_back(exp(Complex::two_pi_i(P) * Complex(x, P)));
        return e;
    };
    if (o.around == "zero") {
        NumMatrix m = monodromy(o.n, t, Complex(P), cfg);
        std::vector<Rational> exps;
        for (const auto& lambda : partitions(o.n)) exps.push_back(-content_sum(lambda, t.t1, t.t2));
        Real err = match_distance(eigenvalues(m), diag_eigen(exps));
        r["matrix"] = to_json(m);
        r["eigenvalue_error"] = num(err);
        r["tolerance"] = o.tol;
        r["pass"] = err.to_double() <= o.tol;
    } else if (o.around.rfind("root:", 0) == 0) {
        int k;
        try {
            k = std::stoi(o.around.substr(5));
        } catch (const std::exception&) {
            throw UsageError("--around root:K needs an integer K");
        }
        auto roots = singular_points(o.n).roots;
        if (k < 1 || k > int(roots.size()))
            throw UsageError("--around root:K needs 1 <= K <= " + std::to_string(roots.size()) + " for n = " +
                             std::to_string(o.n));
        NumMatrix m = monodromy(o.n, t, finite[size_t(k)], cfg);
        OperatorMatrix res = residue_at_root(o.n, roots[size_t(k - 1)]);
        std::vector<Rational> exps;
        for (int i = 0; i < res.dim(); ++i) exps.push_back(res(i, i).evaluate({{Var::t1, t.t1}, {Var::t2, t.t2}}));
        Real err = match_distance(eigenvalues(m), diag_eigen(exps));
        r["root"] = json{{"r", to_string(roots[size_t(k - 1)].r)}, {"zeta", to_json(finite[size_t(k)])}};
        r["matrix"] = to_json(m);
        r["eigenvalue_error"] = num(err);
        r["tolerance"] = o.tol;
        r["pass"] = err.to_double() <= o.tol;
    } else if (o.around == "all") {
        json gens = json::array();
        NumMatrix prod = NumMatrix::identity(int(partitions(o.n).size()), P);
        for (const auto& z : generator_order(o.n, P)) {
            NumMatrix m = monodromy(o.n, t, z, cfg);
            gens.push_back(json{{"point", to_json(z)}, {"matrix", to_json(m)}});
            prod = m * prod;
        }
        NumMatrix inf = monodromy(o.n, t, loop_at_infinity(P), cfg);
        Real err = (prod * inf - NumMatrix::identity(prod.rows(), P)).max_abs();
        r["generators"] = gens;
        r["infinity"] = to_json(inf);
        r["product_relation_error"] = num(err);
        r["tolerance"] = o.tol;
        r["pass"] = err.to_double() <= o.tol;
    } else {
        throw UsageError("--around must be zero, all or root:K");
    }
    return r;
}

json cmd_intertwine(const Options& o) {
    require_energy(o.n);
    NumericConfig cfg = numeric(o);
    Params t = params(o);
    Complex q(Real(rational(o.q, "--q"), cfg.prec), Real(rational(o.q_im, "--q-im"), cfg.prec));
    json r = header("intertwine");
    r["n"] = o.n;
    r["a"] = o.a;
    r["b"] = o.b;
    r["params"] = params_json(t);
    r["q"] = to_json(q);
    r["basis"] = basis_json(o.n);
    Intertwiner s = intertwiner_S(o.a, o.b, o.n, t, q, cfg);
    r["gw"] = to_json(s.gw);
    r["dt"] = to_json(s.dt);
    r["difference"] = num(s.difference);
    bool pass = s.difference.to_double() <= o.tol;
    if (o.a + o.b >= 0 && o.degree > 0) {
        LaurentFit f = laurent_fit(o.a, o.b, o.n, t, o.degree, cfg);
        r["laurent_fit"] = json{{"low", f.low}, {"high", f.high}, {"residual", num(f.residual)}};
    }
    r["tolerance"] = o.tol;
    r["pass"] = pass;
    return r;
}

json cmd_scatter(const Options& o) {
    require_energy(o.n);
    NumericConfig cfg = numeric(o);
    Params t = params(o);
    if (!o.level.empty()) t.t2 = rational(o.level, "--level") - t.t1;
    json r = header("scatter");
    r["n"] = o.n;
    r["params"] = params_json(t);
    r["basis"] = basis_json(o.n);
    ScatteringReport s = scattering(o.n, t, cfg);
    r["involution"] = to_json(s.involution);
    r["off_pattern"] = num(s.off_pattern);
    r["residual"] = num(s.residual);
    Genericity g = genericity(o.n, t, Context::semisimple);
    r["transpose_pattern_expected"] = g.ok;
    if (!g.ok) r["note"] = g.description;
    r["tolerance"] = o.tol;
    r["pass"] = s.residual.to_double() <= o.tol && (!g.ok || s.off_pattern.to_double() <= 1e-12);
    return r;
}

json cmd_verify(const Options& o) {
    if (o.n_max < 1) throw UsageError("--n-max must be at least 1");
    Suite suite;
    try {
        suite = parse_suite(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    NumericConfig cfg = numeric(o);
    json r = header("verify");
    r["suite"] = o.suite;
    r["n_max"] = o.n_max;
    r["prec"] = o.prec;
    json checks = json::array();
    bool pass = true;
    for (int id : criteria_of(suite)) {
        CriterionResult c = run_criterion(id, o.n_max, cfg);
        pass = pass && c.ok;
        json e = json::object();
        for (const auto& [name, value] : c.errors) e[name] = value;
        json j{{"id", c.id},       {"suite", c.suite},     {"title", c.title},   {"pass", c.ok},
               {"seconds", c.seconds}, {"budget_seconds", c.budget}, {"detail", c.detail}, {"max_errors", e}};
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(j);
    }
    r["checks"] = checks;
    r["pass"] = pass;
    return r;
}

void print_text(std::ostream& os, const json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) print_text(os, *it, key);
        else if (it->is_array() && !it->empty() && it->front().is_object() && it->front().contains("id"))
            for (const auto& e : *it) print_text(os, e, key + "[" + e["id"].dump() + "]");
        else os << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum differential equation of the Hilbert scheme of points: exact and numeric tools"};
    app.require_subcommand(1);
    Options o;
    try {
        o.prec = default_precision();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--out", o.out, "Write the report to FILE");
    };
    auto analytic = [&](CLI::App* c) {
        c->add_option("--t1", o.t1, "t1 (rational or decimal)");
        c->add_option("--t2", o.t2, "t2 (rational or decimal)");
        c->add_option("--prec", o.prec, "Working precision in bits (default QDE_PRECISION_BITS or 256)");
        c->add_option("--order", o.order, "Series truncation order");
        c->add_option("--tol", o.tol, "Pass/fail tolerance");
    };

    std::map<std::string, std::function<json(const Options&)>> commands;
    auto add = [&](const std::string& name, const std::string& help, auto fn) {
        CLI::App* c = app.add_subcommand(name, help);
        common(c);
        commands[name] = fn;
        return c;
    };

    auto* matrix = add("matrix", "Operator matrix in the |mu> basis", cmd_matrix);
    matrix->add_option("--n", o.n, "Energy")->required();
    matrix->add_option("--which", o.which, "M, MD, M0 or CS");
    matrix->add_option("--theta", o.theta, "Coupling for CS");
    for (auto [name, fn] : {std::pair{"jack", cmd_jack}, {"macdonald", cmd_macdonald}, {"haiman", cmd_haiman}})
        add(name, std::string(name) + " vector of a partition", fn)->add_option("--lambda", o.lambda, "Partition, e.g. 2,1")->required();
    auto* series = add("series", "Frobenius series coefficients at q = 0", cmd_series);
    series->add_option("--lambda", o.lambda, "Partition, e.g. 2,1")->required();
    series->add_option("--order", o.order, "Truncation order");
    series->add_option("--level", o.level, "Specialize t2 = level - t1");
    auto* connect = add("connect", "Check the connection formula at q = -1", cmd_connect);
    connect->add_option("--n", o.n, "Energy")->required();
    connect->add_option("--branch", o.branch, "real-axis or principal");
    analytic(connect);
    auto* mono = add("monodromy", "Monodromy based at q = -1", cmd_monodromy);
    mono->add_option("--n", o.n, "Energy")->required();
    mono->add_option("--around", o.around, "zero, all or root:K");
    analytic(mono);
    auto* inter = add("intertwine", "Intertwiner S(a,b) from both lines", cmd_intertwine);
    inter->add_option("--n", o.n, "Energy")->required();
    inter->add_option("--a", o.a, "Shift of t1");
    inter->add_option("--b", o.b, "Shift of t2");
    inter->add_option("--q", o.q, "Real part of q");
    inter->add_option("--q-im", o.q_im, "Imaginary part of q");
    inter->add_option("--degree", o.degree, "Laurent fit half-width (0 to skip)");
    analytic(inter);
    auto* scatter = add("scatter", "Involution (-1)^l in the H basis", cmd_scatter);
    scatter->add_option("--n", o.n, "Energy")->required();
    scatter->add_option("--level", o.level, "Set t2 = level - t1");
    analytic(scatter);
    auto* verify = add("verify", "Run the verification suites", cmd_verify);
    verify->add_option("--suite", o.suite, "exact, series, analytic or all");
    verify->add_option("--n-max", o.n_max, "Largest energy");
    analytic(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    json report;
    int code = 0;
    try {
        report = commands.at(name)(o);
        if (report.contains("pass") && !report["pass"].get<bool>()) code = 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        report = header(name);
        report["error"] = e.what();
        report["pass"] = false;
        code = 1;
    }

    std::ostringstream text;
    if (o.format == "json") text << report.dump(2) << "\n";
    else print_text(text, report);
    if (o.out.empty()) std::cout << text.str();
    else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << text.str();
    }
    return code;
}
