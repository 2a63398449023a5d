// Command-line frontend. File-based I/O:
//   series JSON   {"kind": "at_zero"|"at_infinity", "coeffs": [...]}
//   sequence CSV  one value per line
//   points CSV    x,y per line
// Exit codes: 0 success, 2 input error, 3 numerical failure.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "asympt/accel.hpp"
#include "asympt/baryinterp.hpp"
#include "asympt/casebook.hpp"
#include "asympt/cfrac.hpp"
#include "asympt/domb_sykes.hpp"
#include "asympt/errors.hpp"
#include "asympt/fourier_pade.hpp"
#include "asympt/hermite_pade.hpp"
#include "asympt/pade.hpp"
#include "asympt/series.hpp"
#include "asympt/two_point.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw asympt::InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

asympt::PowerSeries read_series(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw asympt::InvalidInput("'" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("coeffs"))
        throw asympt::InvalidInput("'" + path +
                                   "': expected {\"kind\":..., \"coeffs\":[...]}");
    const std::string kind = j["kind"].get<std::string>();
    asympt::VarKind vk;
    if (kind == "at_zero")
        vk = asympt::VarKind::AtZero;
    else if (kind == "at_infinity")
        vk = asympt::VarKind::AtInfinity;
    else
        throw asympt::InvalidInput("'" + path + "': kind must be at_zero or at_infinity");
    if (!j["coeffs"].is_array() || j["coeffs"].empty())
        throw asympt::InvalidInput("'" + path + "': coeffs must be a nonempty array");
    std::vector<double> c;
    for (const auto& v : j["coeffs"]) {
        if (!v.is_number())
            throw asympt::InvalidInput("'" + path + "': coeffs must be numbers");
        c.push_back(v.get<double>());
    }
    return asympt::PowerSeries(std::move(c), vk);
}

double parse_double(const std::string& s, const std::string& path) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw asympt::InvalidInput("'" + path + "': bad number '" + s + "'");
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size())
        throw asympt::InvalidInput("'" + path + "': bad number '" + s + "'");
    return v;
}

std::string trimmed(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                             line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    std::size_t b = 0;
    while (b < line.size() && (line[b] == ' ' || line[b] == '\t')) ++b;
    return line.substr(b);
}

std::vector<double> read_sequence(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<double> s;
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        s.push_back(parse_double(line, path));
    }
    if (s.empty()) throw asympt::InvalidInput("'" + path + "': empty sequence");
    return s;
}

void read_points(const std::string& path, std::vector<double>& xs,
                 std::vector<double>& ys) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw asympt::InvalidInput("'" + path + "': expected x,y per line");
        xs.push_back(parse_double(line.substr(0, comma), path));
        ys.push_back(parse_double(line.substr(comma + 1), path));
    }
    if (xs.empty()) throw asympt::InvalidInput("'" + path + "': no data points");
}

json approximant_json(const asympt::RationalApproximant& r) {
    return json{{"schema", 1}, {"num", r.num()}, {"den", r.den()}};
}

void emit_evals(const asympt::RationalApproximant& r, const std::vector<double>& xs) {
    for (double x : xs)
        std::cout << fmt17(x) << "," << fmt17(asympt::evaluate(r, x)) << "\n";
}

// -- subcommand bodies -------------------------------------------------------

struct PadeArgs {
    std::string series;
    int n = 0, m = 0;
    std::vector<double> evals;
    std::vector<int> table;
    double poles_radius = 0.0;
    bool poles_set = false;
    double froissart_tol = 1e-6;
};

int run_pade(const PadeArgs& a) {
    const asympt::PowerSeries f = read_series(a.series);
    if (!a.table.empty()) {
        const asympt::PadeTable t = asympt::pade_table(f, a.table[0], a.table[1]);
        for (int n = 0; n <= t.max_n; ++n)
            for (int m = 0; m <= t.max_m; ++m) {
                const auto& cell = t.cell(n, m);
                std::cout << n << "," << m << "," << (cell ? 1 : 0);
                if (!a.evals.empty()) {
                    std::cout << ",";
                    if (cell) std::cout << fmt17(asympt::evaluate(*cell, a.evals[0]));
                }
                std::cout << "\n";
            }
        return 0;
    }
    const asympt::RationalApproximant r = asympt::construct(f, a.n, a.m);
    if (a.poles_set) {
        const asympt::PoleZeroReport rep =
            asympt::pole_zero_report(r, a.poles_radius, a.froissart_tol);
        json jp = json::array(), jz = json::array(), jf = json::array();
        for (const auto& p : rep.poles)
            jp.push_back({{"re", p.location.real()},
                          {"im", p.location.imag()},
                          {"residue", p.residue_magnitude}});
        for (const auto& z : rep.zeros)
            jz.push_back({{"re", z.real()}, {"im", z.imag()}});
        for (const auto& fp : rep.froissart_pairs)
            jf.push_back({{"pole_re", fp.pole.real()},
                          {"pole_im", fp.pole.imag()},
                          {"zero_re", fp.zero.real()},
                          {"zero_im", fp.zero.imag()},
                          {"separation", fp.separation}});
        std::cout << json{{"schema", 1},
                          {"poles", jp},
                          {"zeros", jz},
                          {"froissart", jf}}
                         .dump()
                  << "\n";
        return 0;
    }
    if (!a.evals.empty()) {
        emit_evals(r, a.evals);
        return 0;
    }
    std::cout << approximant_json(r).dump() << "\n";
    return 0;
}

struct TppaArgs {
    std::string zero, inf;
    int k = 0, n = 0, m = 0;
    std::vector<double> evals;
};

int run_tppa(const TppaArgs& a) {
    asympt::TwoPointData d;
    d.at_zero = read_series(a.zero);
    d.at_infinity = read_series(a.inf);
    d.k_zero = a.k;
    d.far_offset = a.n - a.m;
    const asympt::RationalApproximant r = asympt::construct_tppa(d, a.n, a.m);
    if (!a.evals.empty()) {
        emit_evals(r, a.evals);
        return 0;
    }
    std::cout << approximant_json(r).dump() << "\n";
    return 0;
}

struct AccelArgs {
    std::string seq;
    std::string method;
    int k = -1;
};

int run_accel(const AccelArgs& a) {
    const std::vector<double> s = read_sequence(a.seq);
    const int len = static_cast<int>(s.size());
    if (a.method == "aitken") {
        const asympt::AitkenResult r = asympt::aitken(s);
        for (std::size_t i = 0; i < r.values.size(); ++i)
            if (r.valid[i]) std::cout << fmt17(r.values[i]) << "\n";
        return 0;
    }
    if (a.method == "shanks") {
        const int k = a.k < 0 ? 1 : a.k;
        if (len < 2 * k + 1)
            throw asympt::TooShort("shanks order " + std::to_string(k) + " needs " +
                                   std::to_string(2 * k + 1) + " terms");
        const asympt::EpsilonTable t = asympt::wynn_epsilon(s, 2 * k);
        for (int n = 0; n < t.column_size(2 * k); ++n)
            if (t.is_valid(2 * k, n)) std::cout << fmt17(t.entry(2 * k, n)) << "\n";
        return 0;
    }
    if (a.method == "wynn") {
        const int kmax = a.k < 0 ? (len - 1) / 2 : a.k;
        if (len < 2 * kmax + 1)
            throw asympt::TooShort("wynn depth " + std::to_string(kmax) + " needs " +
                                   std::to_string(2 * kmax + 1) + " terms");
        const asympt::EpsilonTable t = asympt::wynn_epsilon(s, 2 * kmax);
        for (int n = 0; n < len; ++n) {
            for (int k = 0; k <= kmax; ++k) {
                if (k) std::cout << ",";
                if (n < t.column_size(2 * k) && t.is_valid(2 * k, n))
                    std::cout << fmt17(t.entry(2 * k, n));
            }
            std::cout << "\n";
        }
        return 0;
    }
    throw asympt::InvalidInput("unknown method '" + a.method + "'");
}

struct CfracArgs {
    std::string series;
    int depth = 0;
    std::vector<double> evals;
};

int run_cfrac(const CfracArgs& a) {
    const asympt::PowerSeries f = read_series(a.series);
    const asympt::CFraction cf = asympt::from_series(f, a.depth);
    if (!a.evals.empty()) {
        for (double x : a.evals)
            std::cout << fmt17(x) << "," << fmt17(asympt::evaluate(cf, x, cf.depth()))
                      << "\n";
        return 0;
    }
    std::cout << json{{"schema", 1},
                      {"head", cf.head},
                      {"coeffs", cf.c},
                      {"breakdown_index", cf.breakdown_index},
                      {"depth", cf.depth()}}
                     .dump()
              << "\n";
    return 0;
}

struct DombSykesArgs {
    std::string series;
    int nmin = 2;
    bool plot = false;
};

const char* pattern_name(asympt::SignPattern p) {
    switch (p) {
        case asympt::SignPattern::SameSign: return "same-sign";
        case asympt::SignPattern::Alternating: return "alternating";
        case asympt::SignPattern::PeriodFour: return "period-four";
        case asympt::SignPattern::Irregular: return "irregular";
    }
    return "irregular";
}

int run_domb_sykes(const DombSykesArgs& a) {
    const asympt::PowerSeries f = read_series(a.series);
    if (a.plot) {
        for (const auto& [invn, ratio] : asympt::plot_points(f, a.nmin))
            std::cout << fmt17(invn) << "," << fmt17(ratio) << "\n";
        return 0;
    }
    const asympt::DombSykesFit fit = asympt::fit(f, a.nmin);
    std::cout << json{{"schema", 1},
                      {"eps0", fit.eps0},
                      {"alpha", fit.alpha},
                      {"intercept", fit.intercept},
                      {"slope", fit.slope},
                      {"fit_residual", fit.fit_residual},
                      {"pattern", pattern_name(fit.pattern)},
                      {"points_used", fit.points_used},
                      {"factorial_growth", fit.factorial_growth},
                      {"factorial_k", fit.factorial_k}}
                     .dump()
              << "\n";
    return 0;
}

struct GibbsArgs {
    int n = 4;
    int grid = 200;
};

int run_gibbs(const GibbsArgs& a) {
    if (a.grid < 1) throw asympt::InvalidInput("--grid must be positive");
    const asympt::FourierPadeSign fp = asympt::fourier_pade_sign(a.n);
    const asympt::SquareWavePartialSum ps{a.n};
    for (int i = 0; i <= a.grid; ++i) {
        const double x = -kPi + 2.0 * kPi * i / a.grid;
        std::cout << fmt17(x) << "," << fmt17(ps(x)) << "," << fmt17(fp(x)) << "\n";
    }
    return 0;
}

struct SolitonArgs {
    int order = 1;
    double lo = 0.0, hi = 0.0;
    bool bracket_set = false;
};

int run_soliton(const SolitonArgs& a) {
    double lo = a.lo, hi = a.hi;
    if (!a.bracket_set) {
        static const std::map<int, std::pair<double, double>> brackets = {
            {1, {1.5, 2.0}}, {2, {2.0, 2.3}}, {3, {2.0, 2.22}}, {4, {2.21, 2.22}}};
        const auto it = brackets.find(a.order);
        if (it == brackets.end())
            throw asympt::InvalidInput(
                "no default bracket for order > 4; pass --lo and --hi");
        lo = it->second.first;
        hi = it->second.second;
    }
    const double a0 = asympt::soliton_a0(a.order, lo, hi);
    const asympt::PowerSeries prof = asympt::soliton_series(a0, 2 * a.order);
    const asympt::RationalApproximant r = asympt::construct(prof, a.order, a.order);
    std::cout << json{{"schema", 1},
                      {"order", a.order},
                      {"a0", a0},
                      {"num", r.num()},
                      {"den", r.den()}}
                     .dump()
              << "\n";
    return 0;
}

struct HermiteArgs {
    std::string series;
    int p = 2;
    std::vector<double> branch_eps;
};

int run_hermite(const HermiteArgs& a) {
    const asympt::PowerSeries f = read_series(a.series);
    const asympt::ImplicitPoly F = asympt::construct_implicit(f, a.p);
    if (!a.branch_eps.empty()) {
        for (double eps : a.branch_eps)
            for (const auto& b : asympt::branches(F, eps))
                std::cout << fmt17(b.real()) << "," << fmt17(b.imag()) << "\n";
        return 0;
    }
    json jc = json::array();
    for (int t = 1; t <= a.p; ++t)
        for (int k = 0; k <= t; ++k)
            jc.push_back({{"i", t - k}, {"k", k}, {"value", F.coeff(t - k, k)}});
    std::cout << json{{"schema", 1},
                      {"p", a.p},
                      {"shift", F.shift()},
                      {"degenerate", F.degenerate},
                      {"rank_deficiency", F.rank_deficiency},
                      {"coeffs", jc}}
                     .dump()
              << "\n";
    return 0;
}

struct InterpArgs {
    std::string data;
    std::vector<double> evals;
    int grid = -1;
};

int run_interp(const InterpArgs& a) {
    std::vector<double> xs, ys;
    read_points(a.data, xs, ys);
    // Alternating-sign weights assume ascending nodes.
    std::vector<std::size_t> idx(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
    std::vector<double> sx(xs.size()), sy(ys.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        sx[i] = xs[idx[i]];
        sy[i] = ys[idx[i]];
    }
    const asympt::BarycentricInterpolant b = asympt::build_interpolant(sx, sy);
    if (a.grid >= 0) {
        if (a.grid < 1) throw asympt::InvalidInput("--grid must be positive");
        const double lo = sx.front(), hi = sx.back();
        for (int i = 0; i <= a.grid; ++i) {
            const double x = lo + (hi - lo) * i / a.grid;
            std::cout << fmt17(x) << "," << fmt17(b(x)) << "\n";
        }
        return 0;
    }
    if (!a.evals.empty()) {
        for (double x : a.evals) std::cout << fmt17(x) << "," << fmt17(b(x)) << "\n";
        return 0;
    }
    std::cout << json{{"schema", 1},
                      {"nodes", b.nodes()},
                      {"values", b.values()},
                      {"weights", b.weights()}}
                     .dump()
              << "\n";
    return 0;
}

struct CaseArgs {
    std::string id;
    asympt::CaseParams params;
    std::string lattice = "sc";
    bool csv = false;
    bool as_json = false;
};

int run_case_cmd(const CaseArgs& a) {
    asympt::CaseParams p = a.params;
    if (a.lattice == "sc")
        p.lattice = asympt::Lattice::SC;
    else if (a.lattice == "bcc")
        p.lattice = asympt::Lattice::BCC;
    else if (a.lattice == "fcc")
        p.lattice = asympt::Lattice::FCC;
    else
        throw asympt::InvalidInput("--lattice must be sc, bcc or fcc");

    const asympt::CaseResult r = asympt::run_case(a.id, p);
    if (a.as_json) {
        json jv = json::array();
        for (const auto& v : r.values) {
            json e{{"name", v.name},
                   {"computed", v.computed},
                   {"provenance", v.provenance}};
            if (v.has_reference) {
                e["reference"] = v.reference;
                e["deviation"] = v.deviation;
            }
            jv.push_back(e);
        }
        json jg{{"columns", r.grid.columns}, {"rows", r.grid.rows}};
        std::cout << json{{"schema", 1},
                          {"case", r.case_id},
                          {"values", jv},
                          {"grid", jg}}
                         .dump()
                  << "\n";
        return 0;
    }
    if (a.csv) {
        for (std::size_t c = 0; c < r.grid.columns.size(); ++c)
            std::cout << (c ? "," : "") << r.grid.columns[c];
        std::cout << "\n";
        for (const auto& row : r.grid.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << (c ? "," : "") << fmt17(row[c]);
            std::cout << "\n";
        }
        return 0;
    }
    std::printf("case: %s\n", r.case_id.c_str());
    std::printf("%-26s %-16s %-16s %-12s %s\n", "value", "computed", "reference",
                "deviation", "provenance");
    for (const auto& v : r.values) {
        if (v.has_reference)
            std::printf("%-26s %-16s %-16s %-12s %s\n", v.name.c_str(),
                        fmt10(v.computed).c_str(), fmt10(v.reference).c_str(),
                        fmt10(v.deviation).c_str(), v.provenance.c_str());
        else
            std::printf("%-26s %-16s %-16s %-12s %s\n", v.name.c_str(),
                        fmt10(v.computed).c_str(), "-", "-", v.provenance.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asympt: summation and continuation of truncated asymptotic series"};
    app.require_subcommand(1);

    PadeArgs pa;
    CLI::App* pade = app.add_subcommand("pade", "one-point Pade approximant");
    pade->add_option("--series", pa.series, "series JSON file")->required();
    pade->add_option("--n", pa.n, "numerator degree");
    pade->add_option("--m", pa.m, "denominator degree");
    pade->add_option("--eval", pa.evals, "evaluation points (CSV x,value output)");
    pade->add_option("--table", pa.table, "emit the Pade table up to N M")
        ->expected(2);
    pade->add_option("--poles", pa.poles_radius,
                     "pole/zero report inside radius R (JSON)");
    pade->add_option("--froissart-tol", pa.froissart_tol,
                     "pole-zero pairing tolerance");

    TppaArgs ta;
    CLI::App* tppa = app.add_subcommand("tppa", "two-point Pade approximant");
    tppa->add_option("--zero", ta.zero, "expansion at zero (JSON)")->required();
    tppa->add_option("--inf", ta.inf, "expansion at infinity (JSON)")->required();
    tppa->add_option("--k", ta.k, "conditions taken at zero")->required();
    tppa->add_option("--n", ta.n, "numerator degree")->required();
    tppa->add_option("--m", ta.m, "denominator degree")->required();
    tppa->add_option("--eval", ta.evals, "evaluation points");

    AccelArgs aa;
    CLI::App* accel = app.add_subcommand("accel", "sequence acceleration");
    accel->add_option("--seq", aa.seq, "sequence CSV file")->required();
    accel->add_option("--method", aa.method, "aitken|wynn|shanks")->required();
    accel->add_option("--k", aa.k, "transform order");

    CfracArgs ca;
    CLI::App* cfrac = app.add_subcommand("cfrac", "C-fraction expansion");
    cfrac->add_option("--series", ca.series, "series JSON file")->required();
    cfrac->add_option("--depth", ca.depth, "fraction depth")->required();
    cfrac->add_option("--eval", ca.evals, "evaluation points");

    DombSykesArgs da;
    CLI::App* ds = app.add_subcommand("domb-sykes", "ratio analysis of a series");
    ds->add_option("--series", da.series, "series JSON file")->required();
    ds->add_option("--nmin", da.nmin, "first ratio index used");
    ds->add_flag("--plot", da.plot, "emit (1/n, ratio) CSV instead of the fit");

    GibbsArgs ga;
    CLI::App* gibbs = app.add_subcommand(
        "gibbs", "square-wave partial sum vs trigonometric rational");
    gibbs->add_option("--n", ga.n, "number of Fourier terms")->required();
    gibbs->add_option("--grid", ga.grid, "output grid intervals");

    SolitonArgs sa;
    CLI::App* soliton = app.add_subcommand("soliton", "soliton amplitude condition");
    soliton->add_option("--order", sa.order, "approximant order N")->required();
    CLI::Option* lo = soliton->add_option("--lo", sa.lo, "bracket lower end");
    CLI::Option* hi = soliton->add_option("--hi", sa.hi, "bracket upper end");
    lo->needs(hi);
    hi->needs(lo);

    HermiteArgs ha;
    CLI::App* hermite = app.add_subcommand("hermite", "implicit algebraic approximant");
    hermite->add_option("--series", ha.series, "series JSON file")->required();
    hermite->add_option("--p", ha.p, "total degree of the implicit form")->required();
    hermite->add_option("--branches", ha.branch_eps,
                        "solve F(eps, .) = 0 at these eps (CSV re,im output)");

    InterpArgs ia;
    CLI::App* interp = app.add_subcommand("interp", "barycentric rational interpolation");
    interp->add_option("--data", ia.data, "points CSV file (x,y per line)")->required();
    interp->add_option("--eval", ia.evals, "evaluation points");
    interp->add_option("--grid", ia.grid, "emit x,y CSV on a uniform grid");

    CaseArgs cs;
    CLI::App* casecmd = app.add_subcommand("case", "worked application case");
    casecmd->add_option("id", cs.id, "case id")->required();
    casecmd->add_option("--eps", cs.params.eps, "parameter eps");
    casecmd->add_option("--n", cs.params.n, "parameter n");
    casecmd->add_option("--lattice", cs.lattice, "sc|bcc|fcc");
    casecmd->add_option("--c", cs.params.c, "volume fraction");
    casecmd->add_option("--kh", cs.params.kh, "wavenumber times spacing");
    casecmd->add_flag("--csv", cs.csv, "emit the case's plot grid as CSV");
    casecmd->add_flag("--json", cs.as_json, "emit the full case result as JSON");

    CLI::App* version = app.add_subcommand("version", "print version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    pa.poles_set = pade->count("--poles") > 0;
    sa.bracket_set = soliton->count("--lo") > 0;

    std::string stage = "asympt";
    try {
        if (pade->parsed()) { stage = "pade"; return run_pade(pa); }
        if (tppa->parsed()) { stage = "tppa"; return run_tppa(ta); }
        if (accel->parsed()) { stage = "accel"; return run_accel(aa); }
        if (cfrac->parsed()) { stage = "cfrac"; return run_cfrac(ca); }
        if (ds->parsed()) { stage = "domb-sykes"; return run_domb_sykes(da); }
        if (gibbs->parsed()) { stage = "gibbs"; return run_gibbs(ga); }
        if (soliton->parsed()) { stage = "soliton"; return run_soliton(sa); }
        if (hermite->parsed()) { stage = "hermite"; return run_hermite(ha); }
        if (interp->parsed()) { stage = "interp"; return run_interp(ia); }
        if (casecmd->parsed()) { stage = "case"; return run_case_cmd(cs); }
        if (version->parsed()) {
            std::cout << "asympt " << kVersion << "\n";
            return 0;
        }
    } catch (const asympt::NumericalError& e) {
        std::cerr << "asympt " << stage << ": numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const asympt::InvalidInput& e) {
        std::cerr << "asympt " << stage << ": input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "asympt " << stage << ": error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
