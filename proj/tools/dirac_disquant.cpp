// Command-line front end: verification suites, helix and rotator trajectories,
// rigidity sweeps and the particle/rotator parameter identification.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "disquant/error.hpp"
#include "disquant/particle.hpp"
#include "disquant/report.hpp"
#include "disquant/rotator.hpp"
#include "disquant/verify.hpp"

using namespace disquant;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct Global {
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "json";
    double tol_scale = 1.0;
};

unsigned worker_count()
{
    unsigned n = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("DIRAC_DISQUANT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

void emit(const Global& g, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + g.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_verify(const Global& g, const std::string& suite, const VerifyConfig& base)
{
    VerifyConfig cfg = base;
    cfg.seed = g.seed;
    cfg.tol_scale = g.tol_scale;
    cfg.threads = worker_count();
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport rep = run_verification(suite, cfg);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(g, g.format == "csv" ? to_csv(rep) : dump(to_json(rep)));
    for (const auto& r : rep.records)
        if (!r.pass)
            std::fprintf(stderr, "FAIL %s/%s residual=%s tolerance=%s\n", r.suite.c_str(), r.id.c_str(),
                         fmt_num(r.residual).c_str(), fmt_num(r.tolerance).c_str());
    std::fprintf(stderr, "%s: %zu/%zu checks passed (%.3f s)\n", suite.c_str(), rep.passed(), rep.records.size(), wall);
    return rep.all_pass() ? exit_ok : exit_check_failed;
}

int cmd_helix(const Global& g, double b, double phase, const DcParams& p, double tmax, double dt)
{
    if (!(dt > 0.0)) throw Error(ErrorKind::Domain, "dt must be positive");
    if (!(tmax >= 0.0)) throw Error(ErrorKind::Domain, "tmax must be nonnegative");
    const HelixSolution h = helix_solution(b, phase, p);
    const auto n = static_cast<std::size_t>(std::floor(tmax / dt + 1e-9)) + 1;
    const Vec3 xi = h.xi();
    if (g.format == "csv") {
        CsvWriter w({"t", "x", "y_coord", "z_coord", "xi1", "xi2", "xi3"});
        w.comment("schema=" + std::string(schema_tag));
        const auto meta = to_json(h);
        for (const auto& [k, v] : meta.items())
            if (!v.is_object()) w.comment(k + "=" + fmt_num(v.get<double>()));
        w.comment("units m=" + fmt_num(p.m) + " hbar=" + fmt_num(p.hbar) + " c=" + fmt_num(p.c));
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) * dt;
            const Vec4 x = h.position_at_time(t);
            w.row({t, x[1], x[2], x[3], xi[0], xi[1], xi[2]});
        }
        emit(g, w.str());
    } else {
        json j;
        j["schema"] = schema_tag;
        j["helix"] = to_json(h);
        j["columns"] = {"t", "x", "y_coord", "z_coord", "xi1", "xi2", "xi3"};
        auto rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) * dt;
            const Vec4 x = h.position_at_time(t);
            rows.push_back({t, x[1], x[2], x[3], xi[0], xi[1], xi[2]});
        }
        j["samples"] = rows;
        emit(g, dump(j));
    }
    return exit_ok;
}

int cmd_rotator(const Global& g, const RotatorParams& rp, const std::string& mode, std::size_t steps, double periods)
{
    if (steps < 1) throw Error(ErrorKind::Domain, "steps must be positive");
    const ClosedFormRotator cf = closed_form_rotator(rp);
    const double span = std::isfinite(cf.period_tau()) ? periods * cf.period_tau() : periods;
    const double dt = span / static_cast<double>(steps);

    std::vector<RotatorState> states;
    json summary;
    if (mode == "integrate") {
        const RotatorTrajectory tr = integrate_rotator(rp, cf.state_at(0.0), steps, dt);
        double dev = 0;
        for (const auto& s : tr.samples) {
            states.push_back(s.state);
            const RotatorState e = cf.state_at(s.state.tau);
            dev = std::max({dev, max_abs((s.state.X + s.state.x) - (e.X + e.x)), max_abs((s.state.X - s.state.x) - (e.X - e.x))});
        }
        summary["max_position_deviation"] = dev;
        summary["max_constraint_monitor"] = tr.max_monitor;
        summary["max_pre_projection_drift"] = tr.max_pre_projection_drift;
        summary["zeta_relative_drift"] = tr.zeta_drift;
    } else {
        for (std::size_t i = 0; i <= steps; ++i) states.push_back(cf.state_at(static_cast<double>(i) * dt));
    }

    const std::vector<std::string> cols = {"t", "x1_1", "x1_2", "x2_1", "x2_2", "c_xx", "c_px", "c_Pp", "c_pp", "c_Xdx"};
    auto row_of = [&](const RotatorState& s) {
        const auto m = constraint_monitors(s, rp);
        const Vec4 x1 = s.X + s.x, x2 = s.X - s.x;
        return std::vector<double>{x1[0], x1[1], x1[2], x2[1], x2[2], m[0], m[1], m[2], m[3], m[4]};
    };
    json meta;
    meta["mode"] = mode;
    meta["m0"] = rp.m0;
    meta["a"] = rp.a;
    meta["P0"] = rp.P0;
    meta["phase"] = rp.phase;
    meta["omega"] = cf.omega;
    meta["omega0"] = cf.omega0;
    meta["dtau"] = dt;
    if (g.format == "csv") {
        CsvWriter w(cols);
        w.comment("schema=" + std::string(schema_tag));
        for (const auto& [k, v] : meta.items()) w.comment(k + "=" + (v.is_string() ? v.get<std::string>() : fmt_num(v.get<double>())));
        for (const auto& [k, v] : summary.items()) w.comment(k + "=" + fmt_num(v.get<double>()));
        for (const auto& s : states) w.row(row_of(s));
        emit(g, w.str());
    } else {
        json j;
        j["schema"] = schema_tag;
        j["rotator"] = meta;
        if (!summary.empty()) j["summary"] = summary;
        j["columns"] = cols;
        auto rows = json::array();
        for (const auto& s : states) rows.push_back(row_of(s));
        j["samples"] = rows;
        emit(g, dump(j));
    }
    if (!summary.empty())
        std::fprintf(stderr, "max deviation %s, max monitor %s, zeta drift %s\n",
                     fmt_num(summary["max_position_deviation"].get<double>()).c_str(),
                     fmt_num(summary["max_constraint_monitor"].get<double>()).c_str(),
                     fmt_num(summary["zeta_relative_drift"].get<double>()).c_str());
    return exit_ok;
}

int cmd_rigidity(const Global& g, double m0, double hbar, double c, double a_min, double a_max, std::size_t n)
{
    const double bound = hbar / (4.0 * m0 * c);
    if (!(a_max < bound)) {
        std::fprintf(stderr, "error: a_max must be below the bound hbar/(4 m0 c) = %s\n", fmt_num(bound).c_str());
        return exit_usage;
    }
    const RigidityCurve curve = rigidity_curve(m0, hbar, c, a_min, a_max, n);
    if (g.format == "csv") {
        CsvWriter w({"a", "gamma"});
        w.comment("schema=" + std::string(schema_tag));
        w.comment("a_bound=" + fmt_num(curve.a_bound) + " m0=" + fmt_num(m0) + " hbar=" + fmt_num(hbar) + " c=" + fmt_num(c));
        for (const auto& [a, gm] : curve.samples) w.row({a, gm});
        emit(g, w.str());
    } else {
        json j;
        j["schema"] = schema_tag;
        j["domain"] = {{"a_min", a_min}, {"a_max", a_max}, {"a_bound", curve.a_bound}};
        j["units"] = {{"m0", m0}, {"hbar", hbar}, {"c", c}};
        j["columns"] = {"a", "gamma"};
        auto rows = json::array();
        for (const auto& [a, gm] : curve.samples) rows.push_back({a, gm});
        j["samples"] = rows;
        emit(g, dump(j));
    }
    return exit_ok;
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

int cmd_identify(const Global& g, const std::string& direction, double v, double zeta, double m0, double m, double hbar,
                 double c, double e)
{
    json j;
    j["schema"] = schema_tag;
    j["direction"] = direction;
    double residual = 0;
    RrToDcr rr;
    DcrToRr dr;
    if (direction == "rr_to_dcr") {
        rr = identify_rr_to_dcr(v, m0, hbar, c, e);
        const double z = 4.0 * rr.a * rr.m * c / hbar;
        dr = identify_dcr_to_rr(z, rr.m);
        residual = std::max({rel(dr.m0, m0), rel(dr.M, rr.m_dcr),
                             std::fabs(rigidity(rr.a, m0, hbar, c) - mass_increase(v * c, c))});
    } else if (direction == "dcr_to_rr") {
        dr = identify_dcr_to_rr(zeta, m);
        const double vf = zeta / (std::sqrt(1.0 + zeta * zeta) + 1.0);
        rr = identify_rr_to_dcr(vf, dr.m0, hbar, c, e);
        residual = std::max({rel(rr.m, m), rel(rr.m_dcr, dr.M),
                             std::fabs(rigidity(rr.a, dr.m0, hbar, c) - mass_increase(vf * c, c))});
    } else {
        std::fprintf(stderr, "error: direction must be dcr_to_rr or rr_to_dcr\n");
        return exit_usage;
    }
    j["dcr"] = {{"zeta", dr.zeta}, {"m", rr.m}, {"m_dcr", rr.m_dcr}, {"omega_dcr", rr.omega_dcr}, {"a", rr.a}};
    j["rr"] = {{"v", rr.v},
               {"m0", rr.m0},
               {"M", dr.M},
               {"angular_momentum", rr.angular_momentum},
               {"magnetic_moment", rr.magnetic_moment},
               {"moment_ratio", rr.moment_ratio}};
    j["units"] = {{"hbar", hbar}, {"c", c}, {"e", e}};
    j["residual"] = residual;
    if (g.format == "csv") {
        CsvWriter w({"key", "value"});
        for (const char* grp : {"dcr", "rr"})
            for (const auto& [k, val] : j[grp].items()) w.row_text({std::string(grp) + "." + k, fmt_num(val.get<double>())});
        w.row_text({"residual", fmt_num(residual)});
        emit(g, w.str());
    } else {
        emit(g, dump(j));
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dynamic disquantization laboratory: Dirac spinor algebra, classical Dirac particle, relativistic rotator"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--tol-scale", g.tol_scale, "multiplier applied to every tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    VerifyConfig vcfg;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
    verify->add_option("suite", suite, "all|algebra|appendixA|appendixB|appendixC|particle|rotator|consistency")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    verify->add_option("--m", vcfg.m, "particle mass")->capture_default_str();
    verify->add_option("--m0", vcfg.m0, "rotator particle mass")->capture_default_str();
    verify->add_option("--hbar", vcfg.hbar, "quantum constant")->capture_default_str();
    verify->add_option("--c", vcfg.c, "speed of light")->capture_default_str();
    verify->add_option("--e", vcfg.e, "charge")->capture_default_str();

    DcParams dp;
    double b = 1.0, phase = 0.0, tmax = 10.0, dt = 0.01;
    auto* helix = app.add_subcommand("helix", "closed-form helix trajectory")->fallthrough();
    helix->add_option("--b", b, "helix constant b >= 0")->capture_default_str();
    helix->add_option("--m", dp.m, "mass")->capture_default_str();
    helix->add_option("--hbar", dp.hbar, "quantum constant")->capture_default_str();
    helix->add_option("--c", dp.c, "speed of light")->capture_default_str();
    helix->add_option("--phase", phase, "initial phase")->capture_default_str();
    helix->add_option("--tmax", tmax, "final time")->capture_default_str();
    helix->add_option("--dt", dt, "sampling interval")->capture_default_str();

    RotatorParams rp;
    std::string mode = "closed";
    std::size_t steps = 2000;
    double periods = 1.0;
    auto* rot = app.add_subcommand("rotator", "relativistic rotator worldlines")->fallthrough();
    rot->add_option("--m0", rp.m0, "particle mass")->capture_default_str();
    rot->add_option("--a", rp.a, "half separation")->capture_default_str();
    rot->add_option("--P0", rp.P0, "total energy (>= 2 m0)")->capture_default_str();
    rot->add_option("--phase", rp.phase, "initial phase")->capture_default_str();
    rot->add_option("--mode", mode, "closed|integrate")->check(CLI::IsMember({"closed", "integrate"}))->capture_default_str();
    rot->add_option("--steps", steps, "steps over the sampled span")->capture_default_str();
    rot->add_option("--periods", periods, "number of rotation periods")->capture_default_str();

    double m0 = 1.0, hbar = 1.0, c = 1.0, a_min = 0.0, a_max = 0.24;
    std::size_t n = 101;
    auto* rig = app.add_subcommand("rigidity", "rigidity function sweep")->fallthrough();
    rig->add_option("--m0", m0, "particle mass")->capture_default_str();
    rig->add_option("--hbar", hbar, "quantum constant")->capture_default_str();
    rig->add_option("--c", c, "speed of light")->capture_default_str();
    rig->add_option("--a-min", a_min, "first radius")->capture_default_str();
    rig->add_option("--a-max", a_max, "last radius (< hbar/(4 m0 c))")->capture_default_str();
    rig->add_option("--n", n, "number of samples")->capture_default_str();

    std::string direction = "rr_to_dcr";
    double v = 0.5, zeta = 1.0, mi = 1.0, m0i = 1.0, hi = 1.0, ci = 1.0, e = 1.0;
    auto* idf = app.add_subcommand("identify", "map between helix and rotator parameters")->fallthrough();
    idf->add_option("--direction", direction, "dcr_to_rr|rr_to_dcr")
        ->check(CLI::IsMember({"dcr_to_rr", "rr_to_dcr"}))
        ->capture_default_str();
    idf->add_option("--v", v, "rotation speed as a fraction of c")->capture_default_str();
    idf->add_option("--zeta", zeta, "helix radius parameter")->capture_default_str();
    idf->add_option("--m0", m0i, "rotator particle mass")->capture_default_str();
    idf->add_option("--m", mi, "particle mass")->capture_default_str();
    idf->add_option("--hbar", hi, "quantum constant")->capture_default_str();
    idf->add_option("--c", ci, "speed of light")->capture_default_str();
    idf->add_option("--e", e, "charge")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return exit_usage;
    }

    try {
        if (*verify) return cmd_verify(g, suite, vcfg);
        if (*helix) return cmd_helix(g, b, phase, dp, tmax, dt);
        if (*rot) return cmd_rotator(g, rp, mode, steps, periods);
        if (*rig) return cmd_rigidity(g, m0, hbar, c, a_min, a_max, n);
        if (*idf) return cmd_identify(g, direction, v, zeta, m0i, mi, hi, ci, e);
    } catch (const Error& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return exit_usage;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return exit_usage;
    }
    return exit_usage;
}
