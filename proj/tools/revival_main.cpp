#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "revival/angle.hpp"
#include "revival/checks.hpp"
#include "revival/dispersion.hpp"
#include "revival/evolution.hpp"
#include "revival/grid.hpp"
#include "revival/kernels.hpp"
#include "revival/log.hpp"
#include "revival/profiles.hpp"
#include "revival/trigpolylog.hpp"

namespace {

using namespace revival;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

struct Output {
    std::FILE* f = nullptr;
    bool owned = false;
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") {
            f = stdout;
        } else {
            f = std::fopen(path.c_str(), "wb");
            if (f == nullptr)
                throw std::invalid_argument("cannot open output path: " + path);
            owned = true;
        }
    }
    ~Output() {
        if (owned) std::fclose(f);
    }
    void row(const std::vector<double>& cells) {
        for (size_t i = 0; i < cells.size(); ++i)
            std::fprintf(f, "%s%s", i ? "," : "", fmt17(cells[i]).c_str());
        std::fputc('\n', f);
    }
};

struct Options {
    int j = 1, k = 1, r = 1;
    std::string equation;
    long long p = 0, q = 1;
    double delta = 0.0;
    std::string method = "closed";
    long long nmodes = 100000;
    long long grid = 1001;
    double xmin = -pi, xmax = pi;
    std::string output = "-";
    bool shift_bo = false;
    std::string kind;
    long long truncation = 100;
    double tolerance_scale = 1.0;
};

DispersionSpec parse_equation(const Options& o, bool delta_given) {
    bool needs_delta = o.equation == "ilw" || o.equation == "smith";
    if (needs_delta && !delta_given)
        throw std::invalid_argument("--delta is required for " + o.equation);
    if (!needs_delta && delta_given)
        throw std::invalid_argument("--delta is only meaningful for ilw/smith");
    if (o.equation == "bo") return DispersionSpec::bo();
    if (o.equation == "kdv") return DispersionSpec::kdv();
    if (o.equation == "ilw") return DispersionSpec::ilw(o.delta);
    return DispersionSpec::smith(o.delta);
}

RevivalProfile closed_profile(const DispersionSpec& spec, const RationalTime& t) {
    switch (spec.equation) {
        case Equation::bo: return bo_rational_profile(t);
        case Equation::kdv: return kdv_rational_profile(t);
        case Equation::ilw: return ilw_rational_profile(t, spec.delta);
        case Equation::smith: return smith_rational_profile(t, spec.delta);
    }
    throw std::invalid_argument("unknown equation");
}

int cmd_polylog(const Options& o) {
    PolylogIndex idx(o.j, o.k, o.r);
    Grid g = Grid::uniform(o.grid, o.xmin, o.xmax);
    PolylogField field = sweep_polylog(idx, g, Exec::parallel);
    log_msg(LogLevel::info,
            "polylog: " + std::to_string(o.grid) + " rows to " + o.output);
    Output out(o.output);
    std::fputs("x,S,C\n", out.f);
    for (size_t i = 0; i < field.x.size(); ++i)
        out.row({field.x[i], field.S[i], field.C[i]});
    return 0;
}

int cmd_profile(const Options& o, bool delta_given) {
    DispersionSpec spec = parse_equation(o, delta_given);
    RationalTime t(o.p, o.q);
    Grid g = Grid::uniform(o.grid, o.xmin, o.xmax);
    SolutionField field;
    if (o.method == "closed") {
        field = sweep_profile(closed_profile(spec, t), g, Exec::parallel);
    } else {
        SeriesPlan plan = make_series_plan(
            spec, FourierInitialData::riemann_step(), t, o.nmodes);
        field = sweep_series(plan, g, Exec::parallel);
    }
    log_msg(LogLevel::info,
            "profile: " + std::to_string(o.grid) + " rows to " + o.output);
    Output out(o.output);
    std::fputs("x,u\n", out.f);
    for (size_t i = 0; i < field.x.size(); ++i) out.row({field.x[i], field.u[i]});
    return 0;
}

int cmd_compare(const Options& o, bool delta_given) {
    DispersionSpec spec = parse_equation(o, delta_given);
    if (o.shift_bo && spec.equation != Equation::ilw)
        throw std::invalid_argument("--shift-bo applies to --equation ilw only");
    RationalTime t(o.p, o.q);
    Grid g = Grid::uniform(o.grid, o.xmin, o.xmax);
    SeriesPlan plan =
        make_series_plan(spec, FourierInitialData::riemann_step(), t, o.nmodes);
    SolutionField series = sweep_series(plan, g, Exec::parallel);
    std::vector<double> reference;
    if (o.shift_bo) {
        // reference column: bo series advected by t/delta
        SeriesPlan bo_plan = make_series_plan(
            DispersionSpec::bo(), FourierInitialData::riemann_step(), t, o.nmodes);
        double shift = t.value() / spec.delta;
        reference =
            sweep_map(g, [&](double x) { return bo_plan.eval(x + shift); },
                      Exec::parallel);
    } else {
        reference = sweep_profile(closed_profile(spec, t), g, Exec::parallel).u;
    }
    double sup = 0.0;
    Output out(o.output);
    std::fputs("x,u_closed,u_series,abs_err\n", out.f);
    for (size_t i = 0; i < series.x.size(); ++i) {
        double err = std::abs(reference[i] - series.u[i]);
        if (!std::isnan(err)) sup = std::max(sup, err);
        out.row({series.x[i], reference[i], series.u[i], err});
    }
    std::printf("sup_abs_err = %s\n", fmt17(sup).c_str());
    return 0;
}

int cmd_kernel(const Options& o, bool delta_given) {
    KernelKind kind;
    bool needs_delta = true;
    if (o.kind == "hilbert") {
        kind = KernelKind::hilbert;
        needs_delta = false;
    } else if (o.kind == "ilw") {
        kind = KernelKind::ilw;
    } else if (o.kind == "smith") {
        kind = KernelKind::smith;
    } else {
        throw std::invalid_argument("--kind must be hilbert|ilw|smith");
    }
    if (needs_delta && !delta_given)
        throw std::invalid_argument("--delta is required for " + o.kind);
    if (!needs_delta && delta_given)
        throw std::invalid_argument("--delta is only meaningful for ilw/smith");
    Grid g = Grid::uniform(o.grid, o.xmin, o.xmax);
    Output out(o.output);
    std::fputs("x,re,im\n", out.f);
    for (long long i = 0; i < g.n; ++i) {
        KernelSample s = sample_kernel(kind, o.delta, o.truncation, g.point(i));
        out.row({s.x, s.value.real(), s.value.imag()});
    }
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<CheckResult> results = run_verification_suite(o.tolerance_scale);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%-34s %s  measured %.6g  bound %.6g\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.measured, r.bound);
        std::printf("    %s\n", r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("verify: %zu criteria, %s\n", results.size(),
                all ? "all passed" : "FAILURES present");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form revival profiles, truncated series, and kernels"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--grid", o.grid, "grid points (default 1001)");
        c->add_option("--xmin", o.xmin, "left endpoint (default -pi)");
        c->add_option("--xmax", o.xmax, "right endpoint (default pi)");
        c->add_option("-o,--output", o.output, "output path, - for stdout");
    };

    CLI::App* pl = app.add_subcommand("polylog", "tabulate S/C closed forms");
    pl->add_option("--j", o.j, "residue index")->required();
    pl->add_option("--k", o.k, "modulus")->required();
    pl->add_option("--r", o.r, "order")->required();
    add_common(pl);

    CLI::Option* delta_opt = nullptr;
    auto add_evolution = [&](CLI::App* c) {
        c->add_option("--equation", o.equation, "bo|kdv|ilw|smith")
            ->required()
            ->check(CLI::IsMember({"bo", "kdv", "ilw", "smith"}));
        c->add_option("--p", o.p, "time numerator (t = p*pi/q)");
        c->add_option("--q", o.q, "time denominator");
        delta_opt = c->add_option("--delta", o.delta, "depth parameter");
        c->add_option("--nmodes", o.nmodes, "series mode cutoff (default 1e5)");
        add_common(c);
    };

    CLI::App* pr = app.add_subcommand("profile", "evaluate one solution profile");
    add_evolution(pr);
    pr->add_option("--method", o.method, "closed|series")
        ->check(CLI::IsMember({"closed", "series"}));
    CLI::Option* pr_delta = delta_opt;

    CLI::App* cm = app.add_subcommand("compare", "closed form vs series table");
    add_evolution(cm);
    CLI::Option* cm_delta = delta_opt;
    cm->add_flag("--shift-bo", o.shift_bo,
                 "reference column is the bo series advected by t/delta");

    CLI::App* kn = app.add_subcommand("kernel", "tabulate a convolution kernel");
    kn->add_option("--kind", o.kind, "hilbert|ilw|smith")->required();
    CLI::Option* kn_delta = kn->add_option("--delta", o.delta, "depth parameter");
    kn->add_option("--truncation", o.truncation, "image/series truncation");
    add_common(kn);

    CLI::App* vf = app.add_subcommand("verify", "run the verification suite");
    vf->add_option("--tolerance-scale", o.tolerance_scale,
                   "multiply all bounds (test hook)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pl->parsed()) return cmd_polylog(o);
        if (pr->parsed()) return cmd_profile(o, pr_delta->count() > 0);
        if (cm->parsed()) return cmd_compare(o, cm_delta->count() > 0);
        if (kn->parsed()) return cmd_kernel(o, kn_delta->count() > 0);
        if (vf->parsed()) return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "argument error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
