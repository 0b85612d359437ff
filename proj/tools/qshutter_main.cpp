#include "qshutter/commands.hpp"
#include "qshutter/errors.hpp"
#include "qshutter/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using qshutter::exit_code;
using qshutter::usage_error;

// optional JSON scenario file mirroring the flags; explicit flags win
class overlay {
public:
    void load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw usage_error("config: cannot open '" + path + "'");
        try {
            in >> j_;
        } catch (const std::exception& e) {
            throw usage_error("config: " + std::string(e.what()));
        }
        if (!j_.is_object())
            throw usage_error("config: top level must be an object");
    }

    bool has(const char* key) const { return j_.contains(key); }

    template <typename T> void apply(const CLI::Option* opt, const char* key, T& target) const
    {
        if ((opt && opt->count() > 0) || !has(key))
            return;
        try {
            target = j_.at(key).get<T>();
        } catch (const std::exception&) {
            throw usage_error("config: bad value for '" + std::string(key) + "'");
        }
    }

    bool given(const CLI::Option* opt, const char* key) const
    {
        return (opt && opt->count() > 0) || has(key);
    }

private:
    nlohmann::json j_;
};

void write_output(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw usage_error("cannot open output file '" + out_path + "'");
    out << text;
}

std::string render(const qshutter::sample_table& t, const std::string& format)
{
    if (format == "csv")
        return emit_csv(t);
    if (format == "json")
        return emit_json(t);
    throw usage_error("format must be csv or json, got '" + format + "'");
}

struct common_opts {
    std::string format = "csv";
    std::string out;
    std::string config;
    CLI::Option* config_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* out_opt = nullptr;

    void attach(CLI::App* sub)
    {
        format_opt = sub->add_option("--format", format, "output format: csv or json");
        out_opt = sub->add_option("--out", out, "write the table to this file");
        config_opt = sub->add_option("--config", config, "JSON scenario file; flags override");
    }

    overlay load_overlay() const
    {
        overlay ov;
        if (config_opt->count() > 0)
            ov.load(config);
        return ov;
    }

    void finish(const overlay& ov, const qshutter::sample_table& t)
    {
        std::string fmt = format, path = out;
        ov.apply(format_opt, "format", fmt);
        ov.apply(out_opt, "out", path);
        write_output(render(t, fmt), path);
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"shutter-release matter wave: densities, phase-space and tomographic views"};
    app.require_subcommand(1);
    int rc = int(exit_code::ok);

    // density
    auto* density = app.add_subcommand("density", "|amplitude|^2 along a time or space sweep");
    struct {
        double k = 1.0, t = 2.0, x = 0.0;
        std::string grid = "-6:6:121";
        common_opts io;
        CLI::Option *k_opt, *t_opt, *x_opt, *grid_opt;
    } den;
    den.k_opt = density->add_option("--k", den.k, "beam momentum");
    den.t_opt = density->add_option("--t", den.t, "fixed time (sweeps x)");
    den.x_opt = density->add_option("--x", den.x, "fixed position (sweeps t)");
    den.grid_opt = density->add_option("--grid", den.grid, "sweep grid start:stop:count");
    den.io.attach(density);
    density->callback([&] {
        overlay ov = den.io.load_overlay();
        ov.apply(den.k_opt, "k", den.k);
        ov.apply(den.t_opt, "t", den.t);
        ov.apply(den.x_opt, "x", den.x);
        ov.apply(den.grid_opt, "grid", den.grid);
        bool by_time = ov.given(den.x_opt, "x");
        bool by_space = ov.given(den.t_opt, "t");
        if (by_time && by_space)
            throw usage_error("density: give either --x (time sweep) or --t (space sweep)");
        auto g = qshutter::grid_spec::parse(den.grid);
        auto table = by_time
                         ? cmd_density(den.k, den.x, g, qshutter::sweep_axis::time)
                         : cmd_density(den.k, den.t, g, qshutter::sweep_axis::position);
        den.io.finish(ov, table);
    });

    // cornu
    auto* cornu = app.add_subcommand("cornu", "Fresnel pair (C, S) over a w grid");
    struct {
        std::string grid = "-5:5:201";
        common_opts io;
        CLI::Option* grid_opt;
    } cor;
    cor.grid_opt = cornu->add_option("--grid", cor.grid, "w grid start:stop:count");
    cor.io.attach(cornu);
    cornu->callback([&] {
        overlay ov = cor.io.load_overlay();
        ov.apply(cor.grid_opt, "grid", cor.grid);
        cor.io.finish(ov, qshutter::cmd_cornu(qshutter::grid_spec::parse(cor.grid)));
    });

    // wigner
    auto* wig = app.add_subcommand("wigner", "phase-space quasiprobability on an (x, p) grid");
    struct {
        double k = 1.0, t = 1.0;
        std::string xgrid = "-2:2:41", pgrid = "-1:3:41";
        common_opts io;
        CLI::Option *k_opt, *t_opt, *xgrid_opt, *pgrid_opt;
    } wg;
    wg.k_opt = wig->add_option("--k", wg.k, "beam momentum");
    wg.t_opt = wig->add_option("--t", wg.t, "time");
    wg.xgrid_opt = wig->add_option("--grid", wg.xgrid, "x grid start:stop:count");
    wg.pgrid_opt = wig->add_option("--pgrid", wg.pgrid, "p grid start:stop:count");
    wg.io.attach(wig);
    wig->callback([&] {
        overlay ov = wg.io.load_overlay();
        ov.apply(wg.k_opt, "k", wg.k);
        ov.apply(wg.t_opt, "t", wg.t);
        ov.apply(wg.xgrid_opt, "grid", wg.xgrid);
        ov.apply(wg.pgrid_opt, "pgrid", wg.pgrid);
        wg.io.finish(ov, qshutter::cmd_wigner(wg.k, wg.t, qshutter::grid_spec::parse(wg.xgrid),
                                              qshutter::grid_spec::parse(wg.pgrid)));
    });

    // tomogram
    auto* tomo = app.add_subcommand("tomogram", "tomographic density over an X grid");
    struct {
        double k = 1.0, t = 2.0, mu = 1.0, nu = 0.0, tau = 0.0, theta = 0.0;
        std::string grid = "-6:10:161";
        common_opts io;
        CLI::Option *k_opt, *t_opt, *mu_opt, *nu_opt, *tau_opt, *theta_opt, *grid_opt;
    } tm;
    tm.k_opt = tomo->add_option("--k", tm.k, "beam momentum");
    tm.t_opt = tomo->add_option("--t", tm.t, "time");
    tm.mu_opt = tomo->add_option("--mu", tm.mu, "frame coefficient on x");
    tm.nu_opt = tomo->add_option("--nu", tm.nu, "frame coefficient on p");
    tm.tau_opt = tomo->add_option("--tau", tm.tau, "frame scale angle (with --theta)");
    tm.theta_opt = tomo->add_option("--theta", tm.theta, "frame rotation angle (with --tau)");
    tm.grid_opt = tomo->add_option("--grid", tm.grid, "X grid start:stop:count");
    tm.io.attach(tomo);
    tomo->callback([&] {
        overlay ov = tm.io.load_overlay();
        ov.apply(tm.k_opt, "k", tm.k);
        ov.apply(tm.t_opt, "t", tm.t);
        ov.apply(tm.mu_opt, "mu", tm.mu);
        ov.apply(tm.nu_opt, "nu", tm.nu);
        ov.apply(tm.tau_opt, "tau", tm.tau);
        ov.apply(tm.theta_opt, "theta", tm.theta);
        ov.apply(tm.grid_opt, "grid", tm.grid);
        bool by_mu = ov.given(tm.mu_opt, "mu") || ov.given(tm.nu_opt, "nu");
        bool by_angle = ov.given(tm.tau_opt, "tau") || ov.given(tm.theta_opt, "theta");
        if (by_mu && by_angle)
            throw usage_error("tomogram: give the frame as --mu/--nu or --tau/--theta, not both");
        qshutter::frame fr = by_angle ? qshutter::frame_from_angles(tm.tau, tm.theta)
                                      : qshutter::frame{tm.mu, tm.nu};
        tm.io.finish(ov, qshutter::cmd_tomogram(tm.k, tm.t, fr,
                                                qshutter::grid_spec::parse(tm.grid)));
    });

    // classical
    auto* cls = app.add_subcommand("classical", "concentration ratio along an hbar ladder");
    struct {
        double k = 1.0, t = 1.0, x = 0.0, delta = 0.05, mass = 1.0;
        std::vector<double> hbar = {1.0, 0.3, 0.1, 0.03, 0.01};
        common_opts io;
        CLI::Option *k_opt, *t_opt, *x_opt, *delta_opt, *mass_opt, *hbar_opt;
    } cl;
    cl.k_opt = cls->add_option("--k", cl.k, "beam momentum");
    cl.t_opt = cls->add_option("--t", cl.t, "time");
    cl.x_opt = cls->add_option("--x", cl.x, "position, must be behind the front");
    cl.delta_opt = cls->add_option("--delta", cl.delta, "momentum half-width");
    cl.mass_opt = cls->add_option("--mass", cl.mass, "particle mass");
    cl.hbar_opt = cls->add_option("--hbar", cl.hbar, "hbar values, one row each");
    cl.io.attach(cls);
    cls->callback([&] {
        overlay ov = cl.io.load_overlay();
        ov.apply(cl.k_opt, "k", cl.k);
        ov.apply(cl.t_opt, "t", cl.t);
        ov.apply(cl.x_opt, "x", cl.x);
        ov.apply(cl.delta_opt, "delta", cl.delta);
        ov.apply(cl.mass_opt, "mass", cl.mass);
        ov.apply(cl.hbar_opt, "hbar", cl.hbar);
        cl.io.finish(ov, qshutter::cmd_classical(cl.k, cl.t, cl.x, cl.hbar, cl.delta, cl.mass));
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run the invariant and oracle-equivalence suite");
    std::string level = "quick";
    ver->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    ver->callback([&] {
        qshutter::verify_report report = qshutter::run_verify(level == "full");
        std::fputs(qshutter::format_report(report).c_str(), stdout);
        if (!report.all_pass())
            rc = int(exit_code::verification);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return int(exit_code::usage);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(exit_code::usage);
    } catch (const qshutter::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(exit_code::domain);
    } catch (const qshutter::quadrature_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(exit_code::domain);
    }
    return rc;
}
