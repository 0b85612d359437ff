#include "qshutter/commands.hpp"
#include "qshutter/errors.hpp"
#include "qshutter/specfun.hpp"

namespace qshutter {

sample_table cmd_density(double k, double fixed_value, const grid_spec& g, sweep_axis axis)
{
    sample_table t;
    t.columns = {"x", "t", "w", "density"};
    if (axis == sweep_axis::time && !(g.start > 0.0))
        throw domain_error("density: time grid must stay at t > 0");
    if (axis == sweep_axis::position && !(fixed_value > 0.0))
        throw domain_error("density: requires t > 0");
    for (double v : g.points()) {
        double x = axis == sweep_axis::time ? fixed_value : v;
        double tt = axis == sweep_axis::time ? v : fixed_value;
        double w = w_of({x, tt}, k);
        t.push({x, tt, w, m_density(w)});
    }
    return t;
}

sample_table cmd_cornu(const grid_spec& w_grid)
{
    sample_table t;
    t.columns = {"w", "C", "S"};
    for (double w : w_grid.points()) {
        fresnel_pair f = fresnel(w);
        t.push({w, f.c, f.s});
    }
    return t;
}

sample_table cmd_wigner(double k, double t, const grid_spec& x_grid, const grid_spec& p_grid)
{
    sample_table out;
    out.columns = {"x", "p", "W"};
    auto ps = p_grid.points();
    for (double x : x_grid.points())
        for (double p : ps)
            out.push({x, p, wigner_closed({x, p}, k, t)});
    return out;
}

sample_table cmd_tomogram(double k, double t, const frame& fr, const grid_spec& x_grid)
{
    sample_table out;
    out.columns = {"X", "rho", "w_tomogram"};
    for (double X : x_grid.points()) {
        tomogram_point tp{X, fr, k, t};
        out.push({X, rho_of(tp), tomogram_closed(tp)});
    }
    return out;
}

sample_table cmd_classical(double k, double t, double x, const std::vector<double>& hbar_list,
                           double delta, double mass)
{
    sample_table out;
    out.columns = {"hbar", "concentration_ratio"};
    for (double hbar : hbar_list)
        out.push({hbar, classical_concentration(k, t, x, {hbar, mass}, delta)});
    return out;
}

} // namespace qshutter
