#pragma once

#include "qshutter/table.hpp"
#include "qshutter/tomogram.hpp"
#include "qshutter/wigner.hpp"

namespace qshutter {

enum class sweep_axis { time, position };

// columns (x, t, w, density); the grid runs along the chosen axis while the
// other coordinate stays fixed
sample_table cmd_density(double k, double fixed_value, const grid_spec& g, sweep_axis axis);

// columns (w, C, S)
sample_table cmd_cornu(const grid_spec& w_grid);

// columns (x, p, W), x-major row order
sample_table cmd_wigner(double k, double t, const grid_spec& x_grid, const grid_spec& p_grid);

// columns (X, rho, w_tomogram)
sample_table cmd_tomogram(double k, double t, const frame& fr, const grid_spec& x_grid);

// columns (hbar, concentration_ratio), one row per requested hbar
sample_table cmd_classical(double k, double t, double x, const std::vector<double>& hbar_list,
                           double delta, double mass = 1.0);

} // namespace qshutter
