#pragma once

#include <array>

#include "geq/rates.hpp"

namespace geq {

struct GridSpec {
    std::string problem;
    double x_min = -4, x_max = 4;
    double y_min = -4, y_max = 4;
    int n_per_axis = 41;
    SolveConfig cfg;
};

/// Case 0: both converge, Newton cost <= Halley cost.
/// Case 1: both converge, Halley cost < Newton cost.
/// Case 2: Halley converges, Newton does not.
/// Case 3: Halley does not converge.
struct GridCellResult {
    double x0_1 = 0, x0_2 = 0;
    int case_id = 0;
    long newton_iters = 0, halley_iters = 0;
    long newton_cost = 0, halley_cost = 0;
    double newton_time = 0, halley_time = 0;
};

struct GridResult {
    std::vector<GridCellResult> cells;
    std::array<long, 4> case_counts{0, 0, 0, 0};
};

/// Tables 1-3 as CSV text (columns k, iterate components to 6 decimals,
/// e_k in 2-decimal-mantissa scientific notation, r_k, L_k to 6 decimals).
std::string reproduce_table(const std::string& name, const SolveConfig& cfg);

GridCellResult classify_cell(const ProblemInstance& P, const Vector& x0, const SolveConfig& cfg);

/// Row-major lattice sweep from the lower-left corner, endpoints included.
GridResult run_grid(const GridSpec& spec);

std::string grid_to_csv(const GridResult& res, const GridSpec& spec);
std::string grid_summary_json(const GridResult& res, const GridSpec& spec);

/// (k, e_k) series for both methods from the same start, with trailing
/// sub-resolution errors trimmed (see trim_noise_tail); CSV columns
/// k, e_newton, e_halley with "-" past the shorter series.
std::string comparison_series_csv(const ProblemInstance& P, const Vector& x0,
                                  const SolveConfig& cfg);

/// Fixed-point / scientific cell formats shared by the table outputs.
std::string format_fixed6(const Scalar& v);
std::string format_sci2(const Scalar& v);

}  // namespace geq
