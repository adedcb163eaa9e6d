#pragma once

#include <cstdint>
#include <string>

namespace tgcert {

// Numeric knobs shared by the linear-algebra kernels. Defaults are the
// documented contract; nothing below is baked into the algorithms.
struct Tolerances {
    double schur_deflation = 1e-14;  // subdiagonal cutoff, relative to ||M||_F
    int schur_iter_factor = 100;     // QR iteration cap = factor * N
    double cluster = 1e-8;           // eigenvalue cluster radius, relative to ||M||_F
    double defect_sigma = 1e-6;      // sigma_min cutoff flagging a deficient eigenvector set
    double invariance = 1e-8;        // subspace invariance defect, relative to ||M||_2
    double expm_scale = 0.5;         // scale-and-square target for ||Mt / 2^s||_F
    int expm_terms = 18;             // Taylor truncation order after scaling
};

// Everything the analysis front end can tune, with defaults matching the
// library contracts. t_max <= 0 selects the 50/|max Re lambda| horizon.
struct AnalysisConfig {
    Tolerances tol;
    double oracle_margin = 1e-9;   // sweep peak must exceed 1 + margin
    double t_max = 0.0;            // exponential sweep horizon (0 = auto)
    std::int64_t n_max = 200;      // integer power sweep horizon
    std::int64_t steps = 1000;     // sweep grid steps
    std::int64_t boundary_points = 360;
    std::uint64_t seed = 42;
    std::string output_dir;
};

}  // namespace tgcert
