// Genus-0 Gromov-Witten potential of P^2 and its WDVV equation.
//
// The quantum part depends on q and y1 only through t = q * exp(y1), so it is
// stored as a series in (t, y2) and d/dy1 acts as the degree operator t d/dt.
// It has no y0 dependence. The classical cubic lives in (y0, y1, y2).
#pragma once

#include "gwcount/enumerative.hpp"
#include "gwcount/series.hpp"

namespace gwcount {

struct P2Potential {
    int truncation_degree = 0;
    /// 1/2 (y0^2 y2 + y0 y1^2), variables (y0, y1, y2).
    Series classical;
    /// sum_{d <= D} N_d t^d y2^(3d-1) / (3d-1)!, variables (t, y2), bounds (D, 3D-1).
    Series quantum;
};

/// Builds the potential through degree D, computing missing N_d into `table`.
P2Potential assemble_potential(int max_degree, CountTable& table);

/// Builds the potential from whatever values `table` holds (no recursion);
/// missing degrees throw. Used to probe the equation with altered counts.
P2Potential assemble_potential_from(int max_degree, const CountTable& table);

/// Third partial derivative d^3 Phi / dy_i dy_j dy_k, i, j, k in {0, 1, 2},
/// as a series in (t, y2) with the classical constant folded in.
Series phi_ijk(const P2Potential& p, int i, int j, int k);

/// Exponent window (t <= D, y2 <= 3D - 4) in which products of the truncated
/// derivatives are exact. Empty for D = 1.
struct ResidualWindow {
    int max_t = 0;
    int max_y2 = 0;
};
ResidualWindow residual_window(const P2Potential& p);

/// Phi_222 + Phi_111 Phi_122 - Phi_112^2.
Series wdvv_residual(const P2Potential& p);

struct ResidualReport {
    ResidualWindow window;
    std::size_t exponents_checked = 0;
    std::size_t nonzero_count = 0;
    BigInt max_abs_numerator = 0;
    bool vanishes() const { return nonzero_count == 0; }
};

/// Scans every exponent of the window.
ResidualReport check_wdvv(const P2Potential& p);

/// Solves for N_2..N_D by matching the t^d y2^(3d-4) coefficient of the WDVV
/// equation degree by degree, using only series arithmetic.
CountTable nd_from_wdvv(int max_degree);

}  // namespace gwcount
