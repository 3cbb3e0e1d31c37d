#pragma once

#include <Eigen/Core>
#include <array>

#include "n7/orbits.hpp"
#include "n7/test_function.hpp"

namespace n7 {

// Uniform grid on a square window of R^2 (the section coordinates), possibly
// translated; quadrature weight is spacing^2 per point.  Kernels decay below
// 1e-8 at the window edge by construction, so the uniform weight agrees with
// the trapezoid rule to that accuracy.
struct Grid {
    int n = 48;
    double half_width = 6.0;
    std::array<double, 2> centre{0.0, 0.0};

    double spacing() const { return n > 1 ? 2.0 * half_width / (n - 1) : 0.0; }
    double weight() const { return spacing() * spacing(); }
    int size() const { return n * n; }
    std::array<double, 2> point(int flat) const {
        const int i = flat / n, j = flat % n;
        return {centre[0] - half_width + spacing() * i, centre[1] - half_width + spacing() * j};
    }
};

struct DiscretizedOperator {
    Eigen::MatrixXcd kernel;  // (z, u) entries with the du weight folded in
    Grid grid;
};

// Integral kernel of the induced representation at f on the grid:
//   K(z, u) = F^(z u^{-1}, Ad*(u) f |_p) * weight.
// The public entry point rejects Gamma0 functionals (characters go through
// character_transform); sigma assemblies use the unchecked variant, where the
// induced-from-character kernel is a well-defined non-irreducible operator.
DiscretizedOperator induced_kernel(const StructureConstants& sc, const GroupFunction& f,
                                   const std::vector<double>& functional, const Grid& grid);
DiscretizedOperator induced_kernel_any_layer(const StructureConstants& sc, const GroupFunction& f,
                                             const std::vector<double>& functional,
                                             const Grid& grid);

// Largest singular value (operator L2 norm of the discretized kernel).
double operator_norm(const Eigen::MatrixXcd& m);

// Character transform and the pi_0 sup norm over a centred 4-d grid.
Complex character_transform(const GroupFunction& f, const std::array<double, 4>& xi);

struct Grid4 {
    int n = 17;
    double half_width = 3.0;
    double spacing() const { return n > 1 ? 2.0 * half_width / (n - 1) : 0.0; }
};

double pi0_sup_norm(const GroupFunction& f, const Grid4& grid);

}  // namespace n7
