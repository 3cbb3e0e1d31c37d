#pragma once

#include <functional>

#include "n7/boxes.hpp"
#include "n7/induced_kernel.hpp"

namespace n7 {

// Operator field over the limit layer: a bounded operator per limit
// functional, realized on the given grid.
using OperatorField =
    std::function<Eigen::MatrixXcd(const std::vector<double>& limit_functional, const Grid&)>;

struct SigmaResult {
    DiscretizedOperator op;
    int active_terms = 0;
    double sup_field_norm = 0;  // sup over the assembled limit points of |phi(l)|_op
};

// sigma_{k}(phi) = sum_j M_{V_{j,2}} phi(l_j) M_{U_{j,1}} over the slabs that
// meet the grid window.  The GroupFunction overloads evaluate phi through the
// induced kernel at the limit functionals and assemble only masked entries.
SigmaResult sigma_k_generic(const StructureConstants& sc, const GroupFunction& f,
                            const ScheduleGeneric& sched, const Grid& grid);
SigmaResult sigma_k_generic_field(const StructureConstants& sc, const OperatorField& field,
                                  const ScheduleGeneric& sched, const Grid& grid,
                                  bool with_norms = false);

SigmaResult sigma_k_degenerate(const StructureConstants& sc, const GroupFunction& f,
                               const ScheduleDegenerate& sched, const Grid& grid);
SigmaResult sigma_k_degenerate_field(const StructureConstants& sc, const OperatorField& field,
                                     const ScheduleDegenerate& sched, const Grid& grid,
                                     bool with_norms = false);

// pi_{l_k}(F) restricted to the window, for the same grid (the comparison
// side of the layer-passing check).
DiscretizedOperator pi_k_operator(const StructureConstants& sc, const GroupFunction& f,
                                  const std::vector<double>& p_k, const Grid& grid);

// Window placement: centres the grid where the symbol mass of the k-th
// operator sits (the slab whose f5-value is closest to ref).
std::array<double, 2> window_centre_generic(const ScheduleGeneric& sched, double f5_ref);
std::array<double, 2> window_centre_degenerate(const ScheduleDegenerate& sched);

}  // namespace n7
