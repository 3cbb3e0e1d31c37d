#pragma once

#include <array>
#include <vector>

#include "n7/schedules.hpp"
#include "n7/structure_constants.hpp"

namespace n7 {

// Grid-section coordinates u parameterize the section as X(u) = exp(u1 X1 +
// u2 X2); the kernel's symbol argument at u is q(u) = Ad*(u) f |_p.  The box
// machinery is phrased directly in these coordinates: the slab of index j
// concentrates the symbol slot f5 near j eps (generic) etc., which places the
// box centre at minus the translate g_j.

// q(u) for the canonical Gamma2 representative p_k of a schedule (slots 3..7).
std::array<double, 5> symbol_at(const StructureConstants& sc, const std::vector<double>& p_k,
                                const std::array<double, 2>& u);

// ---------- generic case (c1 != 0) ----------

struct GenericBox {
    int j = 0;
    int m = 1;
    double u1_centre = 0, u2_centre = 0;
    double u1_half = 0;  // eps / (2 |i_k f7|): disjoint half-open slabs
    double u2_half = 0;  // m delta / |f7|
    bool contains(const std::array<double, 2>& u) const {
        return u[0] - u1_centre >= -u1_half && u[0] - u1_centre < u1_half &&
               std::abs(u[1] - u2_centre) <= u2_half;
    }
};

GenericBox box_generic(const ScheduleGeneric& s, int j, int m);

// V^k_{j,m+1} = U_{j-1,m+1} u U_{j,m+1} u U_{j+1,m+1}.
bool in_v_generic(const ScheduleGeneric& s, int j, int m, const std::array<double, 2>& u);

struct PinnedGeneric {
    int j = 0;
    std::array<double, 2> translate{};        // g^k_j = (x1_j, x2_j)
    std::vector<double> pinned;               // p^k_j extended by zero (7 coords, Gamma1)
    std::vector<double> limit_functional;     // Ad*(g_j) p^k_j, fed to the kernel builder
};

PinnedGeneric pinned_generic(const StructureConstants& sc, const ScheduleGeneric& s, int j);

// Symbol defect q_{p_k}(u) - q_{l_j}(u) per slot (3..7); the estimate bounds
// max over slots by gamma_k on U^k_{j,1}.
std::array<double, 5> pinned_defect_generic(const StructureConstants& sc,
                                            const ScheduleGeneric& s, const PinnedGeneric& pin,
                                            const std::array<double, 2>& u);

// ---------- degenerate case (c1 = 0) ----------

// Families are indexed by the pinned direction: 5 and 6 are the generic
// directions, 4 the central one.
struct DegenerateBoxSpec {
    int family = 6;  // 4, 5 or 6
    int j = 0;
    int m = 1;
};

// Membership of u in U^k_{j,i,m} = {u : q(u) in I^k_{j,i,m}}; I-cells are
// disjoint half-open slabs of width eps (families 5, 6) or delta^{1/4}
// (family 4) inside the respective S-regions.
bool in_u_degenerate(const StructureConstants& sc, const ScheduleDegenerate& s,
                     const std::vector<double>& p_k, const DegenerateBoxSpec& spec,
                     const std::array<double, 2>& u);

// V-sets: families 5, 6 take j' in {-1,0,1}; family 4 takes |j'| <= 2m+1,
// all at m+1.
bool in_v_degenerate(const StructureConstants& sc, const ScheduleDegenerate& s,
                     const std::vector<double>& p_k, const DegenerateBoxSpec& spec,
                     const std::array<double, 2>& u);

struct PinnedDegenerate {
    int family = 6;
    int j = 0;
    std::array<double, 2> translate{};     // zero for family 4
    std::vector<double> pinned;            // p^k_{j,i} extended by zero
    std::vector<double> limit_functional;  // translate applied (families 5, 6)
};

PinnedDegenerate pinned_degenerate(const StructureConstants& sc, const ScheduleDegenerate& s,
                                   int j, int family);

std::array<double, 5> pinned_defect_degenerate(const StructureConstants& sc,
                                               const ScheduleDegenerate& s,
                                               const std::vector<double>& p_k,
                                               const PinnedDegenerate& pin,
                                               const std::array<double, 2>& u);

}  // namespace n7
