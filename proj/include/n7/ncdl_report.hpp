#pragma once

#include <string>
#include <vector>

#include "n7/coherent_frame.hpp"
#include "n7/sigma.hpp"

namespace n7 {

enum class NcdlCase { Generic, Degenerate, Gamma0 };

std::string ncdl_case_name(NcdlCase c);

struct NcdlRow {
    int k = 0;
    double schedule_scalar = 0;  // gamma_k, R_k delta_k, or |(f5, f6)|
    double pi_norm = 0;
    double sigma_norm = 0;
    double diff_norm = 0;
    int active_terms = 0;
    std::array<double, 2> window_centre{0, 0};
};

struct NcdlReport {
    NcdlCase case_tag = NcdlCase::Generic;
    std::vector<NcdlRow> rows;
    bool decreasing = false;
    bool pass = false;
    double final_ratio = 0;  // last diff / first pi norm
    std::string note;
};

struct NcdlOptions {
    std::vector<int> k_list{4, 8, 16, 32};
    int grid_n = 48;
    double window = 6.0;
    double f5_ref = 1.0;          // generic window placement
    double tol_final = 0.1;       // pass when final diff < tol_final * first pi norm
    ScheduleOptions schedule{};
};

// Layer-passing convergence table: per k the operator pi_{l_k}(F) and the
// approximant sigma_k(F), both realized on a window centred where the k-th
// symbol mass sits, with the operator-norm difference.
NcdlReport ncdl_report(const StructureConstants& sc, const GroupFunction& f,
                       const OrbitSequence& seq, NcdlCase case_tag, const NcdlOptions& opts);

// Multiplicativity defect rows: |sigma_k(FG field) - sigma_k(F) sigma_k(G)|
// along the same ladder, where the FG field evaluates the product of induced
// kernels at each limit point (the operator field of the convolution).
struct MultiplicativityRow {
    int k = 0;
    double defect = 0;
    double sigma_f_norm = 0, sigma_g_norm = 0;
};

std::vector<MultiplicativityRow> multiplicativity_defect(const StructureConstants& sc,
                                                         const GroupFunction& f,
                                                         const GroupFunction& g,
                                                         const OrbitSequence& seq,
                                                         const NcdlOptions& opts);

}  // namespace n7
