#pragma once

#include <optional>
#include <vector>

#include "n7/dual_topology.hpp"
#include "n7/rule_expr.hpp"

namespace n7 {

// Per-k scalars of the layer-passing construction for a Gamma2 sequence with
// c1 = lim f4^k f7^k != 0.
struct ScheduleGeneric {
    int k = 0;
    double f3 = 0, f4 = 0, f7 = 0;
    double c1 = 0;
    double i_k = 0;      // c1 / (f7 f4)
    double nu = 0;       // |1 - i_k|, or 1/(k+1) when i_k = 1
    double eps = 0;      // |f7|/nu^{1/4} if |f7| < nu else |f7| R_k
    double delta = 0;    // |f7|/nu^{1/4} if |f7| < nu else nu^{3/4}
    double R = 0;
    double alpha = 0, beta = 0, gamma = 0;  // gamma = max(alpha, beta)
};

// Per-k scalars of the degenerate construction (c1 = 0).
struct ScheduleDegenerate {
    int k = 0;
    double f3 = 0, f4 = 0, f7 = 0;
    double R = 0;
    double eps = 0;    // |f7| R^{1/2}
    double nu = 0;     // eps + |f4 f7|
    double delta = 0;  // R^2 nu
};

// R-rules are validated against their limit conditions on the sampled tail:
// generic: R -> inf, R^2 |f7| -> 0, R nu^{3/4} -> 0; degenerate: R -> inf,
// R delta -> 0.  Throws std::invalid_argument("BAD_SEQUENCE ...") on misuse.
struct ScheduleOptions {
    std::optional<RuleExpr> r_rule;  // default: generic |f7|^{-1/4}, degenerate k^{1/4}
    int validation_horizon = 1000;
};

ScheduleGeneric schedule_generic_at(const OrbitSequence& seq, double c1, int k,
                                    const ScheduleOptions& opts = {});
std::vector<ScheduleGeneric> schedule_generic(const OrbitSequence& seq, double c1,
                                              const std::vector<int>& ks,
                                              const ScheduleOptions& opts = {});

ScheduleDegenerate schedule_degenerate_at(const OrbitSequence& seq, int k,
                                          const ScheduleOptions& opts = {});
std::vector<ScheduleDegenerate> schedule_degenerate(const OrbitSequence& seq,
                                                    const std::vector<int>& ks,
                                                    const ScheduleOptions& opts = {});

}  // namespace n7
