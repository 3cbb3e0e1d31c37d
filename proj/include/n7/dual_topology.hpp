#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "n7/orbits.hpp"
#include "n7/rule_expr.hpp"

namespace n7 {

// A sequence of orbits in a fixed layer, generated by closed-form rules in k.
struct OrbitSequence {
    LayerTag layer = LayerTag::Gamma2;
    // Gamma2: rules for f3, f4, f7.  Gamma1: rules for f5, f6.
    std::vector<RuleExpr> rules;
    int horizon = 200;

    OrbitDescriptor descriptor_at(int k) const;
    std::vector<double> params_at(int k) const;  // numeric parameter tuple
    // Canonical representative functional at index k.
    std::vector<double> representative_at(int k) const;
};

enum class LimitKind {
    PointInLayer,       // parameter sequence converges inside the layer
    CurveC1,            // Gamma2 -> Gamma1 hyperbola {f5 f6 = -c1}, c1 != 0
    AxesUnionCharacters,// Gamma2 -> {f5 f6 = 0} u Gamma0, c1 = 0
    AllCharacters,      // Gamma1 -> Gamma0
    Divergent
};

std::string limit_kind_name(LimitKind kind);

struct LimitSet {
    LimitKind kind = LimitKind::Divergent;
    std::optional<double> c1, c2;      // limits of f4 f7 and 2 f3 f7 (Gamma2 exits)
    std::vector<double> point;         // limit parameters for PointInLayer
    // Membership predicate of the limit set, as orbit parameters.
    bool contains(const OrbitDescriptor& o, double tol = 1e-9) const;
    bool contains_functional(const std::vector<double>& f, double tol = 1e-9) const;
};

struct LimitSetOptions {
    double tail_fraction = 0.25;  // last part of the horizon used for estimates
    double tolerance = 1e-6;      // Cauchy stabilization tolerance, scaled by 1+|c|
};

// Tail-estimated limit set of the sequence (DIVERGENT when the defining
// products fail to stabilize).
LimitSet limit_set(const OrbitSequence& seq, const LimitSetOptions& opts = {});

// Witness verification of a candidate limit functional.
//
// Mode::Stated constructs witnesses with the free slots pinned to the
// candidate (slots 1..5 for the hyperbola case); these witnesses satisfy the
// slot-4/6 orbit constraint exactly and their distance to the candidate is
// reported, together with the residual of the slot-3 orbit constraint.
// Mode::OnOrbit places every witness exactly on the orbit (slot 3 is then
// determined), so candidates whose slot 3 cannot be reached fail; this is the
// reading under which the additional constraint f6^2 - f5^2 = c2 becomes
// necessary.
enum class WitnessMode { Stated, OnOrbit };

struct WitnessReport {
    bool pass = false;
    bool in_limit_set = true;  // false => NOT_IN_LIMIT_SET
    double max_distance = 0;   // sup-norm distance over the sampled tail
    double max_orbit_defect = 0;  // slot-3 constraint residual (Stated mode)
    std::vector<std::vector<double>> witnesses;
    std::vector<double> distances;
    std::string note;
};

WitnessReport verify_limit(const OrbitSequence& seq, const std::vector<double>& candidate,
                           double tol, WitnessMode mode = WitnessMode::Stated, int K = 1000,
                           int samples = 16);

// One-sided Hausdorff distance from the clipped point cloud of `limit` into
// the clipped cloud of `seq_orbit` (sup over limit-cloud points of the
// sup-norm distance to the nearest sequence-cloud point).  `symmetric`
// additionally takes the reverse direction's maximum.
struct WindowSpec {
    double half_width = 10.0;
    int mesh = 21;
};

struct OrbitDistanceResult {
    double one_sided = 0;
    double symmetric = 0;
};

// Throws std::domain_error("EMPTY_WINDOW") when either clipped cloud is empty.
OrbitDistanceResult orbit_window_distance(const StructureConstants& sc,
                                          const OrbitDescriptor& seq_orbit,
                                          const OrbitDescriptor& limit_orbit,
                                          const WindowSpec& window = {});

}  // namespace n7
