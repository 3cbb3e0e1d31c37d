#pragma once

#include <optional>
#include <string>
#include <vector>

#include "n7/coadjoint.hpp"
#include "n7/linalg_exact.hpp"
#include "n7/structure_constants.hpp"

namespace n7 {

// Skew form B_f(X_i, X_j) = f([X_i, X_j]).
RatMat skew_form(const StructureConstants& sc, const RatVec& f);

// Echelon-basis subspace of the algebra.
struct Subspace {
    RatMat basis;  // rows, reduced echelon
    int dim() const { return int(basis.size()); }
    bool contains(const RatVec& v) const { return in_span(basis, v); }
};

// Radical of B_f; equals the stabilizer algebra of f.
Subspace stabilizer(const StructureConstants& sc, const RatVec& f);

// Vergne polarization along an ascending chain of ideals.  The default flag
// is spanned by the reversed basis: n_1 = <X_dim>, n_2 = <X_dim, X_dim-1>, ...
// Returns the sum over i of the radicals of B_f restricted to n_i.
// subordination_ok is false when f([p,p]) != 0, which signals a flag that is
// not a chain of ideals.
struct Polarization {
    Subspace space;
    bool subordination_ok = true;
};
Polarization vergne_polarization(const StructureConstants& sc, const RatVec& f);
Polarization vergne_polarization(const StructureConstants& sc, const RatVec& f,
                                 const std::vector<RatMat>& flag);

enum class LayerTag { Gamma2, Gamma1, Gamma0 };

std::string layer_name(LayerTag tag);

// Exact classification: Gamma2 iff f7 != 0; Gamma1 iff f7 = 0 and
// (f5, f6) != (0, 0); Gamma0 otherwise.
LayerTag classify_layer(const RatVec& f);

// Floating variant with relative zero threshold (default 1e-12 * |f|_inf).
LayerTag classify_layer(const std::vector<double>& f, double zero_threshold = 1e-12);

struct OrbitDescriptor {
    LayerTag layer;
    std::vector<Rat> params;  // Gamma2: (f3, f4, f7); Gamma1: (f5, f6); Gamma0: (f1..f4)
    bool operator==(const OrbitDescriptor&) const = default;
};

// Orbit invariants I1 = 2 f3 f7 - f5^2 + f6^2, I2 = f4 f7 - f5 f6.
std::pair<Rat, Rat> orbit_invariants(const RatVec& f);
std::pair<double, double> orbit_invariants(const std::vector<double>& f);

// Canonical descriptor; equal for functionals on the same orbit.
OrbitDescriptor canonical_orbit(const RatVec& f);

// Points of the coadjoint orbit of f swept by the two-generator action of
// (x1, x2) over a uniform grid, plus stabilizer-direction sweeps that reach
// the full parameterization when f is in canonical position.
struct OrbitSampleSpec {
    int points_per_axis = 21;
    double extent = 10.0;  // parameter range [-extent, extent]
};
std::vector<std::vector<double>> orbit_sample(const StructureConstants& sc,
                                              const std::vector<double>& f,
                                              const OrbitSampleSpec& spec = {});

}  // namespace n7
