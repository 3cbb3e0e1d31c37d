#pragma once

#include <vector>

#include "n7/group_law.hpp"
#include "n7/polynomial.hpp"
#include "n7/structure_constants.hpp"

namespace n7 {

// ad(W) as an exact matrix: column j holds [W, X_j].
RatMat ad_matrix(const StructureConstants& sc, const RatVec& w);

// Ad(exp W) = e^{ad W}; the series terminates by nilpotency.
RatMat ad_exp(const StructureConstants& sc, const RatVec& w);
std::vector<std::vector<double>> ad_exp_double(const StructureConstants& sc,
                                               const std::vector<double>& w);

// Coadjoint action Ad*(g) f = f o Ad(g^{-1}) for g in first-kind
// coordinates.  This is a left action: Ad*(gh) = Ad*(g) Ad*(h).
RatVec coadjoint(const StructureConstants& sc, const RatVec& g, const RatVec& f);
std::vector<double> coadjoint(const StructureConstants& sc, const std::vector<double>& g,
                              const std::vector<double>& f);

// The same action with polynomial entries (used by the derivative check and
// the reference-formula comparison).
std::vector<Polynomial> coadjoint_poly(const StructureConstants& sc,
                                       const std::vector<Polynomial>& g,
                                       const std::vector<Polynomial>& f);

// The dual-pairing right action f |-> f o Ad(m(x)) where m(x) is the split
// chart element exp(x_1 X_1) exp(x_2 X_2 + ... + x_dim X_dim).  This is the
// convention of the reference Ad* table shipped in data/.  Output components
// are polynomials in (x_1..x_dim, f_1..f_dim).
PolynomialMap derive_coadjoint_split(const StructureConstants& sc);

// Parses a reference coadjoint table: lines "g<m> = <poly in x1..,f1..>".
PolynomialMap parse_coadjoint_file(const std::string& path, int dim);
PolynomialMap parse_coadjoint_text(const std::string& text, int dim);

std::vector<MonomialDiff> compare_coadjoint(const PolynomialMap& lhs, const PolynomialMap& rhs);

}  // namespace n7
