#pragma once

#include <string>
#include <vector>

#include "n7/bch.hpp"
#include "n7/polynomial.hpp"
#include "n7/structure_constants.hpp"

namespace n7 {

// Polynomial multiplication law: one polynomial per output coordinate, in
// the 2*dim variables (x_1..x_dim, y_1..y_dim), exact rational coefficients.
struct PolynomialMap {
    int dim = 0;
    std::vector<Polynomial> components;

    RatVec evaluate(const RatVec& g, const RatVec& h) const;
    std::vector<double> evaluate(const std::vector<double>& g,
                                 const std::vector<double>& h) const;
    std::vector<std::string> variable_names() const;
};

// Coordinate charts on the simply connected group.
//   FirstKind: g = exp(x_1 X_1 + ... + x_dim X_dim)   (the project default)
//   Split:     g = exp(x_1 X_1) exp(x_2 X_2 + ... + x_dim X_dim)
// The Split chart reproduces the reference multiplication table shipped in
// data/, which was generated in that chart.
enum class Chart { FirstKind, Split };

// Multiplication law derived from the structure constants by the truncated
// BCH series (exact for nilpotent algebras).
PolynomialMap derive_group_law(const StructureConstants& sc, Chart chart = Chart::FirstKind);

RatVec group_multiply(const PolynomialMap& law, const RatVec& g, const RatVec& h);

// Inverse in first-kind coordinates is coordinate-wise negation.
RatVec group_inverse_first_kind(const RatVec& g);

// Chart conversions (exact).
RatVec split_to_first_kind(const StructureConstants& sc, const RatVec& coords);
RatVec first_kind_to_split(const StructureConstants& sc, const RatVec& coords);

// One differing monomial between two laws.
struct MonomialDiff {
    int component;  // 1-based output coordinate
    std::string monomial;
    Rat lhs_coeff;
    Rat rhs_coeff;
};

std::vector<MonomialDiff> compare_laws(const PolynomialMap& lhs, const PolynomialMap& rhs);

// Parses a reference law file: lines "z<m> = <polynomial in x1..x7,y1..y7>".
PolynomialMap parse_law_file(const std::string& path, int dim);
PolynomialMap parse_law_text(const std::string& text, int dim);

}  // namespace n7
