#pragma once

#include <vector>

#include "n7/rational.hpp"

namespace n7 {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Basis of the null space of m (as rows), in reduced echelon form.
RatMat kernel_basis(const RatMat& m, int cols);

// Reduced echelon basis of the row span.
RatMat row_space_basis(RatMat m);

// Echelon basis of the sum of two row spans.
RatMat span_sum(const RatMat& a, const RatMat& b);

// Whether v lies in the row span of basis (basis need not be reduced).
bool in_span(const RatMat& basis, const RatVec& v);

}  // namespace n7
