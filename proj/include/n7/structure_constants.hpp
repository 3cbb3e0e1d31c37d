#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "n7/linalg_exact.hpp"
#include "n7/rational.hpp"

namespace n7 {

struct JacobiViolation {
    int i, j, k;         // 1-based basis indices of the failing triple
    RatVec residual;     // cyclic sum, nonzero
};

struct ValidationReport {
    bool antisymmetry_ok = true;
    bool jacobi_ok = true;
    bool nilpotent = false;
    int nilpotency_step = 0;  // smallest s with C^s = 0, C^1 = whole algebra
    std::vector<std::pair<int, int>> antisymmetry_violations;  // (i, j) pairs
    std::vector<JacobiViolation> jacobi_violations;
    std::vector<int> lower_central_dims;  // dim C^1, dim C^2, ...

    bool ok() const { return antisymmetry_ok && jacobi_ok && nilpotent; }
};

// Bracket tensor of a Lie algebra in a fixed basis, exact rational entries.
// [X_i, X_j] = sum_m c_{ij}^m X_m.  Indices are 1-based externally.
class StructureConstants {
  public:
    explicit StructureConstants(int dim) : dim_(dim) {}

    int dim() const { return dim_; }

    // Records c_{ij}^m = c and, unless (j,i) was itself listed, the
    // antisymmetric mirror c_{ji}^m = -c.
    void set_bracket(int i, int j, int m, const Rat& c);

    // Bracket of basis vectors: exact coordinate vector of [X_i, X_j].
    RatVec basis_bracket(int i, int j) const;

    // Bracket of coordinate vectors over any commutative ring R that
    // supports +, *, and construction from Rat via scale().
    template <typename R, typename Scale>
    std::vector<R> bracket(const std::vector<R>& x, const std::vector<R>& y,
                           Scale&& scale) const {
        std::vector<R> out(std::size_t(dim_), R(0));
        for (const auto& [ij, terms] : entries_) {
            const auto [i, j] = ij;
            if (i >= j) continue;  // use antisymmetry once per unordered pair
            R factor = x[std::size_t(i - 1)] * y[std::size_t(j - 1)] -
                       x[std::size_t(j - 1)] * y[std::size_t(i - 1)];
            for (const auto& [m, c] : terms)
                out[std::size_t(m - 1)] += scale(factor, c);
        }
        return out;
    }

    RatVec bracket(const RatVec& x, const RatVec& y) const {
        return bracket<Rat>(x, y, [](const Rat& f, const Rat& c) { return f * c; });
    }

    ValidationReport validate() const;
    int nilpotency_step() const;  // from validate(), cached

    // The file format is one bracket entry per line: "i j m num/den",
    // comments start with '#'.
    static StructureConstants load(const std::string& path);
    static StructureConstants parse(const std::string& text);

    // The N7 algebra of dimension 7 (classification label 137A_1).
    static StructureConstants n7();

  private:
    int dim_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> entries_;
    mutable int cached_step_ = -1;
};

}  // namespace n7
