#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>

#include "n7/induced_kernel.hpp"
#include "n7/test_function.hpp"

namespace n7 {

// Coherent frame on L^2(R^2) attached to a Gamma1 point (f5, f6): translated,
// modulated and dilated copies of a unit-norm 1-d profile, tensored over the
// two axes.  The translation parameters (f3, f4) enter through the rotation
// Q = [[f5, -f6], [f6, f5]]/r, which aligns the frame with the orientation in
// which the induced representation at (f5, f6) moves the slots 3 and 4; at
// (f5, f6) = (r, 0) the frame reduces to the plain translated-modulated form.
//
// Frame vector (per axis factor):
//   eta_f(s) = r^{1/2} e^{2 pi i s.(f1,f2)} eta(r^{1/2}(s1 + t1/r))
//                                           eta(r^{1/2}(s2 + t2/r)),
//   (t1, t2) = Q^T (f3, f4).
//
// Resolution of identity: xi = r^{-2} \int <xi, eta_f> eta_f df over R^4 (the
// square of the one-axis constant 1/r).
// Integration lattice over the frame parameters: modulations (f1, f2) and
// rotated shifts (t1, t2) = Q^T (f3, f4).  The natural resolution of both is
// sqrt(r): spacing = sqrt(r)/oversample.
struct FrameGrid {
    int n_freq = 0;
    double l_freq = 0;
    int n_shift = 0;
    double l_shift = 0;
    double spacing = 0;

    // Covers symbols with frequency content inside band_radius and test
    // vectors supported in the s-window of grid2.
    static FrameGrid automatic(double r, const Grid& grid2, double band_radius = 2.7,
                               double oversample = 3.5);
};

class CoherentFrame {
  public:
    // profile: unit-L2-norm factor (default 2^{1/4} e^{-pi t^2}).
    CoherentFrame(double f5, double f6, const Grid& grid2,
                  std::optional<FrameGrid> grid4 = std::nullopt,
                  AxisFactor profile = default_profile(), double scale_override = 0.0,
                  bool rotate = true);

    static AxisFactor default_profile();

    double scale() const { return r_; }  // r_{f5,f6} = sqrt(f5^2 + f6^2) by default
    double resolution_constant() const { return 1.0 / (r_ * r_); }

    // Frame vector sampled on grid2 (size n^2), not grid-normalized.
    Eigen::VectorXcd frame_vector(const std::array<double, 4>& f) const;

    // Rank-one orthogonal projection onto the grid-normalized frame vector.
    Eigen::MatrixXcd projection(const std::array<double, 4>& f) const;

    // sigma(h) = resolution_constant * sum_{f in grid4} w4 h(f) eta_f eta_f^* w2,
    // assembled through the tensor factorization of the frame.
    Eigen::MatrixXcd quantize(const std::function<Complex(const std::array<double, 4>&)>& h) const;

    // || xi - sigma(1) xi ||_2 / || xi ||_2 for a test vector on grid2.
    double resolution_error(const Eigen::VectorXcd& xi) const;

    const Grid& grid2() const { return grid2_; }
    const FrameGrid& grid4() const { return grid4_; }

  private:
    double f5_, f6_, r_;
    bool rotate_;
    Grid grid2_;
    FrameGrid grid4_;
    AxisFactor profile_;

    // 1-d frame factor over the s-grid for (freq, shift) parameters.
    Eigen::VectorXcd axis_vector(double freq, double shift) const;
};

// The quantized operator of a symbol h at (f5, f6): the sigma_l(h) of the
// characters-passage, with |sigma(h)|_op <= |h|_inf and sigma(conj h) =
// sigma(h)^*.
DiscretizedOperator sigma_gamma0(const StructureConstants& sc, double f5, double f6,
                                 const std::function<Complex(const std::array<double, 4>&)>& h,
                                 const Grid& grid2,
                                 std::optional<FrameGrid> grid4 = std::nullopt);

}  // namespace n7
