#include <Eigen/Dense>
#include <random>

#include "n7/induced_kernel.hpp"

namespace n7 {

// Largest singular value by block power iteration on K^H K.  Deterministic
// (fixed seed); the value estimate converges even when the top singular
// values are nearly degenerate, since the Ritz value is squeezed between
// sigma_2^2 and sigma_1^2.
double operator_norm(const Eigen::MatrixXcd& m) {
    const Eigen::Index n = m.cols();
    if (n == 0 || m.rows() == 0) return 0.0;
    const double fro = m.norm();
    if (fro == 0.0) return 0.0;
    if (n <= 24) return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);

    const Eigen::Index block = std::min<Eigen::Index>(6, n);
    std::mt19937 rng(20240901u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd v(n, block);
    for (Eigen::Index j = 0; j < block; ++j)
        for (Eigen::Index i = 0; i < n; ++i) v(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
    v = qr.householderQ() * Eigen::MatrixXcd::Identity(n, block);

    double estimate = 0.0;
    const int max_iters = 600;
    for (int it = 0; it < max_iters; ++it) {
        Eigen::MatrixXcd kv = m * v;
        Eigen::MatrixXcd gram = kv.adjoint() * kv;  // block x block
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
        const double next = std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
        const bool converged = it > 2 && std::abs(next - estimate) <= 1e-12 * (1.0 + next);
        estimate = next;
        if (converged) break;
        Eigen::MatrixXcd w = m.adjoint() * kv;
        Eigen::HouseholderQR<Eigen::MatrixXcd> step(w);
        v = step.householderQ() * Eigen::MatrixXcd::Identity(n, block);
    }
    return estimate;
}

}  // namespace n7
