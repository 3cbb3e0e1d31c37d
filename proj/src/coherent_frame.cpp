#include "n7/coherent_frame.hpp"

#include <cmath>
#include <stdexcept>

namespace n7 {

AxisFactor CoherentFrame::default_profile() {
    AxisFactor eta;
    eta.a = M_PI;
    eta.b = 0.0;
    eta.poly = {std::pow(2.0, 0.25)};  // unit L2 norm
    return eta;
}

FrameGrid FrameGrid::automatic(double r, const Grid& grid2, double band_radius,
                               double oversample) {
    FrameGrid g;
    g.spacing = std::sqrt(r) / oversample;
    // Modulations must cover the symbol band plus the profile's own
    // frequency width; shifts must park the profile anywhere in the window.
    // Frequencies beyond the s-grid Nyquist limit alias and must be cut.
    const double nyquist = 0.5 / grid2.spacing();
    g.l_freq = std::min(band_radius + 3.0 * std::sqrt(r), 0.98 * nyquist);
    g.l_shift = r * grid2.half_width + 3.0 * std::sqrt(r);
    g.n_freq = 2 * int(std::ceil(g.l_freq / g.spacing)) + 1;
    g.n_shift = 2 * int(std::ceil(g.l_shift / g.spacing)) + 1;
    return g;
}

CoherentFrame::CoherentFrame(double f5, double f6, const Grid& grid2,
                             std::optional<FrameGrid> grid4, AxisFactor profile,
                             double scale_override, bool rotate)
    : f5_(f5), f6_(f6), rotate_(rotate), grid2_(grid2), profile_(std::move(profile)) {
    r_ = scale_override > 0.0 ? scale_override : std::hypot(f5, f6);
    if (r_ <= 0.0) throw std::invalid_argument("SCALE_UNDEFINED: (f5, f6) = (0, 0)");
    if (grid2_.centre[0] != 0.0 || grid2_.centre[1] != 0.0)
        throw std::invalid_argument("coherent frame expects an origin-centred grid");
    grid4_ = grid4 ? *grid4 : FrameGrid::automatic(r_, grid2_);
}

Eigen::VectorXcd CoherentFrame::axis_vector(double freq, double shift) const {
    const int n = grid2_.n;
    Eigen::VectorXcd v(n);
    const double sqrt_r = std::sqrt(r_);
    const double quarter = std::pow(r_, 0.25);
    for (int i = 0; i < n; ++i) {
        const double s = -grid2_.half_width + grid2_.spacing() * i;
        const double phase = 2.0 * M_PI * s * freq;
        v(i) = quarter * Complex(std::cos(phase), std::sin(phase)) *
               profile_.value(sqrt_r * (s + shift / r_));
    }
    return v;
}

Eigen::VectorXcd CoherentFrame::frame_vector(const std::array<double, 4>& f) const {
    double t1 = f[2], t2 = f[3];
    if (rotate_) {
        const double c = f5_ / r_, s = f6_ / r_;
        t1 = c * f[2] + s * f[3];  // Q^T (f3, f4)
        t2 = -s * f[2] + c * f[3];
    }
    const Eigen::VectorXcd u = axis_vector(f[0], t1);
    const Eigen::VectorXcd v = axis_vector(f[1], t2);
    const int n = grid2_.n;
    Eigen::VectorXcd out(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i * n + j) = u(i) * v(j);
    return out;
}

Eigen::MatrixXcd CoherentFrame::projection(const std::array<double, 4>& f) const {
    Eigen::VectorXcd eta = frame_vector(f);
    const double nrm = eta.norm();
    if (nrm == 0.0) throw std::logic_error("frame vector vanished on the grid");
    eta /= nrm;
    return eta * eta.adjoint();
}

Eigen::MatrixXcd CoherentFrame::quantize(
    const std::function<Complex(const std::array<double, 4>&)>& h) const {
    const int n = grid2_.n;
    const double h4 = grid4_.spacing;
    const double w4 = h4 * h4 * h4 * h4;
    const double w2 = grid2_.weight();
    const double constant = resolution_constant() * w4 * w2;

    // Tensor split eta_f = u_{f1,t1} (x) v_{f2,t2} over the rotated shift
    // variables (t1, t2) = Q^T (f3, f4) (a measure-preserving substitution):
    //   sigma[(s1 s2),(z1 z2)] = C sum_b U_b[s1] conj(U_b[z1]) W_b[s2, z2],
    //   W_b[s2, z2] = sum_d h(b, d) V_d[s2] conj(V_d[z2]).
    std::vector<double> freq_ticks, shift_ticks;
    for (int i = 0; i < grid4_.n_freq; ++i) freq_ticks.push_back(-grid4_.l_freq + h4 * i);
    for (int i = 0; i < grid4_.n_shift; ++i) shift_ticks.push_back(-grid4_.l_shift + h4 * i);

    const int mb = int(freq_ticks.size() * shift_ticks.size());
    std::vector<Eigen::VectorXcd> axis;
    axis.resize(std::size_t(mb));
    std::vector<std::array<double, 2>> par;
    par.resize(std::size_t(mb));
    {
        int idx = 0;
        for (double fr : freq_ticks)
            for (double sh : shift_ticks) {
                par[std::size_t(idx)] = {fr, sh};
                axis[std::size_t(idx)] = axis_vector(fr, sh);
                ++idx;
            }
    }

    auto h_rot = [&](double f1, double f2, double t1, double t2) {
        double f3 = t1, f4 = t2;
        if (rotate_) {
            const double cc = f5_ / r_, ss = f6_ / r_;
            f3 = cc * t1 - ss * t2;  // (f3, f4) = Q (t1, t2)
            f4 = ss * t1 + cc * t2;
        }
        return h({f1, f2, f3, f4});
    };

    const int N = n * n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N, N);
    Eigen::MatrixXcd wb(n, n);
    std::vector<std::pair<Complex, int>> contributions;
    for (int b = 0; b < mb; ++b) {
        // Skip frame rows that cannot meet the grid window.
        if (axis[std::size_t(b)].norm() < 1e-14) continue;
        contributions.clear();
        for (int d = 0; d < mb; ++d) {
            const Complex hv = h_rot(par[std::size_t(b)][0], par[std::size_t(d)][0],
                                     par[std::size_t(b)][1], par[std::size_t(d)][1]);
            if (std::abs(hv) < 1e-14) continue;
            contributions.emplace_back(hv, d);
        }
        if (contributions.empty()) continue;
        wb.setZero();
#pragma omp parallel for schedule(static)
        for (int s2 = 0; s2 < n; ++s2)
            for (const auto& [hv, d] : contributions) {
                const auto& vd = axis[std::size_t(d)];
                if (std::abs(vd(s2)) < 1e-16) continue;
                const Complex lead = hv * vd(s2);
                for (int z2 = 0; z2 < n; ++z2) wb(s2, z2) += lead * std::conj(vd(z2));
            }
        const auto& ub = axis[std::size_t(b)];
#pragma omp parallel for schedule(static)
        for (int s1 = 0; s1 < n; ++s1) {
            if (std::abs(ub(s1)) < 1e-15) continue;
            for (int z1 = 0; z1 < n; ++z1) {
                if (std::abs(ub(z1)) < 1e-15) continue;
                const Complex lead = constant * ub(s1) * std::conj(ub(z1));
                for (int s2 = 0; s2 < n; ++s2)
                    for (int z2 = 0; z2 < n; ++z2)
                        out(s1 * n + s2, z1 * n + z2) += lead * wb(s2, z2);
            }
        }
    }
    return out;
}

double CoherentFrame::resolution_error(const Eigen::VectorXcd& xi) const {
    // sigma(1) is separable: C (A (x) A) with A = sum_b axis_b axis_b^*.
    const int n = grid2_.n;
    const double h4 = grid4_.spacing;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < grid4_.n_freq; ++i)
        for (int j = 0; j < grid4_.n_shift; ++j) {
            const Eigen::VectorXcd v =
                axis_vector(-grid4_.l_freq + h4 * i, -grid4_.l_shift + h4 * j);
            a.noalias() += v * v.adjoint();
        }
    const double constant = (h4 * h4 / r_) * grid2_.spacing();  // per-axis weight
    a *= constant;
    Eigen::MatrixXcd big(n, n);
    for (int z1 = 0; z1 < n; ++z1)
        for (int z2 = 0; z2 < n; ++z2) big(z1, z2) = xi(z1 * n + z2);
    const Eigen::MatrixXcd mapped = a * big * a.transpose();
    Eigen::VectorXcd out(n * n);
    for (int s1 = 0; s1 < n; ++s1)
        for (int s2 = 0; s2 < n; ++s2) out(s1 * n + s2) = mapped(s1, s2);
    return (xi - out).norm() / xi.norm();
}

DiscretizedOperator sigma_gamma0(const StructureConstants&, double f5, double f6,
                                 const std::function<Complex(const std::array<double, 4>&)>& h,
                                 const Grid& grid2, std::optional<FrameGrid> grid4) {
    CoherentFrame frame(f5, f6, grid2, grid4);
    DiscretizedOperator op;
    op.grid = grid2;
    op.kernel = frame.quantize(h);
    return op;
}

}  // namespace n7
