#include "n7/induced_kernel.hpp"

#include <stdexcept>

#include "n7/coadjoint.hpp"

namespace n7 {

namespace {

DiscretizedOperator build_kernel(const StructureConstants& sc, const GroupFunction& f,
                                 const std::vector<double>& functional, const Grid& grid) {
    if (functional.size() != 7) throw std::invalid_argument("functional needs 7 coordinates");
    const int N = grid.size();
    DiscretizedOperator op;
    op.grid = grid;
    op.kernel.resize(N, N);

    // q(u) = Ad*(u) f restricted to the polarization, per grid point.
    std::vector<std::array<double, 5>> q;
    q.resize(std::size_t(N));
    for (int u = 0; u < N; ++u) {
        const auto pu = grid.point(u);
        std::vector<double> g(7, 0.0);
        g[0] = pu[0];
        g[1] = pu[1];
        const auto moved = coadjoint(sc, g, functional);
        for (int s = 0; s < 5; ++s) q[std::size_t(u)][std::size_t(s)] = moved[std::size_t(s + 2)];
    }

    const double w = grid.weight();
#pragma omp parallel for schedule(static)
    for (int z = 0; z < N; ++z) {
        const auto pz = grid.point(z);
        for (int u = 0; u < N; ++u) {
            const auto pu = grid.point(u);
            // z u^{-1} stays in the abelian section.
            const std::array<double, 2> delta{pz[0] - pu[0], pz[1] - pu[1]};
            op.kernel(z, u) = f.hat(delta, q[std::size_t(u)]) * w;
        }
    }
    return op;
}

}  // namespace

DiscretizedOperator induced_kernel(const StructureConstants& sc, const GroupFunction& f,
                                   const std::vector<double>& functional, const Grid& grid) {
    const LayerTag tag = classify_layer(functional, 1e-12);
    if (tag == LayerTag::Gamma0)
        throw std::invalid_argument(
            "induced_kernel: Gamma0 functional (use character_transform)");
    return build_kernel(sc, f, functional, grid);
}

DiscretizedOperator induced_kernel_any_layer(const StructureConstants& sc, const GroupFunction& f,
                                             const std::vector<double>& functional,
                                             const Grid& grid) {
    return build_kernel(sc, f, functional, grid);
}

Complex character_transform(const GroupFunction& f, const std::array<double, 4>& xi) {
    return f.character(xi);
}

double pi0_sup_norm(const GroupFunction& f, const Grid4& grid) {
    const int n = grid.n;
    const double h = grid.spacing();
    double sup = 0.0;
#pragma omp parallel for schedule(static) reduction(max : sup)
    for (int i0 = 0; i0 < n; ++i0) {
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    const std::array<double, 4> xi{-grid.half_width + h * i0,
                                                   -grid.half_width + h * i1,
                                                   -grid.half_width + h * i2,
                                                   -grid.half_width + h * i3};
                    sup = std::max(sup, std::abs(f.character(xi)));
                }
    }
    return sup;
}

}  // namespace n7
