#include "n7/sigma.hpp"

#include <cmath>

#include "n7/coadjoint.hpp"

namespace n7 {

namespace {

using Mask = std::vector<char>;

// K(z, u) = F^(z - u, Ad*(u) l |_p) * weight over masked rows and columns.
Eigen::MatrixXcd masked_kernel(const StructureConstants& sc, const GroupFunction& f,
                               const std::vector<double>& functional, const Grid& grid,
                               const Mask& rows, const Mask& cols) {
    const int N = grid.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N, N);
    std::vector<std::array<double, 5>> q;
    q.resize(std::size_t(N));
    std::vector<int> col_idx;
    for (int u = 0; u < N; ++u) {
        if (!cols[std::size_t(u)]) continue;
        col_idx.push_back(u);
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
        if (!rows[std::size_t(z)]) continue;
        const auto pz = grid.point(z);
        for (int u : col_idx) {
            const auto pu = grid.point(u);
            const std::array<double, 2> delta{pz[0] - pu[0], pz[1] - pu[1]};
            out(z, u) = f.hat(delta, q[std::size_t(u)]) * w;
        }
    }
    return out;
}

Eigen::MatrixXcd apply_masks(const Eigen::MatrixXcd& m, const Mask& rows, const Mask& cols) {
    Eigen::MatrixXcd out = m;
    for (int z = 0; z < out.rows(); ++z)
        if (!rows[std::size_t(z)]) out.row(z).setZero();
    for (int u = 0; u < out.cols(); ++u)
        if (!cols[std::size_t(u)]) out.col(u).setZero();
    return out;
}

// Range of a symbol slot over the grid window; used to find the slabs that
// can meet the window.
std::pair<double, double> slot_range(const StructureConstants& sc, const std::vector<double>& p_k,
                                     const Grid& grid, int slot) {
    double lo = 1e300, hi = -1e300;
    const int n = grid.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != 0 && i != n - 1 && j != 0 && j != n - 1) continue;  // hull: edges suffice?
            const auto p = grid.point(i * n + j);
            const auto q = symbol_at(sc, p_k, p);
            lo = std::min(lo, q[std::size_t(slot)]);
            hi = std::max(hi, q[std::size_t(slot)]);
        }
    // slot 1 (f4-values) is a saddle in u; include the centre too.
    const auto qc = symbol_at(sc, p_k, grid.centre);
    lo = std::min(lo, qc[std::size_t(slot)]);
    hi = std::max(hi, qc[std::size_t(slot)]);
    return {lo, hi};
}

struct GenericTerm {
    PinnedGeneric pin;
    Mask rows, cols;
    bool any_cols = false;
};

std::vector<GenericTerm> generic_terms(const StructureConstants& sc,
                                       const ScheduleGeneric& sched, const Grid& grid,
                                       double r5, double r6) {
    std::vector<GenericTerm> terms;
    // Slabs with pinned values inside the symbol decay radii.
    const double jr_lo = std::abs(sched.c1) / (r6 * sched.eps);
    const double jr_hi = r5 * std::abs(sched.i_k) / sched.eps;
    const int N = grid.size();
    for (int sign = -1; sign <= 1; sign += 2)
        for (int aj = std::max(1, int(std::floor(jr_lo))); aj <= int(std::ceil(jr_hi)); ++aj) {
            const int j = sign * aj;
            const GenericBox u_box = box_generic(sched, j, 1);
            // Window intersection test on the closed bounding box.
            const bool meets =
                u_box.u1_centre + u_box.u1_half >= grid.centre[0] - grid.half_width &&
                u_box.u1_centre - u_box.u1_half <= grid.centre[0] + grid.half_width &&
                u_box.u2_centre + u_box.u2_half >= grid.centre[1] - grid.half_width &&
                u_box.u2_centre - u_box.u2_half <= grid.centre[1] + grid.half_width;
            if (!meets) continue;
            GenericTerm t;
            t.pin = pinned_generic(sc, sched, j);
            t.rows.assign(std::size_t(N), 0);
            t.cols.assign(std::size_t(N), 0);
            for (int p = 0; p < N; ++p) {
                const auto u = grid.point(p);
                if (u_box.contains(u)) {
                    t.cols[std::size_t(p)] = 1;
                    t.any_cols = true;
                }
                if (in_v_generic(sched, j, 1, u)) t.rows[std::size_t(p)] = 1;
            }
            if (t.any_cols) terms.push_back(std::move(t));
        }
    return terms;
}

struct DegenerateTerm {
    PinnedDegenerate pin;
    Mask rows, cols;
    bool any_cols = false;
};

std::vector<DegenerateTerm> degenerate_terms(const StructureConstants& sc,
                                             const ScheduleDegenerate& sched, const Grid& grid,
                                             const std::array<double, 3>& radii /* q4,q5,q6 */) {
    std::vector<DegenerateTerm> terms;
    const std::vector<double> p_k = {0, 0, sched.f3, sched.f4, 0, 0, sched.f7};
    const int N = grid.size();

    auto build = [&](int family, int j) {
        DegenerateTerm t;
        t.pin = pinned_degenerate(sc, sched, j, family);
        t.rows.assign(std::size_t(N), 0);
        t.cols.assign(std::size_t(N), 0);
        DegenerateBoxSpec spec{family, j, 1};
        for (int p = 0; p < N; ++p) {
            const auto u = grid.point(p);
            if (in_u_degenerate(sc, sched, p_k, spec, u)) {
                t.cols[std::size_t(p)] = 1;
                t.any_cols = true;
            }
            if (in_v_degenerate(sc, sched, p_k, spec, u)) t.rows[std::size_t(p)] = 1;
        }
        if (t.any_cols) terms.push_back(std::move(t));
    };

    // Families 5 and 6: cells of width eps in the slot value, limited by the
    // decay radius and by the values the window actually reaches.
    for (int family : {5, 6}) {
        const int slot = family == 5 ? 2 : 3;  // q-array index
        auto [lo, hi] = slot_range(sc, p_k, grid, slot);
        lo = std::max(lo, -radii[std::size_t(family - 4)]);
        hi = std::min(hi, radii[std::size_t(family - 4)]);
        if (lo > hi) continue;
        const int j_lo = int(std::floor(lo / sched.eps)) - 1;
        const int j_hi = int(std::ceil(hi / sched.eps)) + 1;
        for (int j = j_lo; j <= j_hi; ++j)
            if (j != 0) build(family, j);
    }
    // Family 4: cells of width delta^{1/4} in the slot-4 value.
    {
        const double w4 = std::pow(sched.delta, 0.25);
        auto [lo, hi] = slot_range(sc, p_k, grid, 1);
        lo = std::max(lo, -radii[0]);
        hi = std::min(hi, radii[0]);
        if (lo <= hi) {
            const int j_lo = int(std::floor(lo / w4)) - 1;
            const int j_hi = int(std::ceil(hi / w4)) + 1;
            for (int j = j_lo; j <= j_hi; ++j) build(4, j);
        }
    }
    return terms;
}

}  // namespace

SigmaResult sigma_k_generic(const StructureConstants& sc, const GroupFunction& f,
                            const ScheduleGeneric& sched, const Grid& grid) {
    const double r5 = f.q_radius(2, 1e-8), r6 = f.q_radius(3, 1e-8);
    auto terms = generic_terms(sc, sched, grid, r5, r6);
    SigmaResult res;
    res.op.grid = grid;
    res.op.kernel = Eigen::MatrixXcd::Zero(grid.size(), grid.size());
    for (const auto& t : terms) {
        res.op.kernel += masked_kernel(sc, f, t.pin.limit_functional, grid, t.rows, t.cols);
        ++res.active_terms;
    }
    return res;
}

SigmaResult sigma_k_generic_field(const StructureConstants& sc, const OperatorField& field,
                                  const ScheduleGeneric& sched, const Grid& grid,
                                  bool with_norms) {
    // Radius defaults follow the standard Gaussian symbol decay.
    auto terms = generic_terms(sc, sched, grid, 2.6, 2.6);
    SigmaResult res;
    res.op.grid = grid;
    res.op.kernel = Eigen::MatrixXcd::Zero(grid.size(), grid.size());
    for (const auto& t : terms) {
        const Eigen::MatrixXcd phi = field(t.pin.limit_functional, grid);
        res.op.kernel += apply_masks(phi, t.rows, t.cols);
        ++res.active_terms;
        if (with_norms) res.sup_field_norm = std::max(res.sup_field_norm, operator_norm(phi));
    }
    return res;
}

SigmaResult sigma_k_degenerate(const StructureConstants& sc, const GroupFunction& f,
                               const ScheduleDegenerate& sched, const Grid& grid) {
    const std::array<double, 3> radii{f.q_radius(1, 1e-8), f.q_radius(2, 1e-8),
                                      f.q_radius(3, 1e-8)};
    auto terms = degenerate_terms(sc, sched, grid, radii);
    SigmaResult res;
    res.op.grid = grid;
    res.op.kernel = Eigen::MatrixXcd::Zero(grid.size(), grid.size());
    for (const auto& t : terms) {
        res.op.kernel += masked_kernel(sc, f, t.pin.limit_functional, grid, t.rows, t.cols);
        ++res.active_terms;
    }
    return res;
}

SigmaResult sigma_k_degenerate_field(const StructureConstants& sc, const OperatorField& field,
                                     const ScheduleDegenerate& sched, const Grid& grid,
                                     bool with_norms) {
    auto terms = degenerate_terms(sc, sched, grid, {2.6, 2.6, 2.6});
    SigmaResult res;
    res.op.grid = grid;
    res.op.kernel = Eigen::MatrixXcd::Zero(grid.size(), grid.size());
    for (const auto& t : terms) {
        const Eigen::MatrixXcd phi = field(t.pin.limit_functional, grid);
        res.op.kernel += apply_masks(phi, t.rows, t.cols);
        ++res.active_terms;
        if (with_norms) res.sup_field_norm = std::max(res.sup_field_norm, operator_norm(phi));
    }
    return res;
}

DiscretizedOperator pi_k_operator(const StructureConstants& sc, const GroupFunction& f,
                                  const std::vector<double>& p_k, const Grid& grid) {
    return induced_kernel_any_layer(sc, f, p_k, grid);
}

std::array<double, 2> window_centre_generic(const ScheduleGeneric& sched, double f5_ref) {
    // Slab whose pinned f5-value j*eps/i_k is closest to the reference.
    const double target = f5_ref * sched.i_k / sched.eps;
    int j = int(std::lround(target));
    if (j == 0) j = target >= 0 ? 1 : -1;
    const GenericBox b = box_generic(sched, j, 1);
    return {b.u1_centre, b.u2_centre};
}

std::array<double, 2> window_centre_degenerate(const ScheduleDegenerate& sched) {
    // Point with symbol slots f5 = -sqrt(|f4 f7|), f6 = +sqrt(|f4 f7|) and
    // slot4 value f4 + f7 u1 u2 = 0: the centre of the active hyperbola band.
    const double root = std::sqrt(std::abs(sched.f4 / sched.f7));
    const double sgn = sched.f4 * sched.f7 >= 0 ? -1.0 : 1.0;
    return {root, sgn * root};
}

}  // namespace n7
