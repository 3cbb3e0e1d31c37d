#include "n7/boxes.hpp"

#include <cmath>
#include <stdexcept>

#include "n7/coadjoint.hpp"

namespace n7 {

std::array<double, 5> symbol_at(const StructureConstants& sc, const std::vector<double>& p_k,
                                const std::array<double, 2>& u) {
    std::vector<double> g(7, 0.0);
    g[0] = u[0];
    g[1] = u[1];
    const auto moved = coadjoint(sc, g, p_k);
    return {moved[2], moved[3], moved[4], moved[5], moved[6]};
}

GenericBox box_generic(const ScheduleGeneric& s, int j, int m) {
    if (j == 0) throw std::invalid_argument("box index j must be nonzero");
    GenericBox b;
    b.j = j;
    b.m = m;
    const double f5j = j * s.eps;
    b.u1_centre = -f5j / (s.i_k * s.f7);
    b.u2_centre = s.c1 / (f5j * s.f7);
    b.u1_half = s.eps / (2.0 * std::abs(s.i_k * s.f7));
    b.u2_half = m * s.delta / std::abs(s.f7);
    return b;
}

bool in_v_generic(const ScheduleGeneric& s, int j, int m, const std::array<double, 2>& u) {
    for (int dj = -1; dj <= 1; ++dj) {
        const int jj = j + dj;
        if (jj == 0) continue;
        if (box_generic(s, jj, m + 1).contains(u)) return true;
    }
    return false;
}

PinnedGeneric pinned_generic(const StructureConstants& sc, const ScheduleGeneric& s, int j) {
    if (j == 0) throw std::invalid_argument("pinned index j must be nonzero");
    PinnedGeneric pin;
    pin.j = j;
    const double f5j = j * s.eps;
    const double p5 = f5j / s.i_k;
    const double p6 = -s.c1 / f5j;
    const double p3 = s.f3 + (p5 * p5 - p6 * p6) / (2.0 * s.f7);
    pin.translate = {f5j / (s.f7 * s.i_k), -s.c1 / (f5j * s.f7)};
    pin.pinned = {0, 0, p3, 0, p5, p6, 0};
    std::vector<double> g(7, 0.0);
    g[0] = pin.translate[0];
    g[1] = pin.translate[1];
    pin.limit_functional = coadjoint(sc, g, pin.pinned);
    return pin;
}

std::array<double, 5> pinned_defect_generic(const StructureConstants& sc,
                                            const ScheduleGeneric& s, const PinnedGeneric& pin,
                                            const std::array<double, 2>& u) {
    const std::vector<double> p_k = {0, 0, s.f3, s.f4, 0, 0, s.f7};
    const auto a = symbol_at(sc, p_k, u);
    const auto b = symbol_at(sc, pin.limit_functional, u);
    std::array<double, 5> d{};
    for (int i = 0; i < 5; ++i) d[std::size_t(i)] = a[std::size_t(i)] - b[std::size_t(i)];
    return d;
}

namespace {

// Disjoint half-open cell of width w centred at j*w: value in [jw-w/2, jw+w/2).
bool in_cell(double value, int j, double w) {
    return value - j * w >= -w / 2 && value - j * w < w / 2;
}

}  // namespace

bool in_u_degenerate(const StructureConstants& sc, const ScheduleDegenerate& s,
                     const std::vector<double>& p_k, const DegenerateBoxSpec& spec,
                     const std::array<double, 2>& u) {
    const auto q = symbol_at(sc, p_k, u);
    const double x4 = q[1], x5 = q[2], x6 = q[3];
    const double edge = spec.m * std::sqrt(s.delta);
    switch (spec.family) {
        case 6:
            return std::abs(x5) < edge && std::abs(x6) >= edge && in_cell(x6, spec.j, s.eps);
        case 5:
            return std::abs(x5) >= edge && std::abs(x6) < edge && in_cell(x5, spec.j, s.eps);
        case 4:
            return std::abs(x5) < edge && std::abs(x6) < edge &&
                   in_cell(x4, spec.j, std::pow(s.delta, 0.25));
        default:
            throw std::invalid_argument("degenerate family must be 4, 5 or 6");
    }
}

bool in_v_degenerate(const StructureConstants& sc, const ScheduleDegenerate& s,
                     const std::vector<double>& p_k, const DegenerateBoxSpec& spec,
                     const std::array<double, 2>& u) {
    const int reach = spec.family == 4 ? 2 * spec.m + 1 : 1;
    for (int dj = -reach; dj <= reach; ++dj) {
        const int jj = spec.j + dj;
        if (jj == 0 && spec.family != 4) continue;
        DegenerateBoxSpec v{spec.family, jj, spec.m + 1};
        if (in_u_degenerate(sc, s, p_k, v, u)) return true;
    }
    return false;
}

PinnedDegenerate pinned_degenerate(const StructureConstants& sc, const ScheduleDegenerate& s,
                                   int j, int family) {
    // Families 5 and 6 are singular at j = 0 (the pinned slot would need the
    // reciprocal of j eps); the central family admits j = 0, whose pinned
    // functional is the trivial character.  With disjoint cells the j = 0
    // cell is required to cover the slot-4 values near zero.
    if (j == 0 && family != 4) throw std::invalid_argument("pinned index j must be nonzero");
    PinnedDegenerate pin;
    pin.family = family;
    pin.j = j;
    const double jeps = j * s.eps;
    switch (family) {
        case 6:
            pin.pinned = {0, 0, 0, 0, -s.f4 * s.f7 / jeps, jeps, 0};
            pin.translate = {-s.f4 / jeps, jeps / s.f7};
            break;
        case 5:
            pin.pinned = {0, 0, 0, 0, jeps, -s.f4 * s.f7 / jeps, 0};
            pin.translate = {jeps / s.f7, -s.f4 / jeps};
            break;
        case 4:
            pin.pinned = {0, 0, 0, j * std::pow(s.delta, 0.25), 0, 0, 0};
            pin.translate = {0.0, 0.0};
            break;
        default:
            throw std::invalid_argument("degenerate family must be 4, 5 or 6");
    }
    if (family == 4) {
        pin.limit_functional = pin.pinned;
    } else {
        std::vector<double> g(7, 0.0);
        g[0] = pin.translate[0];
        g[1] = pin.translate[1];
        pin.limit_functional = coadjoint(sc, g, pin.pinned);
    }
    return pin;
}

std::array<double, 5> pinned_defect_degenerate(const StructureConstants& sc,
                                               const ScheduleDegenerate& s,
                                               const std::vector<double>& p_k,
                                               const PinnedDegenerate& pin,
                                               const std::array<double, 2>& u) {
    (void)s;
    const auto a = symbol_at(sc, p_k, u);
    const auto b = symbol_at(sc, pin.limit_functional, u);
    std::array<double, 5> d{};
    for (int i = 0; i < 5; ++i) d[std::size_t(i)] = a[std::size_t(i)] - b[std::size_t(i)];
    return d;
}

}  // namespace n7
