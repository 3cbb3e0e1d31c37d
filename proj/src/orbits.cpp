#include "n7/orbits.hpp"

#include <cmath>
#include <stdexcept>

namespace n7 {

RatMat skew_form(const StructureConstants& sc, const RatVec& f) {
    const int dim = sc.dim();
    if (int(f.size()) != dim) throw std::invalid_argument("skew_form: dimension mismatch");
    RatMat b(std::size_t(dim), RatVec(std::size_t(dim), Rat(0)));
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j) {
            RatVec br = sc.basis_bracket(i, j);
            Rat v(0);
            for (int m = 0; m < dim; ++m) v += f[std::size_t(m)] * br[std::size_t(m)];
            b[std::size_t(i - 1)][std::size_t(j - 1)] = v;
            b[std::size_t(j - 1)][std::size_t(i - 1)] = -v;
        }
    return b;
}

Subspace stabilizer(const StructureConstants& sc, const RatVec& f) {
    return Subspace{kernel_basis(skew_form(sc, f), sc.dim())};
}

Polarization vergne_polarization(const StructureConstants& sc, const RatVec& f) {
    const int dim = sc.dim();
    std::vector<RatMat> flag;
    for (int k = 1; k <= dim; ++k) {
        RatMat basis;
        for (int i = 0; i < k; ++i) {
            RatVec e(std::size_t(dim), Rat(0));
            e[std::size_t(dim - 1 - i)] = 1;
            basis.push_back(std::move(e));
        }
        flag.push_back(std::move(basis));
    }
    return vergne_polarization(sc, f, flag);
}

Polarization vergne_polarization(const StructureConstants& sc, const RatVec& f,
                                 const std::vector<RatMat>& flag) {
    const int dim = sc.dim();
    const RatMat b = skew_form(sc, f);
    RatMat sum;

    for (const auto& space : flag) {
        const int k = int(space.size());
        // Restriction of B_f to the flag member, in flag coordinates.
        RatMat restricted(std::size_t(k), RatVec(std::size_t(k), Rat(0)));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                Rat v(0);
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        v += space[std::size_t(r)][std::size_t(i)] * b[std::size_t(i)][std::size_t(j)] *
                             space[std::size_t(c)][std::size_t(j)];
                restricted[std::size_t(r)][std::size_t(c)] = v;
            }
        RatMat radical_coords = kernel_basis(restricted, k);
        RatMat embedded;
        for (const auto& coords : radical_coords) {
            RatVec v(std::size_t(dim), Rat(0));
            for (int r = 0; r < k; ++r)
                for (int i = 0; i < dim; ++i)
                    v[std::size_t(i)] += coords[std::size_t(r)] * space[std::size_t(r)][std::size_t(i)];
            embedded.push_back(std::move(v));
        }
        sum = span_sum(sum, embedded);
    }

    Polarization out;
    out.space.basis = sum;
    // Subordination f([p, p]) = 0.
    for (std::size_t a = 0; a < sum.size() && out.subordination_ok; ++a)
        for (std::size_t c = a + 1; c < sum.size(); ++c) {
            RatVec br = sc.bracket(sum[a], sum[c]);
            Rat v(0);
            for (int m = 0; m < dim; ++m) v += f[std::size_t(m)] * br[std::size_t(m)];
            if (v != 0) {
                out.subordination_ok = false;
                break;
            }
        }
    return out;
}

std::string layer_name(LayerTag tag) {
    switch (tag) {
        case LayerTag::Gamma2: return "Gamma2";
        case LayerTag::Gamma1: return "Gamma1";
        case LayerTag::Gamma0: return "Gamma0";
    }
    return "?";
}

LayerTag classify_layer(const RatVec& f) {
    if (f.size() != 7) throw std::invalid_argument("classify_layer expects 7 coordinates");
    if (f[6] != 0) return LayerTag::Gamma2;
    if (f[4] != 0 || f[5] != 0) return LayerTag::Gamma1;
    return LayerTag::Gamma0;
}

LayerTag classify_layer(const std::vector<double>& f, double zero_threshold) {
    if (f.size() != 7) throw std::invalid_argument("classify_layer expects 7 coordinates");
    double scale = 0;
    for (double v : f) scale = std::max(scale, std::abs(v));
    const double eps = zero_threshold * std::max(scale, 1.0);
    if (std::abs(f[6]) > eps) return LayerTag::Gamma2;
    if (std::abs(f[4]) > eps || std::abs(f[5]) > eps) return LayerTag::Gamma1;
    return LayerTag::Gamma0;
}

std::pair<Rat, Rat> orbit_invariants(const RatVec& f) {
    return {Rat(2) * f[2] * f[6] - f[4] * f[4] + f[5] * f[5], f[3] * f[6] - f[4] * f[5]};
}

std::pair<double, double> orbit_invariants(const std::vector<double>& f) {
    return {2 * f[2] * f[6] - f[4] * f[4] + f[5] * f[5], f[3] * f[6] - f[4] * f[5]};
}

OrbitDescriptor canonical_orbit(const RatVec& f) {
    const LayerTag tag = classify_layer(f);
    switch (tag) {
        case LayerTag::Gamma2: {
            auto [i1, i2] = orbit_invariants(f);
            // Parameters of the canonical representative (0,0,f3,f4,0,0,f7).
            return {tag, {i1 / (Rat(2) * f[6]), i2 / f[6], f[6]}};
        }
        case LayerTag::Gamma1:
            return {tag, {f[4], f[5]}};
        case LayerTag::Gamma0:
            return {tag, {f[0], f[1], f[2], f[3]}};
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<double>> orbit_sample(const StructureConstants& sc,
                                              const std::vector<double>& f,
                                              const OrbitSampleSpec& spec) {
    const LayerTag tag = classify_layer(f);
    std::vector<std::vector<double>> out;
    if (tag == LayerTag::Gamma0) {
        out.push_back(f);
        return out;
    }
    const int n = spec.points_per_axis;
    auto ticks = [&](int count) {
        std::vector<double> t;
        if (count == 1) {
            t.push_back(0.0);
            return t;
        }
        for (int i = 0; i < count; ++i)
            t.push_back(-spec.extent + 2.0 * spec.extent * i / (count - 1));
        return t;
    };
    const auto t = ticks(n);

    // Group directions whose coadjoint flows sweep the four orbit parameters:
    // for Gamma2 the (X1, X2) moves sweep slots 5 and 6 while (X5, X6) moves
    // sweep slots 1 and 2; for Gamma1 the (X1, X2) moves sweep slots 3 and 4
    // while (X3, X4) moves sweep slots 1 and 2.
    const int dir_a = 0, dir_b = 1;
    const int dir_c = (tag == LayerTag::Gamma2) ? 4 : 2;
    const int dir_d = (tag == LayerTag::Gamma2) ? 5 : 3;

    for (double a : t)
        for (double b : t)
            for (double c : t)
                for (double d : t) {
                    std::vector<double> w(7, 0.0), mover(7, 0.0);
                    w[dir_a] = a;
                    w[dir_b] = b;
                    mover[dir_c] = c;
                    mover[dir_d] = d;
                    // Two successive coadjoint moves stay on the orbit.
                    out.push_back(coadjoint(sc, w, coadjoint(sc, mover, f)));
                }
    return out;
}

}  // namespace n7
