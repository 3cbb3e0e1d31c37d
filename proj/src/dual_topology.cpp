#include "n7/dual_topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace n7 {

namespace {

double rule_at(const RuleExpr& r, int k) { return r(double(k)); }

// Cauchy stabilization over tail samples: every value within
// tol*(1+|last|) of the last one.
bool stabilizes(const std::vector<double>& tail, double tol, double* limit) {
    if (tail.empty()) return false;
    const double last = tail.back();
    for (double v : tail)
        if (std::abs(v - last) > tol * (1.0 + std::abs(last))) return false;
    *limit = last;
    return true;
}

}  // namespace

OrbitDescriptor OrbitSequence::descriptor_at(int k) const {
    OrbitDescriptor d;
    d.layer = layer;
    for (const auto& r : rules) {
        double v = rule_at(r, k);
        d.params.push_back(Rat(v));  // exact binary rational of the double
    }
    return d;
}

std::vector<double> OrbitSequence::params_at(int k) const {
    std::vector<double> p;
    for (const auto& r : rules) p.push_back(rule_at(r, k));
    return p;
}

std::vector<double> OrbitSequence::representative_at(int k) const {
    std::vector<double> f(7, 0.0);
    const auto p = params_at(k);
    if (layer == LayerTag::Gamma2) {
        if (p.size() != 3) throw std::invalid_argument("Gamma2 sequence needs rules f3, f4, f7");
        f[2] = p[0];
        f[3] = p[1];
        f[6] = p[2];
    } else if (layer == LayerTag::Gamma1) {
        if (p.size() != 2) throw std::invalid_argument("Gamma1 sequence needs rules f5, f6");
        f[4] = p[0];
        f[5] = p[1];
    } else {
        throw std::invalid_argument("orbit sequences live in Gamma2 or Gamma1");
    }
    return f;
}

std::string limit_kind_name(LimitKind kind) {
    switch (kind) {
        case LimitKind::PointInLayer: return "point-in-layer";
        case LimitKind::CurveC1: return "curve-c1";
        case LimitKind::AxesUnionCharacters: return "axes-union-characters";
        case LimitKind::AllCharacters: return "all-characters";
        case LimitKind::Divergent: return "divergent";
    }
    return "?";
}

bool LimitSet::contains(const OrbitDescriptor& o, double tol) const {
    std::vector<double> f(7, 0.0);
    switch (o.layer) {
        case LayerTag::Gamma2:
            f[2] = to_double(o.params[0]);
            f[3] = to_double(o.params[1]);
            f[6] = to_double(o.params[2]);
            break;
        case LayerTag::Gamma1:
            f[4] = to_double(o.params[0]);
            f[5] = to_double(o.params[1]);
            break;
        case LayerTag::Gamma0:
            for (int i = 0; i < 4; ++i) f[std::size_t(i)] = to_double(o.params[std::size_t(i)]);
            break;
    }
    return contains_functional(f, tol);
}

bool LimitSet::contains_functional(const std::vector<double>& f, double tol) const {
    const LayerTag tag = classify_layer(f, tol);
    switch (kind) {
        case LimitKind::PointInLayer: {
            if (point.empty()) return false;
            std::vector<double> probe;
            if (tag == LayerTag::Gamma2) {
                auto [i1, i2] = orbit_invariants(f);
                probe = {i1 / (2 * f[6]), i2 / f[6], f[6]};
            } else if (tag == LayerTag::Gamma1) {
                probe = {f[4], f[5]};
            } else {
                probe = {f[0], f[1], f[2], f[3]};
            }
            if (probe.size() != point.size()) return false;
            for (std::size_t i = 0; i < probe.size(); ++i)
                if (std::abs(probe[i] - point[i]) > tol * (1.0 + std::abs(point[i]))) return false;
            return true;
        }
        case LimitKind::CurveC1:
            return tag == LayerTag::Gamma1 && c1.has_value() &&
                   std::abs(f[4] * f[5] + *c1) <= tol * (1.0 + std::abs(*c1));
        case LimitKind::AxesUnionCharacters:
            if (tag == LayerTag::Gamma0) return true;
            return tag == LayerTag::Gamma1 && std::abs(f[4] * f[5]) <= tol;
        case LimitKind::AllCharacters:
            return tag == LayerTag::Gamma0;
        case LimitKind::Divergent:
            return false;
    }
    return false;
}

LimitSet limit_set(const OrbitSequence& seq, const LimitSetOptions& opts) {
    LimitSet out;
    const int K = seq.horizon;
    const int tail_start = std::max(1, int(std::lround(K * (1.0 - opts.tail_fraction))));
    std::vector<std::vector<double>> tails(seq.rules.size());
    for (int k = tail_start; k <= K; ++k) {
        auto p = seq.params_at(k);
        for (std::size_t i = 0; i < p.size(); ++i) tails[i].push_back(p[i]);
    }
    const double tol = opts.tolerance;

    if (seq.layer == LayerTag::Gamma1) {
        double f5 = 0, f6 = 0;
        if (!stabilizes(tails[0], tol, &f5) || !stabilizes(tails[1], tol, &f6)) {
            out.kind = LimitKind::Divergent;
            return out;
        }
        if (std::abs(f5) <= tol && std::abs(f6) <= tol) {
            out.kind = LimitKind::AllCharacters;
        } else {
            out.kind = LimitKind::PointInLayer;
            out.point = {f5, f6};
        }
        return out;
    }

    // Gamma2 sequence.
    double f7 = 0;
    const bool f7_stable = stabilizes(tails[2], tol, &f7);
    if (f7_stable && std::abs(f7) > tol) {
        double f3 = 0, f4 = 0;
        if (stabilizes(tails[0], tol, &f3) && stabilizes(tails[1], tol, &f4)) {
            out.kind = LimitKind::PointInLayer;
            out.point = {f3, f4, f7};
            return out;
        }
        out.kind = LimitKind::Divergent;
        return out;
    }

    // Exit of the layer: decide with c1 = lim f4 f7 and c2 = lim 2 f3 f7.
    std::vector<double> c1_tail, c2_tail;
    for (std::size_t i = 0; i < tails[0].size(); ++i) {
        c1_tail.push_back(tails[1][i] * tails[2][i]);
        c2_tail.push_back(2.0 * tails[0][i] * tails[2][i]);
    }
    double c1 = 0, c2 = 0;
    if (!stabilizes(c1_tail, tol, &c1) || !stabilizes(c2_tail, tol, &c2)) {
        out.kind = LimitKind::Divergent;
        return out;
    }
    out.c1 = c1;
    out.c2 = c2;
    out.kind = std::abs(c1) > tol ? LimitKind::CurveC1 : LimitKind::AxesUnionCharacters;
    return out;
}

WitnessReport verify_limit(const OrbitSequence& seq, const std::vector<double>& candidate,
                           double tol, WitnessMode mode, int K, int samples) {
    if (candidate.size() != 7) throw std::invalid_argument("candidate needs 7 coordinates");
    WitnessReport rep;
    LimitSetOptions opts;
    OrbitSequence probe = seq;
    probe.horizon = std::max(seq.horizon, K);
    const LimitSet ls = limit_set(probe, opts);
    const LayerTag cand_layer = classify_layer(candidate, 1e-12);

    if (ls.kind == LimitKind::Divergent) {
        rep.in_limit_set = false;
        rep.note = "DIVERGENT: defining products fail to stabilize";
        return rep;
    }
    if (!ls.contains_functional(candidate, 1e-6)) {
        rep.in_limit_set = false;
        rep.note = "NOT_IN_LIMIT_SET: candidate violates the limit-set constraints";
        if (ls.kind == LimitKind::CurveC1 && cand_layer == LayerTag::Gamma1)
            rep.note += " (f5*f6 != -c1)";
        return rep;
    }

    // Witness indices sampled from (K, 2K].
    std::vector<int> ks;
    for (int i = 1; i <= samples; ++i) ks.push_back(K + int(std::lround(double(i) * K / samples)));

    double max_dist = 0, max_defect = 0;
    for (int k : ks) {
        std::vector<double> w(7, 0.0);
        if (seq.layer == LayerTag::Gamma1) {
            const auto p = seq.params_at(k);
            w = {candidate[0], candidate[1], candidate[2], candidate[3], p[0], p[1], 0.0};
        } else {
            const auto p = seq.params_at(k);  // (f3, f4, f7)
            const double f3k = p[0], f4k = p[1], f7k = p[2];
            if (ls.kind == LimitKind::PointInLayer) {
                // Orbit point with slots 5 and 6 pinned to the candidate.
                const double x5 = candidate[4], x6 = candidate[5];
                w = {candidate[0], candidate[1], f3k + (x5 * x5 - x6 * x6) / (2 * f7k),
                     f4k + x5 * x6 / f7k, x5, x6, f7k};
            } else if (ls.kind == LimitKind::CurveC1) {
                const double f5 = candidate[4];
                const double x6 = f7k * (candidate[3] - f4k) / f5;
                w = {candidate[0], candidate[1], candidate[2], candidate[3], f5, x6, f7k};
                const double slot3_required = f3k + (f5 * f5 - x6 * x6) / (2 * f7k);
                const double defect = std::abs(candidate[2] - slot3_required);
                if (mode == WitnessMode::OnOrbit)
                    w[2] = slot3_required;
                else
                    max_defect = std::max(max_defect, defect);
            } else {  // AxesUnionCharacters
                const double arg = f7k * candidate[3] - f7k * f4k;
                const double root = std::sqrt(std::abs(arg));
                const double sgn = arg > 0 ? 1.0 : (arg < 0 ? -1.0 : 0.0);
                w = {candidate[0], candidate[1], candidate[2], candidate[3], root, sgn * root,
                     f7k};
                const double slot3_required = f3k;  // x5^2 = x6^2 cancels
                if (mode == WitnessMode::OnOrbit)
                    w[2] = slot3_required;
                else
                    max_defect = std::max(max_defect, std::abs(candidate[2] - slot3_required));
            }
        }
        double dist = 0;
        for (int i = 0; i < 7; ++i) dist = std::max(dist, std::abs(w[std::size_t(i)] - candidate[std::size_t(i)]));
        rep.witnesses.push_back(w);
        rep.distances.push_back(dist);
        max_dist = std::max(max_dist, dist);
    }
    rep.max_distance = max_dist;
    rep.max_orbit_defect = max_defect;
    rep.pass = max_dist < tol;
    if (rep.pass && mode == WitnessMode::Stated && max_defect > tol)
        rep.note = "witnesses satisfy the slot-4 orbit constraint; slot-3 residual " +
                   std::to_string(max_defect) + " reported (OnOrbit mode enforces it)";
    return rep;
}

namespace {

struct Cloud {
    // Points are maps slot -> value over the effective slots.
    std::vector<std::vector<double>> pts;  // each sized like slots
    std::vector<int> slots;                // 0-based slot indices
};

std::vector<double> mesh_ticks(const WindowSpec& w) {
    std::vector<double> t;
    for (int i = 0; i < w.mesh; ++i)
        t.push_back(w.mesh == 1 ? 0.0 : -w.half_width + 2.0 * w.half_width * i / (w.mesh - 1));
    return t;
}

// Non-free slots and their values over the orbit's profile parameters.
struct OrbitShape {
    std::vector<int> free_slots;
    // Enumerate profile points as (slot -> value) over all 7 slots; free
    // slots must be filled by the caller.
    std::vector<std::vector<std::pair<int, double>>> profiles;
};

OrbitShape orbit_shape(const OrbitDescriptor& o, const WindowSpec& w) {
    OrbitShape s;
    const auto t = mesh_ticks(w);
    if (o.layer == LayerTag::Gamma2) {
        s.free_slots = {0, 1};
        const double f3 = to_double(o.params[0]), f4 = to_double(o.params[1]),
                     f7 = to_double(o.params[2]);
        for (double x5 : t)
            for (double x6 : t)
                s.profiles.push_back({{2, f3 + (x5 * x5 - x6 * x6) / (2 * f7)},
                                      {3, f4 + x5 * x6 / f7},
                                      {4, x5},
                                      {5, x6},
                                      {6, f7}});
    } else if (o.layer == LayerTag::Gamma1) {
        s.free_slots = {0, 1, 2, 3};
        s.profiles.push_back({{4, to_double(o.params[0])}, {5, to_double(o.params[1])}, {6, 0.0}});
    } else {
        s.profiles.push_back({{0, to_double(o.params[0])},
                              {1, to_double(o.params[1])},
                              {2, to_double(o.params[2])},
                              {3, to_double(o.params[3])},
                              {4, 0.0},
                              {5, 0.0},
                              {6, 0.0}});
    }
    return s;
}

Cloud build_cloud(const OrbitShape& shape, const std::vector<int>& effective,
                  const WindowSpec& w) {
    Cloud c;
    c.slots = effective;
    const auto t = mesh_ticks(w);
    // Free slots that are effective get meshed; the rest are dropped.
    std::vector<int> meshed_free;
    for (int s : shape.free_slots)
        if (std::find(effective.begin(), effective.end(), s) != effective.end())
            meshed_free.push_back(s);

    for (const auto& prof : shape.profiles) {
        // Window clip on the profile slots.
        bool inside = true;
        for (const auto& [slot, v] : prof)
            if (std::find(effective.begin(), effective.end(), slot) != effective.end() &&
                std::abs(v) > w.half_width + 1e-12)
                inside = false;
        if (!inside) continue;

        std::vector<double> base(effective.size(), 0.0);
        for (const auto& [slot, v] : prof) {
            auto it = std::find(effective.begin(), effective.end(), slot);
            if (it != effective.end()) base[std::size_t(it - effective.begin())] = v;
        }
        // Mesh the effective free slots.
        std::vector<std::size_t> free_pos;
        for (int s : meshed_free) {
            auto it = std::find(effective.begin(), effective.end(), s);
            free_pos.push_back(std::size_t(it - effective.begin()));
        }
        std::vector<std::size_t> idx(free_pos.size(), 0);
        for (;;) {
            auto pt = base;
            for (std::size_t i = 0; i < free_pos.size(); ++i) pt[free_pos[i]] = t[idx[i]];
            c.pts.push_back(pt);
            std::size_t carry = 0;
            while (carry < idx.size()) {
                if (++idx[carry] < t.size()) break;
                idx[carry] = 0;
                ++carry;
            }
            if (carry == idx.size()) break;
            if (free_pos.empty()) break;
        }
        if (free_pos.empty()) continue;
    }
    return c;
}

double one_sided_hausdorff(const Cloud& from, const Cloud& into) {
    double sup = 0;
    for (const auto& a : from.pts) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : into.pts) {
            double d = 0;
            for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
            best = std::min(best, d);
            if (best == 0) break;
        }
        sup = std::max(sup, best);
    }
    return sup;
}

}  // namespace

OrbitDistanceResult orbit_window_distance(const StructureConstants&,
                                          const OrbitDescriptor& seq_orbit,
                                          const OrbitDescriptor& limit_orbit,
                                          const WindowSpec& window) {
    const OrbitShape a = orbit_shape(seq_orbit, window);
    const OrbitShape b = orbit_shape(limit_orbit, window);

    // Effective slots: those not free in both orbits (a slot free in both
    // contributes zero to either direction on a shared mesh).
    std::vector<int> effective;
    for (int s = 0; s < 7; ++s) {
        const bool free_a = std::find(a.free_slots.begin(), a.free_slots.end(), s) != a.free_slots.end();
        const bool free_b = std::find(b.free_slots.begin(), b.free_slots.end(), s) != b.free_slots.end();
        if (!(free_a && free_b)) effective.push_back(s);
    }

    const Cloud ca = build_cloud(a, effective, window);
    const Cloud cb = build_cloud(b, effective, window);
    if (ca.pts.empty() || cb.pts.empty()) throw std::domain_error("EMPTY_WINDOW");

    OrbitDistanceResult out;
    out.one_sided = one_sided_hausdorff(cb, ca);  // limit cloud into sequence cloud
    out.symmetric = std::max(out.one_sided, one_sided_hausdorff(ca, cb));
    return out;
}

}  // namespace n7
