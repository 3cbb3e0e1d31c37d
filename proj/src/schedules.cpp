#include "n7/schedules.hpp"

#include <cmath>
#include <stdexcept>

namespace n7 {

namespace {

// |f7|^{-1/8}: keeps all three limit conditions and, unlike |f7|^{-1/4},
// sends the R nu^{1/2} term of beta_k to zero on schedules with i_k = 1.
double default_generic_r(double f7) { return std::pow(std::abs(f7), -0.125); }

void validate_gamma2(const OrbitSequence& seq) {
    if (seq.layer != LayerTag::Gamma2 || seq.rules.size() != 3)
        throw std::invalid_argument("BAD_SEQUENCE: schedule needs a Gamma2 sequence (f3, f4, f7)");
}

}  // namespace

ScheduleGeneric schedule_generic_at(const OrbitSequence& seq, double c1, int k,
                                    const ScheduleOptions& opts) {
    validate_gamma2(seq);
    if (c1 == 0.0)
        throw std::invalid_argument("BAD_SEQUENCE: c1 = 0 (use the degenerate schedule)");
    ScheduleGeneric s;
    s.k = k;
    const auto p = seq.params_at(k);
    s.f3 = p[0];
    s.f4 = p[1];
    s.f7 = p[2];
    s.c1 = c1;
    s.R = opts.r_rule ? (*opts.r_rule)(double(k)) : default_generic_r(s.f7);
    s.i_k = c1 / (s.f7 * s.f4);
    s.nu = (1.0 - s.i_k != 0.0) ? std::abs(1.0 - s.i_k) : 1.0 / (k + 1);
    const bool small_f7 = std::abs(s.f7) < s.nu;
    s.eps = small_f7 ? std::abs(s.f7) / std::pow(s.nu, 0.25) : std::abs(s.f7) * s.R;
    s.delta = small_f7 ? std::abs(s.f7) / std::pow(s.nu, 0.25) : std::pow(s.nu, 0.75);
    const double ai = std::abs(s.i_k);
    const double sq = std::sqrt(s.nu);
    s.alpha = sq / (2 * ai * ai) + sq / 2 + sq / ai + s.eps / ai + s.delta + std::abs(s.f7);
    s.beta = s.R * s.R * std::abs(s.f7) / (2 * ai * ai) + sq / 2 + s.R * sq / ai + s.eps / ai +
             s.delta + std::abs(s.f7);
    s.gamma = std::max(s.alpha, s.beta);
    return s;
}

std::vector<ScheduleGeneric> schedule_generic(const OrbitSequence& seq, double c1,
                                              const std::vector<int>& ks,
                                              const ScheduleOptions& opts) {
    validate_gamma2(seq);
    // R-rule limit conditions, sampled on a growing tail.
    const int K = opts.validation_horizon;
    double r_prev = 0;
    for (int k : {K / 4, K / 2, K}) {
        const auto p = seq.params_at(k);
        const double f7 = p[2];
        const double r = opts.r_rule ? (*opts.r_rule)(double(k)) : default_generic_r(f7);
        const double i_k = c1 / (f7 * p[1]);
        const double nu = (1.0 - i_k != 0.0) ? std::abs(1.0 - i_k) : 1.0 / (k + 1);
        if (k == K && (r < r_prev || r * r * std::abs(f7) > 0.5 ||
                       r * std::pow(nu, 0.75) > 0.5))
            throw std::invalid_argument(
                "BAD_SEQUENCE: R-rule violates lim R = inf, lim R^2 |f7| = 0, "
                "lim R nu^{3/4} = 0 on the sampled tail");
        r_prev = r;
    }
    std::vector<ScheduleGeneric> out;
    for (int k : ks) out.push_back(schedule_generic_at(seq, c1, k, opts));
    return out;
}

ScheduleDegenerate schedule_degenerate_at(const OrbitSequence& seq, int k,
                                          const ScheduleOptions& opts) {
    validate_gamma2(seq);
    ScheduleDegenerate s;
    s.k = k;
    const auto p = seq.params_at(k);
    s.f3 = p[0];
    s.f4 = p[1];
    s.f7 = p[2];
    s.R = opts.r_rule ? (*opts.r_rule)(double(k)) : std::pow(double(k), 0.25);
    s.eps = std::abs(s.f7) * std::sqrt(s.R);
    s.nu = s.eps + std::abs(s.f4 * s.f7);
    s.delta = s.R * s.R * s.nu;
    return s;
}

std::vector<ScheduleDegenerate> schedule_degenerate(const OrbitSequence& seq,
                                                    const std::vector<int>& ks,
                                                    const ScheduleOptions& opts) {
    validate_gamma2(seq);
    const int K = opts.validation_horizon;
    // c1 must vanish and the R-rule must keep R delta -> 0.
    const auto tail = seq.params_at(K);
    if (std::abs(tail[1] * tail[2]) > 1e-3)
        throw std::invalid_argument("BAD_SEQUENCE: c1 != 0 (use the generic schedule)");
    double r_prev = 0;
    for (int k : {K / 4, K / 2, K}) {
        const auto s = schedule_degenerate_at(seq, k, opts);
        if (k == K && (s.R < r_prev || s.R * s.delta > 0.5))
            throw std::invalid_argument(
                "BAD_SEQUENCE: R-rule violates lim R = inf, lim R delta = 0 on the sampled tail");
        r_prev = s.R;
    }
    std::vector<ScheduleDegenerate> out;
    for (int k : ks) out.push_back(schedule_degenerate_at(seq, k, opts));
    return out;
}

}  // namespace n7
