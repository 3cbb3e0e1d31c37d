#include "n7/ncdl_report.hpp"

#include <cmath>

namespace n7 {

std::string ncdl_case_name(NcdlCase c) {
    switch (c) {
        case NcdlCase::Generic: return "generic";
        case NcdlCase::Degenerate: return "degenerate";
        case NcdlCase::Gamma0: return "gamma0";
    }
    return "?";
}

namespace {

NcdlRow generic_row(const StructureConstants& sc, const GroupFunction& f,
                    const OrbitSequence& seq, double c1, int k, const NcdlOptions& opts) {
    const ScheduleGeneric sched = schedule_generic_at(seq, c1, k, opts.schedule);
    Grid grid;
    grid.n = opts.grid_n;
    grid.half_width = opts.window;
    grid.centre = window_centre_generic(sched, opts.f5_ref);

    const std::vector<double> p_k = {0, 0, sched.f3, sched.f4, 0, 0, sched.f7};
    const auto pi = pi_k_operator(sc, f, p_k, grid);
    const auto sig = sigma_k_generic(sc, f, sched, grid);

    NcdlRow row;
    row.k = k;
    row.schedule_scalar = sched.gamma;
    row.pi_norm = operator_norm(pi.kernel);
    row.sigma_norm = operator_norm(sig.op.kernel);
    row.diff_norm = operator_norm(pi.kernel - sig.op.kernel);
    row.active_terms = sig.active_terms;
    row.window_centre = grid.centre;
    return row;
}

NcdlRow degenerate_row(const StructureConstants& sc, const GroupFunction& f,
                       const OrbitSequence& seq, int k, const NcdlOptions& opts) {
    const ScheduleDegenerate sched = schedule_degenerate_at(seq, k, opts.schedule);
    Grid grid;
    grid.n = opts.grid_n;
    grid.half_width = opts.window;
    grid.centre = window_centre_degenerate(sched);

    const std::vector<double> p_k = {0, 0, sched.f3, sched.f4, 0, 0, sched.f7};
    const auto pi = pi_k_operator(sc, f, p_k, grid);
    const auto sig = sigma_k_degenerate(sc, f, sched, grid);

    NcdlRow row;
    row.k = k;
    row.schedule_scalar = sched.R * sched.delta;
    row.pi_norm = operator_norm(pi.kernel);
    row.sigma_norm = operator_norm(sig.op.kernel);
    row.diff_norm = operator_norm(pi.kernel - sig.op.kernel);
    row.active_terms = sig.active_terms;
    row.window_centre = grid.centre;
    return row;
}

NcdlRow gamma0_row(const StructureConstants& sc, const GroupFunction& f,
                   const OrbitSequence& seq, int k, const NcdlOptions& opts) {
    const auto p = seq.params_at(k);
    const double f5 = p[0], f6 = p[1];
    Grid grid;
    grid.n = opts.grid_n;
    grid.half_width = opts.window;

    const std::vector<double> gamma1 = {0, 0, 0, 0, f5, f6, 0};
    const auto pi = induced_kernel(sc, f, gamma1, grid);

    auto h = [&f](const std::array<double, 4>& xi) { return f.character(xi); };
    const auto sig = sigma_gamma0(sc, f5, f6, h, grid);

    NcdlRow row;
    row.k = k;
    row.schedule_scalar = std::hypot(f5, f6);
    row.pi_norm = operator_norm(pi.kernel);
    row.sigma_norm = operator_norm(sig.kernel);
    row.diff_norm = operator_norm(pi.kernel - sig.kernel);
    row.active_terms = 0;
    return row;
}

}  // namespace

NcdlReport ncdl_report(const StructureConstants& sc, const GroupFunction& f,
                       const OrbitSequence& seq, NcdlCase case_tag, const NcdlOptions& opts) {
    NcdlReport rep;
    rep.case_tag = case_tag;

    double c1 = 0;
    if (case_tag == NcdlCase::Generic) {
        LimitSetOptions lopt;
        OrbitSequence probe = seq;
        probe.horizon = std::max(seq.horizon, 1000);
        const LimitSet ls = limit_set(probe, lopt);
        if (!ls.c1.has_value() || *ls.c1 == 0.0)
            throw std::invalid_argument("BAD_SEQUENCE: generic case needs c1 != 0");
        c1 = *ls.c1;
    }

    for (int k : opts.k_list) {
        switch (case_tag) {
            case NcdlCase::Generic: rep.rows.push_back(generic_row(sc, f, seq, c1, k, opts)); break;
            case NcdlCase::Degenerate: rep.rows.push_back(degenerate_row(sc, f, seq, k, opts)); break;
            case NcdlCase::Gamma0: rep.rows.push_back(gamma0_row(sc, f, seq, k, opts)); break;
        }
    }

    rep.decreasing = rep.rows.size() > 1;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        if (!(rep.rows[i].diff_norm < rep.rows[i - 1].diff_norm)) rep.decreasing = false;
    if (!rep.rows.empty() && rep.rows.front().pi_norm > 0)
        rep.final_ratio = rep.rows.back().diff_norm / rep.rows.front().pi_norm;
    rep.pass = rep.decreasing && rep.final_ratio < opts.tol_final;
    return rep;
}

std::vector<MultiplicativityRow> multiplicativity_defect(const StructureConstants& sc,
                                                         const GroupFunction& f,
                                                         const GroupFunction& g,
                                                         const OrbitSequence& seq,
                                                         const NcdlOptions& opts) {
    LimitSetOptions lopt;
    OrbitSequence probe = seq;
    probe.horizon = std::max(seq.horizon, 1000);
    const LimitSet ls = limit_set(probe, lopt);
    if (!ls.c1.has_value() || *ls.c1 == 0.0)
        throw std::invalid_argument("BAD_SEQUENCE: multiplicativity ladder needs c1 != 0");
    const double c1 = *ls.c1;

    std::vector<MultiplicativityRow> rows;
    for (int k : opts.k_list) {
        const ScheduleGeneric sched = schedule_generic_at(seq, c1, k, opts.schedule);
        Grid grid;
        grid.n = opts.grid_n;
        grid.half_width = opts.window;
        grid.centre = window_centre_generic(sched, opts.f5_ref);

        // Field of the convolution: at each limit point the product of the
        // induced kernels (exact in the continuum).
        OperatorField product_field = [&](const std::vector<double>& l, const Grid& gr) {
            const auto kf = induced_kernel_any_layer(sc, f, l, gr).kernel;
            const auto kg = induced_kernel_any_layer(sc, g, l, gr).kernel;
            return Eigen::MatrixXcd(kf * kg);
        };
        const auto sig_fg = sigma_k_generic_field(sc, product_field, sched, grid);
        const auto sig_f = sigma_k_generic(sc, f, sched, grid);
        const auto sig_g = sigma_k_generic(sc, g, sched, grid);

        MultiplicativityRow row;
        row.k = k;
        row.sigma_f_norm = operator_norm(sig_f.op.kernel);
        row.sigma_g_norm = operator_norm(sig_g.op.kernel);
        row.defect = operator_norm(sig_fg.op.kernel - sig_f.op.kernel * sig_g.op.kernel);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace n7
