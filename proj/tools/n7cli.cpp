// Batch front-end: derives the group law and coadjoint tables, classifies
// and samples orbits, verifies dual-space limits, and runs the layer-passing
// convergence checks.  Exit codes: 0 success/PASS, 1 verification FAIL,
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "n7/coadjoint.hpp"
#include "n7/coherent_frame.hpp"
#include "n7/dual_topology.hpp"
#include "n7/group_law.hpp"
#include "n7/ncdl_report.hpp"
#include "n7/orbits.hpp"

using json = nlohmann::json;
using namespace n7;

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<double> parse_functional(const std::string& text) {
    std::vector<double> f;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(std::stod(tok));
    if (f.size() != 7) throw CLI::ValidationError("--f", "needs 7 comma-separated values");
    return f;
}

RatVec parse_functional_exact(const std::string& text) {
    RatVec f;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(parse_rational(tok));
    if (f.size() != 7) throw CLI::ValidationError("--f", "needs 7 comma-separated values");
    return f;
}

TestFunction make_atom(const std::string& name) {
    if (name == "gauss") return TestFunction::gaussian();
    if (name == "gauss-shifted")
        return TestFunction::gaussian(1.0, {0.3, -0.2, 0.1, 0.0, 0.2, -0.1, 0.15});
    if (name == "hermitian-pair") {
        TestFunction g = TestFunction::gaussian(Complex(0.7, 0.4),
                                                {0.3, -0.2, 0.1, 0.0, 0.2, -0.1, 0.15});
        return g + g.involution();
    }
    throw CLI::ValidationError("--atom", "unknown atom '" + name + "'");
}

int cmd_check_algebra(const std::string& path) {
    const auto sc = StructureConstants::load(path);
    const auto rep = sc.validate();
    fmt::print("antisymmetry: {}\n", rep.antisymmetry_ok ? "ok" : "FAIL");
    fmt::print("jacobi: {}\n", rep.jacobi_ok ? "ok" : "FAIL");
    for (const auto& v : rep.jacobi_violations)
        fmt::print("  jacobi violated at triple ({}, {}, {})\n", v.i, v.j, v.k);
    for (const auto& [i, j] : rep.antisymmetry_violations)
        fmt::print("  antisymmetry violated at pair ({}, {})\n", i, j);
    if (rep.nilpotent) {
        fmt::print("nilpotency step: {}\n", rep.nilpotency_step);
        std::string dims;
        for (int d : rep.lower_central_dims) dims += (dims.empty() ? "" : " ") + std::to_string(d);
        fmt::print("lower central dims: {}\n", dims);
    } else {
        fmt::print("nilpotency: FAIL (series does not reach zero)\n");
    }
    return rep.ok() ? 0 : 1;
}

int cmd_derive_law(const std::string& path, const std::string& compare,
                   const std::string& chart_name, const std::string& out_path) {
    const auto sc = StructureConstants::load(path);
    const Chart chart = chart_name == "split" ? Chart::Split : Chart::FirstKind;
    const auto law = derive_group_law(sc, chart);
    fmt::print("derived {}-chart law with {} components\n",
               chart == Chart::Split ? "split" : "first-kind", law.dim);
    std::string csv = "component,monomial,derived,reference\n";
    if (!compare.empty()) {
        const auto ref = parse_law_file(compare, sc.dim());
        const auto diffs = compare_laws(law, ref);
        if (diffs.empty()) {
            fmt::print("monomial diff vs {}: empty (exact match)\n", compare);
        } else {
            fmt::print("monomial diff vs {}: {} entries\n", compare, diffs.size());
            for (const auto& d : diffs) {
                fmt::print("  z{}: {}  derived={} reference={}\n", d.component, d.monomial,
                           to_string(d.lhs_coeff), to_string(d.rhs_coeff));
                csv += fmt::format("{},{},{},{}\n", d.component, csv_field(d.monomial),
                                   to_string(d.lhs_coeff), to_string(d.rhs_coeff));
            }
        }
    }
    if (!out_path.empty()) write_text(out_path, csv);
    return 0;
}

int cmd_orbit(const std::string& algebra, const std::string& f_text, int sample_n, double extent,
              const std::string& out_path) {
    const auto sc = algebra.empty() ? StructureConstants::n7() : StructureConstants::load(algebra);
    const RatVec f = parse_functional_exact(f_text);
    const auto tag = classify_layer(f);
    const auto desc = canonical_orbit(f);
    const auto [i1, i2] = orbit_invariants(f);
    fmt::print("layer: {}\n", layer_name(tag));
    std::string params;
    for (const auto& p : desc.params) params += (params.empty() ? "" : ", ") + to_string(p);
    fmt::print("canonical parameters: ({})\n", params);
    fmt::print("invariants: I1 = {}, I2 = {}\n", to_string(i1), to_string(i2));

    const auto stab = stabilizer(sc, f);
    const auto pol = vergne_polarization(sc, f);
    fmt::print("stabilizer dim: {}\n", stab.dim());
    fmt::print("polarization dim: {} (subordination {})\n", pol.space.dim(),
               pol.subordination_ok ? "ok" : "FAIL");

    std::vector<double> fd;
    for (const auto& c : f) fd.push_back(to_double(c));
    OrbitSampleSpec spec;
    spec.points_per_axis = sample_n;
    spec.extent = extent;
    const auto sample = orbit_sample(sc, fd, spec);
    std::string csv = "f1,f2,f3,f4,f5,f6,f7\n";
    for (const auto& row : sample) {
        for (int i = 0; i < 7; ++i) csv += (i ? "," : "") + num(row[std::size_t(i)]);
        csv += "\n";
    }
    if (!out_path.empty()) {
        write_text(out_path, csv);
        fmt::print("wrote {} sample points to {}\n", sample.size(), out_path);
    } else {
        fmt::print("sampled {} orbit points (use --out to export)\n", sample.size());
    }
    return pol.subordination_ok ? 0 : 1;
}

int cmd_limits(const std::string& rule_f3, const std::string& rule_f4,
               const std::string& rule_f7, const std::string& rule_f5,
               const std::string& rule_f6, int horizon, const std::string& candidate_text,
               double tol, const std::string& mode_name, const std::string& json_path) {
    OrbitSequence seq;
    if (!rule_f5.empty() || !rule_f6.empty()) {
        if (rule_f5.empty() || rule_f6.empty())
            throw CLI::ValidationError("--rule-f5/--rule-f6", "both Gamma1 rules are required");
        seq.layer = LayerTag::Gamma1;
        seq.rules = {RuleExpr::parse(rule_f5), RuleExpr::parse(rule_f6)};
    } else {
        if (rule_f4.empty() || rule_f7.empty())
            throw CLI::ValidationError("--rule-f4/--rule-f7", "Gamma2 rules are required");
        seq.layer = LayerTag::Gamma2;
        seq.rules = {RuleExpr::parse(rule_f3.empty() ? "0" : rule_f3), RuleExpr::parse(rule_f4),
                     RuleExpr::parse(rule_f7)};
    }
    seq.horizon = horizon;

    const LimitSet ls = limit_set(seq);
    json out;
    out["kind"] = limit_kind_name(ls.kind);
    if (ls.c1) out["c1"] = *ls.c1;
    if (ls.c2) out["c2"] = *ls.c2;
    if (!ls.point.empty()) out["point"] = ls.point;
    out["witnesses"] = json::array();
    out["distances"] = json::array();

    bool pass = ls.kind != LimitKind::Divergent;
    if (!candidate_text.empty()) {
        const auto candidate = parse_functional(candidate_text);
        const WitnessMode mode =
            mode_name == "on-orbit" ? WitnessMode::OnOrbit : WitnessMode::Stated;
        const auto rep = verify_limit(seq, candidate, tol, mode, horizon);
        out["candidate"] = candidate;
        out["pass"] = rep.pass;
        out["in_limit_set"] = rep.in_limit_set;
        out["max_distance"] = rep.max_distance;
        out["max_orbit_defect"] = rep.max_orbit_defect;
        out["note"] = rep.note;
        for (const auto& w : rep.witnesses) out["witnesses"].push_back(w);
        for (double d : rep.distances) out["distances"].push_back(d);
        pass = rep.pass;
        fmt::print("candidate verification: {}{}\n", rep.pass ? "PASS" : "FAIL",
                   rep.note.empty() ? "" : " (" + rep.note + ")");
        fmt::print("max witness distance: {}\n", num(rep.max_distance));
    }
    fmt::print("limit set kind: {}\n", limit_kind_name(ls.kind));
    if (ls.c1) fmt::print("c1 = {}\n", num(*ls.c1));
    if (ls.c2) fmt::print("c2 = {}\n", num(*ls.c2));
    if (!json_path.empty()) write_text(json_path, out.dump(2) + "\n");
    return pass ? 0 : 1;
}

int cmd_rep_norm(const std::string& atom, const std::string& f_text, int grid_n, double window,
                 const std::string& json_path) {
    const auto sc = StructureConstants::n7();
    TestFunction F = make_atom(atom);
    F.bind(sc);
    const auto f = parse_functional(f_text);
    const auto tag = classify_layer(f, 1e-12);
    json out;
    out["atom"] = atom;
    out["functional"] = f;
    out["layer"] = layer_name(tag);
    if (tag == LayerTag::Gamma0) {
        std::array<double, 4> xi{f[0], f[1], f[2], f[3]};
        const auto v = character_transform(F, xi);
        Grid4 g4;
        const double sup = pi0_sup_norm(F, g4);
        fmt::print("character transform: {} + {}i\n", num(v.real()), num(v.imag()));
        fmt::print("pi0 sup norm: {}\n", num(sup));
        out["character"] = {v.real(), v.imag()};
        out["pi0_sup_norm"] = sup;
    } else {
        Grid grid;
        grid.n = grid_n;
        grid.half_width = window;
        const auto op = induced_kernel(sc, F, f, grid);
        const double nrm = operator_norm(op.kernel);
        const double l1 = F.l1_norm();
        const double herm = (op.kernel - op.kernel.adjoint()).cwiseAbs().maxCoeff();
        fmt::print("operator norm: {}\n", num(nrm));
        fmt::print("L1 bound: {}\n", num(l1));
        fmt::print("hermiticity defect (entrywise, for F = F*): {}\n", num(herm));
        out["operator_norm"] = nrm;
        out["l1_bound"] = l1;
        out["grid_n"] = grid_n;
        out["window"] = window;
    }
    if (!json_path.empty()) write_text(json_path, out.dump(2) + "\n");
    return 0;
}

int cmd_ncdl_verify(const std::string& case_name, const std::string& rule_f3,
                    const std::string& rule_f4, const std::string& rule_f7,
                    const std::string& rule_f5, const std::string& rule_f6,
                    const std::string& k_list_text, int grid_n, double window,
                    const std::string& atom, double tol_final, const std::string& csv_path,
                    const std::string& json_path) {
    const auto sc = StructureConstants::n7();
    TestFunction F = make_atom(atom);
    F.bind(sc);

    NcdlCase tag;
    OrbitSequence seq;
    if (case_name == "generic" || case_name == "degenerate") {
        tag = case_name == "generic" ? NcdlCase::Generic : NcdlCase::Degenerate;
        seq.layer = LayerTag::Gamma2;
        seq.rules = {RuleExpr::parse(rule_f3.empty() ? "0" : rule_f3), RuleExpr::parse(rule_f4),
                     RuleExpr::parse(rule_f7)};
    } else if (case_name == "gamma0") {
        tag = NcdlCase::Gamma0;
        seq.layer = LayerTag::Gamma1;
        seq.rules = {RuleExpr::parse(rule_f5), RuleExpr::parse(rule_f6)};
    } else {
        throw CLI::ValidationError("--case", "must be generic, degenerate or gamma0");
    }

    NcdlOptions opts;
    opts.grid_n = grid_n;
    opts.window = window;
    opts.tol_final = tol_final;
    if (!k_list_text.empty()) {
        opts.k_list.clear();
        std::stringstream ss(k_list_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) opts.k_list.push_back(std::stoi(tok));
    }

    const auto rep = ncdl_report(sc, F, seq, tag, opts);

    std::string csv = "k,schedule_scalar,pi_norm,sigma_norm,diff_norm,active_terms\n";
    fmt::print("{:>5} {:>14} {:>14} {:>14} {:>14} {:>6}\n", "k", "schedule", "|pi|", "|sigma|",
               "|diff|", "terms");
    for (const auto& r : rep.rows) {
        fmt::print("{:5d} {:14.6g} {:14.8g} {:14.8g} {:14.8g} {:6d}\n", r.k, r.schedule_scalar,
                   r.pi_norm, r.sigma_norm, r.diff_norm, r.active_terms);
        csv += fmt::format("{},{},{},{},{},{}\n", r.k, num(r.schedule_scalar), num(r.pi_norm),
                           num(r.sigma_norm), num(r.diff_norm), r.active_terms);
    }
    double slope = 0;
    if (rep.rows.size() > 1 && rep.rows.front().diff_norm > 0 && rep.rows.back().diff_norm > 0)
        slope = std::log(rep.rows.back().diff_norm / rep.rows.front().diff_norm) /
                std::log(double(rep.rows.back().k) / rep.rows.front().k);
    fmt::print("decreasing: {}\nfinal diff ratio: {}\nresult: {}\n", rep.decreasing,
               num(rep.final_ratio), rep.pass ? "PASS" : "FAIL");

    json out;
    out["case"] = ncdl_case_name(tag);
    out["pass"] = rep.pass;
    out["decreasing"] = rep.decreasing;
    out["final_diff"] = rep.rows.empty() ? 0.0 : rep.rows.back().diff_norm;
    out["final_ratio"] = rep.final_ratio;
    out["slope"] = slope;
    out["config"] = {{"grid_n", grid_n},
                     {"window", window},
                     {"atom", atom},
                     {"tol_final", tol_final},
                     {"k_list", opts.k_list}};
    if (!csv_path.empty()) write_text(csv_path, csv);
    if (!json_path.empty()) write_text(json_path, out.dump(2) + "\n");
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit-method toolkit for the 7-dimensional nilpotent group N7"};
    app.require_subcommand(1);

    // check-algebra
    auto* check = app.add_subcommand("check-algebra", "validate a structure-constant table");
    std::string check_path;
    check->add_option("table", check_path, "structure-constant file")->required();

    // derive-law
    auto* derive = app.add_subcommand("derive-law", "derive the multiplication law");
    std::string derive_path, derive_compare, derive_chart = "exp", derive_out;
    derive->add_option("table", derive_path, "structure-constant file")->required();
    derive->add_option("--compare", derive_compare, "reference law file for a monomial diff");
    derive->add_option("--chart", derive_chart, "coordinate chart: exp (first kind) or split")
        ->check(CLI::IsMember({"exp", "split"}));
    derive->add_option("--out", derive_out, "write the diff table as CSV");

    // orbit
    auto* orbit = app.add_subcommand("orbit", "classify and sample a coadjoint orbit");
    std::string orbit_f, orbit_out, orbit_algebra;
    int orbit_n = 21;
    double orbit_extent = 10.0;
    orbit->add_option("--f", orbit_f, "functional f1,...,f7 (rationals)")->required();
    orbit->add_option("--sample-n", orbit_n, "grid points per free parameter");
    orbit->add_option("--extent", orbit_extent, "parameter range half width");
    orbit->add_option("--algebra", orbit_algebra, "structure-constant file (default: bundled N7)");
    orbit->add_option("--out", orbit_out, "CSV output path");

    // limits
    auto* limits = app.add_subcommand("limits", "limit sets of orbit sequences");
    std::string lim_f3, lim_f4, lim_f7, lim_f5, lim_f6, lim_candidate, lim_mode = "stated",
                                                         lim_json;
    int lim_K = 1000;
    double lim_tol = 1e-3;
    limits->add_option("--rule-f3", lim_f3, "Gamma2 rule for f3(k)");
    limits->add_option("--rule-f4", lim_f4, "Gamma2 rule for f4(k)");
    limits->add_option("--rule-f7", lim_f7, "Gamma2 rule for f7(k)");
    limits->add_option("--rule-f5", lim_f5, "Gamma1 rule for f5(k)");
    limits->add_option("--rule-f6", lim_f6, "Gamma1 rule for f6(k)");
    limits->add_option("--K", lim_K, "horizon");
    limits->add_option("--candidate", lim_candidate, "candidate limit functional f1,...,f7");
    limits->add_option("--tol", lim_tol, "witness distance tolerance");
    limits->add_option("--mode", lim_mode, "witness mode: stated or on-orbit")
        ->check(CLI::IsMember({"stated", "on-orbit"}));
    limits->add_option("--json", lim_json, "JSON report path");

    // rep-norm
    auto* rep = app.add_subcommand("rep-norm", "discretized representation operator norm");
    std::string rep_atom = "gauss", rep_f, rep_json;
    int rep_n = 48;
    double rep_window = 6.0;
    rep->add_option("--atom", rep_atom, "test function: gauss, gauss-shifted, hermitian-pair");
    rep->add_option("--f", rep_f, "functional f1,...,f7")->required();
    rep->add_option("--grid-n", rep_n, "grid points per axis");
    rep->add_option("--window", rep_window, "grid half width");
    rep->add_option("--json", rep_json, "JSON report path");

    // ncdl-verify
    auto* ncdl = app.add_subcommand("ncdl-verify", "layer-passing convergence certification");
    std::string nc_case, nc_f3, nc_f4, nc_f7, nc_f5, nc_f6, nc_klist, nc_atom = "gauss", nc_csv,
                                                            nc_json;
    int nc_n = 48;
    double nc_window = 6.0, nc_tol = 0.1;
    ncdl->add_option("--case", nc_case, "generic, degenerate or gamma0")->required();
    ncdl->add_option("--rule-f3", nc_f3, "Gamma2 rule for f3(k)");
    ncdl->add_option("--rule-f4", nc_f4, "Gamma2 rule for f4(k)");
    ncdl->add_option("--rule-f7", nc_f7, "Gamma2 rule for f7(k)");
    ncdl->add_option("--rule-f5", nc_f5, "Gamma1 rule for f5(k)");
    ncdl->add_option("--rule-f6", nc_f6, "Gamma1 rule for f6(k)");
    ncdl->add_option("--k-list", nc_klist, "comma-separated ladder, default 4,8,16,32");
    ncdl->add_option("--grid-n", nc_n, "grid points per axis");
    ncdl->add_option("--window", nc_window, "grid half width");
    ncdl->add_option("--profile", nc_atom, "test function name");
    ncdl->add_option("--tol-final", nc_tol, "final diff must be below tol * first pi norm");
    ncdl->add_option("--csv", nc_csv, "CSV convergence table path");
    ncdl->add_option("--json", nc_json, "JSON summary path");

    try {
        app.parse(argc, argv);
        if (*check) return cmd_check_algebra(check_path);
        if (*derive) return cmd_derive_law(derive_path, derive_compare, derive_chart, derive_out);
        if (*orbit) return cmd_orbit(orbit_algebra, orbit_f, orbit_n, orbit_extent, orbit_out);
        if (*limits)
            return cmd_limits(lim_f3, lim_f4, lim_f7, lim_f5, lim_f6, lim_K, lim_candidate,
                              lim_tol, lim_mode, lim_json);
        if (*rep) return cmd_rep_norm(rep_atom, rep_f, rep_n, rep_window, rep_json);
        if (*ncdl)
            return cmd_ncdl_verify(nc_case, nc_f3, nc_f4, nc_f7, nc_f5, nc_f6, nc_klist, nc_n,
                                   nc_window, nc_atom, nc_tol, nc_csv, nc_json);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
