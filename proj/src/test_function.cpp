#include "n7/test_function.hpp"

#include <cmath>
#include <stdexcept>

#include "n7/coadjoint.hpp"
#include "n7/group_law.hpp"
#include "n7/structure_constants.hpp"

namespace n7 {

namespace {

// Shifted coefficients: p(u + b) = sum_m shifted[m] u^m.
std::vector<double> shift_poly(const std::vector<double>& poly, double b) {
    const int deg = int(poly.size()) - 1;
    std::vector<double> shifted(poly.size(), 0.0);
    for (int j = 0; j <= deg; ++j) {
        double binom = 1.0;
        double bpow = 1.0;
        for (int m = j; m >= 0; --m) {
            shifted[std::size_t(m)] += poly[std::size_t(j)] * binom * bpow;
            if (m > 0) {
                binom = binom * m / double(j - m + 1);
                bpow *= b;
            }
        }
    }
    return shifted;
}

}  // namespace

double AxisFactor::value(double t) const {
    double p = 0.0;
    for (int m = int(poly.size()) - 1; m >= 0; --m) p = p * t + poly[std::size_t(m)];
    const double u = t - b;
    return p * std::exp(-a * u * u);
}

Complex AxisFactor::hat(double c) const {
    // int u^m e^{-a u^2 + s u} du with s = -2 pi i c obeys
    //   G_{m+1} = (s G_m + m G_{m-1}) / (2a),  G_0 = sqrt(pi/a) e^{s^2/(4a)}.
    const Complex s(0.0, -2.0 * M_PI * c);
    const auto shifted = shift_poly(poly, b);
    const double g0 = std::sqrt(M_PI / a) * std::exp(-M_PI * M_PI * c * c / a);
    Complex gm_prev(0.0, 0.0);
    Complex gm(g0, 0.0);
    Complex acc = shifted[0] * gm;
    for (std::size_t m = 1; m < shifted.size(); ++m) {
        const Complex gnext = (s * gm + double(m - 1) * gm_prev) / (2.0 * a);
        gm_prev = gm;
        gm = gnext;
        acc += shifted[m] * gm;
    }
    // e^{-2 pi i c b} from the substitution u = t - b.
    const double phase = -2.0 * M_PI * c * b;
    return acc * Complex(std::cos(phase), std::sin(phase));
}

double AxisFactor::integral_abs() const {
    const double r = decay_radius(1e-14);
    const int n = 4001;
    const double lo = b - r, hi = b + r, h = (hi - lo) / (n - 1);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        acc += w * std::abs(value(lo + i * h));
    }
    return acc * h;
}

double AxisFactor::decay_radius(double tol) const {
    const auto shifted = shift_poly(poly, b);
    auto envelope = [&](double u) {
        double p = 0.0, upow = 1.0;
        for (double cm : shifted) {
            p += std::abs(cm) * upow;
            upow *= u;
        }
        return p * std::exp(-a * u * u);
    };
    double peak = 0.0;
    for (double u = 0.0; u <= 10.0; u += 0.05) peak = std::max(peak, envelope(u));
    const double floor = tol * std::max(peak, 1e-300);
    double r = 0.5;
    while (envelope(r) > floor && r < 64.0) r += 0.25;
    return r;
}

double AxisFactor::hat_decay_radius(double tol) const {
    auto mag = [&](double c) { return std::abs(hat(c)); };
    double peak = 0.0;
    for (double c = 0.0; c <= 10.0; c += 0.05) peak = std::max(peak, mag(c));
    const double floor = tol * std::max(peak, 1e-300);
    double r = 0.5;
    while ((mag(r) > floor || mag(-r) > floor) && r < 64.0) r += 0.25;
    return r;
}

AxisFactor AxisFactor::reflected() const {
    AxisFactor out = *this;
    out.b = -b;
    for (std::size_t m = 1; m < out.poly.size(); m += 2) out.poly[m] = -out.poly[m];
    return out;
}

TestFunction::TestFunction(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

TestFunction TestFunction::gaussian(Complex coef, const std::array<double, 7>& centre, double a) {
    Atom atom;
    atom.coef = coef;
    for (int i = 0; i < 7; ++i) {
        atom.axes[std::size_t(i)].a = a;
        atom.axes[std::size_t(i)].b = centre[std::size_t(i)];
    }
    return TestFunction({atom});
}

TestFunction TestFunction::involution() const {
    std::vector<Atom> atoms;
    for (const auto& atom : atoms_) {
        Atom out;
        out.coef = std::conj(atom.coef);
        for (int i = 0; i < 7; ++i) out.axes[std::size_t(i)] = atom.axes[std::size_t(i)].reflected();
        atoms.push_back(std::move(out));
    }
    TestFunction f(std::move(atoms));
    f.geometry_ = geometry_;
    return f;
}

TestFunction TestFunction::operator+(const TestFunction& o) const {
    std::vector<Atom> atoms = atoms_;
    atoms.insert(atoms.end(), o.atoms_.begin(), o.atoms_.end());
    TestFunction f(std::move(atoms));
    f.geometry_ = geometry_ ? geometry_ : o.geometry_;
    return f;
}

TestFunction TestFunction::scaled(Complex c) const {
    TestFunction f = *this;
    for (auto& atom : f.atoms_) atom.coef *= c;
    return f;
}

Complex TestFunction::value(const std::array<double, 7>& z) const {
    Complex acc(0.0, 0.0);
    for (const auto& atom : atoms_) {
        double prod = 1.0;
        for (int i = 0; i < 7; ++i) prod *= atom.axes[std::size_t(i)].value(z[std::size_t(i)]);
        acc += atom.coef * prod;
    }
    return acc;
}

double TestFunction::value_abs_bound() const {
    double acc = 0.0;
    for (const auto& atom : atoms_) {
        double prod = std::abs(atom.coef);
        for (int i = 0; i < 7; ++i) {
            const auto& ax = atom.axes[std::size_t(i)];
            double peak = 0.0;
            for (double t = ax.b - 5.0; t <= ax.b + 5.0; t += 0.05)
                peak = std::max(peak, std::abs(ax.value(t)));
            prod *= peak;
        }
        acc += prod;
    }
    return acc;
}

double TestFunction::l1_norm() const {
    double acc = 0.0;
    for (const auto& atom : atoms_) {
        double prod = std::abs(atom.coef);
        for (int i = 0; i < 7; ++i) prod *= atom.axes[std::size_t(i)].integral_abs();
        acc += prod;
    }
    return acc;
}

void TestFunction::bind(const StructureConstants& sc) { geometry_ = SectionGeometry::shared(sc); }

Complex TestFunction::hat(const std::array<double, 2>& x, const std::array<double, 5>& q) const {
    if (!geometry_) throw std::logic_error("TestFunction::hat called before bind()");
    const auto c = geometry_->twist_solve(x, q);
    Complex acc(0.0, 0.0);
    for (const auto& atom : atoms_) {
        Complex term = atom.coef * atom.axes[0].value(x[0]) * atom.axes[1].value(x[1]);
        for (int i = 0; i < 5; ++i) term *= atom.axes[std::size_t(2 + i)].hat(c[std::size_t(i)]);
        acc += term;
    }
    return acc;
}

Complex TestFunction::character(const std::array<double, 4>& xi) const {
    Complex acc(0.0, 0.0);
    for (const auto& atom : atoms_) {
        Complex term = atom.coef;
        for (int i = 0; i < 4; ++i) term *= atom.axes[std::size_t(i)].hat(xi[std::size_t(i)]);
        for (int i = 4; i < 7; ++i) term *= atom.axes[std::size_t(i)].hat(0.0);
        acc += term;
    }
    return acc;
}

double TestFunction::x_radius(double tol) const {
    double r = 0.0;
    for (const auto& atom : atoms_)
        for (int i = 0; i < 2; ++i)
            r = std::max(r, std::abs(atom.axes[std::size_t(i)].b) +
                                atom.axes[std::size_t(i)].decay_radius(tol));
    return r;
}

double TestFunction::q_radius(int slot, double tol) const {
    if (slot < 0 || slot > 4) throw std::out_of_range("q_radius slot");
    double r = 0.0;
    for (const auto& atom : atoms_)
        r = std::max(r, atom.axes[std::size_t(2 + slot)].hat_decay_radius(tol));
    return r;
}

double SectionGeometry::Poly2::eval(double x1, double x2) const {
    double acc = 0.0;
    for (const auto& t : terms) {
        double v = t[0];
        for (int e = 0; e < int(t[1]); ++e) v *= x1;
        for (int e = 0; e < int(t[2]); ++e) v *= x2;
        acc += v;
    }
    return acc;
}

SectionGeometry::SectionGeometry(const StructureConstants& sc) {
    if (sc.dim() != 7)
        throw std::invalid_argument("UNSUPPORTED_POLARIZATION: section geometry needs dim 7");
    // The coordinate polarization span<X_3..X_7> must be an abelian ideal and
    // the section span<X_1, X_2> an abelian subalgebra.
    auto is_zero = [](const RatVec& v) {
        for (const auto& c : v)
            if (c != 0) return false;
        return true;
    };
    if (!is_zero(sc.basis_bracket(1, 2)))
        throw std::invalid_argument("UNSUPPORTED_POLARIZATION: section span<X1,X2> not abelian");
    for (int i = 3; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            if (!is_zero(sc.basis_bracket(i, j)))
                throw std::invalid_argument(
                    "UNSUPPORTED_POLARIZATION: span<X3..X7> not abelian");
    for (int i = 1; i <= 2; ++i)
        for (int j = 3; j <= 7; ++j) {
            RatVec br = sc.basis_bracket(i, j);
            if (br[0] != 0 || br[1] != 0)
                throw std::invalid_argument("UNSUPPORTED_POLARIZATION: span<X3..X7> not an ideal");
        }

    const PolynomialMap law = derive_group_law(sc, Chart::FirstKind);
    // Component o of exp(x W) exp(Y) is linear in Y for the abelian ideal;
    // collect the coefficient of y_s as a polynomial in (x1, x2).
    for (int o = 3; o <= 7; ++o) {
        for (const auto& [mono, coef] : law.components[std::size_t(o - 1)].terms()) {
            int y_slot = -1, y_deg = 0;
            bool vanishes = false;
            for (int v = 2; v < 7; ++v)
                if (mono.exponent(v) > 0) vanishes = true;  // x3..x7 present
            for (int v = 7; v < 9; ++v)
                if (mono.exponent(v) > 0) vanishes = true;  // y1, y2 present
            for (int v = 9; v < 14; ++v) {
                const int e = mono.exponent(v);
                if (e == 0) continue;
                y_deg += e;
                y_slot = v - 9 + 3;  // 1-based algebra slot
            }
            if (vanishes) continue;  // zero at x3..x7 = 0, Y in the ideal
            if (y_deg == 0)
                throw std::logic_error("section twist has a y-free term");
            if (y_deg > 1)
                throw std::logic_error("section twist is not linear over the ideal");
            entries_[std::size_t(o - 3)][std::size_t(y_slot - 3)].terms.push_back(
                {to_double(coef), double(mono.exponent(0)), double(mono.exponent(1))});
        }
    }
    // Unit triangular sanity.
    for (int r = 0; r < 5; ++r) {
        const auto& diag = entries_[std::size_t(r)][std::size_t(r)];
        if (diag.terms.size() != 1 || diag.terms[0][0] != 1.0 || diag.terms[0][1] != 0 ||
            diag.terms[0][2] != 0)
            throw std::logic_error("section twist diagonal is not 1");
        for (int c = r + 1; c < 5; ++c)
            if (!entries_[std::size_t(r)][std::size_t(c)].terms.empty())
                throw std::logic_error("section twist is not lower triangular");
    }
}

std::array<double, 5> SectionGeometry::twist_solve(const std::array<double, 2>& x,
                                                   const std::array<double, 5>& q) const {
    // Solve L(x)^T c = q; L^T is unit upper triangular.
    std::array<double, 5> c{};
    for (int i = 4; i >= 0; --i) {
        double v = q[std::size_t(i)];
        for (int o = i + 1; o < 5; ++o)
            v -= entries_[std::size_t(o)][std::size_t(i)].eval(x[0], x[1]) * c[std::size_t(o)];
        c[std::size_t(i)] = v;
    }
    return c;
}

std::shared_ptr<const SectionGeometry> SectionGeometry::shared(const StructureConstants& sc) {
    return std::make_shared<SectionGeometry>(sc);
}

Convolution::Convolution(const StructureConstants& sc, std::shared_ptr<const GroupFunction> f,
                         std::shared_ptr<const GroupFunction> g, int quadrature_points)
    : sc_(sc), f_(std::move(f)), g_(std::move(g)), m_(quadrature_points),
      geometry_(SectionGeometry::shared(sc)) {}

std::array<std::array<double, 5>, 5> Convolution::alpha_transpose(
    const std::array<double, 2>& t) const {
    std::vector<double> w(7, 0.0);
    w[0] = t[0];
    w[1] = t[1];
    const auto m = ad_exp_double(sc_, w);
    std::array<std::array<double, 5>, 5> at{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) at[std::size_t(i)][std::size_t(j)] = m[std::size_t(j + 2)][std::size_t(i + 2)];
    return at;
}

Complex Convolution::hat(const std::array<double, 2>& x, const std::array<double, 5>& q) const {
    const double rf = f_->x_radius(1e-9);
    const int n = m_;
    const double h = 2.0 * rf / (n - 1);
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::array<double, 2> s{-rf + i * h, -rf + j * h};
            const std::array<double, 2> xs{x[0] - s[0], x[1] - s[1]};
            const std::array<double, 2> sx{s[0] - x[0], s[1] - x[1]};
            const auto at = alpha_transpose(sx);
            std::array<double, 5> tq{};
            for (int r = 0; r < 5; ++r) {
                double v = 0.0;
                for (int c = 0; c < 5; ++c) v += at[std::size_t(r)][std::size_t(c)] * q[std::size_t(c)];
                tq[std::size_t(r)] = v;
            }
            acc += f_->hat(s, tq) * g_->hat(xs, q);
        }
    return acc * h * h;
}

Complex Convolution::character(const std::array<double, 4>& xi) const {
    return f_->character(xi) * g_->character(xi);
}

double Convolution::x_radius(double tol) const { return f_->x_radius(tol) + g_->x_radius(tol); }

double Convolution::q_radius(int slot, double tol) const {
    return std::max(f_->q_radius(slot, tol), g_->q_radius(slot, tol));
}

}  // namespace n7
