#pragma once

#include <array>
#include <complex>
#include <memory>
#include <vector>

namespace n7 {

using Complex = std::complex<double>;

// One separable factor p(t) * exp(-a (t-b)^2), a > 0, p a real polynomial.
struct AxisFactor {
    std::vector<double> poly{1.0};  // coefficients, poly[m] * t^m
    double a = M_PI;
    double b = 0.0;

    double value(double t) const;
    // Closed-form Fourier transform  \int p(t) e^{-a(t-b)^2} e^{-2 pi i c t} dt.
    Complex hat(double c) const;
    double integral_abs() const;    // \int |p| e^{-a(t-b)^2}, dense quadrature
    // |value| < tol * scale outside [b - r, b + r].
    double decay_radius(double tol) const;
    // |hat| < tol * scale outside [-r, r] (hat is centred at 0 in c).
    double hat_decay_radius(double tol) const;

    AxisFactor reflected() const;   // factor of t -> value(-t)
};

// Finite sum of separable Gaussian-polynomial atoms on R^7, written in
// first-kind exponential coordinates; Schwartz by construction and closed
// under the involution F*(g) = conj(F(g^{-1})) = conj(F(-g)).
struct Atom {
    Complex coef{1.0, 0.0};
    std::array<AxisFactor, 7> axes;
};

// Evaluation interface consumed by the kernel builder: the partial Fourier
// data of a function on the group.
class GroupFunction {
  public:
    virtual ~GroupFunction() = default;

    // hat^P(x, q): partial Fourier transform along the polarization
    // coordinates, evaluated at the section point x = (x1, x2) and the
    // restricted functional q = (q3, q4, q5, q6, q7).
    virtual Complex hat(const std::array<double, 2>& x, const std::array<double, 5>& q) const = 0;

    // Unitary character transform at (xi1..xi4).
    virtual Complex character(const std::array<double, 4>& xi) const = 0;

    // Numerically relevant radius of x -> hat(x, .) per section axis.
    virtual double x_radius(double tol) const = 0;
    // Numerically relevant radius of the q-slot (3..7 -> index 0..4).
    virtual double q_radius(int slot, double tol) const = 0;
};

class StructureConstants;

class TestFunction : public GroupFunction {
  public:
    TestFunction() = default;
    explicit TestFunction(std::vector<Atom> atoms);

    // exp(-pi sum (t_i - b_i)^2) with optional centre and overall coefficient.
    static TestFunction gaussian(Complex coef = 1.0, const std::array<double, 7>& centre = {},
                                 double a = M_PI);

    const std::vector<Atom>& atoms() const { return atoms_; }

    TestFunction involution() const;                // F*(g) = conj(F(-g))
    TestFunction operator+(const TestFunction&) const;
    TestFunction scaled(Complex c) const;

    double value_abs_bound() const;
    Complex value(const std::array<double, 7>& z) const;

    // L1 norm: exact per atom via axis quadratures, summed over atoms
    // (equality whenever the atoms are nonnegative, upper bound otherwise).
    double l1_norm() const;

    // Requires geometry: the partial transform needs the section twist of the
    // group law.  bind() fixes the algebra once; hat() fails before that.
    void bind(const StructureConstants& sc);

    Complex hat(const std::array<double, 2>& x, const std::array<double, 5>& q) const override;
    Complex character(const std::array<double, 4>& xi) const override;
    double x_radius(double tol) const override;
    double q_radius(int slot, double tol) const override;

  private:
    std::vector<Atom> atoms_;
    std::shared_ptr<const class SectionGeometry> geometry_;
};

// Geometry of the coordinate polarization p = span<X_3..X_7> with abelian
// section span<X_1, X_2>: the unit-triangular twist L(x) with
// z_p(exp(xW) exp(Y)) = L(x) Y, plus its validity checks.
class SectionGeometry {
  public:
    explicit SectionGeometry(const StructureConstants& sc);

    // L(x)^{-T} q via back substitution (L is unit lower triangular in the
    // weight order 3 < 4 < 5 < 6 < 7).
    std::array<double, 5> twist_solve(const std::array<double, 2>& x,
                                      const std::array<double, 5>& q) const;

    static std::shared_ptr<const SectionGeometry> shared(const StructureConstants& sc);

  private:
    // L_{ij}(x) as coefficient tables over monomials x1^e1 x2^e2.
    struct Poly2 {
        std::vector<std::array<double, 3>> terms;  // (coef, e1, e2)
        double eval(double x1, double x2) const;
    };
    std::array<std::array<Poly2, 5>, 5> entries_;  // row = output slot, col = input slot
};

// Twisted convolution evaluator: the partial Fourier data of F * G
// (group convolution), realized as a 2-d quadrature of closed-form factors:
//   (F*G)^(x, q) = \int F^(s, alpha(s-x)^T q) G^(x-s, q) ds
// where alpha(t) = Ad(exp(t1 X1 + t2 X2)) restricted to the polarization.
class Convolution : public GroupFunction {
  public:
    Convolution(const StructureConstants& sc, std::shared_ptr<const GroupFunction> f,
                std::shared_ptr<const GroupFunction> g, int quadrature_points = 33);

    Complex hat(const std::array<double, 2>& x, const std::array<double, 5>& q) const override;
    Complex character(const std::array<double, 4>& xi) const override;
    double x_radius(double tol) const override;
    double q_radius(int slot, double tol) const override;

  private:
    std::array<std::array<double, 5>, 5> alpha_transpose(const std::array<double, 2>& t) const;

    const StructureConstants& sc_;
    std::shared_ptr<const GroupFunction> f_, g_;
    int m_;
    std::shared_ptr<const SectionGeometry> geometry_;
};

}  // namespace n7
