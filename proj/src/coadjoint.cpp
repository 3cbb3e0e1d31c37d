#include "n7/coadjoint.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace n7 {

namespace {

// ad(W) over any ring: column j holds [W, X_j].
template <typename R, typename Scale>
std::vector<std::vector<R>> ad_matrix_t(const StructureConstants& sc, const std::vector<R>& w,
                                        Scale&& scale) {
    const int dim = sc.dim();
    std::vector<std::vector<R>> m(std::size_t(dim), std::vector<R>(std::size_t(dim), R(0)));
    for (int j = 1; j <= dim; ++j) {
        std::vector<R> ej(std::size_t(dim), R(0));
        ej[std::size_t(j - 1)] = R(1);
        auto col = sc.bracket(w, ej, scale);
        for (int i = 0; i < dim; ++i) m[std::size_t(i)][std::size_t(j - 1)] = col[std::size_t(i)];
    }
    return m;
}

template <typename R>
std::vector<std::vector<R>> mat_mul(const std::vector<std::vector<R>>& a,
                                    const std::vector<std::vector<R>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<R>> out(n, std::vector<R>(n, R(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// e^{ad W}; terminates because ad W is nilpotent.
template <typename R, typename Scale>
std::vector<std::vector<R>> ad_exp_t(const StructureConstants& sc, const std::vector<R>& w,
                                     Scale&& scale) {
    const int dim = sc.dim();
    const int step = sc.nilpotency_step();
    auto ad = ad_matrix_t(sc, w, scale);
    std::vector<std::vector<R>> acc(std::size_t(dim), std::vector<R>(std::size_t(dim), R(0)));
    std::vector<std::vector<R>> power(std::size_t(dim), std::vector<R>(std::size_t(dim), R(0)));
    for (int i = 0; i < dim; ++i) {
        acc[std::size_t(i)][std::size_t(i)] = R(1);
        power[std::size_t(i)][std::size_t(i)] = R(1);
    }
    Rat fact(1);
    for (int p = 1; p < step; ++p) {
        power = mat_mul(power, ad);
        fact *= p;
        const Rat inv = Rat(1) / fact;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                acc[std::size_t(i)][std::size_t(j)] +=
                    scale(power[std::size_t(i)][std::size_t(j)], inv);
    }
    return acc;
}

template <typename R>
std::vector<R> pair_left(const std::vector<R>& f, const std::vector<std::vector<R>>& m) {
    // (f o M)_j = sum_i f_i M_{ij}
    const std::size_t n = f.size();
    std::vector<R> out(n, R(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out[j] += f[i] * m[i][j];
    return out;
}

auto rat_scale = [](const Rat& r, const Rat& q) { return r * q; };
auto dbl_scale = [](double r, const Rat& q) { return r * to_double(q); };
auto poly_scale = [](const Polynomial& p, const Rat& q) { return p * q; };

std::vector<std::string> coad_variable_names(int dim) {
    std::vector<std::string> names;
    for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= dim; ++i) names.push_back("f" + std::to_string(i));
    return names;
}

}  // namespace

RatMat ad_matrix(const StructureConstants& sc, const RatVec& w) {
    return ad_matrix_t<Rat>(sc, w, rat_scale);
}

RatMat ad_exp(const StructureConstants& sc, const RatVec& w) {
    return ad_exp_t<Rat>(sc, w, rat_scale);
}

std::vector<std::vector<double>> ad_exp_double(const StructureConstants& sc,
                                               const std::vector<double>& w) {
    return ad_exp_t<double>(sc, w, dbl_scale);
}

RatVec coadjoint(const StructureConstants& sc, const RatVec& g, const RatVec& f) {
    if (g.size() != f.size() || int(g.size()) != sc.dim())
        throw std::invalid_argument("coadjoint: dimension mismatch");
    RatVec ginv = g;
    for (auto& c : ginv) c = -c;
    return pair_left(f, ad_exp_t<Rat>(sc, ginv, rat_scale));
}

std::vector<double> coadjoint(const StructureConstants& sc, const std::vector<double>& g,
                              const std::vector<double>& f) {
    if (g.size() != f.size() || int(g.size()) != sc.dim())
        throw std::invalid_argument("coadjoint: dimension mismatch");
    std::vector<double> ginv = g;
    for (auto& c : ginv) c = -c;
    return pair_left(f, ad_exp_t<double>(sc, ginv, dbl_scale));
}

std::vector<Polynomial> coadjoint_poly(const StructureConstants& sc,
                                       const std::vector<Polynomial>& g,
                                       const std::vector<Polynomial>& f) {
    std::vector<Polynomial> ginv;
    ginv.reserve(g.size());
    for (const auto& p : g) ginv.push_back(-p);
    return pair_left(f, ad_exp_t<Polynomial>(sc, ginv, poly_scale));
}

PolynomialMap derive_coadjoint_split(const StructureConstants& sc) {
    const int dim = sc.dim();
    std::vector<Polynomial> head(std::size_t(dim), Polynomial{});
    std::vector<Polynomial> tail(std::size_t(dim), Polynomial{});
    head[0] = Polynomial::variable(0);
    for (int i = 1; i < dim; ++i) tail[std::size_t(i)] = Polynomial::variable(i);
    std::vector<Polynomial> f;
    for (int i = 0; i < dim; ++i) f.push_back(Polynomial::variable(dim + i));

    // f o Ad(exp(head) exp(tail)) = f o e^{ad head} o e^{ad tail}
    auto m = mat_mul(ad_exp_t<Polynomial>(sc, head, poly_scale),
                     ad_exp_t<Polynomial>(sc, tail, poly_scale));
    PolynomialMap out;
    out.dim = dim;
    out.components = pair_left(f, m);
    return out;
}

PolynomialMap parse_coadjoint_text(const std::string& text, int dim) {
    PolynomialMap map;
    map.dim = dim;
    map.components.assign(std::size_t(dim), Polynomial{});
    const auto names = coad_variable_names(dim);
    std::istringstream in(text);
    std::string line;
    std::vector<bool> seen(std::size_t(dim), false);
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) throw std::invalid_argument("table line lacks '=': " + line);
            continue;
        }
        std::istringstream ls(line.substr(0, eq));
        std::string name;
        ls >> name;
        if (name.size() < 2 || name[0] != 'g')
            throw std::invalid_argument("coadjoint component must be named g<m>: " + name);
        int m = std::stoi(name.substr(1));
        if (m < 1 || m > dim) throw std::out_of_range("coadjoint component index: " + name);
        map.components[std::size_t(m - 1)] = parse_polynomial(line.substr(eq + 1), names);
        seen[std::size_t(m - 1)] = true;
    }
    for (int m = 0; m < dim; ++m)
        if (!seen[std::size_t(m)])
            throw std::invalid_argument("coadjoint file missing component g" +
                                        std::to_string(m + 1));
    return map;
}

PolynomialMap parse_coadjoint_file(const std::string& path, int dim) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coadjoint file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_coadjoint_text(ss.str(), dim);
}

std::vector<MonomialDiff> compare_coadjoint(const PolynomialMap& lhs, const PolynomialMap& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("compare_coadjoint: dimension mismatch");
    std::vector<MonomialDiff> diffs;
    const auto names = coad_variable_names(lhs.dim);
    for (int m = 0; m < lhs.dim; ++m) {
        Polynomial d = lhs.components[std::size_t(m)] - rhs.components[std::size_t(m)];
        for (const auto& [mono, coeff] : d.terms()) {
            Polynomial single;
            single.add_term(mono, Rat(1));
            diffs.push_back({m + 1, single.to_string(names),
                             lhs.components[std::size_t(m)].coefficient(mono),
                             rhs.components[std::size_t(m)].coefficient(mono)});
        }
    }
    return diffs;
}

}  // namespace n7
