#include "n7/group_law.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace n7 {

namespace {

std::vector<std::string> law_variable_names(int dim) {
    std::vector<std::string> names;
    for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= dim; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

std::vector<Polynomial> poly_vars(int dim, int offset) {
    std::vector<Polynomial> v;
    for (int i = 0; i < dim; ++i) v.push_back(Polynomial::variable(offset + i));
    return v;
}

auto poly_scale = [](const Polynomial& p, const Rat& q) { return p * q; };

// BCH product with polynomial coordinates.
std::vector<Polynomial> poly_bch(const StructureConstants& sc, const std::vector<Polynomial>& x,
                                 const std::vector<Polynomial>& y) {
    return bch_series<Polynomial>(sc, x, y, sc.nilpotency_step(), poly_scale);
}

}  // namespace

RatVec PolynomialMap::evaluate(const RatVec& g, const RatVec& h) const {
    if (int(g.size()) != dim || int(h.size()) != dim)
        throw std::invalid_argument("PolynomialMap::evaluate: dimension mismatch");
    std::vector<Rat> vars = g;
    vars.insert(vars.end(), h.begin(), h.end());
    RatVec out;
    out.reserve(std::size_t(dim));
    for (const auto& p : components) out.push_back(p.evaluate(vars));
    return out;
}

std::vector<double> PolynomialMap::evaluate(const std::vector<double>& g,
                                            const std::vector<double>& h) const {
    std::vector<double> vars = g;
    vars.insert(vars.end(), h.begin(), h.end());
    std::vector<double> out;
    out.reserve(std::size_t(dim));
    for (const auto& p : components) out.push_back(p.evaluate(vars));
    return out;
}

std::vector<std::string> PolynomialMap::variable_names() const { return law_variable_names(dim); }

PolynomialMap derive_group_law(const StructureConstants& sc, Chart chart) {
    const int dim = sc.dim();
    PolynomialMap law;
    law.dim = dim;
    auto x = poly_vars(dim, 0);
    auto y = poly_vars(dim, dim);

    if (chart == Chart::FirstKind) {
        law.components = poly_bch(sc, x, y);
        return law;
    }

    // Split chart: g = exp(x_1 X_1) exp(x_2 X_2 + ... + x_dim X_dim).
    // Convert both factors to first-kind coordinates, multiply by BCH,
    // convert back; all three maps are polynomial.
    auto to_fk = [&](const std::vector<Polynomial>& v) {
        std::vector<Polynomial> head(std::size_t(dim), Polynomial{});
        std::vector<Polynomial> tail(std::size_t(dim), Polynomial{});
        head[0] = v[0];
        for (int i = 1; i < dim; ++i) tail[std::size_t(i)] = v[std::size_t(i)];
        return poly_bch(sc, head, tail);
    };
    auto from_fk = [&](std::vector<Polynomial> z) {
        // Solve exp(a_1 X_1) exp(T) = Z, i.e. T = bch(-a_1 X_1, Z); the first
        // coordinate of T vanishes identically.
        std::vector<Polynomial> head(std::size_t(dim), Polynomial{});
        head[0] = -z[0];
        auto tail = poly_bch(sc, head, z);
        std::vector<Polynomial> split(std::size_t(dim), Polynomial{});
        split[0] = z[0];
        for (int i = 1; i < dim; ++i) split[std::size_t(i)] = tail[std::size_t(i)];
        if (!tail[0].is_zero())
            throw std::logic_error("split chart extraction left a nonzero X_1 component");
        return split;
    };

    law.components = from_fk(poly_bch(sc, to_fk(x), to_fk(y)));
    return law;
}

RatVec group_multiply(const PolynomialMap& law, const RatVec& g, const RatVec& h) {
    return law.evaluate(g, h);
}

RatVec group_inverse_first_kind(const RatVec& g) {
    RatVec out = g;
    for (auto& c : out) c = -c;
    return out;
}

RatVec split_to_first_kind(const StructureConstants& sc, const RatVec& coords) {
    const int dim = sc.dim();
    RatVec head(std::size_t(dim), Rat(0)), tail(std::size_t(dim), Rat(0));
    head[0] = coords[0];
    for (int i = 1; i < dim; ++i) tail[std::size_t(i)] = coords[std::size_t(i)];
    return bch_product(sc, head, tail);
}

RatVec first_kind_to_split(const StructureConstants& sc, const RatVec& coords) {
    const int dim = sc.dim();
    RatVec head(std::size_t(dim), Rat(0));
    head[0] = -coords[0];
    RatVec tail = bch_product(sc, head, coords);
    RatVec split = tail;
    split[0] = coords[0];
    if (tail[0] != 0) throw std::logic_error("split chart extraction failed");
    return split;
}

std::vector<MonomialDiff> compare_laws(const PolynomialMap& lhs, const PolynomialMap& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("compare_laws: dimension mismatch");
    std::vector<MonomialDiff> diffs;
    const auto names = law_variable_names(lhs.dim);
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

PolynomialMap parse_law_text(const std::string& text, int dim) {
    PolynomialMap law;
    law.dim = dim;
    law.components.assign(std::size_t(dim), Polynomial{});
    const auto names = law_variable_names(dim);
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
            if (probe >> tok) throw std::invalid_argument("law line lacks '=': " + line);
            continue;
        }
        std::string lhs = line.substr(0, eq);
        std::string rhs = line.substr(eq + 1);
        std::istringstream ls(lhs);
        std::string name;
        ls >> name;
        if (name.size() < 2 || name[0] != 'z')
            throw std::invalid_argument("law component must be named z<m>: " + name);
        int m = std::stoi(name.substr(1));
        if (m < 1 || m > dim) throw std::out_of_range("law component index: " + name);
        law.components[std::size_t(m - 1)] = parse_polynomial(rhs, names);
        seen[std::size_t(m - 1)] = true;
    }
    for (int m = 0; m < dim; ++m)
        if (!seen[std::size_t(m)])
            throw std::invalid_argument("law file missing component z" + std::to_string(m + 1));
    return law;
}

PolynomialMap parse_law_file(const std::string& path, int dim) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open law file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_law_text(ss.str(), dim);
}

}  // namespace n7
