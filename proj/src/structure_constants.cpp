#include "n7/structure_constants.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace n7 {

void StructureConstants::set_bracket(int i, int j, int m, const Rat& c) {
    if (i < 1 || i > dim_ || j < 1 || j > dim_ || m < 1 || m > dim_)
        throw std::out_of_range("bracket index out of range");
    if (i == j) throw std::invalid_argument("bracket [X_i, X_i] must be zero");
    entries_[{i, j}].emplace_back(m, c);
    // Mirror entry unless the caller supplies (j,i) explicitly; explicit
    // mirrors overwrite so that a bad table can be detected by validate().
    auto& mirror = entries_[{j, i}];
    bool explicitly_set = false;
    for (auto& [mm, cc] : mirror)
        if (mm == m) {
            explicitly_set = true;
            break;
        }
    if (!explicitly_set) mirror.emplace_back(m, -c);
    cached_step_ = -1;
}

RatVec StructureConstants::basis_bracket(int i, int j) const {
    RatVec out(std::size_t(dim_), Rat(0));
    auto it = entries_.find({i, j});
    if (it == entries_.end()) return out;
    for (const auto& [m, c] : it->second) out[std::size_t(m - 1)] += c;
    return out;
}

ValidationReport StructureConstants::validate() const {
    ValidationReport rep;

    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j) {
            RatVec a = basis_bracket(i, j);
            RatVec b = basis_bracket(j, i);
            for (int m = 0; m < dim_; ++m)
                if (a[std::size_t(m)] != -b[std::size_t(m)]) {
                    rep.antisymmetry_ok = false;
                    rep.antisymmetry_violations.emplace_back(i, j);
                    break;
                }
        }

    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            for (int k = j + 1; k <= dim_; ++k) {
                RatVec sum(std::size_t(dim_), Rat(0));
                auto acc = [&](int a, const RatVec& bc) {
                    RatVec ea(std::size_t(dim_), Rat(0));
                    ea[std::size_t(a - 1)] = 1;
                    RatVec t = bracket(ea, bc);
                    for (int m = 0; m < dim_; ++m) sum[std::size_t(m)] += t[std::size_t(m)];
                };
                acc(i, basis_bracket(j, k));
                acc(j, basis_bracket(k, i));
                acc(k, basis_bracket(i, j));
                bool zero = true;
                for (const auto& v : sum)
                    if (v != 0) zero = false;
                if (!zero) {
                    rep.jacobi_ok = false;
                    rep.jacobi_violations.push_back({i, j, k, sum});
                }
            }

    // Lower central series C^1 = n, C^{s+1} = [n, C^s].
    RatMat current;
    for (int i = 0; i < dim_; ++i) {
        RatVec e(std::size_t(dim_), Rat(0));
        e[std::size_t(i)] = 1;
        current.push_back(std::move(e));
    }
    rep.lower_central_dims.push_back(int(current.size()));
    int step = 1;
    const int step_cap = dim_ + 1;
    while (!current.empty() && step <= step_cap) {
        RatMat next;
        for (int i = 1; i <= dim_; ++i) {
            RatVec ei(std::size_t(dim_), Rat(0));
            ei[std::size_t(i - 1)] = 1;
            for (const auto& v : current) next.push_back(bracket(ei, v));
        }
        current = row_space_basis(std::move(next));
        ++step;
        if (!current.empty()) rep.lower_central_dims.push_back(int(current.size()));
    }
    rep.nilpotent = current.empty();
    rep.nilpotency_step = rep.nilpotent ? step : 0;
    cached_step_ = rep.nilpotency_step;
    return rep;
}

int StructureConstants::nilpotency_step() const {
    if (cached_step_ < 0) validate();
    if (cached_step_ == 0) throw std::logic_error("algebra is not nilpotent");
    return cached_step_;
}

StructureConstants StructureConstants::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    struct Entry {
        int i, j, m;
        Rat c;
    };
    std::vector<Entry> entries;
    int max_index = 0, declared_dim = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "dim") {
            ls >> declared_dim;
            continue;
        }
        Entry e;
        e.i = std::stoi(first);
        std::string coef;
        if (!(ls >> e.j >> e.m >> coef))
            throw std::invalid_argument("malformed structure-constant line: " + line);
        e.c = parse_rational(coef);
        max_index = std::max({max_index, e.i, e.j, e.m});
        entries.push_back(std::move(e));
    }
    const int dim = declared_dim > 0 ? declared_dim : max_index;
    if (dim <= 0) throw std::invalid_argument("structure-constant table declares no entries");
    StructureConstants sc(dim);
    for (const auto& e : entries) sc.set_bracket(e.i, e.j, e.m, e.c);
    return sc;
}

StructureConstants StructureConstants::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open structure-constant file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

StructureConstants StructureConstants::n7() {
    StructureConstants sc(7);
    sc.set_bracket(1, 3, 5, 1);
    sc.set_bracket(1, 4, 6, 1);
    sc.set_bracket(1, 5, 7, 1);
    sc.set_bracket(2, 3, 6, -1);
    sc.set_bracket(2, 4, 5, 1);
    sc.set_bracket(2, 6, 7, 1);
    return sc;
}

}  // namespace n7
