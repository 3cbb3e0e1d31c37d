#include "n7/linalg_exact.hpp"

#include <algorithm>

namespace n7 {

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = int(m.size()), cols = int(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[std::size_t(i)][std::size_t(c)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[std::size_t(sel)], m[std::size_t(r)]);
        const Rat inv = m[std::size_t(r)][std::size_t(c)];
        for (auto& x : m[std::size_t(r)]) x /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rat f = m[std::size_t(i)][std::size_t(c)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                m[std::size_t(i)][std::size_t(j)] -= f * m[std::size_t(r)][std::size_t(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(std::size_t(r));
    return pivots;
}

int rank(RatMat m) { return int(rref(m).size()); }

RatMat kernel_basis(const RatMat& m, int cols) {
    RatMat red = m;
    std::vector<int> pivots = rref(red);
    std::vector<bool> is_pivot(std::size_t(cols), false);
    for (int p : pivots) is_pivot[std::size_t(p)] = true;

    RatMat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[std::size_t(free)]) continue;
        RatVec v(std::size_t(cols), Rat(0));
        v[std::size_t(free)] = 1;
        for (std::size_t r = 0; r < red.size(); ++r)
            v[std::size_t(pivots[r])] = -red[r][std::size_t(free)];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

RatMat row_space_basis(RatMat m) {
    rref(m);
    return m;
}

RatMat span_sum(const RatMat& a, const RatMat& b) {
    RatMat all = a;
    all.insert(all.end(), b.begin(), b.end());
    return row_space_basis(std::move(all));
}

bool in_span(const RatMat& basis, const RatVec& v) {
    RatMat with = basis;
    with.push_back(v);
    return rank(std::move(with)) == rank(basis);
}

}  // namespace n7
