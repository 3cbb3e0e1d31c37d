#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "n7/structure_constants.hpp"

namespace n7 {

// Dynkin's form of the Baker-Campbell-Hausdorff series,
//
//   log(e^X e^Y) = sum_{n>=1} (-1)^{n-1}/n sum_{(r_i,s_i)} (1/(m prod r_i! s_i!))
//                  [X^{r_1} Y^{s_1} ... X^{r_n} Y^{s_n}]
//
// where the bracket is right-nested and m is the word length.  Words longer
// than max_depth are dropped; for a nilpotent algebra whose lower central
// series vanishes at C^{max_depth+1} the truncation is exact.
//
// R is any commutative ring with +, -, * and R(0); scale(r, q) multiplies a
// ring element by an exact rational.
template <typename R, typename Scale>
std::vector<R> bch_series(const StructureConstants& sc, const std::vector<R>& x,
                          const std::vector<R>& y, int max_depth, Scale&& scale) {
    const std::size_t dim = std::size_t(sc.dim());
    if (x.size() != dim || y.size() != dim)
        throw std::invalid_argument("bch_series: element dimension mismatch");
    std::vector<R> acc(dim, R(0));

    // letters: the word spelled left to right, true = X, false = Y
    std::vector<bool> letters;
    auto add_word = [&](const Rat& coeff) {
        // Right-nested bracket [l_0, [l_1, [... l_{m-1}]]].
        std::vector<R> b = letters.back() ? x : y;
        for (int i = int(letters.size()) - 2; i >= 0; --i)
            b = sc.bracket(letters[std::size_t(i)] ? x : y, b, scale);
        for (std::size_t m = 0; m < dim; ++m) acc[m] += scale(b[m], coeff);
    };

    // Enumerate block sequences ((r_1,s_1),...,(r_n,s_n)), r_i + s_i >= 1.
    struct Block {
        int r, s;
    };
    std::vector<Block> blocks;
    Rat factorial[16];
    factorial[0] = 1;
    for (int i = 1; i < 16; ++i) factorial[i] = factorial[i - 1] * i;

    std::function<void(int)> recurse = [&](int used) {
        if (!blocks.empty()) {
            const int n = int(blocks.size());
            const int m = used;
            Rat denom = Rat(n) * m;
            for (const auto& b : blocks) denom *= factorial[b.r] * factorial[b.s];
            Rat coeff = Rat((n % 2 == 1) ? 1 : -1) / denom;
            letters.clear();
            for (const auto& b : blocks) {
                for (int i = 0; i < b.r; ++i) letters.push_back(true);
                for (int i = 0; i < b.s; ++i) letters.push_back(false);
            }
            add_word(coeff);
        }
        if (used >= max_depth) return;
        for (int r = 0; r <= max_depth - used; ++r)
            for (int s = (r == 0 ? 1 : 0); r + s <= max_depth - used; ++s) {
                blocks.push_back({r, s});
                recurse(used + r + s);
                blocks.pop_back();
            }
    };
    recurse(0);
    return acc;
}

inline RatVec bch_product(const StructureConstants& sc, const RatVec& x, const RatVec& y,
                          int max_depth = 0) {
    if (max_depth <= 0) max_depth = sc.nilpotency_step();
    return bch_series<Rat>(sc, x, y, max_depth,
                           [](const Rat& r, const Rat& q) { return r * q; });
}

}  // namespace n7
