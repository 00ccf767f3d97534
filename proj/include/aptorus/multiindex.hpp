#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace aptorus {

/// Hard cap on the spatial dimension handled by the exact-derivative engine.
inline constexpr int kMaxDim = 8;

/// A derivative multi-index (alpha_1, ..., alpha_d); unused axes stay zero.
using MultiIndex = std::array<std::uint8_t, kMaxDim>;

inline int order(const MultiIndex& a) {
    int s = 0;
    for (auto e : a) s += e;
    return s;
}

inline MultiIndex zero_index() { return MultiIndex{}; }

inline MultiIndex unit_index(int axis) {
    MultiIndex a{};
    a.at(static_cast<std::size_t>(axis)) = 1;
    return a;
}

inline MultiIndex make_index(std::initializer_list<int> entries) {
    if (entries.size() > static_cast<std::size_t>(kMaxDim))
        throw std::invalid_argument("multi-index longer than kMaxDim");
    MultiIndex a{};
    int i = 0;
    for (int e : entries) a[i++] = static_cast<std::uint8_t>(e);
    return a;
}

/// All multi-indices over `dim` axes with |alpha| == n, in lexicographic order.
inline std::vector<MultiIndex> indices_of_order(int dim, int n) {
    std::vector<MultiIndex> out;
    MultiIndex cur{};
    // Distribute n over dim slots, first axis varies slowest.
    auto rec = [&](auto&& self, int axis, int remaining) -> void {
        if (axis == dim - 1) {
            cur[axis] = static_cast<std::uint8_t>(remaining);
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[axis] = static_cast<std::uint8_t>(e);
            self(self, axis + 1, remaining - e);
        }
    };
    if (dim <= 0 || dim > kMaxDim) throw std::invalid_argument("bad dim");
    rec(rec, 0, n);
    return out;
}

/// All multi-indices with |alpha| <= n.
inline std::vector<MultiIndex> indices_up_to_order(int dim, int n) {
    std::vector<MultiIndex> out;
    for (int m = 0; m <= n; ++m) {
        auto v = indices_of_order(dim, m);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace aptorus
