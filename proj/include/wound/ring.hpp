#ifndef WOUND_RING_HPP
#define WOUND_RING_HPP

// Small generic helpers shared by every ring in the tower.

#include <cstdint>

namespace wound {

template <class R>
R ring_pow(const R& x, uint64_t e) {
    R r = x.one_like();
    R b = x;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// x^(p^e) by iterated p-th powers; additive in x in characteristic p.
template <class R>
R frobenius_power(const R& x, int e) {
    R r = x;
    int p = x.characteristic();
    for (int i = 0; i < e; ++i) r = ring_pow(r, static_cast<uint64_t>(p));
    return r;
}

// n * x in the additive group (n >= 0)
template <class R>
R ring_scale(int n, const R& x) {
    R r = x.zero_like();
    for (int i = 0; i < n; ++i) r = r + x;
    return r;
}

} // namespace wound

#endif
