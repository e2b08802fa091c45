#pragma once
#include <array>
#include <bit>
#include <cstdint>
#include <cassert>

namespace loc {

// Fixed-capacity bitset over element indices 0..255. Value-comparable so
// subgroups have a canonical order.
struct Bits {
    std::array<uint64_t, 4> w{};

    static constexpr int capacity = 256;

    bool test(int i) const {
        assert(i >= 0 && i < capacity);
        return (w[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < capacity);
        w[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < capacity);
        w[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    friend Bits operator&(const Bits& a, const Bits& b) {
        Bits r;
        for (int i = 0; i < 4; i++) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    friend Bits operator|(const Bits& a, const Bits& b) {
        Bits r;
        for (int i = 0; i < 4; i++) r.w[i] = a.w[i] | b.w[i];
        return r;
    }
    friend Bits operator^(const Bits& a, const Bits& b) {
        Bits r;
        for (int i = 0; i < 4; i++) r.w[i] = a.w[i] ^ b.w[i];
        return r;
    }
    friend bool operator==(const Bits& a, const Bits& b) { return a.w == b.w; }
    friend bool operator!=(const Bits& a, const Bits& b) { return a.w != b.w; }

    bool subset_of(const Bits& o) const {
        for (int i = 0; i < 4; i++)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }

    // Total order: compares high words first, so sets containing only small
    // indices come first. Returns -1/0/1.
    static int cmp(const Bits& a, const Bits& b) {
        for (int i = 3; i >= 0; i--) {
            if (a.w[i] < b.w[i]) return -1;
            if (a.w[i] > b.w[i]) return 1;
        }
        return 0;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < 4; i++) {
            uint64_t x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                f(i * 64 + b);
                x &= x - 1;
            }
        }
    }
};

} // namespace loc
