#ifndef CORFUN_BITS_HPP
#define CORFUN_BITS_HPP

#include <cstdint>
#include <vector>

namespace corfun {

// Packed bitset with size fixed at construction.  Used for incidence rows
// and for subsets of lattice elements, where the universe can exceed 64.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits full(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] |= o.w_[k];
        return r;
    }
    // Set difference: bits in *this that are not in o.
    Bits and_not(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    bool operator==(const Bits& o) const = default;

    // First set bit at position >= from, or -1.
    int next(int from) const {
        for (int i = from; i < n_; ++i)
            if (test(i)) return i;
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (int k = 0; k < (int)w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                f(k * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_list() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    // Lexicographic-as-integer comparison (low bit = least significant),
    // matching comparison of the corresponding binary numbers.
    bool less_as_integer(const Bits& o) const {
        for (int k = (int)w_.size() - 1; k >= 0; --k)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Iterate over set bits of a 64-bit mask.
template <class F>
inline void mask_for_each(std::uint64_t m, F f) {
    while (m) {
        int b = __builtin_ctzll(m);
        f(b);
        m &= m - 1;
    }
}

inline std::vector<int> mask_to_list(std::uint64_t m) {
    std::vector<int> out;
    mask_for_each(m, [&](int i) { out.push_back(i); });
    return out;
}

}  // namespace corfun

#endif
