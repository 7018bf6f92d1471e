#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trisector {

// A permutation of {0,1,2,3,4}, stored as its image list.
//
// Composition follows function application: (p * q)(x) = p(q(x)).
// Permutations are ranked by the lexicographic order of their image
// lists; rank 0 is the identity.  This ranking is part of the
// signature codec's wire format and must not change.
class Perm5 {
public:
    static constexpr int group_order = 120;

    constexpr Perm5() = default;

    constexpr Perm5(int a, int b, int c, int d, int e)
        : img_{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
               static_cast<uint8_t>(c), static_cast<uint8_t>(d),
               static_cast<uint8_t>(e)} {}

    static constexpr Perm5 transposition(int a, int b) {
        Perm5 p;
        p.img_[a] = static_cast<uint8_t>(b);
        p.img_[b] = static_cast<uint8_t>(a);
        return p;
    }

    constexpr int operator[](int i) const { return img_[i]; }

    constexpr bool is_identity() const {
        for (int i = 0; i < 5; ++i)
            if (img_[i] != i) return false;
        return true;
    }

    friend constexpr Perm5 operator*(const Perm5& p, const Perm5& q) {
        Perm5 r;
        for (int i = 0; i < 5; ++i)
            r.img_[i] = p.img_[q.img_[i]];
        return r;
    }

    constexpr Perm5 inverse() const {
        Perm5 r;
        for (int i = 0; i < 5; ++i)
            r.img_[img_[i]] = static_cast<uint8_t>(i);
        return r;
    }

    // +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int inversions = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (img_[i] > img_[j]) ++inversions;
        return (inversions % 2 == 0) ? 1 : -1;
    }

    // Rank of the image list among all 120 permutations in
    // lexicographic order.
    constexpr int lex_rank() const {
        constexpr int fact[5] = {24, 6, 2, 1, 1};
        int rank = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 5; ++j)
                if (img_[j] < img_[i]) ++smaller;
            rank += smaller * fact[i];
        }
        return rank;
    }

    static constexpr Perm5 from_lex_rank(int rank) {
        if (rank < 0 || rank >= group_order)
            throw std::out_of_range("permutation rank out of range");
        constexpr int fact[4] = {24, 6, 2, 1};
        uint8_t pool[5] = {0, 1, 2, 3, 4};
        Perm5 p;
        int remaining = 5;
        for (int i = 0; i < 4; ++i) {
            const int d = rank / fact[i];
            rank %= fact[i];
            p.img_[i] = pool[d];
            for (int j = d; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
            --remaining;
        }
        p.img_[4] = pool[0];
        return p;
    }

    friend constexpr bool operator==(const Perm5&, const Perm5&) = default;

    std::string str() const {
        std::string s(5, '0');
        for (int i = 0; i < 5; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

private:
    std::array<uint8_t, 5> img_{0, 1, 2, 3, 4};
};

// Image of a corner bitmask under p: bit v maps to bit p(v).
constexpr uint8_t apply_to_mask(const Perm5& p, uint8_t mask) {
    uint8_t out = 0;
    for (int v = 0; v < 5; ++v)
        if (mask & (1u << v)) out |= static_cast<uint8_t>(1u << p[v]);
    return out;
}

}  // namespace trisector
