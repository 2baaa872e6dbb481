/*
 * Copyright 2026 The cipherbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/// Twofish with a 256-bit key. The g-function's byte permutation chains
/// and the MDS multiply are folded into four key-dependent 32-bit lookup
/// tables when the key is scheduled.

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cipherbench/bytes.hpp"

namespace cipherbench {

namespace detail::twofish {

constexpr std::uint8_t ror4(std::uint8_t x) {
    return std::uint8_t(((x >> 1) | (x << 3)) & 0xF);
}

// q0/q1 permutations built from their published 4-bit tables.
constexpr std::array<std::array<std::uint8_t, 16>, 4> kQ0T = {{
    {0x8, 0x1, 0x7, 0xD, 0x6, 0xF, 0x3, 0x2, 0x0, 0xB, 0x5, 0x9, 0xE, 0xC, 0xA, 0x4},
    {0xE, 0xC, 0xB, 0x8, 0x1, 0x2, 0x3, 0x5, 0xF, 0x4, 0xA, 0x6, 0x7, 0x0, 0x9, 0xD},
    {0xB, 0xA, 0x5, 0xE, 0x6, 0xD, 0x9, 0x0, 0xC, 0x8, 0xF, 0x3, 0x2, 0x4, 0x7, 0x1},
    {0xD, 0x7, 0xF, 0x4, 0x1, 0x2, 0x6, 0xE, 0x9, 0xB, 0x3, 0x0, 0x8, 0x5, 0xC, 0xA},
}};

constexpr std::array<std::array<std::uint8_t, 16>, 4> kQ1T = {{
    {0x2, 0x8, 0xB, 0xD, 0xF, 0x7, 0x6, 0xE, 0x3, 0x1, 0x9, 0x4, 0x0, 0xA, 0xC, 0x5},
    {0x1, 0xE, 0x2, 0xB, 0x4, 0xC, 0x3, 0x7, 0x6, 0xD, 0xA, 0x5, 0xF, 0x9, 0x0, 0x8},
    {0x4, 0xC, 0x7, 0x5, 0x1, 0x6, 0x9, 0xA, 0x0, 0xE, 0xD, 0x8, 0x2, 0xB, 0x3, 0xF},
    {0xB, 0x9, 0x5, 0x1, 0xC, 0x3, 0xD, 0xE, 0x6, 0x4, 0x7, 0xF, 0x2, 0x0, 0x8, 0xA},
}};

constexpr std::array<std::uint8_t, 256> make_q(
    const std::array<std::array<std::uint8_t, 16>, 4>& t) {
    std::array<std::uint8_t, 256> q{};
    for (int x = 0; x < 256; ++x) {
        std::uint8_t a = std::uint8_t(x >> 4), b = std::uint8_t(x & 0xF);
        std::uint8_t a1 = a ^ b;
        std::uint8_t b1 = std::uint8_t((a ^ ror4(b) ^ (a << 3)) & 0xF);
        a = t[0][a1];
        b = t[1][b1];
        std::uint8_t a3 = a ^ b;
        std::uint8_t b3 = std::uint8_t((a ^ ror4(b) ^ (a << 3)) & 0xF);
        q[x] = std::uint8_t((t[3][b3] << 4) | t[2][a3]);
    }
    return q;
}

inline constexpr auto kQ0 = make_q(kQ0T);
inline constexpr auto kQ1 = make_q(kQ1T);

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b, std::uint16_t poly) {
    std::uint16_t x = a, y = b, r = 0;
    while (y) {
        if (y & 1) r ^= x;
        x <<= 1;
        if (x & 0x100) x ^= poly;
        y >>= 1;
    }
    return std::uint8_t(r);
}

inline constexpr std::uint16_t kMdsPoly = 0x169;
inline constexpr std::uint16_t kRsPoly = 0x14D;

constexpr std::uint8_t kMds[4][4] = {
    {0x01, 0xEF, 0x5B, 0x5B},
    {0x5B, 0xEF, 0xEF, 0x01},
    {0xEF, 0x5B, 0x01, 0xEF},
    {0xEF, 0x01, 0xEF, 0x5B},
};

constexpr std::uint8_t kRs[4][8] = {
    {0x01, 0xA4, 0x55, 0x87, 0x5A, 0x58, 0xDB, 0x9E},
    {0xA4, 0x56, 0x82, 0xF3, 0x1E, 0xC6, 0x68, 0xE5},
    {0x02, 0xA1, 0xFC, 0xC1, 0x47, 0xAE, 0x3D, 0x19},
    {0xA4, 0x55, 0x87, 0x5A, 0x58, 0xDB, 0x9E, 0x03},
};

// MDS column contribution per input lane, as a ready-made 32-bit word.
constexpr std::array<std::array<std::uint32_t, 256>, 4> make_mds_cols() {
    std::array<std::array<std::uint32_t, 256>, 4> out{};
    for (int lane = 0; lane < 4; ++lane) {
        for (int v = 0; v < 256; ++v) {
            std::uint32_t w = 0;
            for (int row = 0; row < 4; ++row) {
                w |= std::uint32_t(gf_mul(kMds[row][lane], std::uint8_t(v), kMdsPoly))
                     << (8 * row);
            }
            out[lane][v] = w;
        }
    }
    return out;
}

inline constexpr auto kMdsCol = make_mds_cols();

inline std::uint32_t rs_mul(const std::uint8_t* m8) {
    std::uint32_t out = 0;
    for (int row = 0; row < 4; ++row) {
        std::uint8_t v = 0;
        for (int col = 0; col < 8; ++col) {
            v ^= gf_mul(kRs[row][col], m8[col], kRsPoly);
        }
        out |= std::uint32_t(v) << (8 * row);
    }
    return out;
}

// h-function for 256-bit keys (four q stages per lane), L in the order
// the schedule consumes it.
inline std::uint32_t h256(std::uint32_t x, const std::array<std::uint32_t, 4>& l) {
    auto b = [](std::uint32_t w, int i) { return std::uint8_t(w >> (8 * i)); };
    std::uint8_t y0 = std::uint8_t(x), y1 = b(x, 1), y2 = b(x, 2), y3 = b(x, 3);
    y0 = kQ1[y0] ^ b(l[3], 0);
    y1 = kQ0[y1] ^ b(l[3], 1);
    y2 = kQ0[y2] ^ b(l[3], 2);
    y3 = kQ1[y3] ^ b(l[3], 3);
    y0 = kQ1[y0] ^ b(l[2], 0);
    y1 = kQ1[y1] ^ b(l[2], 1);
    y2 = kQ0[y2] ^ b(l[2], 2);
    y3 = kQ0[y3] ^ b(l[2], 3);
    y0 = kQ1[kQ0[kQ0[y0] ^ b(l[1], 0)] ^ b(l[0], 0)];
    y1 = kQ0[kQ0[kQ1[y1] ^ b(l[1], 1)] ^ b(l[0], 1)];
    y2 = kQ1[kQ1[kQ0[y2] ^ b(l[1], 2)] ^ b(l[0], 2)];
    y3 = kQ0[kQ1[kQ1[y3] ^ b(l[1], 3)] ^ b(l[0], 3)];
    return kMdsCol[0][y0] ^ kMdsCol[1][y1] ^ kMdsCol[2][y2] ^ kMdsCol[3][y3];
}

}  // namespace detail::twofish

class Twofish {
  public:
    static constexpr std::size_t kBlockBytes = 16;

    explicit Twofish(std::span<const std::uint8_t> key) {
        namespace tf = detail::twofish;
        std::array<std::uint32_t, 4> me, mo, s;
        for (int i = 0; i < 4; ++i) {
            me[i] = load_le32(key.data() + 8 * i);
            mo[i] = load_le32(key.data() + 8 * i + 4);
        }
        // RS words, consumed most-derived first
        for (int i = 0; i < 4; ++i) {
            s[3 - i] = tf::rs_mul(key.data() + 8 * i);
        }
        constexpr std::uint32_t rho = 0x01010101;
        for (int i = 0; i < 20; ++i) {
            const std::uint32_t a = tf::h256(std::uint32_t(2 * i) * rho, me);
            const std::uint32_t b = rotl32(tf::h256(std::uint32_t(2 * i + 1) * rho, mo), 8);
            subkeys_[2 * i] = a + b;
            subkeys_[2 * i + 1] = rotl32(a + 2 * b, 9);
        }
        // fold the keyed byte chains + MDS into per-lane tables
        for (int x = 0; x < 256; ++x) {
            auto b = [](std::uint32_t w, int i) { return std::uint8_t(w >> (8 * i)); };
            std::uint8_t y = std::uint8_t(x);
            std::uint8_t y0 = tf::kQ1[tf::kQ0[tf::kQ0[tf::kQ1[tf::kQ1[y] ^ b(s[3], 0)] ^
                                               b(s[2], 0)] ^ b(s[1], 0)] ^ b(s[0], 0)];
            std::uint8_t y1 = tf::kQ0[tf::kQ0[tf::kQ1[tf::kQ1[tf::kQ0[y] ^ b(s[3], 1)] ^
                                               b(s[2], 1)] ^ b(s[1], 1)] ^ b(s[0], 1)];
            std::uint8_t y2 = tf::kQ1[tf::kQ1[tf::kQ0[tf::kQ0[tf::kQ0[y] ^ b(s[3], 2)] ^
                                               b(s[2], 2)] ^ b(s[1], 2)] ^ b(s[0], 2)];
            std::uint8_t y3 = tf::kQ0[tf::kQ1[tf::kQ1[tf::kQ0[tf::kQ1[y] ^ b(s[3], 3)] ^
                                               b(s[2], 3)] ^ b(s[1], 3)] ^ b(s[0], 3)];
            g_[0][x] = tf::kMdsCol[0][y0];
            g_[1][x] = tf::kMdsCol[1][y1];
            g_[2][x] = tf::kMdsCol[2][y2];
            g_[3][x] = tf::kMdsCol[3][y3];
        }
    }

    void encrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const {
        std::uint32_t r0 = load_le32(in) ^ subkeys_[0];
        std::uint32_t r1 = load_le32(in + 4) ^ subkeys_[1];
        std::uint32_t r2 = load_le32(in + 8) ^ subkeys_[2];
        std::uint32_t r3 = load_le32(in + 12) ^ subkeys_[3];
        for (int round = 0; round < 16; ++round) {
            const std::uint32_t t0 = g(r0);
            const std::uint32_t t1 = g(rotl32(r1, 8));
            const std::uint32_t f0 = t0 + t1 + subkeys_[2 * round + 8];
            const std::uint32_t f1 = t0 + 2 * t1 + subkeys_[2 * round + 9];
            const std::uint32_t n0 = rotr32(r2 ^ f0, 1);
            const std::uint32_t n1 = rotl32(r3, 1) ^ f1;
            r2 = r0;
            r3 = r1;
            r0 = n0;
            r1 = n1;
        }
        store_le32(r2 ^ subkeys_[4], out);
        store_le32(r3 ^ subkeys_[5], out + 4);
        store_le32(r0 ^ subkeys_[6], out + 8);
        store_le32(r1 ^ subkeys_[7], out + 12);
    }

    void decrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const {
        // undo output whitening and the final swap
        std::uint32_t s0 = load_le32(in + 8) ^ subkeys_[6];
        std::uint32_t s1 = load_le32(in + 12) ^ subkeys_[7];
        std::uint32_t s2 = load_le32(in) ^ subkeys_[4];
        std::uint32_t s3 = load_le32(in + 4) ^ subkeys_[5];
        for (int round = 15; round >= 0; --round) {
            const std::uint32_t a = s2;
            const std::uint32_t b = s3;
            const std::uint32_t t0 = g(a);
            const std::uint32_t t1 = g(rotl32(b, 8));
            const std::uint32_t f0 = t0 + t1 + subkeys_[2 * round + 8];
            const std::uint32_t f1 = t0 + 2 * t1 + subkeys_[2 * round + 9];
            const std::uint32_t c = rotl32(s0, 1) ^ f0;
            const std::uint32_t d = rotr32(s1 ^ f1, 1);
            s0 = a;
            s1 = b;
            s2 = c;
            s3 = d;
        }
        store_le32(s0 ^ subkeys_[0], out);
        store_le32(s1 ^ subkeys_[1], out + 4);
        store_le32(s2 ^ subkeys_[2], out + 8);
        store_le32(s3 ^ subkeys_[3], out + 12);
    }

    const std::array<std::uint32_t, 40>& subkeys() const { return subkeys_; }

  private:
    std::uint32_t g(std::uint32_t x) const {
        return g_[0][std::uint8_t(x)] ^ g_[1][std::uint8_t(x >> 8)] ^
               g_[2][std::uint8_t(x >> 16)] ^ g_[3][std::uint8_t(x >> 24)];
    }

    std::array<std::uint32_t, 40> subkeys_;
    std::array<std::array<std::uint32_t, 256>, 4> g_;
};

}  // namespace cipherbench
