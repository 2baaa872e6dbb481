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

/// AES with a 256-bit key (14 rounds). Only the 256-bit variant is
/// provided. The S-box and the combined SubBytes+MixColumns round tables
/// are computed at compile time from the field definition.

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cipherbench/bytes.hpp"

namespace cipherbench {

namespace detail::aes {

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    std::uint16_t x = a, y = b, r = 0;
    while (y) {
        if (y & 1) r ^= x;
        x <<= 1;
        if (x & 0x100) x ^= 0x11B;
        y >>= 1;
    }
    return std::uint8_t(r);
}

constexpr std::uint8_t rotl8(std::uint8_t v, int n) {
    return std::uint8_t((v << n) | (v >> (8 - n)));
}

constexpr std::array<std::uint8_t, 256> make_sbox() {
    std::array<std::uint8_t, 256> box{};
    box[0] = 0x63;
    for (int x = 1; x < 256; ++x) {
        // multiplicative inverse by exhaustive search, then affine map
        std::uint8_t inv = 0;
        for (int y = 1; y < 256; ++y) {
            if (gf_mul(std::uint8_t(x), std::uint8_t(y)) == 1) {
                inv = std::uint8_t(y);
                break;
            }
        }
        box[x] = std::uint8_t(inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^
                              rotl8(inv, 3) ^ rotl8(inv, 4) ^ 0x63);
    }
    return box;
}

inline constexpr auto kSbox = make_sbox();

constexpr std::array<std::uint8_t, 256> make_inv_sbox() {
    std::array<std::uint8_t, 256> inv{};
    for (int x = 0; x < 256; ++x) inv[kSbox[x]] = std::uint8_t(x);
    return inv;
}

inline constexpr auto kInvSbox = make_inv_sbox();

// Te0[x] = (2s, s, s, 3s); Te1..Te3 are byte rotations of Te0.
constexpr std::array<std::uint32_t, 256> make_te(unsigned rot) {
    std::array<std::uint32_t, 256> t{};
    for (int x = 0; x < 256; ++x) {
        const std::uint8_t s = kSbox[x];
        const std::uint32_t w = (std::uint32_t(gf_mul(s, 2)) << 24) |
                                (std::uint32_t(s) << 16) |
                                (std::uint32_t(s) << 8) |
                                std::uint32_t(gf_mul(s, 3));
        t[x] = rot == 0 ? w : rotr32(w, 8 * rot);
    }
    return t;
}

inline constexpr auto kTe0 = make_te(0);
inline constexpr auto kTe1 = make_te(1);
inline constexpr auto kTe2 = make_te(2);
inline constexpr auto kTe3 = make_te(3);

}  // namespace detail::aes

class Aes256 {
  public:
    static constexpr std::size_t kBlockBytes = 16;
    static constexpr int kRounds = 14;

    explicit Aes256(std::span<const std::uint8_t> key) {
        using detail::aes::kSbox;
        constexpr int nk = 8;
        std::array<std::uint32_t, 60> w{};
        for (int i = 0; i < nk; ++i) {
            w[i] = load_be32(key.data() + 4 * i);
        }
        std::uint32_t rcon = 0x01000000;
        for (int i = nk; i < 60; ++i) {
            std::uint32_t t = w[i - 1];
            if (i % nk == 0) {
                t = rotl32(t, 8);
                t = sub_word(t) ^ rcon;
                rcon = std::uint32_t(detail::aes::gf_mul(std::uint8_t(rcon >> 24), 2)) << 24;
            } else if (i % nk == 4) {
                t = sub_word(t);
            }
            w[i] = w[i - nk] ^ t;
        }
        round_keys_ = w;
    }

    void encrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const {
        using namespace detail::aes;
        const auto* rk = round_keys_.data();
        std::uint32_t s0 = load_be32(in) ^ rk[0];
        std::uint32_t s1 = load_be32(in + 4) ^ rk[1];
        std::uint32_t s2 = load_be32(in + 8) ^ rk[2];
        std::uint32_t s3 = load_be32(in + 12) ^ rk[3];
        for (int round = 1; round < kRounds; ++round) {
            rk += 4;
            const std::uint32_t t0 = kTe0[s0 >> 24] ^ kTe1[(s1 >> 16) & 0xFF] ^
                                     kTe2[(s2 >> 8) & 0xFF] ^ kTe3[s3 & 0xFF] ^ rk[0];
            const std::uint32_t t1 = kTe0[s1 >> 24] ^ kTe1[(s2 >> 16) & 0xFF] ^
                                     kTe2[(s3 >> 8) & 0xFF] ^ kTe3[s0 & 0xFF] ^ rk[1];
            const std::uint32_t t2 = kTe0[s2 >> 24] ^ kTe1[(s3 >> 16) & 0xFF] ^
                                     kTe2[(s0 >> 8) & 0xFF] ^ kTe3[s1 & 0xFF] ^ rk[2];
            const std::uint32_t t3 = kTe0[s3 >> 24] ^ kTe1[(s0 >> 16) & 0xFF] ^
                                     kTe2[(s1 >> 8) & 0xFF] ^ kTe3[s2 & 0xFF] ^ rk[3];
            s0 = t0, s1 = t1, s2 = t2, s3 = t3;
        }
        rk += 4;
        const std::uint32_t o0 = final_word(s0, s1, s2, s3) ^ rk[0];
        const std::uint32_t o1 = final_word(s1, s2, s3, s0) ^ rk[1];
        const std::uint32_t o2 = final_word(s2, s3, s0, s1) ^ rk[2];
        const std::uint32_t o3 = final_word(s3, s0, s1, s2) ^ rk[3];
        store_be32(o0, out);
        store_be32(o1, out + 4);
        store_be32(o2, out + 8);
        store_be32(o3, out + 12);
    }

    void decrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const {
        using namespace detail::aes;
        std::array<std::uint8_t, 16> st;
        for (int i = 0; i < 16; ++i) {
            st[i] = in[i] ^ std::uint8_t(round_keys_[56 + i / 4] >> (24 - 8 * (i % 4)));
        }
        for (int round = kRounds - 1; round >= 1; --round) {
            inv_shift_rows(st);
            for (auto& b : st) b = kInvSbox[b];
            for (int i = 0; i < 16; ++i) {
                st[i] ^= std::uint8_t(round_keys_[4 * round + i / 4] >> (24 - 8 * (i % 4)));
            }
            inv_mix_columns(st);
        }
        inv_shift_rows(st);
        for (auto& b : st) b = kInvSbox[b];
        for (int i = 0; i < 16; ++i) {
            out[i] = st[i] ^ std::uint8_t(round_keys_[i / 4] >> (24 - 8 * (i % 4)));
        }
    }

    const std::array<std::uint32_t, 60>& round_keys() const { return round_keys_; }

  private:
    static std::uint32_t sub_word(std::uint32_t w) {
        using detail::aes::kSbox;
        return (std::uint32_t(kSbox[w >> 24]) << 24) |
               (std::uint32_t(kSbox[(w >> 16) & 0xFF]) << 16) |
               (std::uint32_t(kSbox[(w >> 8) & 0xFF]) << 8) |
               std::uint32_t(kSbox[w & 0xFF]);
    }

    static std::uint32_t final_word(std::uint32_t a, std::uint32_t b,
                                    std::uint32_t c, std::uint32_t d) {
        using detail::aes::kSbox;
        return (std::uint32_t(kSbox[a >> 24]) << 24) |
               (std::uint32_t(kSbox[(b >> 16) & 0xFF]) << 16) |
               (std::uint32_t(kSbox[(c >> 8) & 0xFF]) << 8) |
               std::uint32_t(kSbox[d & 0xFF]);
    }

    static void inv_shift_rows(std::array<std::uint8_t, 16>& st) {
        // column-major block layout: byte 4c+r is row r of column c
        std::array<std::uint8_t, 16> tmp;
        for (int c = 0; c < 4; ++c) {
            for (int r = 0; r < 4; ++r) {
                tmp[4 * ((c + r) % 4) + r] = st[4 * c + r];
            }
        }
        st = tmp;
    }

    static void inv_mix_columns(std::array<std::uint8_t, 16>& st) {
        using detail::aes::gf_mul;
        for (int c = 0; c < 4; ++c) {
            const std::uint8_t a0 = st[4 * c], a1 = st[4 * c + 1];
            const std::uint8_t a2 = st[4 * c + 2], a3 = st[4 * c + 3];
            st[4 * c] = gf_mul(a0, 14) ^ gf_mul(a1, 11) ^ gf_mul(a2, 13) ^ gf_mul(a3, 9);
            st[4 * c + 1] = gf_mul(a0, 9) ^ gf_mul(a1, 14) ^ gf_mul(a2, 11) ^ gf_mul(a3, 13);
            st[4 * c + 2] = gf_mul(a0, 13) ^ gf_mul(a1, 9) ^ gf_mul(a2, 14) ^ gf_mul(a3, 11);
            st[4 * c + 3] = gf_mul(a0, 11) ^ gf_mul(a1, 13) ^ gf_mul(a2, 9) ^ gf_mul(a3, 14);
        }
    }

    std::array<std::uint32_t, 60> round_keys_;
};

}  // namespace cipherbench
