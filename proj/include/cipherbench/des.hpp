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

/// DES and Triple-DES (EDE, three independent subkeys).
///
/// The canonical permutation tables are kept in their published 1-based
/// form; byte-wise lookup tables for IP/FP and the combined S+P round
/// tables are generated from them at compile time.

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cipherbench/bytes.hpp"

namespace cipherbench {

namespace detail::des {

inline constexpr std::array<int, 64> kIp = {
    58, 50, 42, 34, 26, 18, 10, 2, 60, 52, 44, 36, 28, 20, 12, 4,
    62, 54, 46, 38, 30, 22, 14, 6, 64, 56, 48, 40, 32, 24, 16, 8,
    57, 49, 41, 33, 25, 17, 9,  1, 59, 51, 43, 35, 27, 19, 11, 3,
    61, 53, 45, 37, 29, 21, 13, 5, 63, 55, 47, 39, 31, 23, 15, 7,
};

inline constexpr std::array<int, 64> kFp = {
    40, 8, 48, 16, 56, 24, 64, 32, 39, 7, 47, 15, 55, 23, 63, 31,
    38, 6, 46, 14, 54, 22, 62, 30, 37, 5, 45, 13, 53, 21, 61, 29,
    36, 4, 44, 12, 52, 20, 60, 28, 35, 3, 43, 11, 51, 19, 59, 27,
    34, 2, 42, 10, 50, 18, 58, 26, 33, 1, 41, 9,  49, 17, 57, 25,
};

inline constexpr std::array<int, 32> kP = {
    16, 7,  20, 21, 29, 12, 28, 17, 1,  15, 23, 26, 5,  18, 31, 10,
    2,  8,  24, 14, 32, 27, 3,  9,  19, 13, 30, 6,  22, 11, 4,  25,
};

inline constexpr std::array<int, 56> kPc1 = {
    57, 49, 41, 33, 25, 17, 9,  1,  58, 50, 42, 34, 26, 18,
    10, 2,  59, 51, 43, 35, 27, 19, 11, 3,  60, 52, 44, 36,
    63, 55, 47, 39, 31, 23, 15, 7,  62, 54, 46, 38, 30, 22,
    14, 6,  61, 53, 45, 37, 29, 21, 13, 5,  28, 20, 12, 4,
};

inline constexpr std::array<int, 48> kPc2 = {
    14, 17, 11, 24, 1,  5,  3,  28, 15, 6,  21, 10,
    23, 19, 12, 4,  26, 8,  16, 7,  27, 20, 13, 2,
    41, 52, 31, 37, 47, 55, 30, 40, 51, 45, 33, 48,
    44, 49, 39, 56, 34, 53, 46, 42, 50, 36, 29, 32,
};

inline constexpr std::array<int, 16> kShifts = {1, 1, 2, 2, 2, 2, 2, 2,
                                                1, 2, 2, 2, 2, 2, 2, 1};

// Row-major 4x16 boxes, standard publication order.
inline constexpr std::uint8_t kSbox[8][64] = {
    {14, 4,  13, 1, 2,  15, 11, 8,  3,  10, 6,  12, 5,  9,  0, 7,
     0,  15, 7,  4, 14, 2,  13, 1,  10, 6,  12, 11, 9,  5,  3, 8,
     4,  1,  14, 8, 13, 6,  2,  11, 15, 12, 9,  7,  3,  10, 5, 0,
     15, 12, 8,  2, 4,  9,  1,  7,  5,  11, 3,  14, 10, 0,  6, 13},
    {15, 1,  8,  14, 6,  11, 3,  4,  9,  7, 2,  13, 12, 0, 5,  10,
     3,  13, 4,  7,  15, 2,  8,  14, 12, 0, 1,  10, 6,  9, 11, 5,
     0,  14, 7,  11, 10, 4,  13, 1,  5,  8, 12, 6,  9,  3, 2,  15,
     13, 8,  10, 1,  3,  15, 4,  2,  11, 6, 7,  12, 0,  5, 14, 9},
    {10, 0,  9,  14, 6, 3,  15, 5,  1,  13, 12, 7,  11, 4,  2,  8,
     13, 7,  0,  9,  3, 4,  6,  10, 2,  8,  5,  14, 12, 11, 15, 1,
     13, 6,  4,  9,  8, 15, 3,  0,  11, 1,  2,  12, 5,  10, 14, 7,
     1,  10, 13, 0,  6, 9,  8,  7,  4,  15, 14, 3,  11, 5,  2,  12},
    {7,  13, 14, 3, 0,  6,  9,  10, 1,  2, 8, 5,  11, 12, 4,  15,
     13, 8,  11, 5, 6,  15, 0,  3,  4,  7, 2, 12, 1,  10, 14, 9,
     10, 6,  9,  0, 12, 11, 7,  13, 15, 1, 3, 14, 5,  2,  8,  4,
     3,  15, 0,  6, 10, 1,  13, 8,  9,  4, 5, 11, 12, 7,  2,  14},
    {2,  12, 4,  1,  7,  10, 11, 6,  8,  5,  3,  15, 13, 0, 14, 9,
     14, 11, 2,  12, 4,  7,  13, 1,  5,  0,  15, 10, 3,  9, 8,  6,
     4,  2,  1,  11, 10, 13, 7,  8,  15, 9,  12, 5,  6,  3, 0,  14,
     11, 8,  12, 7,  1,  14, 2,  13, 6,  15, 0,  9,  10, 4, 5,  3},
    {12, 1,  10, 15, 9, 2,  6,  8,  0,  13, 3,  4,  14, 7,  5,  11,
     10, 15, 4,  2,  7, 12, 9,  5,  6,  1,  13, 14, 0,  11, 3,  8,
     9,  14, 15, 5,  2, 8,  12, 3,  7,  0,  4,  10, 1,  13, 11, 6,
     4,  3,  2,  12, 9, 5,  15, 10, 11, 14, 1,  7,  6,  0,  8,  13},
    {4,  11, 2,  14, 15, 0, 8,  13, 3,  12, 9, 7,  5,  10, 6, 1,
     13, 0,  11, 7,  4,  9, 1,  10, 14, 3,  5, 12, 2,  15, 8, 6,
     1,  4,  11, 13, 12, 3, 7,  14, 10, 15, 6, 8,  0,  5,  9, 2,
     6,  11, 13, 8,  1,  4, 10, 7,  9,  5,  0, 15, 14, 2,  3, 12},
    {13, 2,  8,  4, 6,  15, 11, 1,  10, 9,  3,  14, 5,  0,  12, 7,
     1,  15, 13, 8, 10, 3,  7,  4,  12, 5,  6,  11, 0,  14, 9,  2,
     7,  11, 4,  1, 9,  12, 14, 2,  0,  6,  10, 13, 15, 3,  5,  8,
     2,  1,  14, 7, 4,  10, 8,  13, 15, 12, 9,  0,  3,  5,  6,  11},
};

// 64 -> 64 bit permutation as 8 per-input-byte lookup tables.
constexpr std::array<std::array<std::uint64_t, 256>, 8>
make_perm64(const std::array<int, 64>& table) {
    std::array<std::array<std::uint64_t, 256>, 8> out{};
    for (int byte = 0; byte < 8; ++byte) {
        for (int val = 0; val < 256; ++val) {
            std::uint64_t bits = 0;
            for (int o = 0; o < 64; ++o) {
                const int src = table[o];  // 1-based source bit
                if (src > byte * 8 && src <= byte * 8 + 8) {
                    const int within = src - byte * 8;  // 1..8
                    if ((val >> (8 - within)) & 1) {
                        bits |= std::uint64_t{1} << (63 - o);
                    }
                }
            }
            out[byte][val] = bits;
        }
    }
    return out;
}

inline constexpr auto kIpTable = make_perm64(kIp);
inline constexpr auto kFpTable = make_perm64(kFp);

// S-box output routed through P, indexed by the raw 6-bit row/column code.
constexpr std::array<std::array<std::uint32_t, 64>, 8> make_sp() {
    std::array<std::array<std::uint32_t, 64>, 8> out{};
    for (int box = 0; box < 8; ++box) {
        for (int code = 0; code < 64; ++code) {
            const int row = ((code & 0x20) >> 4) | (code & 1);
            const int col = (code >> 1) & 0xF;
            const std::uint32_t s = kSbox[box][row * 16 + col];
            const std::uint32_t placed = s << (28 - 4 * box);
            std::uint32_t permuted = 0;
            for (int o = 0; o < 32; ++o) {
                if ((placed >> (32 - kP[o])) & 1) {
                    permuted |= std::uint32_t{1} << (31 - o);
                }
            }
            out[box][code] = permuted;
        }
    }
    return out;
}

inline constexpr auto kSp = make_sp();

inline std::uint64_t permute64(std::uint64_t x,
                               const std::array<std::array<std::uint64_t, 256>, 8>& t) {
    std::uint64_t out = 0;
    for (int i = 0; i < 8; ++i) {
        out |= t[i][(x >> (56 - 8 * i)) & 0xFF];
    }
    return out;
}

}  // namespace detail::des

class Des {
  public:
    static constexpr std::size_t kBlockBytes = 8;
    using Subkeys = std::array<std::array<std::uint8_t, 8>, 16>;

    explicit Des(std::span<const std::uint8_t> key) {
        // PC1: 64 -> 56 bits, split into C and D halves.
        const std::uint64_t k = load_be64(key.data());
        std::uint64_t cd = 0;
        for (int i = 0; i < 56; ++i) {
            cd = (cd << 1) | ((k >> (64 - detail::des::kPc1[i])) & 1);
        }
        std::uint32_t c = std::uint32_t(cd >> 28) & 0xFFFFFFF;
        std::uint32_t d = std::uint32_t(cd) & 0xFFFFFFF;
        for (int round = 0; round < 16; ++round) {
            const int s = detail::des::kShifts[round];
            c = ((c << s) | (c >> (28 - s))) & 0xFFFFFFF;
            d = ((d << s) | (d >> (28 - s))) & 0xFFFFFFF;
            const std::uint64_t merged = (std::uint64_t(c) << 28) | d;
            std::uint64_t k48 = 0;
            for (int i = 0; i < 48; ++i) {
                k48 = (k48 << 1) | ((merged >> (56 - detail::des::kPc2[i])) & 1);
            }
            for (int chunk = 0; chunk < 8; ++chunk) {
                subkeys_[round][chunk] =
                    std::uint8_t((k48 >> (42 - 6 * chunk)) & 0x3F);
            }
        }
    }

    void encrypt_block(const std::uint8_t in[8], std::uint8_t out[8]) const {
        store_be64(process(load_be64(in), false), out);
    }

    void decrypt_block(const std::uint8_t in[8], std::uint8_t out[8]) const {
        store_be64(process(load_be64(in), true), out);
    }

    const Subkeys& subkeys() const { return subkeys_; }

  private:
    friend class TripleDes;

    static std::uint32_t feistel(std::uint32_t r,
                                 const std::array<std::uint8_t, 8>& k) {
        // The expansion E reads circular 6-bit windows of R; window i sits
        // in the low bits of rotl(R, 4i+5).
        std::uint32_t out = 0;
        out |= detail::des::kSp[0][(rotl32(r, 5) & 0x3F) ^ k[0]];
        out |= detail::des::kSp[1][(rotl32(r, 9) & 0x3F) ^ k[1]];
        out |= detail::des::kSp[2][(rotl32(r, 13) & 0x3F) ^ k[2]];
        out |= detail::des::kSp[3][(rotl32(r, 17) & 0x3F) ^ k[3]];
        out |= detail::des::kSp[4][(rotl32(r, 21) & 0x3F) ^ k[4]];
        out |= detail::des::kSp[5][(rotl32(r, 25) & 0x3F) ^ k[5]];
        out |= detail::des::kSp[6][(rotl32(r, 29) & 0x3F) ^ k[6]];
        out |= detail::des::kSp[7][(rotl32(r, 1) & 0x3F) ^ k[7]];
        return out;
    }

    std::uint64_t process(std::uint64_t block, bool decrypt) const {
        const std::uint64_t ip = detail::des::permute64(block, detail::des::kIpTable);
        std::uint32_t l = std::uint32_t(ip >> 32);
        std::uint32_t r = std::uint32_t(ip);
        for (int round = 0; round < 16; ++round) {
            const auto& k = subkeys_[decrypt ? 15 - round : round];
            const std::uint32_t next = l ^ feistel(r, k);
            l = r;
            r = next;
        }
        // Halves are swapped before the final permutation.
        const std::uint64_t pre = (std::uint64_t(r) << 32) | l;
        return detail::des::permute64(pre, detail::des::kFpTable);
    }

    Subkeys subkeys_;
};

/// EDE with three independent 8-byte subkeys; k1 = k2 = k3 degenerates to
/// single DES.
class TripleDes {
  public:
    static constexpr std::size_t kBlockBytes = 8;

    explicit TripleDes(std::span<const std::uint8_t> key)
        : k1_(key.subspan(0, 8)), k2_(key.subspan(8, 8)), k3_(key.subspan(16, 8)) {}

    void encrypt_block(const std::uint8_t in[8], std::uint8_t out[8]) const {
        std::uint64_t v = load_be64(in);
        v = k1_.process(v, false);
        v = k2_.process(v, true);
        v = k3_.process(v, false);
        store_be64(v, out);
    }

    void decrypt_block(const std::uint8_t in[8], std::uint8_t out[8]) const {
        std::uint64_t v = load_be64(in);
        v = k3_.process(v, true);
        v = k2_.process(v, false);
        v = k1_.process(v, true);
        store_be64(v, out);
    }

  private:
    Des k1_;
    Des k2_;
    Des k3_;
};

}  // namespace cipherbench
