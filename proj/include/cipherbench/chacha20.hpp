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

/// ChaCha20 with the 96-bit-nonce / 32-bit-counter layout. 20 rounds as
/// ten column/diagonal double rounds; the block function adds the input
/// state back after the rounds.

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cipherbench/core.hpp"

namespace cipherbench {

inline constexpr std::size_t kChaChaNonceBytes = 12;
inline constexpr std::size_t kChaChaBlockBytes = 64;

struct ChaChaState {
    std::array<std::uint32_t, 8> key;
    std::uint32_t counter = 0;
    std::array<std::uint32_t, 3> nonce;

    static ChaChaState init(const KeyMaterial& key,
                            std::span<const std::uint8_t> nonce,
                            std::uint32_t counter = 0) {
        if (key.cipher != CipherId::ChaCha20) {
            throw WrongFamilyError("chacha20 requires a ChaCha20 key");
        }
        const auto& p = params_for(CipherId::ChaCha20);
        if (key.bytes.size() != p.key_input_bytes) {
            throw KeyLengthError(p.key_input_bytes, key.bytes.size());
        }
        if (nonce.size() != kChaChaNonceBytes) {
            throw NonceError("chacha20 nonce must be 12 bytes");
        }
        ChaChaState st;
        for (int i = 0; i < 8; ++i) st.key[i] = load_le32(key.bytes.data() + 4 * i);
        for (int i = 0; i < 3; ++i) st.nonce[i] = load_le32(nonce.data() + 4 * i);
        st.counter = counter;
        return st;
    }
};

/// The 4-add/4-xor/4-rotate primitive; bijective on its 128-bit input.
inline void chacha20_quarter_round(std::uint32_t& a, std::uint32_t& b,
                                   std::uint32_t& c, std::uint32_t& d) {
    a += b;
    d = rotl32(d ^ a, 16);
    c += d;
    b = rotl32(b ^ c, 12);
    a += b;
    d = rotl32(d ^ a, 8);
    c += d;
    b = rotl32(b ^ c, 7);
}

inline void chacha20_inverse_quarter_round(std::uint32_t& a, std::uint32_t& b,
                                           std::uint32_t& c, std::uint32_t& d) {
    b = rotr32(b, 7) ^ c;
    c -= d;
    d = rotr32(d, 8) ^ a;
    a -= b;
    b = rotr32(b, 12) ^ c;
    c -= d;
    d = rotr32(d, 16) ^ a;
    a -= b;
}

/// One 64-byte block for the state's (key, counter, nonce). Pure: the
/// caller advances the counter.
inline void chacha20_block(const ChaChaState& st, std::uint8_t out[kChaChaBlockBytes]) {
    static constexpr std::array<std::uint32_t, 4> sigma = {0x61707865, 0x3320646e,
                                                           0x79622d32, 0x6b206574};
    std::array<std::uint32_t, 16> x;
    for (int i = 0; i < 4; ++i) x[i] = sigma[i];
    for (int i = 0; i < 8; ++i) x[4 + i] = st.key[i];
    x[12] = st.counter;
    for (int i = 0; i < 3; ++i) x[13 + i] = st.nonce[i];
    std::array<std::uint32_t, 16> w = x;
    for (int dr = 0; dr < 10; ++dr) {
        chacha20_quarter_round(w[0], w[4], w[8], w[12]);
        chacha20_quarter_round(w[1], w[5], w[9], w[13]);
        chacha20_quarter_round(w[2], w[6], w[10], w[14]);
        chacha20_quarter_round(w[3], w[7], w[11], w[15]);
        chacha20_quarter_round(w[0], w[5], w[10], w[15]);
        chacha20_quarter_round(w[1], w[6], w[11], w[12]);
        chacha20_quarter_round(w[2], w[7], w[8], w[13]);
        chacha20_quarter_round(w[3], w[4], w[9], w[14]);
    }
    for (int i = 0; i < 16; ++i) {
        store_le32(w[i] + x[i], out + 4 * i);
    }
}

/// XOR the keystream starting at `counter` into `out` (capacity reused).
inline void chacha20_xor_into(const KeyMaterial& key, std::span<const std::uint8_t> nonce,
                              std::uint32_t counter, std::span<const std::uint8_t> data,
                              Bytes& out) {
    ChaChaState st = ChaChaState::init(key, nonce, counter);
    out.resize(data.size());
    std::array<std::uint8_t, kChaChaBlockBytes> block;
    std::size_t off = 0;
    while (off < data.size()) {
        chacha20_block(st, block.data());
        ++st.counter;
        const std::size_t n = std::min(data.size() - off, kChaChaBlockBytes);
        for (std::size_t i = 0; i < n; ++i) {
            out[off + i] = data[off + i] ^ block[i];
        }
        off += n;
    }
}

inline Bytes chacha20_xor(const KeyMaterial& key, std::span<const std::uint8_t> nonce,
                          std::uint32_t counter, std::span<const std::uint8_t> data) {
    Bytes out;
    chacha20_xor_into(key, nonce, counter, data, out);
    return out;
}

}  // namespace cipherbench
