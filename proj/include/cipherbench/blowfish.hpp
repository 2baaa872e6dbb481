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

/// Blowfish, 16-round Feistel with key-dependent S-boxes. The suite keys
/// it with 128-bit keys only, though the schedule itself accepts any
/// nonempty key (it cycles the key bytes).

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cipherbench/bytes.hpp"
#include "cipherbench/detail/blowfish_init.hpp"

namespace cipherbench {

class Blowfish {
  public:
    static constexpr std::size_t kBlockBytes = 8;

    explicit Blowfish(std::span<const std::uint8_t> key)
        : p_(detail::kBlowfishInitP), s_(detail::kBlowfishInitS) {
        std::size_t j = 0;
        for (auto& pw : p_) {
            std::uint32_t v = 0;
            for (int b = 0; b < 4; ++b) {
                v = (v << 8) | key[j];
                j = (j + 1) % key.size();
            }
            pw ^= v;
        }
        std::uint32_t l = 0, r = 0;
        for (int i = 0; i < 18; i += 2) {
            encrypt_words(l, r);
            p_[i] = l;
            p_[i + 1] = r;
        }
        for (auto& box : s_) {
            for (int i = 0; i < 256; i += 2) {
                encrypt_words(l, r);
                box[i] = l;
                box[i + 1] = r;
            }
        }
    }

    void encrypt_block(const std::uint8_t in[8], std::uint8_t out[8]) const {
        std::uint32_t l = load_be32(in), r = load_be32(in + 4);
        encrypt_words(l, r);
        store_be32(l, out);
        store_be32(r, out + 4);
    }

    void decrypt_block(const std::uint8_t in[8], std::uint8_t out[8]) const {
        std::uint32_t l = load_be32(in), r = load_be32(in + 4);
        decrypt_words(l, r);
        store_be32(l, out);
        store_be32(r, out + 4);
    }

    const std::array<std::uint32_t, 18>& p_array() const { return p_; }
    const std::array<std::array<std::uint32_t, 256>, 4>& sboxes() const { return s_; }

  private:
    std::uint32_t f(std::uint32_t x) const {
        return ((s_[0][x >> 24] + s_[1][(x >> 16) & 0xFF]) ^ s_[2][(x >> 8) & 0xFF]) +
               s_[3][x & 0xFF];
    }

    void encrypt_words(std::uint32_t& l, std::uint32_t& r) const {
        for (int i = 0; i < 16; i += 2) {
            l ^= p_[i];
            r ^= f(l);
            r ^= p_[i + 1];
            l ^= f(r);
        }
        l ^= p_[16];
        r ^= p_[17];
        std::swap(l, r);
    }

    void decrypt_words(std::uint32_t& l, std::uint32_t& r) const {
        for (int i = 16; i > 0; i -= 2) {
            l ^= p_[i + 1];
            r ^= f(l);
            r ^= p_[i];
            l ^= f(r);
        }
        l ^= p_[1];
        r ^= p_[0];
        std::swap(l, r);
    }

    std::array<std::uint32_t, 18> p_;
    std::array<std::array<std::uint32_t, 256>, 4> s_;
};

}  // namespace cipherbench
