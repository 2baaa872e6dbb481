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

/// RC4 keystream generator. S stays a permutation of 0..255 throughout.
/// No initial keystream is discarded.

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cipherbench/core.hpp"

namespace cipherbench {

class Rc4State {
  public:
    /// Key-scheduling algorithm. The suite fixes 32-byte keys.
    static Rc4State init(const KeyMaterial& key) {
        if (key.cipher != CipherId::Rc4) {
            throw WrongFamilyError("rc4_init requires an RC4 key");
        }
        const auto& p = params_for(CipherId::Rc4);
        if (key.bytes.size() != p.key_input_bytes) {
            throw KeyLengthError(p.key_input_bytes, key.bytes.size());
        }
        Rc4State st;
        for (int i = 0; i < 256; ++i) st.s_[i] = std::uint8_t(i);
        std::uint8_t j = 0;
        for (int i = 0; i < 256; ++i) {
            j = std::uint8_t(j + st.s_[i] + key.bytes[i % key.bytes.size()]);
            std::swap(st.s_[i], st.s_[j]);
        }
        st.i_ = 0;
        st.j_ = 0;
        return st;
    }

    /// Pseudo-random generation: emits out.size() keystream bytes and
    /// advances the state; generating in pieces equals generating at once.
    void keystream(std::span<std::uint8_t> out) {
        std::uint8_t i = i_, j = j_;
        for (auto& b : out) {
            i = std::uint8_t(i + 1);
            j = std::uint8_t(j + s_[i]);
            std::swap(s_[i], s_[j]);
            b = s_[std::uint8_t(s_[i] + s_[j])];
        }
        i_ = i;
        j_ = j;
    }

    void xor_into(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
        std::uint8_t i = i_, j = j_;
        for (std::size_t n = 0; n < in.size(); ++n) {
            i = std::uint8_t(i + 1);
            j = std::uint8_t(j + s_[i]);
            std::swap(s_[i], s_[j]);
            out[n] = in[n] ^ s_[std::uint8_t(s_[i] + s_[j])];
        }
        i_ = i;
        j_ = j;
    }

    const std::array<std::uint8_t, 256>& sbox() const { return s_; }
    std::uint8_t i() const { return i_; }
    std::uint8_t j() const { return j_; }

  private:
    Rc4State() = default;

    std::array<std::uint8_t, 256> s_{};
    std::uint8_t i_ = 0;
    std::uint8_t j_ = 0;
};

}  // namespace cipherbench
