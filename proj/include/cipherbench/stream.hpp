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

#pragma once

#include <optional>
#include <span>

#include "cipherbench/chacha20.hpp"
#include "cipherbench/core.hpp"
#include "cipherbench/rc4.hpp"

namespace cipherbench {

/// XOR `data` with the cipher's keystream. Involution: applying it twice
/// with identical parameters returns the input. RC4 takes no nonce;
/// ChaCha20 requires a 12-byte nonce and starts its counter at 0.
inline Bytes stream_xor(CipherId cipher, const KeyMaterial& key,
                        std::optional<std::span<const std::uint8_t>> nonce,
                        std::span<const std::uint8_t> data) {
    if (params_for(cipher).family != Family::Stream) {
        throw WrongFamilyError("stream_xor requires a stream cipher");
    }
    if (key.cipher != cipher) {
        throw WrongFamilyError("key does not belong to the requested cipher");
    }
    if (cipher == CipherId::Rc4) {
        if (nonce.has_value()) {
            throw NonceError("rc4 takes no nonce");
        }
        Rc4State st = Rc4State::init(key);
        Bytes out(data.size());
        st.xor_into(data, out);
        return out;
    }
    if (!nonce.has_value() || nonce->size() != kChaChaNonceBytes) {
        throw NonceError("chacha20 requires a 12-byte nonce");
    }
    return chacha20_xor(key, *nonce, 0, data);
}

}  // namespace cipherbench
