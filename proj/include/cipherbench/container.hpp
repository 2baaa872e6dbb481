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

/// Encrypted-file container: "CBE1" magic, version, cipher and mode
/// ordinals, IV length, IV, then ciphertext. The ordinals are frozen wire
/// constants (registry order, ecb/cbc/stream = 0/1/2).

#pragma once

#include <span>

#include "cipherbench/core.hpp"
#include "cipherbench/modes.hpp"
#include "cipherbench/stream.hpp"

namespace cipherbench {

class ContainerError : public Error {
  public:
    using Error::Error;
};

struct ContainerHeader {
    static constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'B', 'E', '1'};
    static constexpr std::uint8_t kVersion = 0x01;

    CipherId cipher;
    ModeId mode;
    Bytes iv;

    static std::size_t expected_iv_len(CipherId cipher, ModeId mode) {
        switch (mode) {
            case ModeId::Ecb: return 0;
            case ModeId::Cbc: return params_for(cipher).block_bytes();
            case ModeId::Stream:
                return cipher == CipherId::ChaCha20 ? kChaChaNonceBytes : 0;
        }
        return 0;
    }

    Bytes encode() const {
        Bytes out(kMagic.begin(), kMagic.end());
        out.push_back(kVersion);
        out.push_back(static_cast<std::uint8_t>(cipher));
        out.push_back(static_cast<std::uint8_t>(mode));
        out.push_back(static_cast<std::uint8_t>(iv.size()));
        out.insert(out.end(), iv.begin(), iv.end());
        return out;
    }

    /// Parses the header; `consumed` reports its byte length.
    static ContainerHeader decode(std::span<const std::uint8_t> data,
                                  std::size_t& consumed) {
        if (data.size() < 8 ||
            !std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
            throw ContainerError("not a cipherbench container");
        }
        if (data[4] != kVersion) {
            throw ContainerError("unsupported container version " +
                                 std::to_string(int(data[4])));
        }
        if (data[5] > 7) throw ContainerError("unknown cipher ordinal");
        const auto cipher = static_cast<CipherId>(data[5]);
        if (data[6] > 2) throw ContainerError("unknown mode ordinal");
        const auto mode = static_cast<ModeId>(data[6]);
        if (!mode_compatible(cipher, mode)) {
            throw ContainerError("cipher/mode combination is invalid");
        }
        const std::size_t iv_len = data[7];
        if (iv_len != expected_iv_len(cipher, mode)) {
            throw ContainerError("unexpected iv length for cipher/mode");
        }
        if (data.size() < 8 + iv_len) throw ContainerError("truncated container header");
        ContainerHeader h;
        h.cipher = cipher;
        h.mode = mode;
        h.iv.assign(data.begin() + 8, data.begin() + 8 + std::ptrdiff_t(iv_len));
        consumed = 8 + iv_len;
        return h;
    }
};

/// Header + ciphertext for the given cipher/mode. `iv` must already have
/// the length expected_iv_len dictates (empty for ECB/RC4).
inline Bytes encrypt_container(const KeyMaterial& key, ModeId mode,
                               std::span<const std::uint8_t> iv,
                               std::span<const std::uint8_t> plaintext) {
    if (!mode_compatible(key.cipher, mode)) {
        throw WrongFamilyError("mode incompatible with " +
                               (params_for(key.cipher).family == Family::Stream
                                    ? std::string("stream cipher")
                                    : std::string("block cipher")));
    }
    if (iv.size() != ContainerHeader::expected_iv_len(key.cipher, mode)) {
        throw IvLengthError("iv/nonce length must be " +
                            std::to_string(ContainerHeader::expected_iv_len(key.cipher, mode)));
    }
    ContainerHeader h{key.cipher, mode, Bytes(iv.begin(), iv.end())};
    Bytes out = h.encode();
    Bytes ct;
    switch (mode) {
        case ModeId::Ecb: {
            const auto inst = BlockCipherInstance::schedule(key);
            ct = ecb_encrypt(inst, plaintext);
            break;
        }
        case ModeId::Cbc: {
            const auto inst = BlockCipherInstance::schedule(key);
            ct = cbc_encrypt(inst, iv, plaintext);
            break;
        }
        case ModeId::Stream: {
            std::optional<std::span<const std::uint8_t>> nonce;
            if (key.cipher == CipherId::ChaCha20) nonce = iv;
            ct = stream_xor(key.cipher, key, nonce, plaintext);
            break;
        }
    }
    out.insert(out.end(), ct.begin(), ct.end());
    return out;
}

/// Inverse of encrypt_container; cipher and mode come from the header.
inline Bytes decrypt_container(const KeyMaterial& key,
                               std::span<const std::uint8_t> container) {
    std::size_t consumed = 0;
    const ContainerHeader h = ContainerHeader::decode(container, consumed);
    if (h.cipher != key.cipher) {
        throw ContainerError("container was written for cipher " +
                             std::string(cipher_name(h.cipher)));
    }
    const auto ct = container.subspan(consumed);
    switch (h.mode) {
        case ModeId::Ecb:
            return ecb_decrypt(BlockCipherInstance::schedule(key), ct);
        case ModeId::Cbc:
            return cbc_decrypt(BlockCipherInstance::schedule(key), h.iv, ct);
        case ModeId::Stream: {
            std::optional<std::span<const std::uint8_t>> nonce;
            if (key.cipher == CipherId::ChaCha20) {
                nonce = std::span<const std::uint8_t>(h.iv);
            }
            return stream_xor(key.cipher, key, nonce, ct);
        }
    }
    throw ContainerError("unreachable mode");
}

}  // namespace cipherbench
