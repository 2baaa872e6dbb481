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

/// Uniform handle over the six scheduled block ciphers. Instances are
/// immutable after construction and safe to share across threads.

#pragma once

#include <span>
#include <variant>

#include "cipherbench/aes256.hpp"
#include "cipherbench/blowfish.hpp"
#include "cipherbench/core.hpp"
#include "cipherbench/des.hpp"
#include "cipherbench/rc2.hpp"
#include "cipherbench/twofish.hpp"

namespace cipherbench {

class BlockCipherInstance {
  public:
    /// Deterministic key schedule for a Block-family cipher.
    static BlockCipherInstance schedule(const KeyMaterial& key) {
        const auto& p = params_for(key.cipher);
        if (p.family != Family::Block) {
            throw WrongFamilyError("schedule requires a block cipher, got " +
                                   std::string(cipher_name(key.cipher)));
        }
        if (key.bytes.size() != p.key_input_bytes) {
            throw KeyLengthError(p.key_input_bytes, key.bytes.size());
        }
        std::span<const std::uint8_t> kb(key.bytes);
        switch (key.cipher) {
            case CipherId::Aes256: return BlockCipherInstance(key.cipher, Aes256(kb));
            case CipherId::Des: return BlockCipherInstance(key.cipher, Des(kb));
            case CipherId::TripleDes: return BlockCipherInstance(key.cipher, TripleDes(kb));
            case CipherId::Blowfish: return BlockCipherInstance(key.cipher, Blowfish(kb));
            case CipherId::Twofish: return BlockCipherInstance(key.cipher, Twofish(kb));
            case CipherId::Rc2:
                // effective bits pinned to the key length (128)
                return BlockCipherInstance(key.cipher, Rc2(kb));
            default: break;
        }
        throw WrongFamilyError("unknown block cipher");
    }

    CipherId cipher() const { return cipher_; }

    std::size_t block_bytes() const { return params_for(cipher_).block_bytes(); }

    void encrypt_block(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
        check_len(in.size());
        check_len(out.size());
        std::visit([&](const auto& c) { c.encrypt_block(in.data(), out.data()); }, impl_);
    }

    void decrypt_block(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
        check_len(in.size());
        check_len(out.size());
        std::visit([&](const auto& c) { c.decrypt_block(in.data(), out.data()); }, impl_);
    }

    Bytes encrypt_block(std::span<const std::uint8_t> in) const {
        Bytes out(block_bytes());
        encrypt_block(in, out);
        return out;
    }

    Bytes decrypt_block(std::span<const std::uint8_t> in) const {
        Bytes out(block_bytes());
        decrypt_block(in, out);
        return out;
    }

  private:
    using Impl = std::variant<Aes256, Des, TripleDes, Blowfish, Twofish, Rc2>;

    BlockCipherInstance(CipherId id, Impl impl) : cipher_(id), impl_(std::move(impl)) {}

    void check_len(std::size_t n) const {
        if (n != block_bytes()) {
            throw BlockLengthError("expected a " + std::to_string(block_bytes()) +
                                   "-byte block, got " + std::to_string(n) + " bytes");
        }
    }

    CipherId cipher_;
    Impl impl_;
};

}  // namespace cipherbench
