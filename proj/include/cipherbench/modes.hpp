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

/// ECB and CBC over any scheduled block cipher, with PKCS#7 padding.
/// Padding is always applied, so ciphertext grows by one block when the
/// plaintext is already a multiple of the block size.

#pragma once

#include <span>

#include "cipherbench/block_cipher.hpp"
#include "cipherbench/core.hpp"

namespace cipherbench {

/// Pads into `out`, reusing its capacity.
inline void pkcs7_pad_into(std::span<const std::uint8_t> data, std::size_t block_size,
                           Bytes& out) {
    const std::size_t pad = block_size - data.size() % block_size;
    out.resize(data.size() + pad);
    std::copy(data.begin(), data.end(), out.begin());
    std::fill(out.begin() + std::ptrdiff_t(data.size()), out.end(), std::uint8_t(pad));
}

inline Bytes pkcs7_pad(std::span<const std::uint8_t> data, std::size_t block_size) {
    Bytes out;
    pkcs7_pad_into(data, block_size, out);
    return out;
}

inline Bytes pkcs7_unpad(std::span<const std::uint8_t> data, std::size_t block_size) {
    if (data.empty() || data.size() % block_size != 0) {
        throw PaddingError("padded data must be a positive multiple of the block size");
    }
    const std::uint8_t pad = data.back();
    if (pad == 0 || pad > block_size) {
        throw PaddingError("pad count " + std::to_string(pad) + " out of range");
    }
    for (std::size_t i = data.size() - pad; i < data.size(); ++i) {
        if (data[i] != pad) {
            throw PaddingError("inconsistent padding bytes");
        }
    }
    return Bytes(data.begin(), data.end() - pad);
}

inline void ecb_encrypt_into(const BlockCipherInstance& inst,
                             std::span<const std::uint8_t> plaintext, Bytes& out) {
    const std::size_t bs = inst.block_bytes();
    pkcs7_pad_into(plaintext, bs, out);
    for (std::size_t off = 0; off < out.size(); off += bs) {
        std::span<std::uint8_t> blk(out.data() + off, bs);
        inst.encrypt_block(blk, blk);
    }
}

inline Bytes ecb_encrypt(const BlockCipherInstance& inst,
                         std::span<const std::uint8_t> plaintext) {
    Bytes out;
    ecb_encrypt_into(inst, plaintext, out);
    return out;
}

inline Bytes ecb_decrypt(const BlockCipherInstance& inst,
                         std::span<const std::uint8_t> ciphertext) {
    const std::size_t bs = inst.block_bytes();
    if (ciphertext.empty() || ciphertext.size() % bs != 0) {
        throw BlockLengthError("ciphertext length must be a positive multiple of " +
                               std::to_string(bs));
    }
    Bytes buf(ciphertext.size());
    for (std::size_t off = 0; off < buf.size(); off += bs) {
        inst.decrypt_block(ciphertext.subspan(off, bs),
                           std::span<std::uint8_t>(buf.data() + off, bs));
    }
    return pkcs7_unpad(buf, bs);
}

inline void check_iv(const BlockCipherInstance& inst, std::span<const std::uint8_t> iv) {
    if (iv.size() != inst.block_bytes()) {
        throw IvLengthError("iv must match the block size (" +
                            std::to_string(inst.block_bytes()) + " bytes)");
    }
}

inline void cbc_encrypt_into(const BlockCipherInstance& inst,
                             std::span<const std::uint8_t> iv,
                             std::span<const std::uint8_t> plaintext, Bytes& out) {
    const std::size_t bs = inst.block_bytes();
    check_iv(inst, iv);
    pkcs7_pad_into(plaintext, bs, out);
    const std::uint8_t* chain = iv.data();
    for (std::size_t off = 0; off < out.size(); off += bs) {
        std::uint8_t* blk = out.data() + off;
        for (std::size_t i = 0; i < bs; ++i) blk[i] ^= chain[i];
        inst.encrypt_block(std::span<const std::uint8_t>(blk, bs),
                           std::span<std::uint8_t>(blk, bs));
        chain = blk;
    }
}

inline Bytes cbc_encrypt(const BlockCipherInstance& inst, std::span<const std::uint8_t> iv,
                         std::span<const std::uint8_t> plaintext) {
    Bytes out;
    cbc_encrypt_into(inst, iv, plaintext, out);
    return out;
}

inline Bytes cbc_decrypt(const BlockCipherInstance& inst, std::span<const std::uint8_t> iv,
                         std::span<const std::uint8_t> ciphertext) {
    const std::size_t bs = inst.block_bytes();
    check_iv(inst, iv);
    if (ciphertext.empty() || ciphertext.size() % bs != 0) {
        throw BlockLengthError("ciphertext length must be a positive multiple of " +
                               std::to_string(bs));
    }
    Bytes buf(ciphertext.size());
    for (std::size_t off = 0; off < buf.size(); off += bs) {
        inst.decrypt_block(ciphertext.subspan(off, bs),
                           std::span<std::uint8_t>(buf.data() + off, bs));
        const std::uint8_t* chain = off == 0 ? iv.data() : ciphertext.data() + off - bs;
        for (std::size_t i = 0; i < bs; ++i) buf[off + i] ^= chain[i];
    }
    return pkcs7_unpad(buf, bs);
}

}  // namespace cipherbench
