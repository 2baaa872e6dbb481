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

/// Shared vocabulary for the cipher suite: cipher identities, the fixed
/// parameter registry, key validation and the error hierarchy.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cipherbench/bytes.hpp"

namespace cipherbench {

enum class CipherId : std::uint8_t {
    Aes256 = 0,
    Des = 1,
    TripleDes = 2,
    Blowfish = 3,
    Twofish = 4,
    Rc2 = 5,
    Rc4 = 6,
    ChaCha20 = 7,
};

enum class Family : std::uint8_t { Block, Stream };

enum class ModeId : std::uint8_t { Ecb = 0, Cbc = 1, Stream = 2 };

inline constexpr std::array<CipherId, 8> kAllCiphers = {
    CipherId::Aes256,   CipherId::Des,     CipherId::TripleDes,
    CipherId::Blowfish, CipherId::Twofish, CipherId::Rc2,
    CipherId::Rc4,      CipherId::ChaCha20,
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class KeyLengthError : public Error {
  public:
    KeyLengthError(std::size_t expected, std::size_t got)
        : Error("key length mismatch: expected " + std::to_string(expected) +
                " bytes, got " + std::to_string(got)),
          expected(expected),
          got(got) {}
    std::size_t expected;
    std::size_t got;
};

class WrongFamilyError : public Error {
  public:
    using Error::Error;
};

class BlockLengthError : public Error {
  public:
    using Error::Error;
};

class PaddingError : public Error {
  public:
    using Error::Error;
};

class IvLengthError : public Error {
  public:
    using Error::Error;
};

class NonceError : public Error {
  public:
    using Error::Error;
};

/// One row of the parameter registry. `key_bits` is the nominal strength
/// (56/168 for DES/3DES, whose key *input* carries extra parity bits);
/// `key_input_bytes` is the byte length schedule() actually consumes.
struct CipherParams {
    CipherId cipher;
    int key_bits;
    std::optional<int> block_bits;  // absent for stream ciphers
    Family family;
    std::size_t key_input_bytes;

    std::size_t block_bytes() const {
        return static_cast<std::size_t>(*block_bits) / 8;
    }
};

inline const CipherParams& params_for(CipherId id) noexcept {
    static const std::array<CipherParams, 8> table = {{
        {CipherId::Aes256, 256, 128, Family::Block, 32},
        {CipherId::Des, 56, 64, Family::Block, 8},
        {CipherId::TripleDes, 168, 64, Family::Block, 24},
        {CipherId::Blowfish, 128, 64, Family::Block, 16},
        {CipherId::Twofish, 256, 128, Family::Block, 32},
        {CipherId::Rc2, 128, 64, Family::Block, 16},
        {CipherId::Rc4, 256, std::nullopt, Family::Stream, 32},
        {CipherId::ChaCha20, 256, std::nullopt, Family::Stream, 32},
    }};
    return table[static_cast<std::size_t>(id)];
}

/// Key bytes bound to the cipher they were validated for.
struct KeyMaterial {
    CipherId cipher;
    Bytes bytes;
};

/// Accepts exactly one length per cipher. DES/3DES parity bits are not
/// checked; the inputs are 8/24 bytes including parity.
inline KeyMaterial validate_key(CipherId id, std::span<const std::uint8_t> key) {
    const auto& p = params_for(id);
    if (key.size() != p.key_input_bytes) {
        throw KeyLengthError(p.key_input_bytes, key.size());
    }
    return KeyMaterial{id, Bytes(key.begin(), key.end())};
}

inline bool mode_compatible(CipherId id, ModeId mode) {
    const bool stream = params_for(id).family == Family::Stream;
    return stream ? mode == ModeId::Stream : mode != ModeId::Stream;
}

/// Canonical lowercase token, used in CSV output and CLI flags.
inline std::string_view cipher_name(CipherId id) {
    switch (id) {
        case CipherId::Aes256: return "aes";
        case CipherId::Des: return "des";
        case CipherId::TripleDes: return "3des";
        case CipherId::Blowfish: return "blowfish";
        case CipherId::Twofish: return "twofish";
        case CipherId::Rc2: return "rc2";
        case CipherId::Rc4: return "rc4";
        case CipherId::ChaCha20: return "chacha20";
    }
    return "?";
}

/// Display name used for report table columns.
inline std::string_view cipher_display_name(CipherId id) {
    switch (id) {
        case CipherId::Aes256: return "AES";
        case CipherId::Des: return "DES";
        case CipherId::TripleDes: return "Triple-DES";
        case CipherId::Blowfish: return "Blowfish";
        case CipherId::Twofish: return "Twofish";
        case CipherId::Rc2: return "RC2";
        case CipherId::Rc4: return "RC4";
        case CipherId::ChaCha20: return "ChaCha20";
    }
    return "?";
}

inline std::optional<CipherId> cipher_from_name(std::string_view name) {
    for (CipherId id : kAllCiphers) {
        if (name == cipher_name(id)) return id;
    }
    if (name == "aes256" || name == "aes-256") return CipherId::Aes256;
    if (name == "tdes" || name == "triple-des" || name == "tripledes") return CipherId::TripleDes;
    return std::nullopt;
}

inline std::string_view mode_name(ModeId mode) {
    switch (mode) {
        case ModeId::Ecb: return "ecb";
        case ModeId::Cbc: return "cbc";
        case ModeId::Stream: return "stream";
    }
    return "?";
}

inline std::optional<ModeId> mode_from_name(std::string_view name) {
    if (name == "ecb") return ModeId::Ecb;
    if (name == "cbc") return ModeId::Cbc;
    if (name == "stream") return ModeId::Stream;
    return std::nullopt;
}

}  // namespace cipherbench
