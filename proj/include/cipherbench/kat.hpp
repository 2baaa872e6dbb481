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

/// Embedded known-answer vectors for all eight ciphers, drawn from the
/// published standards (FIPS-197 / SP 800-38A, RFC 2268, RFC 6229,
/// RFC 8439, the Blowfish and Twofish design-team vectors) and from
/// independently verified cross-checks against OpenSSL.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cipherbench/block_cipher.hpp"
#include "cipherbench/chacha20.hpp"
#include "cipherbench/core.hpp"
#include "cipherbench/rc4.hpp"

namespace cipherbench::kat {

struct BlockVector {
    CipherId cipher;
    const char* name;
    const char* key_hex;
    const char* pt_hex;
    const char* ct_hex;
};

inline constexpr BlockVector kBlockVectors[] = {
    {CipherId::Aes256, "fips-197 C.3",
     "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "00112233445566778899aabbccddeeff", "8ea2b7ca516745bfeafc49904b496089"},
    {CipherId::Aes256, "sp800-38a ecb-aes256",
     "603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4",
     "6bc1bee22e409f96e93d7e117393172a", "f3eed1bdb5d2a03c064b5a7e3db181f8"},

    {CipherId::Des, "classic kat 1", "133457799bbcdff1", "0123456789abcdef",
     "85e813540f0ab405"},
    {CipherId::Des, "classic kat 2", "0e329232ea6d0d73", "8787878787878787",
     "0000000000000000"},

    {CipherId::TripleDes, "ede 3-key a",
     "0123456789abcdef23456789abcdef01456789abcdef0123", "0123456789abcde7",
     "403968fe84baa9a7"},
    {CipherId::TripleDes, "ede 3-key b",
     "000102030405060708090a0b0c0d0e0f1011121314151617", "0011223344556677",
     "97a25ba82b564f4c"},

    {CipherId::Blowfish, "set_key k16", "f0e1d2c3b4a5968778695a4b3c2d1e0f",
     "fedcba9876543210", "93142887ee3be15c"},
    {CipherId::Blowfish, "chain key", "0123456789abcdeff0e1d2c3b4a59687",
     "fedcba9876543210", "d0042196b11308ea"},

    {CipherId::Twofish, "ival zero key",
     "0000000000000000000000000000000000000000000000000000000000000000",
     "00000000000000000000000000000000", "57ff739d4dc92c1bd7fc01700cc8216f"},
    {CipherId::Twofish, "ival pattern key",
     "0123456789abcdeffedcba987654321000112233445566778899aabbccddeeff",
     "00000000000000000000000000000000", "37527be0052334b89f0cfccae87cfa20"},
    {CipherId::Twofish, "counting key",
     "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "00112233445566778899aabbccddeeff", "b7b5fb57ec446a11cbb7e6292342537b"},

    {CipherId::Rc2, "rfc2268 #7", "88bca90e90875a7f0f79c384627bafb2",
     "0000000000000000", "2269552ab0f85ca6"},
    {CipherId::Rc2, "counting key", "000102030405060708090a0b0c0d0e0f",
     "0011223344556677", "5ab3337c2c72b69f"},
};

/// Twofish iterated table chain: PT_i = CT_{i-1}, KEY_i = CT_{i-2}||CT_{i-3}
/// (zeros before the start); the step-49 ciphertext is published.
struct ChainVector {
    int steps;
    const char* expected_hex;
};

inline constexpr ChainVector kTwofishChain = {49, "37fe26ff1cf66175f5ddf4c33b97a205"};

struct Rc4Segment {
    std::size_t offset;
    const char* keystream_hex;
};

struct Rc4Vector {
    const char* name;
    const char* key_hex;
    Rc4Segment segments[3];
};

inline constexpr Rc4Vector kRc4Vectors[] = {
    {"rfc6229 key 0x01..0x20",
     "0102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f20",
     {{0, "eaa6bd25880bf93d3f5d1e4ca2611d91"},
      {16, "cfa45c9f7e714b54bdfa80027cb14380"},
      {240, "114ae344ded71b35f2e60febad727fd8"}}},
    {"rfc6229 random key",
     "1ada31d5cf688221c109163908ebe51debb46227c6cc8b37641910833222772a",
     {{0, "dd5bcb0018e922d494759d7c395d02d3"},
      {16, "c8446f8f77abf737685353eb89a1c9eb"},
      {240, "af3e30f9c095045938151575c3fb9098"}}},
};

struct ChaChaVector {
    const char* name;
    const char* key_hex;
    const char* nonce_hex;
    std::uint32_t counter;
    const char* pt_hex;  // empty = raw keystream block
    const char* expected_hex;
};

inline const ChaChaVector kChaChaVectors[] = {
    {"rfc8439 block fn",
     "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "000000090000004a00000000", 1, "",
     "10f1e7e4d13b5915500fdd1fa32071c4c7d1f4c733c068030422aa9ac3d46c4e"
     "d2826446079faa0914c2d705d98b02a2b5129cd1de164eb9cbd083e8a2503c4e"},
    {"rfc8439 message ctr=1",
     "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "000000000000004a00000000", 1,
     "4c616469657320616e642047656e746c656d656e206f662074686520636c6173"
     "73206f66202739393a204966204920636f756c64206f6666657220796f75206f"
     "6e6c79206f6e652074697020666f7220746865206675747572652c2073756e73"
     "637265656e20776f756c642062652069742e",
     "6e2e359a2568f98041ba0728dd0d6981e97e7aec1d4360c20a27afccfd9fae0b"
     "f91b65c5524733ab8f593dabcd62b3571639d624e65152ab8f530c359f0861d8"
     "07ca0dbf500d6a6156a38e088a22b65e52bc514d16ccf806818ce91ab7793736"
     "5af90bbf74a35be6b40b8eedf2785e42874d"},
    {"message ctr=0",
     "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "000000000000004a00000000", 0,
     "4c616469657320616e642047656e746c656d656e206f662074686520636c6173"
     "73206f66202739393a204966204920636f756c64206f6666657220796f75206f"
     "6e6c79206f6e652074697020666f7220746865206675747572652c2073756e73"
     "637265656e20776f756c642062652069742e",
     "e3647a29ded31528ef56bac70f7a7ac3b735c7444da42d99823ef9938c8ebfdc"
     "f05bb71a822c62981aa1ea608f47933f2ed755b62d9312ae72037674f3e93e24"
     "4c2328d32f75bcc15bb7574fde0c6fcdf87b7aa25b5972970c2ae6cced86a10b"
     "e9496fc61c407dfdc01510ed8f4eb35d0d62"},
};

struct VectorResult {
    CipherId cipher;
    std::string name;
    bool passed;
    std::string detail;  // expected/actual hex on failure
};

inline VectorResult check_block(const BlockVector& v) {
    const Bytes key = from_hex(v.key_hex);
    const Bytes pt = from_hex(v.pt_hex);
    const Bytes ct = from_hex(v.ct_hex);
    const auto inst = BlockCipherInstance::schedule(validate_key(v.cipher, key));
    const Bytes got = inst.encrypt_block(pt);
    if (got != ct) {
        return {v.cipher, v.name, false,
                "encrypt expected " + std::string(v.ct_hex) + ", got " + to_hex(got)};
    }
    const Bytes back = inst.decrypt_block(ct);
    if (back != pt) {
        return {v.cipher, v.name, false,
                "decrypt expected " + std::string(v.pt_hex) + ", got " + to_hex(back)};
    }
    return {v.cipher, v.name, true, {}};
}

inline VectorResult check_twofish_chain() {
    Bytes prev3(16), prev2(16), prev1(16);
    Bytes ct;
    for (int i = 1; i <= kTwofishChain.steps; ++i) {
        Bytes key = prev2;
        key.insert(key.end(), prev3.begin(), prev3.end());
        const auto inst =
            BlockCipherInstance::schedule(validate_key(CipherId::Twofish, key));
        ct = inst.encrypt_block(prev1);
        prev3 = prev2;
        prev2 = prev1;
        prev1 = ct;
    }
    const bool ok = to_hex(ct) == kTwofishChain.expected_hex;
    return {CipherId::Twofish, "iterated table chain", ok,
            ok ? std::string{}
               : "expected " + std::string(kTwofishChain.expected_hex) + ", got " +
                     to_hex(ct)};
}

inline VectorResult check_rc4(const Rc4Vector& v) {
    const KeyMaterial key = validate_key(CipherId::Rc4, from_hex(v.key_hex));
    Rc4State st = Rc4State::init(key);
    Bytes ks(272);
    st.keystream(ks);
    for (const auto& seg : v.segments) {
        const Bytes want = from_hex(seg.keystream_hex);
        const Bytes got(ks.begin() + seg.offset, ks.begin() + seg.offset + want.size());
        if (got != want) {
            return {CipherId::Rc4, v.name, false,
                    "offset " + std::to_string(seg.offset) + " expected " +
                        seg.keystream_hex + ", got " + to_hex(got)};
        }
    }
    return {CipherId::Rc4, v.name, true, {}};
}

inline VectorResult check_chacha(const ChaChaVector& v) {
    const KeyMaterial key = validate_key(CipherId::ChaCha20, from_hex(v.key_hex));
    const Bytes nonce = from_hex(v.nonce_hex);
    const Bytes expected = from_hex(v.expected_hex);
    Bytes got;
    if (v.pt_hex[0] == '\0') {
        ChaChaState st = ChaChaState::init(key, nonce, v.counter);
        got.resize(kChaChaBlockBytes);
        chacha20_block(st, got.data());
    } else {
        got = chacha20_xor(key, nonce, v.counter, from_hex(v.pt_hex));
    }
    if (got != expected) {
        return {CipherId::ChaCha20, v.name, false,
                "expected " + std::string(v.expected_hex) + ", got " + to_hex(got)};
    }
    return {CipherId::ChaCha20, v.name, true, {}};
}

inline std::vector<VectorResult> run_all() {
    std::vector<VectorResult> results;
    for (const auto& v : kBlockVectors) results.push_back(check_block(v));
    results.push_back(check_twofish_chain());
    for (const auto& v : kRc4Vectors) results.push_back(check_rc4(v));
    for (const auto& v : kChaChaVectors) results.push_back(check_chacha(v));
    return results;
}

/// Prints one line per cipher; returns true iff every vector passed.
inline bool run_and_report(std::ostream& os) {
    const auto results = run_all();
    bool all_ok = true;
    for (CipherId id : kAllCiphers) {
        int total = 0, passed = 0;
        for (const auto& r : results) {
            if (r.cipher != id) continue;
            ++total;
            if (r.passed) ++passed;
        }
        const bool ok = passed == total;
        all_ok = all_ok && ok;
        os << cipher_display_name(id) << ": " << (ok ? "PASS" : "FAIL") << " ("
           << passed << "/" << total << " vectors)\n";
        if (!ok) {
            for (const auto& r : results) {
                if (r.cipher == id && !r.passed) {
                    os << "  " << r.name << ": " << r.detail << "\n";
                }
            }
        }
    }
    return all_ok;
}

}  // namespace cipherbench::kat
