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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cipherbench/container.hpp"

using namespace cipherbench;

namespace {

std::mt19937_64 rng(0xC047A13Eu);

Bytes random_bytes(std::size_t n) {
    Bytes out(n);
    for (auto& b : out) b = std::uint8_t(rng());
    return out;
}

KeyMaterial random_key(CipherId id) {
    return validate_key(id, random_bytes(params_for(id).key_input_bytes));
}

ModeId default_mode(CipherId id) {
    return params_for(id).family == Family::Stream ? ModeId::Stream : ModeId::Cbc;
}

}  // namespace

TEST_CASE("header encode/decode round-trips for every cipher and mode") {
    for (CipherId id : kAllCiphers) {
        for (ModeId mode : {ModeId::Ecb, ModeId::Cbc, ModeId::Stream}) {
            if (!mode_compatible(id, mode)) continue;
            ContainerHeader h{id, mode,
                              random_bytes(ContainerHeader::expected_iv_len(id, mode))};
            Bytes wire = h.encode();
            wire.insert(wire.end(), {1, 2, 3});  // trailing ciphertext
            std::size_t consumed = 0;
            const ContainerHeader back = ContainerHeader::decode(wire, consumed);
            CHECK(back.cipher == id);
            CHECK(back.mode == mode);
            CHECK(back.iv == h.iv);
            CHECK(consumed == 8 + h.iv.size());
        }
    }
}

TEST_CASE("the wire ordinals are frozen") {
    ContainerHeader h{CipherId::ChaCha20, ModeId::Stream, random_bytes(12)};
    const Bytes wire = h.encode();
    CHECK(wire[0] == 'C');
    CHECK(wire[1] == 'B');
    CHECK(wire[2] == 'E');
    CHECK(wire[3] == '1');
    CHECK(wire[4] == 0x01);  // version
    CHECK(wire[5] == 7);     // chacha20 ordinal
    CHECK(wire[6] == 2);     // stream ordinal
    CHECK(wire[7] == 12);    // nonce length
}

TEST_CASE("bad containers are rejected with distinct messages") {
    std::size_t consumed = 0;
    Bytes bogus = {'X', 'X', 'X', 'X', 1, 0, 0, 0};
    try {
        ContainerHeader::decode(bogus, consumed);
        FAIL("expected ContainerError");
    } catch (const ContainerError& e) {
        CHECK(std::string(e.what()) == "not a cipherbench container");
    }

    ContainerHeader good{CipherId::Aes256, ModeId::Cbc, random_bytes(16)};
    Bytes wire = good.encode();
    wire[4] = 0x02;
    CHECK_THROWS_WITH(ContainerHeader::decode(wire, consumed),
                      Catch::Matchers::ContainsSubstring("version"));
    wire[4] = 0x01;
    wire.resize(10);  // iv cut short
    CHECK_THROWS_WITH(ContainerHeader::decode(wire, consumed),
                      Catch::Matchers::ContainsSubstring("truncated"));
    CHECK_THROWS_AS(ContainerHeader::decode(Bytes{'C', 'B'}, consumed), ContainerError);
}

TEST_CASE("full-pipeline round-trip across the size ladder") {
    const std::size_t sizes[] = {0, 1, 15, 16, 17, 4096, 1000003};
    for (CipherId id : kAllCiphers) {
        INFO(cipher_name(id));
        const KeyMaterial key = random_key(id);
        for (ModeId mode : {ModeId::Ecb, ModeId::Cbc, ModeId::Stream}) {
            if (!mode_compatible(id, mode)) continue;
            for (std::size_t n : sizes) {
                const Bytes pt = random_bytes(n);
                const Bytes iv = random_bytes(ContainerHeader::expected_iv_len(id, mode));
                const Bytes container = encrypt_container(key, mode, iv, pt);
                REQUIRE(decrypt_container(key, container) == pt);
            }
        }
    }
}

TEST_CASE("mode/family mismatches are rejected up front") {
    const Bytes data = random_bytes(32);
    CHECK_THROWS_WITH(
        encrypt_container(random_key(CipherId::Rc4), ModeId::Cbc, random_bytes(8), data),
        Catch::Matchers::ContainsSubstring("mode incompatible with stream cipher"));
    CHECK_THROWS_AS(encrypt_container(random_key(CipherId::Aes256), ModeId::Stream,
                                      Bytes{}, data),
                    WrongFamilyError);
    CHECK_THROWS_AS(encrypt_container(random_key(CipherId::Aes256), ModeId::Cbc,
                                      random_bytes(8), data),
                    IvLengthError);
}

TEST_CASE("decrypting with a key for another cipher fails") {
    const Bytes pt = random_bytes(100);
    const Bytes container =
        encrypt_container(random_key(CipherId::Blowfish), ModeId::Cbc, random_bytes(8), pt);
    CHECK_THROWS_AS(decrypt_container(random_key(CipherId::Aes256), container),
                    ContainerError);
}

TEST_CASE("truncated ciphertext surfaces a block-length error") {
    const KeyMaterial key = random_key(CipherId::Aes256);
    Bytes container = encrypt_container(key, ModeId::Cbc, random_bytes(16), random_bytes(64));
    container.resize(container.size() - 5);
    CHECK_THROWS_AS(decrypt_container(key, container), BlockLengthError);
}
