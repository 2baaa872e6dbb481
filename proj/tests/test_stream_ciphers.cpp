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

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "cipherbench/stream.hpp"

using namespace cipherbench;

namespace {

std::mt19937_64 rng(0x57E3'A21Bu);

Bytes random_bytes(std::size_t n) {
    Bytes out(n);
    for (auto& b : out) b = std::uint8_t(rng());
    return out;
}

bool is_permutation_0_255(const std::array<std::uint8_t, 256>& s) {
    std::array<bool, 256> seen{};
    for (std::uint8_t v : s) seen[v] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

TEST_CASE("rc4 init yields a permutation with i = j = 0") {
    for (int i = 0; i < 20; ++i) {
        const auto st = Rc4State::init(validate_key(CipherId::Rc4, random_bytes(32)));
        CHECK(is_permutation_0_255(st.sbox()));
        CHECK(st.i() == 0);
        CHECK(st.j() == 0);
    }
}

TEST_CASE("rc4 rejects non-256-bit keys") {
    const KeyMaterial km{CipherId::Rc4, Bytes(16, 0x01)};
    CHECK_THROWS_AS(Rc4State::init(km), KeyLengthError);
}

TEST_CASE("rc4 keystream concatenation equals one-shot generation") {
    for (int trial = 0; trial < 50; ++trial) {
        const KeyMaterial key = validate_key(CipherId::Rc4, random_bytes(32));
        auto whole = Rc4State::init(key);
        Bytes expect(257);
        whole.keystream(expect);

        auto split = Rc4State::init(key);
        Bytes got(expect.size());
        std::size_t off = 0;
        while (off < got.size()) {
            const std::size_t n =
                std::min<std::size_t>(rng() % 64, got.size() - off);
            split.keystream(std::span<std::uint8_t>(got).subspan(off, n));
            off += n;
        }
        CHECK(got == expect);
    }
}

TEST_CASE("rc4 zero-length request leaves the state unchanged") {
    auto st = Rc4State::init(validate_key(CipherId::Rc4, random_bytes(32)));
    const auto before_s = st.sbox();
    const auto bi = st.i(), bj = st.j();
    st.keystream({});
    CHECK(st.sbox() == before_s);
    CHECK(st.i() == bi);
    CHECK(st.j() == bj);
}

TEST_CASE("rc4 S stays a permutation after 10^4 keystream bytes") {
    auto st = Rc4State::init(validate_key(CipherId::Rc4, random_bytes(32)));
    Bytes sink(10000);
    st.keystream(sink);
    CHECK(is_permutation_0_255(st.sbox()));
}

TEST_CASE("chacha20 quarter round preserves all-zeros") {
    std::uint32_t a = 0, b = 0, c = 0, d = 0;
    chacha20_quarter_round(a, b, c, d);
    CHECK(a == 0);
    CHECK(b == 0);
    CHECK(c == 0);
    CHECK(d == 0);
}

TEST_CASE("chacha20 quarter round matches the published vector") {
    std::uint32_t a = 0x11111111, b = 0x01020304, c = 0x9b8d6f43, d = 0x01234567;
    chacha20_quarter_round(a, b, c, d);
    CHECK(a == 0xea2a92f4);
    CHECK(b == 0xcb1cf8ce);
    CHECK(c == 0x4581472e);
    CHECK(d == 0x5881c4bb);
}

TEST_CASE("chacha20 quarter round is bijective") {
    for (int i = 0; i < 1000; ++i) {
        const std::uint32_t a0 = std::uint32_t(rng()), b0 = std::uint32_t(rng());
        const std::uint32_t c0 = std::uint32_t(rng()), d0 = std::uint32_t(rng());
        std::uint32_t a = a0, b = b0, c = c0, d = d0;
        chacha20_quarter_round(a, b, c, d);
        chacha20_inverse_quarter_round(a, b, c, d);
        REQUIRE(a == a0);
        REQUIRE(b == b0);
        REQUIRE(c == c0);
        REQUIRE(d == d0);
    }
}

TEST_CASE("chacha20 block is a pure function of the state") {
    const auto key = validate_key(CipherId::ChaCha20, random_bytes(32));
    const Bytes nonce = random_bytes(12);
    const ChaChaState st = ChaChaState::init(key, nonce, 7);
    std::uint8_t b1[64], b2[64];
    chacha20_block(st, b1);
    chacha20_block(st, b2);
    CHECK(std::equal(b1, b1 + 64, b2));
}

TEST_CASE("consecutive counters flip roughly half the output bits") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto key = validate_key(CipherId::ChaCha20, random_bytes(32));
        const Bytes nonce = random_bytes(12);
        const std::uint32_t counter = std::uint32_t(rng());
        ChaChaState a = ChaChaState::init(key, nonce, counter);
        ChaChaState b = ChaChaState::init(key, nonce, counter + 1);
        std::uint8_t ba[64], bb[64];
        chacha20_block(a, ba);
        chacha20_block(b, bb);
        int bits = 0;
        for (int i = 0; i < 64; ++i) bits += std::popcount(std::uint8_t(ba[i] ^ bb[i]));
        REQUIRE(bits >= 200);
    }
}

TEST_CASE("distinct counters give distinct blocks") {
    const auto key = validate_key(CipherId::ChaCha20, random_bytes(32));
    const Bytes nonce = random_bytes(12);
    std::set<Bytes> blocks;
    for (std::uint32_t c = 0; c < 1000; ++c) {
        ChaChaState st = ChaChaState::init(key, nonce, c);
        Bytes blk(64);
        chacha20_block(st, blk.data());
        blocks.insert(blk);
    }
    CHECK(blocks.size() == 1000);
}

TEST_CASE("stream_xor is an involution for both ciphers") {
    for (CipherId id : {CipherId::Rc4, CipherId::ChaCha20}) {
        INFO(cipher_name(id));
        const Bytes nonce = random_bytes(12);
        std::optional<std::span<const std::uint8_t>> n;
        if (id == CipherId::ChaCha20) n = std::span<const std::uint8_t>(nonce);
        for (int i = 0; i < 1000; ++i) {
            const auto key = validate_key(id, random_bytes(32));
            const Bytes data = random_bytes(rng() % 4097);
            const Bytes once = stream_xor(id, key, n, data);
            CHECK(once.size() == data.size());
            REQUIRE(stream_xor(id, key, n, once) == data);
        }
    }
}

TEST_CASE("identical keystreams cancel: E(p1) xor E(p2) = p1 xor p2") {
    const auto key = validate_key(CipherId::Rc4, random_bytes(32));
    const Bytes p1 = random_bytes(512), p2 = random_bytes(512);
    const Bytes c1 = stream_xor(CipherId::Rc4, key, std::nullopt, p1);
    const Bytes c2 = stream_xor(CipherId::Rc4, key, std::nullopt, p2);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        REQUIRE(std::uint8_t(c1[i] ^ c2[i]) == std::uint8_t(p1[i] ^ p2[i]));
    }
}

TEST_CASE("nonce rules are enforced") {
    const auto rc4 = validate_key(CipherId::Rc4, random_bytes(32));
    const auto cha = validate_key(CipherId::ChaCha20, random_bytes(32));
    const Bytes data = random_bytes(64);
    const Bytes n12 = random_bytes(12), n8 = random_bytes(8);
    CHECK_THROWS_AS(
        stream_xor(CipherId::Rc4, rc4, std::span<const std::uint8_t>(n12), data),
        NonceError);
    CHECK_THROWS_AS(stream_xor(CipherId::ChaCha20, cha, std::nullopt, data), NonceError);
    CHECK_THROWS_AS(
        stream_xor(CipherId::ChaCha20, cha, std::span<const std::uint8_t>(n8), data),
        NonceError);
    CHECK_THROWS_AS(stream_xor(CipherId::Aes256,
                               validate_key(CipherId::Aes256, random_bytes(32)),
                               std::nullopt, data),
                    WrongFamilyError);
}

TEST_CASE("length is preserved across 0..4096") {
    const auto key = validate_key(CipherId::ChaCha20, random_bytes(32));
    const Bytes nonce = random_bytes(12);
    for (std::size_t len : {std::size_t(0), std::size_t(1), std::size_t(63),
                            std::size_t(64), std::size_t(65), std::size_t(4096)}) {
        const Bytes data = random_bytes(len);
        CHECK(stream_xor(CipherId::ChaCha20, key, std::span<const std::uint8_t>(nonce),
                         data)
                  .size() == len);
    }
}
