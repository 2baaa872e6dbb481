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

/// Measurement harness: deterministic workloads, timed passes over the
/// cipher x mode x size grid, and process peak-RSS sampling.
///
/// The timed region covers cipher+mode processing of an in-memory buffer
/// only. Key scheduling, workload generation and result verification stay
/// outside it. The measurement loop is strictly sequential; never run two
/// cases concurrently in one process.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

#include "cipherbench/block_cipher.hpp"
#include "cipherbench/core.hpp"
#include "cipherbench/modes.hpp"
#include "cipherbench/stream.hpp"

namespace cipherbench {

enum class Direction { EncryptOnly, EncryptDecrypt };

class ConfigError : public Error {
  public:
    using Error::Error;
};

struct BenchConfig {
    std::vector<CipherId> ciphers{kAllCiphers.begin(), kAllCiphers.end()};
    std::vector<ModeId> modes{ModeId::Ecb, ModeId::Cbc, ModeId::Stream};
    std::vector<int> sizes_mb{1, 2, 4, 8, 16, 32, 64, 128};
    int repeats = 5;
    std::uint64_t seed = 0xC1B3'BE7Cu;
    Direction direction = Direction::EncryptOnly;
    bool include_io = false;

    void validate() const {
        if (ciphers.empty()) throw ConfigError("no ciphers selected");
        if (modes.empty()) throw ConfigError("no modes selected");
        if (sizes_mb.empty()) throw ConfigError("no sizes selected");
        if (repeats < 1) throw ConfigError("repeats must be >= 1");
        for (std::size_t i = 0; i < sizes_mb.size(); ++i) {
            if (sizes_mb[i] <= 0) throw ConfigError("sizes must be positive");
            if (i > 0 && sizes_mb[i] <= sizes_mb[i - 1]) {
                throw ConfigError("sizes must be strictly increasing");
            }
        }
    }
};

/// Name of the workload generator, recorded in bench output metadata.
inline constexpr const char* kWorkloadGenerator = "mt19937_64";

/// Seed override honored by default_config(), for CI reproducibility.
inline constexpr const char* kSeedEnvVar = "CIPHERBENCH_SEED";

inline BenchConfig default_config() {
    BenchConfig cfg;
    if (const char* env = std::getenv(kSeedEnvVar)) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') cfg.seed = v;
    }
    return cfg;
}

struct Workload {
    std::size_t size_bytes = 0;
    std::uint64_t seed = 0;
    Bytes data;
};

/// Deterministic pseudorandom bytes; a pure function of (size, seed).
inline Workload generate_workload(std::size_t size_bytes, std::uint64_t seed) {
    Workload w{size_bytes, seed, Bytes(size_bytes)};
    std::mt19937_64 rng(seed);
    std::size_t off = 0;
    while (off + 8 <= size_bytes) {
        const std::uint64_t v = rng();
        for (int i = 0; i < 8; ++i) w.data[off + i] = std::uint8_t(v >> (8 * i));
        off += 8;
    }
    if (off < size_bytes) {
        std::uint64_t v = rng();
        for (; off < size_bytes; ++off) {
            w.data[off] = std::uint8_t(v);
            v >>= 8;
        }
    }
    return w;
}

inline std::uint64_t fnv1a64(std::span<const std::uint8_t> data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t b : data) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

struct Sample {
    int run_index = 0;
    double elapsed_s = 0.0;
    std::optional<std::uint64_t> peak_rss_bytes;
};

struct BenchResult {
    CipherId cipher;
    ModeId mode;
    int size_mb = 0;
    std::vector<Sample> samples;
    double median_s = 0.0;
    double mean_s = 0.0;
    double stddev_s = 0.0;
    double throughput_mb_s = 0.0;
};

inline double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

inline double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / double(v.size());
}

inline double stddev_of(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean_of(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / double(v.size() - 1));
}

/// Recompute the derived statistics from the samples.
inline void finalize_result(BenchResult& r) {
    std::vector<double> t;
    t.reserve(r.samples.size());
    for (const auto& s : r.samples) t.push_back(s.elapsed_s);
    r.median_s = median_of(t);
    r.mean_s = mean_of(t);
    r.stddev_s = stddev_of(t);
    r.throughput_mb_s = double(r.size_mb) / r.median_s;
}

/// Best-effort process peak RSS; absent where the platform offers none.
inline std::optional<std::uint64_t> sample_peak_memory() {
#if defined(__unix__) || defined(__APPLE__)
    struct rusage ru{};
    if (getrusage(RUSAGE_SELF, &ru) != 0) return std::nullopt;
#if defined(__APPLE__)
    return std::uint64_t(ru.ru_maxrss);  // bytes
#else
    return std::uint64_t(ru.ru_maxrss) * 1024;  // KiB
#endif
#else
    return std::nullopt;
#endif
}

namespace detail::bench {

/// One full pass over the workload with the given cipher/mode, writing
/// into `out`. This is the timed unit; `out`'s capacity is reused across
/// passes so the timer sees cipher work, not allocator work.
inline void process_once(CipherId cipher, ModeId mode, const BlockCipherInstance* inst,
                         const KeyMaterial& key, std::span<const std::uint8_t> data,
                         Bytes& out) {
    static const Bytes zero_iv(16, 0);  // block sizes are 8 or 16
    switch (mode) {
        case ModeId::Ecb:
            ecb_encrypt_into(*inst, data, out);
            break;
        case ModeId::Cbc:
            cbc_encrypt_into(
                *inst, std::span<const std::uint8_t>(zero_iv).first(inst->block_bytes()),
                data, out);
            break;
        case ModeId::Stream: {
            if (cipher == CipherId::Rc4) {
                Rc4State st = Rc4State::init(key);
                out.resize(data.size());
                st.xor_into(data, out);
            } else {
                static const Bytes zero_nonce(kChaChaNonceBytes, 0);
                chacha20_xor_into(key, zero_nonce, 0, data, out);
            }
            break;
        }
    }
}

inline void verify_roundtrip(CipherId cipher, ModeId mode, const BlockCipherInstance* inst,
                             const KeyMaterial& key, std::span<const std::uint8_t> data,
                             const Bytes& out) {
    Bytes back;
    switch (mode) {
        case ModeId::Ecb:
            back = ecb_decrypt(*inst, out);
            break;
        case ModeId::Cbc: {
            const Bytes iv(inst->block_bytes(), 0);
            back = cbc_decrypt(*inst, iv, out);
            break;
        }
        case ModeId::Stream: {
            std::optional<std::span<const std::uint8_t>> nonce;
            static const Bytes zero_nonce(kChaChaNonceBytes, 0);
            if (cipher == CipherId::ChaCha20) nonce = std::span<const std::uint8_t>(zero_nonce);
            back = stream_xor(cipher, key, nonce, out);
            break;
        }
    }
    if (back.size() != data.size() ||
        !std::equal(back.begin(), back.end(), data.begin())) {
        throw Error("benchmark verification failed: decrypt(encrypt(x)) != x");
    }
}

}  // namespace detail::bench

/// Runs `repeats` timed passes (after one untimed warm-up) over the
/// in-memory workload. The key schedule happens once, outside the timer.
/// With `io_file` set, each timed pass first reads the workload from that
/// file, so disk I/O is included in the measurement.
inline BenchResult run_case(CipherId cipher, ModeId mode, const KeyMaterial& key,
                            const Workload& workload, int repeats,
                            Direction direction = Direction::EncryptOnly,
                            const std::string* io_file = nullptr) {
    if (!mode_compatible(cipher, mode)) {
        throw ConfigError(std::string(cipher_name(cipher)) + " cannot run in mode " +
                          std::string(mode_name(mode)));
    }
    if (repeats < 1) throw ConfigError("repeats must be >= 1");

    std::optional<BlockCipherInstance> inst;
    if (params_for(cipher).family == Family::Block) {
        inst.emplace(BlockCipherInstance::schedule(key));
    }
    const BlockCipherInstance* ip = inst ? &*inst : nullptr;

    Bytes io_buf;
    auto read_io = [&]() {
        std::ifstream in(*io_file, std::ios::binary);
        io_buf.resize(workload.size_bytes);
        in.read(reinterpret_cast<char*>(io_buf.data()),
                std::streamsize(io_buf.size()));
        if (!in) throw Error("failed to read workload file " + *io_file);
    };

    // size_mb floors to 0 for sub-MB workloads; suite sizes are whole MB
    BenchResult result{cipher, mode, int(workload.size_bytes / (1024 * 1024)), {}, 0, 0, 0, 0};
    Bytes out;
    // warm-up pass, untimed
    detail::bench::process_once(cipher, mode, ip, key, workload.data, out);

    for (int run = 0; run < repeats; ++run) {
        const auto t0 = std::chrono::steady_clock::now();
        if (io_file) {
            read_io();
            detail::bench::process_once(cipher, mode, ip, key, io_buf, out);
        } else {
            detail::bench::process_once(cipher, mode, ip, key, workload.data, out);
        }
        const auto t1 = std::chrono::steady_clock::now();
        Sample s;
        s.run_index = run;
        s.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
        s.peak_rss_bytes = sample_peak_memory();
        result.samples.push_back(s);
    }
    if (direction == Direction::EncryptDecrypt) {
        detail::bench::verify_roundtrip(cipher, mode, ip, key, workload.data, out);
    }
    finalize_result(result);
    return result;
}

/// The compatible (cipher, mode) pairs of a config, in config order.
inline std::vector<std::pair<CipherId, ModeId>> suite_cases(const BenchConfig& cfg) {
    std::vector<std::pair<CipherId, ModeId>> cases;
    for (CipherId c : cfg.ciphers) {
        for (ModeId m : cfg.modes) {
            if (mode_compatible(c, m)) cases.emplace_back(c, m);
        }
    }
    return cases;
}

/// Deterministic per-case key, derived from the suite seed.
inline KeyMaterial derive_case_key(const BenchConfig& cfg, CipherId cipher, ModeId mode,
                                   int size_mb) {
    std::mt19937_64 rng(cfg.seed ^ (std::uint64_t(static_cast<int>(cipher)) << 32) ^
                        (std::uint64_t(static_cast<int>(mode)) << 24) ^
                        std::uint64_t(size_mb));
    Bytes key(params_for(cipher).key_input_bytes);
    for (auto& b : key) b = std::uint8_t(rng());
    return validate_key(cipher, key);
}

/// Runs the whole grid, sharing one workload per size across ciphers.
/// Strictly sequential. The optional callback sees each finished result.
inline std::vector<BenchResult> run_suite(
    const BenchConfig& cfg,
    const std::function<void(const BenchResult&)>& on_result = {}) {
    cfg.validate();
    std::vector<BenchResult> results;
    const auto cases = suite_cases(cfg);
    for (int size_mb : cfg.sizes_mb) {
        const Workload w =
            generate_workload(std::size_t(size_mb) * 1024 * 1024, cfg.seed);
        std::string io_path;
        if (cfg.include_io) {
            io_path = "cipherbench_workload_" + std::to_string(size_mb) + "mb.tmp";
            std::ofstream f(io_path, std::ios::binary | std::ios::trunc);
            f.write(reinterpret_cast<const char*>(w.data.data()),
                    std::streamsize(w.data.size()));
        }
        for (const auto& [cipher, mode] : cases) {
            const KeyMaterial key = derive_case_key(cfg, cipher, mode, size_mb);
            results.push_back(run_case(cipher, mode, key, w, cfg.repeats, cfg.direction,
                                       cfg.include_io ? &io_path : nullptr));
            if (on_result) on_result(results.back());
        }
        if (cfg.include_io) std::remove(io_path.c_str());
    }
    return results;
}

}  // namespace cipherbench
