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

// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Needs CIPHERBENCH_BIN (the CLI binary) and CIPHERBENCH_DATA (the
// bundled reference CSV directory) in the environment; CTest sets both.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cipherbench/cipherbench.hpp"
#include "reference_timings.hpp"

using namespace cipherbench;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::mt19937_64 rng(0xACCE'97ED'5EEDull);

Bytes random_bytes(std::size_t n) {
    Bytes out(n);
    for (auto& b : out) b = std::uint8_t(rng());
    return out;
}

KeyMaterial random_key(CipherId id) {
    return validate_key(id, random_bytes(params_for(id).key_input_bytes));
}

struct CmdResult {
    int exit_code;
    std::string output;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CIPHERBENCH_BIN");
    if (!bin) return {-1, "CIPHERBENCH_BIN not set"};
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// --- criterion 1: known-answer suite ------------------------------------

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    const auto results = kat::run_all();
    for (CipherId id : kAllCiphers) {
        int n = 0;
        for (const auto& r : results) n += r.cipher == id;
        if (n < 2) {
            ok = false;
            detail = std::string(cipher_name(id)) + " has fewer than 2 vectors";
        }
    }
    for (const auto& r : results) {
        if (!r.passed) {
            ok = false;
            detail = std::string(cipher_name(r.cipher)) + "/" + r.name + ": " + r.detail;
            break;
        }
    }
    const CmdResult cli = run_cli("vectors");
    if (cli.exit_code != 0) {
        ok = false;
        detail = "cmd_vectors exited " + std::to_string(cli.exit_code);
    }
    const double secs = seconds_since(t0);
    if (secs >= 5.0) {
        ok = false;
        detail = "took " + std::to_string(secs) + " s (budget 5 s)";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f s", secs);
    report(1, "known-answer suite, all 8 ciphers, >=2 published vectors each", ok,
           ok ? std::string(buf) : detail);
}

// --- criterion 2: 1000-case roundtrips + structural stream checks -------

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    for (CipherId id : kAllCiphers) {
        const KeyMaterial key = random_key(id);
        const bool stream = params_for(id).family == Family::Stream;
        const std::vector<ModeId> modes =
            stream ? std::vector<ModeId>{ModeId::Stream}
                   : std::vector<ModeId>{ModeId::Ecb, ModeId::Cbc};
        for (ModeId mode : modes) {
            std::optional<BlockCipherInstance> inst;
            Bytes iv;
            if (!stream) {
                inst.emplace(BlockCipherInstance::schedule(key));
                iv = random_bytes(inst->block_bytes());
            }
            const Bytes nonce = random_bytes(kChaChaNonceBytes);
            for (int i = 0; i < 1000 && ok; ++i) {
                const Bytes msg = random_bytes(rng() % 4097);
                Bytes back;
                if (mode == ModeId::Ecb) {
                    back = ecb_decrypt(*inst, ecb_encrypt(*inst, msg));
                } else if (mode == ModeId::Cbc) {
                    back = cbc_decrypt(*inst, iv, cbc_encrypt(*inst, iv, msg));
                } else {
                    std::optional<std::span<const std::uint8_t>> n;
                    if (id == CipherId::ChaCha20) n = std::span<const std::uint8_t>(nonce);
                    back = stream_xor(id, key, n, stream_xor(id, key, n, msg));
                }
                if (back != msg) {
                    ok = false;
                    detail = std::string(cipher_name(id)) + "/" +
                             std::string(mode_name(mode)) + " roundtrip failed at case " +
                             std::to_string(i);
                }
            }
        }
    }

    // RC4 S-array stays a permutation after 10^4 keystream bytes
    {
        auto st = Rc4State::init(random_key(CipherId::Rc4));
        Bytes sink(10000);
        st.keystream(sink);
        std::array<bool, 256> seen{};
        for (std::uint8_t v : st.sbox()) seen[v] = true;
        for (bool b : seen) {
            if (!b) {
                ok = false;
                detail = "rc4 S-array lost the permutation property";
            }
        }
    }

    // quarter round maps all-zeros to all-zeros
    {
        std::uint32_t a = 0, b = 0, c = 0, d = 0;
        chacha20_quarter_round(a, b, c, d);
        if (a || b || c || d) {
            ok = false;
            detail = "quarter round moved the zero state";
        }
    }

    const double secs = seconds_since(t0);
    if (secs >= 60.0) {
        ok = false;
        detail = "took " + std::to_string(secs) + " s (budget 60 s)";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f s", secs);
    report(2, "1000-case roundtrips x 14 cipher/mode cases + stream invariants", ok,
           ok ? std::string(buf) : detail);
}

// --- criterion 3: structural identities ---------------------------------

void criterion_3() {
    bool ok = true;
    std::string detail;

    for (int i = 0; i < 256 && ok; ++i) {
        const Bytes k = random_bytes(8), p = random_bytes(8);
        Bytes nk = k, np = p;
        for (auto& b : nk) b = std::uint8_t(~b);
        for (auto& b : np) b = std::uint8_t(~b);
        std::uint8_t c1[8], c2[8];
        Des{std::span<const std::uint8_t>(k)}.encrypt_block(p.data(), c1);
        Des{std::span<const std::uint8_t>(nk)}.encrypt_block(np.data(), c2);
        for (int j = 0; j < 8; ++j) {
            if (std::uint8_t(~c1[j]) != c2[j]) {
                ok = false;
                detail = "DES complementation failed";
            }
        }
    }

    for (int i = 0; i < 256 && ok; ++i) {
        const Bytes k = random_bytes(8), p = random_bytes(8);
        Bytes k3;
        for (int r = 0; r < 3; ++r) k3.insert(k3.end(), k.begin(), k.end());
        std::uint8_t c1[8], c2[8];
        Des{std::span<const std::uint8_t>(k)}.encrypt_block(p.data(), c1);
        TripleDes{std::span<const std::uint8_t>(k3)}.encrypt_block(p.data(), c2);
        if (!std::equal(c1, c1 + 8, c2)) {
            ok = false;
            detail = "3DES with k||k||k diverged from DES";
        }
    }

    for (CipherId id : {CipherId::Aes256, CipherId::Des, CipherId::TripleDes,
                        CipherId::Blowfish, CipherId::Twofish, CipherId::Rc2}) {
        const auto inst = BlockCipherInstance::schedule(random_key(id));
        const std::size_t bs = inst.block_bytes();
        const Bytes pt = random_bytes(bs);
        const Bytes ecb = ecb_encrypt(inst, pt);
        const Bytes cbc = cbc_encrypt(inst, Bytes(bs, 0), pt);
        if (!std::equal(ecb.begin(), ecb.begin() + std::ptrdiff_t(bs), cbc.begin())) {
            ok = false;
            detail = std::string(cipher_name(id)) + ": CBC zero-IV first block != ECB";
        }
    }

    report(3, "DES complementation, 3DES degeneration, CBC zero-IV = ECB first block",
           ok, detail);
}

// --- criterion 4: structural performance ratio --------------------------

void criterion_4() {
    const Workload w = generate_workload(8 * 1024 * 1024, 0xBEEF);
    const BenchResult des =
        run_case(CipherId::Des, ModeId::Ecb, random_key(CipherId::Des), w, 5);
    const BenchResult tdes =
        run_case(CipherId::TripleDes, ModeId::Ecb, random_key(CipherId::TripleDes), w, 5);
    const double ratio = tdes.throughput_mb_s / des.throughput_mb_s;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "3DES/DES throughput ratio %.3f (want 0.20..0.50)",
                  ratio);
    report(4, "3DES throughput is a third of DES, structurally", ratio > 0.20 && ratio < 0.50,
           buf);
}

// --- criterion 5: linear scaling ----------------------------------------

void criterion_5() {
    // The scaling ratios are structural, but a shared host can stall a
    // whole 5-pass case for tens of milliseconds and push one median off
    // by 30-40%. A sweep whose ratios are genuinely nonlinear fails every
    // attempt, so retry the full sweep a bounded number of times and say
    // so; transient neighbor noise is not what this criterion measures.
    constexpr int kMaxAttempts = 3;
    const auto t0 = std::chrono::steady_clock::now();
    BenchConfig cfg;
    cfg.sizes_mb = {1, 2, 4, 8};
    cfg.repeats = 5;
    cfg.seed = 0x5CA1E;

    bool ok = false;
    std::string detail;
    int attempt = 0;
    while (attempt < kMaxAttempts && !ok) {
        ++attempt;
        std::vector<BenchResult> results;
        try {
            results = run_suite(cfg);
        } catch (const std::exception& e) {
            report(5, "linear scaling sweep", false, e.what());
            return;
        }
        if (results.size() != 14u * 4u) {
            report(5, "linear scaling sweep", false,
                   "expected 56 results, got " + std::to_string(results.size()));
            return;
        }
        ok = true;
        for (const auto& [cipher, mode] : suite_cases(cfg)) {
            std::vector<double> medians;
            for (int size : cfg.sizes_mb) {
                for (const auto& r : results) {
                    if (r.cipher == cipher && r.mode == mode && r.size_mb == size) {
                        medians.push_back(r.median_s);
                    }
                }
            }
            for (std::size_t i = 1; i < medians.size(); ++i) {
                const double ratio = medians[i] / medians[i - 1];
                if (ratio < 1.5 || ratio > 2.8) {
                    ok = false;
                    char buf[160];
                    std::snprintf(buf, sizeof(buf),
                                  "%s/%s %d->%d MB ratio %.3f outside [1.5, 2.8]",
                                  std::string(cipher_name(cipher)).c_str(),
                                  std::string(mode_name(mode)).c_str(),
                                  cfg.sizes_mb[i - 1], cfg.sizes_mb[i], ratio);
                    detail = buf;
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 600.0) {
        ok = false;
        detail = "sweep took " + std::to_string(secs) + " s (budget 600 s)";
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.1f s, attempt %d/%d", secs, attempt, kMaxAttempts);
    report(5, "doubling the size scales median time by [1.5, 2.8], all 14 cases", ok,
           ok ? std::string(buf) : detail + " (all " + std::to_string(kMaxAttempts) +
                                       " attempts)");
}

// --- criterion 6: reference-table pipeline reproduction ------------------

// Pulls the 6-decimal cells back out of a rendered markdown table.
std::vector<std::vector<std::string>> parse_markdown_cells(const std::string& md) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream ss(md);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.rfind("| ", 0) != 0 || line.find("size_mb") != std::string::npos ||
            line.find("---") != std::string::npos) {
            continue;
        }
        std::vector<std::string> cells;
        std::string cur;
        for (char c : line) {
            if (c == '|') {
                if (!cur.empty()) cells.push_back(cur);
                cur.clear();
            } else if (c != ' ') {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) cells.push_back(cur);
        rows.push_back(cells);
    }
    return rows;
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    const char* data_dir = std::getenv("CIPHERBENCH_DATA");
    if (!data_dir) {
        report(6, "reference pipeline", false, "CIPHERBENCH_DATA not set");
        return;
    }

    for (const auto& t : refdata::reference_tables()) {
        const CmdResult res =
            run_cli("report --in " + std::string(data_dir) + "/" + t.name +
                    ".csv --format md --mode " + std::string(mode_name(t.mode)));
        if (res.exit_code != 0) {
            ok = false;
            detail = t.name + ": report exited " + std::to_string(res.exit_code);
            break;
        }
        const auto rows = parse_markdown_cells(res.output);
        if (rows.size() != t.sizes_mb.size()) {
            ok = false;
            detail = t.name + ": expected " + std::to_string(t.sizes_mb.size()) +
                     " rows, got " + std::to_string(rows.size());
            break;
        }
        for (std::size_t r = 0; r < rows.size() && ok; ++r) {
            if (rows[r].size() != t.ciphers.size() + 1) {
                ok = false;
                detail = t.name + ": row " + std::to_string(r) + " has " +
                         std::to_string(rows[r].size()) + " cells";
                break;
            }
            if (rows[r][0] != std::to_string(t.sizes_mb[r])) {
                ok = false;
                detail = t.name + ": size label mismatch in row " + std::to_string(r);
                break;
            }
            for (std::size_t c = 0; c < t.ciphers.size(); ++c) {
                const std::string want = format_fixed6(t.cells[r][c]);
                if (rows[r][c + 1] != want) {
                    ok = false;
                    detail = t.name + ": cell " + std::to_string(t.sizes_mb[r]) + "/" +
                             std::string(cipher_name(t.ciphers[c])) + " rendered " +
                             rows[r][c + 1] + ", transcription " + want;
                    break;
                }
            }
        }
        if (!ok) break;
    }

    // Qualitative conclusions. Block tables: Twofish fastest, 3DES slowest.
    // Stream tables: ChaCha20 above RC4. Combined per device: ChaCha20
    // fastest overall, 3DES slowest. BeagleBone 1 MB rows excluded.
    if (ok) {
        for (const auto& t : refdata::reference_tables()) {
            const auto results = refdata::to_results_for_comparison(t);
            const ComparisonSummary s = comparison_summary(results);
            if (t.ciphers.size() == 6) {
                if (s.ranking.front() != CipherId::Twofish ||
                    s.ranking.back() != CipherId::TripleDes) {
                    ok = false;
                    detail = t.name + ": block ranking did not put Twofish first / 3DES last";
                }
            } else {
                if (s.ranking.front() != CipherId::ChaCha20) {
                    ok = false;
                    detail = t.name + ": ChaCha20 not first among stream ciphers";
                }
            }
        }
        for (const std::string device : {"pi3", "bbb"}) {
            std::vector<BenchResult> combined;
            for (const auto& t : refdata::reference_tables()) {
                if (t.name.rfind(device, 0) != 0) continue;
                const auto part = refdata::to_results_for_comparison(t);
                combined.insert(combined.end(), part.begin(), part.end());
            }
            const ComparisonSummary s = comparison_summary(combined);
            if (s.ranking.front() != CipherId::ChaCha20) {
                ok = false;
                detail = device + ": ChaCha20 is not the overall fastest";
            }
            if (s.ranking.back() != CipherId::TripleDes) {
                ok = false;
                detail = device + ": 3DES is not the overall slowest";
            }
        }
    }

    report(6, "reference tables reproduce bit-exact at 6 decimals + conclusions hold",
           ok, detail);
}

// --- criterion 7: CSV roundtrip -----------------------------------------

void criterion_7() {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::vector<BenchResult> results;
        std::set<std::tuple<int, int, int>> used;
        const int n_results = 1 + int(rng() % 10);
        while (int(results.size()) < n_results) {
            const CipherId cipher = kAllCiphers[rng() % 8];
            const ModeId mode = params_for(cipher).family == Family::Stream
                                    ? ModeId::Stream
                                    : (rng() % 2 ? ModeId::Cbc : ModeId::Ecb);
            const int size = 1 << (rng() % 8);
            if (!used.insert({int(cipher), int(mode), size}).second) continue;
            BenchResult r{cipher, mode, size, {}, 0, 0, 0, 0};
            const int n_samples = 1 + int(rng() % 7);
            for (int s = 0; s < n_samples; ++s) {
                Sample smp;
                smp.run_index = s;
                smp.elapsed_s = 1e-3 + double(rng() % 100000000) / 773000.0;
                if (rng() % 2) smp.peak_rss_bytes = rng() % (1ull << 33);
                r.samples.push_back(smp);
            }
            finalize_result(r);
            results.push_back(std::move(r));
        }
        const std::string once = results_to_csv(results);
        try {
            const std::string twice = results_to_csv(parse_csv(once));
            if (once != twice) {
                ok = false;
                detail = "trial " + std::to_string(trial) + ": bytes differ";
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = "trial " + std::to_string(trial) + ": " + e.what();
        }
    }
    report(7, "emit -> parse -> emit is byte-identical, 100 randomized trials", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (g_failures == 0) {
        std::printf("all 7 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
