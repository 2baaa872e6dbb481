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

// cipherbench CLI: file encryption/decryption, benchmark runs, report
// generation and known-answer verification.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cipherbench/cipherbench.hpp"

namespace fs = std::filesystem;
using namespace cipherbench;

namespace {

Bytes read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string s = ss.str();
    return Bytes(s.begin(), s.end());
}

// Write via a temp file and rename, so failures leave nothing behind.
void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> data) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw Error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move output into place: " + ec.message());
    }
}

Bytes random_bytes(std::size_t n) {
    std::random_device rd;
    Bytes out(n);
    for (auto& b : out) b = std::uint8_t(rd());
    return out;
}

CipherId parse_cipher(const std::string& name) {
    const auto id = cipher_from_name(name);
    if (!id) throw Error("unknown cipher \"" + name + "\"");
    return *id;
}

ModeId parse_mode(const std::string& name) {
    const auto m = mode_from_name(name);
    if (!m) throw Error("unknown mode \"" + name + "\" (ecb, cbc or stream)");
    return *m;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_encrypt(const std::string& cipher_name_arg, std::string mode_arg,
                const std::string& key_path, const std::string& in_path,
                const std::string& out_path) {
    const CipherId cipher = parse_cipher(cipher_name_arg);
    if (mode_arg.empty()) {
        mode_arg = params_for(cipher).family == Family::Stream ? "stream" : "cbc";
    }
    const ModeId mode = parse_mode(mode_arg);
    if (!mode_compatible(cipher, mode)) {
        throw Error("mode incompatible with " +
                    std::string(params_for(cipher).family == Family::Stream
                                    ? "stream cipher "
                                    : "block cipher ") +
                    cipher_name_arg);
    }
    if (mode == ModeId::Ecb) {
        std::cerr << "warning: ECB mode encrypts equal blocks to equal ciphertext "
                     "and leaks plaintext structure\n";
    }
    const KeyMaterial key = validate_key(cipher, read_file(key_path));
    const Bytes plaintext = read_file(in_path);
    const Bytes iv = random_bytes(ContainerHeader::expected_iv_len(cipher, mode));
    const Bytes container = encrypt_container(key, mode, iv, plaintext);
    write_file_atomic(out_path, container);
    std::cout << "wrote " << out_path << " (" << container.size() << " bytes, "
              << cipher_name(cipher) << "/" << mode_name(mode) << ")\n";
    return 0;
}

int cmd_decrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path) {
    const Bytes container = read_file(in_path);
    std::size_t consumed = 0;
    const ContainerHeader header = ContainerHeader::decode(container, consumed);
    const KeyMaterial key = validate_key(header.cipher, read_file(key_path));
    const Bytes plaintext = decrypt_container(key, container);
    write_file_atomic(out_path, plaintext);
    std::cout << "wrote " << out_path << " (" << plaintext.size() << " bytes, "
              << cipher_name(header.cipher) << "/" << mode_name(header.mode) << ")\n";
    return 0;
}

int cmd_bench(const std::string& ciphers_arg, const std::string& modes_arg,
              const std::string& sizes_arg, int repeats, std::uint64_t seed,
              bool seed_given, const std::string& out_path, bool verify,
              bool include_io) {
    BenchConfig cfg = default_config();
    if (seed_given) cfg.seed = seed;
    cfg.repeats = repeats;
    cfg.direction = verify ? Direction::EncryptDecrypt : Direction::EncryptOnly;
    cfg.include_io = include_io;
    if (!ciphers_arg.empty()) {
        cfg.ciphers.clear();
        for (const auto& name : split_commas(ciphers_arg)) {
            cfg.ciphers.push_back(parse_cipher(name));
        }
    }
    if (!modes_arg.empty()) {
        cfg.modes.clear();
        for (const auto& name : split_commas(modes_arg)) {
            cfg.modes.push_back(parse_mode(name));
        }
    }
    if (!sizes_arg.empty()) {
        cfg.sizes_mb.clear();
        for (const auto& s : split_commas(sizes_arg)) {
            char* end = nullptr;
            const long v = std::strtol(s.c_str(), &end, 10);
            if (end == s.c_str() || *end != '\0') {
                throw Error("bad size \"" + s + "\" (whole MB expected)");
            }
            cfg.sizes_mb.push_back(int(v));
        }
    }
    cfg.validate();

    std::cout << "workload generator: " << kWorkloadGenerator << " (seed " << cfg.seed
              << ")\n";
    for (int size : cfg.sizes_mb) {
        const Workload w = generate_workload(std::size_t(size) * 1024 * 1024, cfg.seed);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(w.data)));
        std::cout << "workload " << size << " MB fnv1a64=" << buf << "\n";
    }

    const auto results = run_suite(cfg, [](const BenchResult& r) {
        std::cout << "  " << cipher_name(r.cipher) << "/" << mode_name(r.mode) << "/"
                  << r.size_mb << "MB: median " << format_fixed6(r.median_s) << " s, "
                  << format_fixed6(r.throughput_mb_s) << " MB/s\n";
    });

    for (ModeId mode : {ModeId::Ecb, ModeId::Cbc, ModeId::Stream}) {
        bool has = false;
        for (const auto& r : results) has = has || r.mode == mode;
        if (has) std::cout << "\n" << render_table(results, mode, "md");
    }
    std::cout << "\n" << render_summary(comparison_summary(results));

    const std::string csv = results_to_csv(results);
    write_file_atomic(out_path, Bytes(csv.begin(), csv.end()));
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_report(const std::string& in_path, const std::string& format,
               const std::string& mode_arg) {
    const Bytes raw = read_file(in_path);
    const auto results = parse_csv(std::string_view(
        reinterpret_cast<const char*>(raw.data()), raw.size()));
    if (results.empty()) {
        std::cout << "(no data rows)\n";
        return 0;
    }
    std::vector<ModeId> modes;
    if (!mode_arg.empty()) {
        modes.push_back(parse_mode(mode_arg));
    } else {
        for (ModeId m : {ModeId::Ecb, ModeId::Cbc, ModeId::Stream}) {
            for (const auto& r : results) {
                if (r.mode == m) {
                    modes.push_back(m);
                    break;
                }
            }
        }
    }
    if (format == "md" || format == "markdown" || format == "csv") {
        for (ModeId m : modes) {
            std::cout << render_table(results, m, format == "csv" ? "csv" : "md") << "\n";
        }
        if (format != "csv") std::cout << render_summary(comparison_summary(results));
    } else if (format == "plot") {
        const bool label_mode = modes.size() > 1;
        for (ModeId m : modes) {
            auto series = plot_series(results, m);
            if (!label_mode) {
                std::cout << render_plot(series);
            } else {
                for (const auto& [cipher, pts] : series) {
                    std::cout << "# " << cipher_name(cipher) << " " << mode_name(m) << "\n";
                    for (const auto& [size, tp] : pts) {
                        std::cout << size << "\t" << format_fixed6(tp) << "\n";
                    }
                    std::cout << "\n";
                }
            }
        }
    } else {
        throw Error("unknown format \"" + format + "\" (md, csv or plot)");
    }
    return 0;
}

int cmd_vectors() {
    const bool ok = kat::run_and_report(std::cout);
    std::cout << (ok ? "all known-answer vectors passed\n"
                     : "known-answer FAILURES detected\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric cipher suite and benchmark harness"};
    app.require_subcommand(1);

    auto* enc = app.add_subcommand("encrypt", "encrypt a file into a container");
    std::string enc_cipher, enc_mode, enc_key, enc_in, enc_out;
    enc->add_option("--cipher", enc_cipher, "cipher name")->required();
    enc->add_option("--mode", enc_mode, "ecb, cbc or stream (default cbc/stream)");
    enc->add_option("--key", enc_key, "key file (raw bytes)")->required();
    enc->add_option("input", enc_in, "input file")->required();
    enc->add_option("output", enc_out, "output file")->required();

    auto* dec = app.add_subcommand("decrypt", "decrypt a container file");
    std::string dec_key, dec_in, dec_out;
    dec->add_option("--key", dec_key, "key file (raw bytes)")->required();
    dec->add_option("input", dec_in, "input container")->required();
    dec->add_option("output", dec_out, "output file")->required();

    auto* bench = app.add_subcommand("bench", "run the benchmark suite");
    std::string b_ciphers, b_modes, b_sizes, b_out = "results.csv";
    int b_repeats = 5;
    std::uint64_t b_seed = 0;
    bool b_verify = false, b_io = false;
    bench->add_option("--ciphers", b_ciphers, "comma-separated cipher list (default: all)");
    bench->add_option("--modes", b_modes, "comma-separated mode list (default: ecb,cbc,stream)");
    bench->add_option("--sizes", b_sizes, "comma-separated sizes in MB (default: 1..128)");
    bench->add_option("--repeats", b_repeats, "timed passes per case (default 5)");
    auto* seed_opt = bench->add_option("--seed", b_seed, "workload PRNG seed");
    bench->add_option("--out", b_out, "CSV output path (default results.csv)");
    bench->add_flag("--verify", b_verify, "decrypt once per case and verify");
    bench->add_flag("--include-io", b_io, "read the workload from disk inside the timed region");

    auto* rep = app.add_subcommand("report", "render tables/summary/plots from a results CSV");
    std::string r_in, r_format = "md", r_mode;
    rep->add_option("--in", r_in, "input CSV")->required();
    rep->add_option("--format", r_format, "md, csv or plot (default md)");
    rep->add_option("--mode", r_mode, "restrict to one mode");

    auto* vec = app.add_subcommand("vectors", "run the embedded known-answer vectors");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) return cmd_encrypt(enc_cipher, enc_mode, enc_key, enc_in, enc_out);
        if (*dec) return cmd_decrypt(dec_key, dec_in, dec_out);
        if (*bench) {
            return cmd_bench(b_ciphers, b_modes, b_sizes, b_repeats, b_seed,
                             seed_opt->count() > 0, b_out, b_verify, b_io);
        }
        if (*rep) return cmd_report(r_in, r_format, r_mode);
        if (*vec) return cmd_vectors();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
