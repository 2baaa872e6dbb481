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

#include <cstdlib>
#include <random>
#include <set>

#include "cipherbench/report.hpp"
#include "reference_timings.hpp"

using namespace cipherbench;

namespace {

std::mt19937_64 rng(0xCA5CADEu);

std::vector<BenchResult> random_results(int n_results, int n_samples) {
    std::vector<BenchResult> out;
    std::set<std::tuple<int, int, int>> used;
    while (int(out.size()) < n_results) {
        const auto cipher = kAllCiphers[rng() % 8];
        const ModeId mode = params_for(cipher).family == Family::Stream
                                ? ModeId::Stream
                                : (rng() % 2 ? ModeId::Cbc : ModeId::Ecb);
        const int size = 1 << (rng() % 8);
        if (!used.insert({int(cipher), int(mode), size}).second) continue;
        BenchResult r{cipher, mode, size, {}, 0, 0, 0, 0};
        for (int s = 0; s < n_samples; ++s) {
            Sample smp;
            smp.run_index = s;
            smp.elapsed_s = 0.05 + double(rng() % 1000000) / 61051.0;
            if (rng() % 3) smp.peak_rss_bytes = 1'000'000 + rng() % 1'000'000;
            r.samples.push_back(smp);
        }
        finalize_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

const refdata::ReferenceTable& table_named(const std::string& name) {
    for (const auto& t : refdata::reference_tables()) {
        if (t.name == name) return t;
    }
    throw std::runtime_error("missing table " + name);
}

}  // namespace

TEST_CASE("empty results produce only the header") {
    CHECK(results_to_csv({}) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("row count is results times samples") {
    const auto results = random_results(2, 5);
    const std::string csv = results_to_csv(results);
    const std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == 1 + 2 * 5);
}

TEST_CASE("emit -> parse -> emit is byte-identical") {
    for (int trial = 0; trial < 25; ++trial) {
        const auto results = random_results(1 + int(rng() % 8), 1 + int(rng() % 6));
        const std::string once = results_to_csv(results);
        const auto parsed = parse_csv(once);
        const std::string twice = results_to_csv(parsed);
        REQUIRE(once == twice);
    }
}

TEST_CASE("parse reports the offending line") {
    const std::string csv = std::string(kCsvHeader) +
                            "\naes,ecb,1,0,0.5,2.0,\n"
                            "aes,ecb,not_a_number,0,0.5,2.0,\n";
    try {
        parse_csv(csv);
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_csv("cipher,mode\n"), CsvError);
    CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\nrc5,ecb,1,0,0.5,2.0,\n"),
                    CsvError);
    CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\nrc4,cbc,1,0,0.5,2.0,\n"),
                    CsvError);
}

TEST_CASE("cited line numbers count blank lines too") {
    const std::string csv =
        std::string(kCsvHeader) + "\n\naes,ecb,1,0,0.5,2.0,\n\n\nbad row here\n";
    try {
        parse_csv(csv);
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.line == 6);  // the physical line of "bad row here"
    }
}

TEST_CASE("rendered reference table re-parses to the transcription") {
    const auto& t = table_named("pi3_ecb");
    const auto results = refdata::to_results(t);
    const ReportTable table = make_table(results, ModeId::Ecb);
    REQUIRE(table.sizes_mb == t.sizes_mb);
    REQUIRE(table.ciphers == t.ciphers);
    for (std::size_t r = 0; r < t.sizes_mb.size(); ++r) {
        for (std::size_t c = 0; c < t.ciphers.size(); ++c) {
            // 6-decimal cells: formatting then re-parsing is lossless
            const std::string cell = format_fixed6(table.cells[r][c]);
            CHECK(std::strtod(cell.c_str(), nullptr) == t.cells[r][c]);
        }
    }
    const std::string md = render_markdown(table);
    CHECK(md.find("| 1 | 0.312512 |") != std::string::npos);
    CHECK(md.find("94.899210") != std::string::npos);  // 3DES 128MB at 6 decimals
}

TEST_CASE("a single result renders a 1x1 table") {
    BenchResult r{CipherId::Des, ModeId::Ecb, 4, {{0, 1.25, std::nullopt}}, 0, 0, 0, 0};
    finalize_result(r);
    const ReportTable t = make_table(std::vector<BenchResult>{r}, ModeId::Ecb);
    REQUIRE(t.sizes_mb == std::vector<int>{4});
    REQUIRE(t.ciphers == std::vector<CipherId>{CipherId::Des});
    CHECK(t.cells[0][0] == 1.25);
}

TEST_CASE("a missing cell names the hole") {
    auto results = refdata::to_results(table_named("pi3_ecb"));
    std::erase_if(results, [](const BenchResult& r) {
        return r.cipher == CipherId::Twofish && r.size_mb == 64;
    });
    try {
        make_table(results, ModeId::Ecb);
        FAIL("expected IncompleteGridError");
    } catch (const IncompleteGridError& e) {
        CHECK(std::string(e.what()).find("twofish/64") != std::string::npos);
    }
}

TEST_CASE("summary of the 128MB reference row ranks DES above 3DES") {
    auto results = refdata::to_results(table_named("pi3_ecb"));
    std::erase_if(results, [](const BenchResult& r) { return r.size_mb != 128; });
    const ComparisonSummary s = comparison_summary(results);
    // throughput ratio equals the inverse elapsed ratio 94.89921/72.89622
    CHECK(s.ratio(CipherId::Des, CipherId::TripleDes) ==
          Catch::Approx(94.89921 / 72.89622).epsilon(1e-9));
    const auto pos = [&](CipherId id) {
        return std::find(s.ranking.begin(), s.ranking.end(), id) - s.ranking.begin();
    };
    CHECK(pos(CipherId::Des) < pos(CipherId::TripleDes));
}

TEST_CASE("summary of the full reference grid puts Twofish first") {
    const auto results = refdata::to_results(table_named("pi3_ecb"));
    const ComparisonSummary s = comparison_summary(results);
    REQUIRE_FALSE(s.ranking.empty());
    CHECK(s.ranking.front() == CipherId::Twofish);
    CHECK(s.ranking.back() == CipherId::TripleDes);
}

TEST_CASE("ranking ties break toward registry order") {
    std::vector<BenchResult> results;
    for (CipherId id : {CipherId::Twofish, CipherId::Aes256}) {
        BenchResult r{id, ModeId::Ecb, 8, {{0, 2.0, std::nullopt}}, 0, 0, 0, 0};
        finalize_result(r);
        results.push_back(std::move(r));
    }
    const ComparisonSummary s = comparison_summary(results);
    REQUIRE(s.ranking.size() == 2);
    CHECK(s.ranking[0] == CipherId::Aes256);  // equal throughput, earlier registry row
    CHECK(s.ratio(CipherId::Aes256, CipherId::Twofish) == 1.0);
}

TEST_CASE("ratios invert under swap") {
    const auto results = refdata::to_results(table_named("pi3_ecb"));
    const ComparisonSummary s = comparison_summary(results);
    const double ab = s.ratio(CipherId::Aes256, CipherId::Blowfish);
    const double ba = s.ratio(CipherId::Blowfish, CipherId::Aes256);
    CHECK(ab * ba == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("plot series cover each cipher with sizes ascending") {
    const auto results = refdata::to_results(table_named("pi3_stream"));
    const auto series = plot_series(results, ModeId::Stream);
    REQUIRE(series.size() == 2);
    for (const auto& [cipher, pts] : series) {
        for (std::size_t i = 1; i < pts.size(); ++i) {
            CHECK(pts[i - 1].first < pts[i].first);
        }
    }
    const std::string text = render_plot(series);
    CHECK(text.find("# rc4\n") != std::string::npos);
    CHECK(text.find("# chacha20\n") != std::string::npos);
}

TEST_CASE("reference stream data shows chacha20 at or above rc4 throughput") {
    const auto results = refdata::to_results(table_named("pi3_stream"));
    const auto series = plot_series(results, ModeId::Stream);
    const auto& rc4 = series[0].second;
    const auto& chacha = series[1].second;
    REQUIRE(series[0].first == CipherId::Rc4);
    REQUIRE(series[1].first == CipherId::ChaCha20);
    REQUIRE(rc4.size() == chacha.size());
    for (std::size_t i = 0; i < rc4.size(); ++i) {
        CHECK(chacha[i].second >= rc4[i].second);
    }
}
