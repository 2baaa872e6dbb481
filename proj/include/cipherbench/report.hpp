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

/// Result serialization and presentation: the per-sample CSV schema,
/// size-by-cipher timing tables, throughput rankings and plot series.
///
/// The CSV stores times at a fixed 6 decimals and every derived number is
/// computed from those canonical values, so emit -> parse -> emit is
/// byte-identical.

#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <tuple>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cipherbench/bench.hpp"
#include "cipherbench/core.hpp"

namespace cipherbench {

class CsvError : public Error {
  public:
    CsvError(std::size_t line, const std::string& msg)
        : Error("csv line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

class IncompleteGridError : public Error {
  public:
    using Error::Error;
};

inline constexpr std::string_view kCsvHeader =
    "cipher,mode,size_mb,run_index,elapsed_s,throughput_mb_s,peak_rss_bytes";

/// Fixed 6-decimal rendering, the precision used throughout the reports.
inline std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

/// Round to the 6-decimal value the CSV will carry.
inline double quantize6(double v) {
    return std::strtod(format_fixed6(v).c_str(), nullptr);
}

namespace detail::csv {

inline std::string escape(std::string_view field) {
    const bool needs_quote =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quote) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

// Splits one CSV record; handles quoted fields with doubled quotes.
inline std::vector<std::string> split_record(std::string_view line, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            if (!cur.empty()) throw CsvError(lineno, "stray quote inside field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw CsvError(lineno, "unterminated quoted field");
    fields.push_back(cur);
    return fields;
}

}  // namespace detail::csv

/// One row per sample, ordered by (cipher, mode, size, run). Elapsed
/// times are quantized to 6 decimals; the throughput column holds the
/// case-level size/median computed from the quantized samples.
inline std::string results_to_csv(std::span<const BenchResult> results) {
    std::vector<const BenchResult*> sorted;
    sorted.reserve(results.size());
    for (const auto& r : results) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const BenchResult* a, const BenchResult* b) {
        if (a->cipher != b->cipher) return a->cipher < b->cipher;
        if (a->mode != b->mode) return a->mode < b->mode;
        return a->size_mb < b->size_mb;
    });
    std::string out{kCsvHeader};
    out += "\n";
    for (const BenchResult* r : sorted) {
        std::vector<double> q;
        q.reserve(r->samples.size());
        for (const auto& s : r->samples) q.push_back(quantize6(s.elapsed_s));
        const double tp = double(r->size_mb) / median_of(q);
        for (const auto& s : r->samples) {
            out += detail::csv::escape(cipher_name(r->cipher));
            out += ",";
            out += detail::csv::escape(mode_name(r->mode));
            out += ",";
            out += std::to_string(r->size_mb);
            out += ",";
            out += std::to_string(s.run_index);
            out += ",";
            out += format_fixed6(s.elapsed_s);
            out += ",";
            out += format_fixed6(tp);
            out += ",";
            if (s.peak_rss_bytes) out += std::to_string(*s.peak_rss_bytes);
            out += "\n";
        }
    }
    return out;
}

/// Parses the schema above and regroups rows into BenchResults; derived
/// statistics are recomputed from the parsed samples.
inline std::vector<BenchResult> parse_csv(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> lines;  // text, file line
    std::size_t start = 0, fileno = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++fileno;
        if (!line.empty()) lines.emplace_back(line, fileno);
        start = end + 1;
    }
    if (lines.empty()) throw CsvError(1, "missing header");
    if (lines[0].first != kCsvHeader) {
        throw CsvError(lines[0].second,
                       "unexpected header; want \"" + std::string(kCsvHeader) + "\"");
    }

    std::map<std::tuple<CipherId, ModeId, int>, BenchResult> grouped;
    std::vector<std::tuple<CipherId, ModeId, int>> order;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::size_t lineno = lines[li].second;
        const auto f = detail::csv::split_record(lines[li].first, lineno);
        if (f.size() != 7) {
            throw CsvError(lineno, "expected 7 fields, got " + std::to_string(f.size()));
        }
        const auto cipher = cipher_from_name(f[0]);
        if (!cipher) throw CsvError(lineno, "unknown cipher \"" + f[0] + "\"");
        const auto mode = mode_from_name(f[1]);
        if (!mode) throw CsvError(lineno, "unknown mode \"" + f[1] + "\"");
        if (!mode_compatible(*cipher, *mode)) {
            throw CsvError(lineno, "mode " + f[1] + " not valid for cipher " + f[0]);
        }
        char* end = nullptr;
        const long size_mb = std::strtol(f[2].c_str(), &end, 10);
        if (*end != '\0' || size_mb <= 0) throw CsvError(lineno, "bad size_mb \"" + f[2] + "\"");
        const long run = std::strtol(f[3].c_str(), &end, 10);
        if (*end != '\0' || run < 0) throw CsvError(lineno, "bad run_index \"" + f[3] + "\"");
        const double elapsed = std::strtod(f[4].c_str(), &end);
        if (*end != '\0' || !(elapsed > 0)) throw CsvError(lineno, "bad elapsed_s \"" + f[4] + "\"");
        const double tp = std::strtod(f[5].c_str(), &end);
        if (*end != '\0' || !(tp > 0)) throw CsvError(lineno, "bad throughput \"" + f[5] + "\"");
        std::optional<std::uint64_t> rss;
        if (!f[6].empty()) {
            const unsigned long long v = std::strtoull(f[6].c_str(), &end, 10);
            if (*end != '\0') throw CsvError(lineno, "bad peak_rss_bytes \"" + f[6] + "\"");
            rss = v;
        }
        const auto key = std::make_tuple(*cipher, *mode, int(size_mb));
        auto it = grouped.find(key);
        if (it == grouped.end()) {
            it = grouped.emplace(key, BenchResult{*cipher, *mode, int(size_mb), {}, 0, 0, 0, 0}).first;
            order.push_back(key);
        }
        it->second.samples.push_back(Sample{int(run), elapsed, rss});
    }
    std::vector<BenchResult> out;
    out.reserve(order.size());
    for (const auto& key : order) {
        BenchResult& r = grouped[key];
        std::sort(r.samples.begin(), r.samples.end(),
                  [](const Sample& a, const Sample& b) { return a.run_index < b.run_index; });
        finalize_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

/// Sizes-by-ciphers matrix of median seconds for one mode.
struct ReportTable {
    std::string title;
    std::vector<int> sizes_mb;       // rows, ascending
    std::vector<CipherId> ciphers;   // columns, registry order
    std::vector<std::vector<double>> cells;  // [row][col] median seconds
};

inline ReportTable make_table(std::span<const BenchResult> results, ModeId mode) {
    std::set<int> sizes;
    std::set<CipherId> ciphers;
    std::map<std::pair<int, CipherId>, double> medians;
    for (const auto& r : results) {
        if (r.mode != mode) continue;
        sizes.insert(r.size_mb);
        ciphers.insert(r.cipher);
        medians[{r.size_mb, r.cipher}] = r.median_s;
    }
    ReportTable t;
    t.title = "Execution time (s), " + std::string(mode_name(mode)) + " mode";
    t.sizes_mb.assign(sizes.begin(), sizes.end());
    for (CipherId id : kAllCiphers) {
        if (ciphers.count(id)) t.ciphers.push_back(id);
    }
    for (int size : t.sizes_mb) {
        std::vector<double> row;
        for (CipherId id : t.ciphers) {
            const auto it = medians.find({size, id});
            if (it == medians.end()) {
                throw IncompleteGridError("incomplete grid: missing " +
                                          std::string(cipher_name(id)) + "/" +
                                          std::to_string(size));
            }
            row.push_back(it->second);
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

inline std::string render_markdown(const ReportTable& t) {
    std::string out = "### " + t.title + "\n\n";
    out += "| size_mb |";
    for (CipherId id : t.ciphers) {
        out += " " + std::string(cipher_display_name(id)) + " |";
    }
    out += "\n|---:|";
    for (std::size_t i = 0; i < t.ciphers.size(); ++i) out += "---:|";
    out += "\n";
    for (std::size_t r = 0; r < t.sizes_mb.size(); ++r) {
        out += "| " + std::to_string(t.sizes_mb[r]) + " |";
        for (double v : t.cells[r]) out += " " + format_fixed6(v) + " |";
        out += "\n";
    }
    return out;
}

inline std::string render_csv_table(const ReportTable& t) {
    std::string out = "size_mb";
    for (CipherId id : t.ciphers) out += "," + std::string(cipher_display_name(id));
    out += "\n";
    for (std::size_t r = 0; r < t.sizes_mb.size(); ++r) {
        out += std::to_string(t.sizes_mb[r]);
        for (double v : t.cells[r]) out += "," + format_fixed6(v);
        out += "\n";
    }
    return out;
}

inline std::string render_table(std::span<const BenchResult> results, ModeId mode,
                                std::string_view format) {
    const ReportTable t = make_table(results, mode);
    if (format == "markdown" || format == "md") return render_markdown(t);
    if (format == "csv") return render_csv_table(t);
    throw Error("unknown table format \"" + std::string(format) + "\"");
}

/// Mean throughput per cipher, fastest-first ranking and pairwise ratios.
/// Rank ties break toward the registry (table) order.
struct ComparisonSummary {
    std::vector<CipherId> ciphers;             // registry order
    std::vector<double> mean_throughput_mb_s;  // parallel to `ciphers`
    std::vector<CipherId> ranking;             // fastest first

    double throughput_of(CipherId id) const {
        for (std::size_t i = 0; i < ciphers.size(); ++i) {
            if (ciphers[i] == id) return mean_throughput_mb_s[i];
        }
        throw Error("cipher not present in summary");
    }

    double ratio(CipherId a, CipherId b) const {
        return throughput_of(a) / throughput_of(b);
    }
};

inline ComparisonSummary comparison_summary(std::span<const BenchResult> results) {
    std::map<CipherId, std::vector<double>> tps;
    for (const auto& r : results) {
        tps[r.cipher].push_back(r.throughput_mb_s);
    }
    ComparisonSummary s;
    for (CipherId id : kAllCiphers) {
        const auto it = tps.find(id);
        if (it == tps.end()) continue;
        s.ciphers.push_back(id);
        s.mean_throughput_mb_s.push_back(mean_of(it->second));
    }
    s.ranking = s.ciphers;
    std::stable_sort(s.ranking.begin(), s.ranking.end(), [&](CipherId a, CipherId b) {
        return s.throughput_of(a) > s.throughput_of(b);
    });
    return s;
}

inline std::string render_summary(const ComparisonSummary& s) {
    std::string out = "Throughput ranking (mean MB/s over all cases):\n";
    for (std::size_t i = 0; i < s.ranking.size(); ++i) {
        const CipherId id = s.ranking[i];
        out += "  " + std::to_string(i + 1) + ". " +
               std::string(cipher_display_name(id)) + "  " +
               format_fixed6(s.throughput_of(id)) + "\n";
    }
    return out;
}

/// One series per cipher for the given mode: (size_mb, throughput MB/s),
/// sorted by size.
inline std::vector<std::pair<CipherId, std::vector<std::pair<int, double>>>>
plot_series(std::span<const BenchResult> results, ModeId mode) {
    std::map<CipherId, std::map<int, double>> by_cipher;
    for (const auto& r : results) {
        if (r.mode != mode) continue;
        by_cipher[r.cipher][r.size_mb] = r.throughput_mb_s;
    }
    std::vector<std::pair<CipherId, std::vector<std::pair<int, double>>>> out;
    for (CipherId id : kAllCiphers) {
        const auto it = by_cipher.find(id);
        if (it == by_cipher.end()) continue;
        std::vector<std::pair<int, double>> pts(it->second.begin(), it->second.end());
        out.emplace_back(id, std::move(pts));
    }
    return out;
}

/// Tab-separated series with a `# cipher` comment line per series.
inline std::string render_plot(
    const std::vector<std::pair<CipherId, std::vector<std::pair<int, double>>>>& series) {
    std::string out;
    for (const auto& [cipher, pts] : series) {
        out += "# " + std::string(cipher_name(cipher)) + "\n";
        for (const auto& [size, tp] : pts) {
            out += std::to_string(size) + "\t" + format_fixed6(tp) + "\n";
        }
        out += "\n";
    }
    return out;
}

}  // namespace cipherbench
