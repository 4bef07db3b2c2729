#pragma once

// Batch computation of (volume, entropy) pairs over all conjugacy classes up
// to a word-length cap, extremal statistics per length, and data export.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "entvol/solver.hpp"
#include "entvol/torus_rep.hpp"
#include "entvol/word.hpp"

namespace entvol {

struct SurveyRecord {
    std::string word;        // canonical form
    int length = 0;
    int block_length = 0;
    std::string trace;       // exact integer, decimal
    double dilatation = 0.0;
    double entropy = 0.0;
    double volume = 0.0;
    double ratio = 0.0;
    double min_angle = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::string error;       // nonempty marks a failed solve
};

struct SurveyStats {
    struct PerLength {
        double min_ratio = 0.0;
        double min_dilatation = 0.0;
        double min_volume = 0.0;
        std::string argmin_ratio, argmin_dilatation, argmin_volume;
    };
    std::map<int, PerLength> per_length;  // key k: minima over lengths <= k
};

inline SurveyRecord survey_one(const CyclicWord& w, const SolverConfig& config) {
    SurveyRecord rec;
    const CyclicWord c = w.canonicalize();
    rec.word = c.canonical();
    rec.length = c.length();
    rec.block_length = c.block_length();
    const WordMatrix m = word_matrix(c);
    rec.trace = m.trace().str();
    rec.entropy = entropy_from_trace(m.trace());
    rec.dilatation = std::exp(rec.entropy);
    try {
        const VolumeResult vr = volume(c, config);
        rec.volume = vr.volume;
        rec.ratio = rec.entropy / vr.volume;
        rec.min_angle = vr.min_angle;
        rec.residual = vr.residual;
        rec.iterations = vr.iterations;
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

inline std::vector<SurveyRecord> survey_run(int min_len, int max_len,
                                            const SolverConfig& config = {}, int jobs = 1) {
    if (min_len < 2 || min_len > max_len || max_len > 20)
        throw parse_error("survey requires 2 <= min_len <= max_len <= 20");
    const std::vector<CyclicWord> words = enumerate_words(min_len, max_len);
    std::vector<SurveyRecord> records(words.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < words.size(); ++i) records[i] = survey_one(words[i], config);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= words.size()) return;
                records[i] = survey_one(words[i], config);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return records;
}

inline SurveyStats survey_stats(const std::vector<SurveyRecord>& records) {
    if (records.empty()) throw parse_error("stats over empty record set");
    SurveyStats stats;
    SurveyStats::PerLength run;
    bool first = true;
    for (const auto& rec : records) {
        if (!rec.error.empty()) continue;
        if (first || rec.ratio < run.min_ratio) { run.min_ratio = rec.ratio; run.argmin_ratio = rec.word; }
        if (first || rec.dilatation < run.min_dilatation) {
            run.min_dilatation = rec.dilatation;
            run.argmin_dilatation = rec.word;
        }
        if (first || rec.volume < run.min_volume) { run.min_volume = rec.volume; run.argmin_volume = rec.word; }
        first = false;
        stats.per_length[rec.length] = run;
    }
    return stats;
}

namespace detail {

inline std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

}  // namespace detail

inline void emit_csv(const std::vector<SurveyRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file: " + path);
    out << "word,length,block_length,trace,dilatation,entropy,volume,ratio,min_angle,residual,iterations\n";
    for (const auto& r : records) {
        if (!r.error.empty()) {
            out << r.word << ',' << r.length << ',' << r.block_length << ',' << r.trace
                << ",,,,,,,ERROR: " << r.error << "\n";
            continue;
        }
        out << r.word << ',' << r.length << ',' << r.block_length << ',' << r.trace << ','
            << detail::fmt15(r.dilatation) << ',' << detail::fmt15(r.entropy) << ','
            << detail::fmt15(r.volume) << ',' << detail::fmt15(r.ratio) << ','
            << detail::fmt15(r.min_angle) << ',' << detail::fmt15(r.residual) << ','
            << r.iterations << "\n";
    }
    if (!out) throw io_error("write failed: " + path);
}

// Two columns "volume entropy", one line per record, sorted by volume.
inline void emit_scatter(std::vector<SurveyRecord> records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file: " + path);
    std::erase_if(records, [](const SurveyRecord& r) { return !r.error.empty(); });
    std::sort(records.begin(), records.end(),
              [](const SurveyRecord& a, const SurveyRecord& b) {
                  return a.volume != b.volume ? a.volume < b.volume : a.word < b.word;
              });
    for (const auto& r : records)
        out << detail::fmt15(r.volume) << ' ' << detail::fmt15(r.entropy) << "\n";
    if (!out) throw io_error("write failed: " + path);
}

inline void emit_stats_csv(const SurveyStats& stats, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file: " + path);
    out << "k,I_k,lambda_k,vol_k,argmin_ratio,argmin_dil,argmin_vol\n";
    for (const auto& [k, v] : stats.per_length)
        out << k << ',' << detail::fmt15(v.min_ratio) << ',' << detail::fmt15(v.min_dilatation)
            << ',' << detail::fmt15(v.min_volume) << ',' << v.argmin_ratio << ','
            << v.argmin_dilatation << ',' << v.argmin_volume << "\n";
    if (!out) throw io_error("write failed: " + path);
}

struct Block1Row {
    int m = 0, n = 0;
    double dilatation = 0.0;
    double entropy = 0.0;
    double volume = 0.0;
    double ratio = 0.0;
};

// All L^m R^n with m * n <= max_mn and m <= n (swap symmetry); dilatation from
// the closed form (2 + mn + sqrt(4 mn + (mn)^2)) / 2.
inline std::vector<Block1Row> scan_block1(int max_mn, const SolverConfig& config = {}) {
    if (max_mn < 1) throw parse_error("scan-block1 requires max_mn >= 1");
    std::vector<Block1Row> rows;
    for (int m = 1; m * m <= max_mn; ++m)
        for (int n = m; m * n <= max_mn; ++n) {
            Block1Row row;
            row.m = m;
            row.n = n;
            const double mn = static_cast<double>(m) * n;
            row.dilatation = 0.5 * (2.0 + mn + std::sqrt(4.0 * mn + mn * mn));
            row.entropy = std::log(row.dilatation);
            const CyclicWord w =
                CyclicWord::parse(std::string(static_cast<std::size_t>(m), 'L') +
                                  std::string(static_cast<std::size_t>(n), 'R'));
            row.volume = volume(w, config).volume;
            row.ratio = row.entropy / row.volume;
            rows.push_back(row);
        }
    return rows;
}

}  // namespace entvol
