#pragma once

// NetworkMTS: the T×N matrix of hourly link measurements, plus CSV ingestion
// and chronological splitting. Timestamps are UTC unix seconds on a strict
// 1-hour grid.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ntf/common.hpp"

namespace ntf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr std::int64_t kHourSeconds = 3600;
inline constexpr Index kHoursPerDay = 24;
inline constexpr Index kHoursPerWeek = 168;

// ---------------------------------------------------------------------------
// ISO-8601 (UTC, "YYYY-MM-DDTHH:MM:SSZ") <-> unix seconds
// ---------------------------------------------------------------------------

// Howard Hinnant's days-from-civil algorithm; exact for the proleptic
// Gregorian calendar.
inline std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

inline std::int64_t parse_iso8601(const std::string& s) {
    int year = 0, mon = 0, day = 0, hh = 0, mm = 0, ss = 0;
    char t = 0, z = 0;
    const int n =
        std::sscanf(s.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d%c", &year, &mon, &day, &t, &hh, &mm, &ss, &z);
    if (n != 8 || (t != 'T' && t != ' ') || z != 'Z' || mon < 1 || mon > 12 || day < 1 ||
        day > 31 || hh > 23 || mm > 59 || ss > 60)
        throw DataError("malformed ISO-8601 timestamp: '" + s + "'");
    return days_from_civil(year, static_cast<unsigned>(mon), static_cast<unsigned>(day)) * 86400 +
           hh * 3600 + mm * 60 + ss;
}

inline std::string format_iso8601(std::int64_t unix_seconds) {
    std::int64_t days = unix_seconds / 86400;
    std::int64_t rem = unix_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    std::int64_t y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), m, d, static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem / 60) % 60), static_cast<long long>(rem % 60));
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Split provenance: every split carries its role and row range in the source
// dataset. Leakage guards (scaler fit, correlation fit) key off this.
// ---------------------------------------------------------------------------

enum class SplitRole { train, val, test };

inline const char* split_role_name(SplitRole r) {
    switch (r) {
        case SplitRole::train: return "train";
        case SplitRole::val: return "val";
        case SplitRole::test: return "test";
    }
    return "?";
}

struct SplitProvenance {
    SplitRole role;
    Index row_begin = 0;   // inclusive, in source-dataset rows
    Index row_end = 0;     // exclusive
    Index total_rows = 0;  // T of the source dataset

    std::string describe() const {
        return std::string(split_role_name(role)) + "[" + std::to_string(row_begin) + "," +
               std::to_string(row_end) + ")/" + std::to_string(total_rows);
    }
};

// ---------------------------------------------------------------------------
// NetworkMTS
// ---------------------------------------------------------------------------

struct NetworkMTS {
    std::vector<std::int64_t> timestamps;  // unix seconds, strictly hourly
    std::vector<std::string> link_ids;     // N unique identifiers, "src->dst"
    Matrix values;                         // T×N, finite, non-negative
    std::map<std::string, std::string> metadata;
    std::optional<SplitProvenance> provenance;

    Index rows() const { return values.rows(); }
    Index cols() const { return values.cols(); }

    void validate() const {
        const Index T = rows();
        const Index N = cols();
        if (static_cast<Index>(timestamps.size()) != T)
            throw IntegrityError("timestamp count does not match value rows");
        if (static_cast<Index>(link_ids.size()) != N)
            throw IntegrityError("link id count does not match value columns");
        for (Index t = 1; t < T; ++t) {
            if (timestamps[t] - timestamps[t - 1] != kHourSeconds)
                throw IntegrityError("timestamps not strictly increasing by 1 hour at row " +
                                     std::to_string(t));
        }
        std::set<std::string> seen(link_ids.begin(), link_ids.end());
        if (static_cast<Index>(seen.size()) != N) throw IntegrityError("duplicate link ids");
        for (Index t = 0; t < T; ++t)
            for (Index n = 0; n < N; ++n) {
                const double v = values(t, n);
                if (!std::isfinite(v))
                    throw DataError("non-finite value at (" + std::to_string(t) + "," +
                                    std::to_string(n) + ")");
                if (v < 0.0)
                    throw DataError("negative value at (" + std::to_string(t) + "," +
                                    std::to_string(n) + ")");
            }
    }
};

// ---------------------------------------------------------------------------
// CSV: header `timestamp,<link_id_1>,...`; one row per hour; UTF-8.
// ---------------------------------------------------------------------------

inline NetworkMTS load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MissingArtifactError("dataset not found: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty CSV: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = split_line(line, ',');
    if (header.size() < 2 || header[0] != "timestamp")
        throw DataError("CSV header must be 'timestamp,<link>,...' in " + path.string());

    NetworkMTS data;
    data.link_ids.assign(header.begin() + 1, header.end());
    const Index N = static_cast<Index>(data.link_ids.size());

    std::vector<std::vector<double>> rows;
    Index row_no = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line, ',');
        if (static_cast<Index>(cells.size()) != N + 1)
            throw DataError("row " + std::to_string(row_no) + " has " +
                            std::to_string(cells.size() - 1) + " values, expected " +
                            std::to_string(N));
        std::int64_t ts;
        try {
            ts = parse_iso8601(cells[0]);
        } catch (const DataError&) {
            throw DataError("malformed timestamp at row " + std::to_string(row_no) + ": '" +
                            cells[0] + "'");
        }
        if (!data.timestamps.empty()) {
            const std::int64_t prev = data.timestamps.back();
            if (ts <= prev)
                throw IntegrityError("non-monotonic timestamp at row " + std::to_string(row_no));
            if (ts - prev != kHourSeconds)
                throw IntegrityError("gapped timestamps at row " + std::to_string(row_no) +
                                     " (step != 1 hour)");
        }
        data.timestamps.push_back(ts);
        std::vector<double> vals(N);
        for (Index n = 0; n < N; ++n) {
            const std::string& cell = cells[n + 1];
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0' || !std::isfinite(v) || v < 0.0)
                throw DataError("bad value at row " + std::to_string(row_no) + ", col " +
                                std::to_string(n + 1) + ": '" + cell + "'");
            vals[static_cast<std::size_t>(n)] = v;
        }
        rows.push_back(std::move(vals));
        ++row_no;
    }
    if (rows.empty()) throw DataError("CSV has no data rows: " + path.string());

    data.values.resize(static_cast<Index>(rows.size()), N);
    for (Index t = 0; t < data.values.rows(); ++t)
        for (Index n = 0; n < N; ++n)
            data.values(t, n) = rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(n)];
    data.validate();
    return data;
}

inline void save_csv(const NetworkMTS& data, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "timestamp";
    for (const auto& id : data.link_ids) out << ',' << id;
    out << '\n';
    for (Index t = 0; t < data.rows(); ++t) {
        out << format_iso8601(data.timestamps[static_cast<std::size_t>(t)]);
        for (Index n = 0; n < data.cols(); ++n) out << ',' << format_double(data.values(t, n));
        out << '\n';
    }
    write_file(path, out.str());
}

// ---------------------------------------------------------------------------
// Chronological split
// ---------------------------------------------------------------------------

struct SplitSpec {
    double train_fraction = 0.70;
    double val_fraction = 0.15;
    double test_fraction = 0.15;

    void validate() const {
        for (double f : {train_fraction, val_fraction, test_fraction})
            if (!(f > 0.0 && f < 1.0))
                throw ArgumentError("split fractions must lie in (0,1)");
        const double sum = train_fraction + val_fraction + test_fraction;
        if (std::abs(sum - 1.0) > 1e-9)
            throw ArgumentError("split fractions must sum to 1 (got " + format_double(sum) + ")");
    }
};

struct SplitResult {
    NetworkMTS train, val, test;
};

// Rounding rule: floor(train), floor(val), remainder to test. `min_rows`, when
// given, is the windowing requirement (L+H) each split must satisfy.
inline SplitResult split(const NetworkMTS& data, const SplitSpec& spec, Index min_rows = 1) {
    spec.validate();
    if (data.provenance)
        throw ArgumentError("cannot split a dataset that is already a split (" +
                            data.provenance->describe() + ")");
    const Index T = data.rows();
    const Index n_train = static_cast<Index>(std::floor(static_cast<double>(T) * spec.train_fraction));
    const Index n_val = static_cast<Index>(std::floor(static_cast<double>(T) * spec.val_fraction));
    const Index n_test = T - n_train - n_val;

    const Index lo = std::max<Index>(min_rows, 1);
    if (n_train < lo || n_val < lo || n_test < lo) {
        // find the smallest feasible T under the same rounding rule
        Index t_min = T + 1;
        for (;; ++t_min) {
            const Index a = static_cast<Index>(std::floor(static_cast<double>(t_min) * spec.train_fraction));
            const Index b = static_cast<Index>(std::floor(static_cast<double>(t_min) * spec.val_fraction));
            const Index c = t_min - a - b;
            if (a >= lo && b >= lo && c >= lo) break;
            if (t_min > T + 100 * (lo + 3)) break;  // spec degenerate; bail with best guess
        }
        throw ConfigError("split too small: each split needs >= " + std::to_string(lo) +
                          " rows, minimum T is " + std::to_string(t_min) + " (got T=" +
                          std::to_string(T) + ")");
    }

    auto take = [&](Index begin, Index count, SplitRole role) {
        NetworkMTS part;
        part.link_ids = data.link_ids;
        part.metadata = data.metadata;
        part.timestamps.assign(data.timestamps.begin() + begin,
                               data.timestamps.begin() + begin + count);
        part.values = data.values.middleRows(begin, count);
        part.provenance = SplitProvenance{role, begin, begin + count, T};
        return part;
    };

    SplitResult out{take(0, n_train, SplitRole::train), take(n_train, n_val, SplitRole::val),
                    take(n_train + n_val, n_test, SplitRole::test)};
    return out;
}

}  // namespace ntf
