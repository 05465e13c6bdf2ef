#pragma once

// Shared basics: error taxonomy, a portable deterministic RNG, small
// string/hash/file helpers used across the library.

#include <cstdint>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntf {

inline constexpr const char* kVersion = "0.1.0";

using Index = std::ptrdiff_t;

// ---------------------------------------------------------------------------
// Errors. Each category maps onto one CLI exit class; see cli.hpp.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgumentError : Error { using Error::Error; };      // bad call arguments
struct DataError : Error { using Error::Error; };          // bad values in data
struct IntegrityError : Error { using Error::Error; };     // structural data violation
struct ConfigError : Error { using Error::Error; };        // invalid configuration
struct StateError : Error { using Error::Error; };         // use-before-init and similar
struct ShapeError : Error { using Error::Error; };         // tensor dimension mismatch
struct ContractError : Error { using Error::Error; };      // API contract violation (incl. leakage)
struct StructureError : Error { using Error::Error; };     // graph/neighborhood structure problem
struct MissingArtifactError : Error { using Error::Error; };
struct TrainingError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Rng: deterministic across platforms. std::* distributions are
// implementation-defined, so uniform/normal draws are derived here from the
// raw mt19937_64 stream directly.
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(split_mix(seed)) {}

    std::uint64_t next_u64() {
        // xorshift* would do, but mt19937_64 has a guaranteed portable stream.
        return engine_step();
    }

    // uniform in [0, 1) with 53 random bits
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; spare value cached for the next call
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do { u1 = uniform01(); } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // integer in [0, n), unbiased by rejection
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw ArgumentError("Rng::below: n must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    // Minimal mt19937_64 core (std::mt19937_64 itself is portable, but a
    // local copy keeps the header self-contained and allocation-free).
    static constexpr int kN = 312;
    std::uint64_t mt_[kN];
    int mti_ = kN + 1;
    std::uint64_t state_;
    bool seeded_ = false;
    bool has_spare_ = false;
    double spare_ = 0.0;

    static std::uint64_t split_mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    void seed_engine(std::uint64_t s) {
        mt_[0] = s;
        for (mti_ = 1; mti_ < kN; mti_++)
            mt_[mti_] = 6364136223846793005ULL * (mt_[mti_ - 1] ^ (mt_[mti_ - 1] >> 62)) +
                        static_cast<std::uint64_t>(mti_);
        seeded_ = true;
    }

    std::uint64_t engine_step() {
        if (!seeded_) seed_engine(state_);
        constexpr std::uint64_t kUpper = 0xFFFFFFFF80000000ULL;
        constexpr std::uint64_t kLower = 0x7FFFFFFFULL;
        if (mti_ >= kN) {
            static const std::uint64_t mag01[2] = {0ULL, 0xB5026F5AA96619E9ULL};
            int i = 0;
            std::uint64_t x;
            for (; i < kN - 156; i++) {
                x = (mt_[i] & kUpper) | (mt_[i + 1] & kLower);
                mt_[i] = mt_[i + 156] ^ (x >> 1) ^ mag01[x & 1ULL];
            }
            for (; i < kN - 1; i++) {
                x = (mt_[i] & kUpper) | (mt_[i + 1] & kLower);
                mt_[i] = mt_[i + 156 - kN] ^ (x >> 1) ^ mag01[x & 1ULL];
            }
            x = (mt_[kN - 1] & kUpper) | (mt_[0] & kLower);
            mt_[kN - 1] = mt_[155] ^ (x >> 1) ^ mag01[x & 1ULL];
            mti_ = 0;
        }
        std::uint64_t x = mt_[mti_++];
        x ^= (x >> 29) & 0x5555555555555555ULL;
        x ^= (x << 17) & 0x71D67FFFEDA60000ULL;
        x ^= (x << 37) & 0xFFF7EEE000000000ULL;
        x ^= (x >> 43);
        return x;
    }
};

// Derives a child seed; mix_seed(s, 0) == s so that single-branch runs match
// their unbranched counterparts.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t branch) {
    return seed + branch * 0x9E3779B97F4A7C15ULL;
}

// ---------------------------------------------------------------------------
// Hashing (FNV-1a, 64-bit) for fingerprints and manifests. Not cryptographic.
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xCBF29CE484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 0xCBF29CE484222325ULL) {
    return fnv1a64(s.data(), s.size(), h);
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

// Locale-independent, round-trip-exact double formatting for CSV output.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

inline std::vector<std::string> split_line(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingArtifactError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + path.string());
    out << content;
}

inline std::uint64_t hash_file(const std::filesystem::path& path) {
    return fnv1a64(read_file(path));
}

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

// Verbosity comes from the environment only (NTFKIT_LOG=quiet|info|debug).
inline LogLevel log_level() {
    static const LogLevel lvl = [] {
        const char* v = std::getenv("NTFKIT_LOG");
        if (!v) return LogLevel::info;
        const std::string s(v);
        if (s == "quiet") return LogLevel::quiet;
        if (s == "debug") return LogLevel::debug;
        return LogLevel::info;
    }();
    return lvl;
}

}  // namespace ntf
