#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>

namespace ovip {

/// Stable 64-bit FNV-1a. Used for deriving synthetic image handles from
/// description text; must not change across platforms or releases, since
/// handles end up in persisted pairs.jsonl files.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// splitmix64 mix step; used to derive independent per-sample RNG seeds
/// from (global seed, epoch, sample index).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(seed ^ mix64(a)) ^ mix64(b));
}

/// Uniform double in [0,1) from the top 53 bits of an mt19937_64 draw.
/// mt19937_64 output is specified by the standard, so this is portable,
/// unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Lower-cased alphanumeric token set; the unit of overlap for the mock judge.
std::set<std::string> tokenize(std::string_view text);

/// Replace every occurrence of `placeholder` in `text`.
std::string replace_all(std::string text, std::string_view placeholder, std::string_view value);

void log_warn(const std::string& msg);
void log_info(const std::string& msg);

}  // namespace ovip
