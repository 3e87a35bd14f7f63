#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ideation {

// FNV-1a, 64 bit. Stable across platforms and runs; used for replay keys
// and audit record ids. Not cryptographic.
std::uint64_t fnv1a64(std::string_view data);

// Lower-case hex, zero-padded to 16 chars.
std::string hex64(std::uint64_t value);

// Single-pass substitution of {key} slots. Only keys present in `slots`
// are replaced; substituted text is never rescanned, so braces inside
// values survive literally.
std::string render_template(
    std::string_view tmpl,
    const std::vector<std::pair<std::string, std::string>>& slots);

std::string read_file(const std::filesystem::path& path);

// Write-temp-then-rename in the target directory.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

std::string trim(std::string_view s);
bool contains(std::string_view haystack, std::string_view needle);
std::vector<std::string> split_lines(std::string_view text);

// Deterministic bounded draw on top of a 64-bit generator state. Avoids
// std::uniform_int_distribution, whose output is implementation-defined.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed);
    std::uint64_t next();
    // uniform-ish integer in [0, n); n > 0
    std::uint64_t bounded(std::uint64_t n);
    // double in [0, 1)
    double uniform01();

private:
    std::uint64_t state_;
};

// In-place Fisher-Yates driven by DeterministicRng so shuffles are
// byte-reproducible everywhere.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, DeterministicRng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace ideation
