#include "ideation/util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ideation {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : data) {
        hash ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::string render_template(
    std::string_view tmpl,
    const std::vector<std::pair<std::string, std::string>>& slots) {
    std::string out;
    out.reserve(tmpl.size());
    std::size_t pos = 0;
    while (pos < tmpl.size()) {
        const std::size_t open = tmpl.find('{', pos);
        if (open == std::string_view::npos) {
            out.append(tmpl.substr(pos));
            break;
        }
        out.append(tmpl.substr(pos, open - pos));
        const std::size_t close = tmpl.find('}', open);
        if (close == std::string_view::npos) {
            out.append(tmpl.substr(open));
            break;
        }
        const std::string_view key = tmpl.substr(open + 1, close - open - 1);
        bool replaced = false;
        for (const auto& [name, value] : slots) {
            if (key == name) {
                out.append(value);
                replaced = true;
                break;
            }
        }
        if (!replaced) {
            out.append(tmpl.substr(open, close - open + 1));
        }
        pos = close + 1;
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
    const std::filesystem::path dir =
        path.has_parent_path() ? path.parent_path() : ".";
    std::filesystem::create_directories(dir);
    const std::filesystem::path tmp =
        dir / (path.filename().string() + ".tmp." +
               hex64(fnv1a64(path.string())));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open temp file: " + tmp.string());
        }
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end &&
           std::isspace(static_cast<unsigned char>(s[begin])) != 0) {
        ++begin;
    }
    while (end > begin &&
           std::isspace(static_cast<unsigned char>(s[end - 1])) != 0) {
        --end;
    }
    return std::string(s.substr(begin, end - begin));
}

bool contains(std::string_view haystack, std::string_view needle) {
    return haystack.find(needle) != std::string_view::npos;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        std::string line(text.substr(pos, nl - pos));
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(std::move(line));
        pos = nl + 1;
    }
    return lines;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

DeterministicRng::DeterministicRng(std::uint64_t seed) : state_(seed) {}

std::uint64_t DeterministicRng::next() { return splitmix64(state_); }

std::uint64_t DeterministicRng::bounded(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("bounded: n must be positive");
    }
    // Rejection sampling keeps the draw unbiased and deterministic.
    const std::uint64_t limit = ~0ULL - (~0ULL % n);
    std::uint64_t v = next();
    while (v >= limit) {
        v = next();
    }
    return v % n;
}

double DeterministicRng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace ideation
