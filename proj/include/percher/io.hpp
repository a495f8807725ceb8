#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace percher {

// Shortest round-trip decimal with '.' separator, independent of locale.
std::string fmt_num(double v);

// Comma-separated, LF line endings, mandatory header.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    const std::string& str() const { return buf_; }
    std::size_t rows() const { return rows_; }

private:
    std::size_t width_;
    std::size_t rows_ = 0;
    std::string buf_;
};

// Write to a sibling temp file, then rename over the target.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

}  // namespace percher
