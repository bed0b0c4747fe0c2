#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace primecurtain {

inline constexpr const char* kToolVersion = "0.1.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits: every double round-trips through its decimal form.
std::string format_double(double v);

// Write content to path via a temp file in the same directory plus rename,
// so readers never see a partial file.  Throws IoError on failure.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Comma-separated rows with a mandatory header; plain '.' decimals, no
// locale, LF line endings.  Reruns with identical inputs produce identical
// bytes.
class CsvFile {
 public:
  explicit CsvFile(const std::vector<std::string>& header);

  void add_row(const std::vector<std::string>& cells);
  const std::string& content() const { return content_; }
  void write(const std::filesystem::path& path) const { atomic_write(path, content_); }

 private:
  std::size_t columns_;
  std::string content_;
};

// Provenance record written as `<output>.manifest.json` beside every CSV.
// Contains nothing run-dependent, so identical parameters give identical
// manifest bytes.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;
  std::string output_path;
  std::string tool_version = kToolVersion;
};

std::string manifest_json(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest);

}  // namespace primecurtain
