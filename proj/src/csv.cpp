#include "primecurtain/csv.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace primecurtain {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path() && !path.parent_path().empty()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string());
  }
}

CsvFile::CsvFile(const std::vector<std::string>& header) : columns_(header.size()) {
  add_row(header);
}

void CsvFile::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::invalid_argument("CsvFile: column count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) content_ += ',';
    content_ += cells[i];
  }
  content_ += '\n';
}

std::string manifest_json(const RunManifest& manifest) {
  nlohmann::json j;
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  if (manifest.seed) j["seed"] = *manifest.seed;
  j["output_path"] = manifest.output_path;
  j["tool_version"] = manifest.tool_version;
  return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest) {
  atomic_write(manifest.output_path + ".manifest.json", manifest_json(manifest));
}

}  // namespace primecurtain
