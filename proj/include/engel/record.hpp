#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace engel {

struct ResultRecord {
  std::string expr;
  std::uint64_t order = 0;
  std::string mode;
  std::optional<unsigned> n;
  std::uint64_t vertex_count = 0;
  bool strongly_connected = false;
  bool weakly_connected = false;
  std::uint32_t scc_count = 0;
  std::string undirected_diameter = "not computed";  // integer text, "unreachable" or "not computed"
  std::string directed_diameter = "not computed";
  std::string verdict;
  double wall_time = 0;
  std::string version;
  std::vector<std::string> flags;
  std::uint64_t seed = 0;

  std::string to_json() const;
  // Throws InvalidArgument on malformed input.
  static ResultRecord from_json(const std::string& text);
  bool operator==(const ResultRecord&) const = default;
};

// Store line: JSON, a tab, then the CRC-32 of the JSON as 8 lowercase hex digits.
std::string encode_line(const ResultRecord& r);
// nullopt when the checksum or the JSON does not verify.
std::optional<ResultRecord> decode_line(const std::string& line);

struct StoreContents {
  std::vector<ResultRecord> records;
  std::vector<std::size_t> corrupt_lines;  // 1-based line numbers
};

// Append-only line store. Appends take an exclusive flock on the file.
class ResultStore {
 public:
  explicit ResultStore(std::string path) : path_(std::move(path)) {}

  StoreContents load() const;  // missing file = empty store
  std::set<std::string> expressions() const;
  void append(const ResultRecord& r) const;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace engel
