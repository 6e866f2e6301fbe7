#include "engel/record.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>
#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "engel/error.hpp"

namespace engel {

using nlohmann::json;

std::string ResultRecord::to_json() const {
  json j;
  j["expr"] = expr;
  j["order"] = order;
  j["mode"] = mode;
  j["n"] = n ? json(*n) : json(nullptr);
  j["vertex_count"] = vertex_count;
  j["strongly_connected"] = strongly_connected;
  j["weakly_connected"] = weakly_connected;
  j["scc_count"] = scc_count;
  j["undirected_diameter"] = undirected_diameter;
  j["directed_diameter"] = directed_diameter;
  j["verdict"] = verdict;
  j["wall_time"] = wall_time;
  j["version"] = version;
  j["flags"] = flags;
  j["seed"] = seed;
  return j.dump();
}

ResultRecord ResultRecord::from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    ResultRecord r;
    r.expr = j.at("expr").get<std::string>();
    r.order = j.at("order").get<std::uint64_t>();
    r.mode = j.at("mode").get<std::string>();
    if (!j.at("n").is_null()) r.n = j.at("n").get<unsigned>();
    r.vertex_count = j.at("vertex_count").get<std::uint64_t>();
    r.strongly_connected = j.at("strongly_connected").get<bool>();
    r.weakly_connected = j.at("weakly_connected").get<bool>();
    r.scc_count = j.at("scc_count").get<std::uint32_t>();
    r.undirected_diameter = j.at("undirected_diameter").get<std::string>();
    r.directed_diameter = j.at("directed_diameter").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.wall_time = j.at("wall_time").get<double>();
    r.version = j.at("version").get<std::string>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed result record: ") + e.what());
  }
}

namespace {

std::string crc_hex(const std::string& s) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(s.data()), static_cast<uInt>(s.size()));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc & 0xffffffffUL));
  return buf;
}

}  // namespace

std::string encode_line(const ResultRecord& r) {
  std::string body = r.to_json();
  return body + "\t" + crc_hex(body);
}

std::optional<ResultRecord> decode_line(const std::string& line) {
  auto tab = line.rfind('\t');
  if (tab == std::string::npos || line.size() - tab - 1 != 8) return std::nullopt;
  std::string body = line.substr(0, tab);
  if (crc_hex(body) != line.substr(tab + 1)) return std::nullopt;
  try {
    return ResultRecord::from_json(body);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

StoreContents ResultStore::load() const {
  StoreContents c;
  std::ifstream in(path_);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (auto r = decode_line(line))
      c.records.push_back(std::move(*r));
    else
      c.corrupt_lines.push_back(lineno);
  }
  return c;
}

std::set<std::string> ResultStore::expressions() const {
  std::set<std::string> out;
  for (const auto& r : load().records) out.insert(r.expr);
  return out;
}

void ResultStore::append(const ResultRecord& r) const {
  const std::string line = encode_line(r) + "\n";
  int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw Error("cannot open result store '" + path_ + "'");
  if (::flock(fd, LOCK_EX) != 0) {
    ::close(fd);
    throw Error("cannot lock result store '" + path_ + "'");
  }
  std::size_t done = 0;
  while (done < line.size()) {
    ssize_t w = ::write(fd, line.data() + done, line.size() - done);
    if (w <= 0) {
      ::flock(fd, LOCK_UN);
      ::close(fd);
      throw Error("write to result store '" + path_ + "' failed");
    }
    done += static_cast<std::size_t>(w);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

}  // namespace engel
