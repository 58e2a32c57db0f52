#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "corpusqc/error.hpp"
#include "corpusqc/hash.hpp"

namespace corpusqc {

using json = nlohmann::ordered_json;

// Line-oriented JSON writer. Tracks a running digest and line count so
// manifests never need to re-read what was written.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::filesystem::path& path) : path_(path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) throw IoError("cannot open for writing: " + path.string());
  }

  void write(const json& record) {
    std::string line = record.dump(-1, ' ', false, json::error_handler_t::replace);
    line.push_back('\n');
    out_.write(line.data(), static_cast<std::streamsize>(line.size()));
    digest_.update(line);
    ++lines_;
  }

  void close() {
    if (!out_.is_open()) return;
    out_.close();
    if (out_.fail()) throw IoError("write failed: " + path_.string());
  }

  std::size_t lines() const noexcept { return lines_; }
  std::string digest() { return digest_.hex(); }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  Sha256 digest_;
  std::size_t lines_ = 0;
};

// Calls `fn` for each record. Blank lines are skipped; malformed lines throw
// DataError with the line number.
inline void read_jsonl(const std::filesystem::path& path, const std::function<void(json&&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    fn(std::move(j));
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
}

// Hands records to `fn` in batches of at most `batch`; memory stays bounded
// by one batch.
inline void read_jsonl_batches(const std::filesystem::path& path, std::size_t batch,
                               const std::function<void(std::vector<json>&)>& fn) {
  batch = batch ? batch : 1;
  std::vector<json> chunk;
  chunk.reserve(batch);
  read_jsonl(path, [&](json&& j) {
    chunk.push_back(std::move(j));
    if (chunk.size() == batch) {
      fn(chunk);
      chunk.clear();
    }
  });
  if (!chunk.empty()) fn(chunk);
}

inline std::vector<json> read_jsonl_all(const std::filesystem::path& path) {
  std::vector<json> out;
  read_jsonl(path, [&](json&& j) { out.push_back(std::move(j)); });
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return data;
}

inline void write_file(const std::filesystem::path& path, std::string_view data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

// Field accessors with DataError diagnostics.
template <class T>
T field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw DataError(std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw DataError(std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace corpusqc
