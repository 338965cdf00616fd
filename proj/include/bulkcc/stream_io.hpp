#pragma once

// Minibatch stream files.
//
// Binary (all integers little-endian):
//   header  : "BPCC" | u32 version (=1) | u64 n | u64 batch_count
//   batch   : u32 kind (0 = update, 1 = query) | u64 count | count x (u64 u, u64 v)
// Every id must be < n and no bytes may follow the last batch.
//
// Text (for debugging):
//   #bpcc n=<n>
//   #batch update        (or "#batch query")
//   <u> <v>              one pair per line
// Blank lines are ignored; pairs before the first "#batch" line are an error.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bulkcc/common.hpp"

namespace bulkcc::io {

inline constexpr char stream_magic[4] = {'B', 'P', 'C', 'C'};
inline constexpr std::uint32_t stream_version = 1;

enum class batch_kind : std::uint32_t { update = 0, query = 1 };

struct stream_batch {
  batch_kind kind = batch_kind::update;
  std::vector<edge> pairs;
};

struct stream_file {
  std::size_t n = 0;
  std::vector<stream_batch> batches;
};

/// Malformed input; `offset` is the byte offset where decoding failed.
class stream_parse_error : public std::runtime_error {
 public:
  stream_parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class stream_format { binary, text };

void write_binary(std::ostream& out, const stream_file& file);
stream_file read_binary(std::istream& in);

void write_text(std::ostream& out, const stream_file& file);
stream_file read_text(std::istream& in);

/// Reads either format, chosen by the leading magic bytes.
stream_file read_stream(const std::filesystem::path& path);
void write_stream(const std::filesystem::path& path, const stream_file& file,
                  stream_format format = stream_format::binary);

}  // namespace bulkcc::io
