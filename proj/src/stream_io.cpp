#include "bulkcc/stream_io.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace bulkcc::io {

namespace {

template <class UInt>
void put_le(std::ostream& out, UInt x) {
  std::array<char, sizeof(UInt)> buf;
  for (std::size_t i = 0; i < sizeof(UInt); ++i) buf[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  out.write(buf.data(), buf.size());
}

class byte_reader {
 public:
  byte_reader(std::istream& in, std::size_t offset) : in_(in), offset_(offset) {}

  template <class UInt>
  UInt get(const char* what) {
    std::array<unsigned char, sizeof(UInt)> buf;
    in_.read(reinterpret_cast<char*>(buf.data()), buf.size());
    if (static_cast<std::size_t>(in_.gcount()) != buf.size()) {
      throw stream_parse_error(std::string("truncated ") + what, offset_ + in_.gcount());
    }
    UInt x = 0;
    for (std::size_t i = 0; i < sizeof(UInt); ++i) x |= static_cast<UInt>(buf[i]) << (8 * i);
    offset_ += sizeof(UInt);
    return x;
  }

  std::size_t offset() const { return offset_; }
  bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }

 private:
  std::istream& in_;
  std::size_t offset_ = 0;
};

}  // namespace

void write_binary(std::ostream& out, const stream_file& file) {
  out.write(stream_magic, 4);
  put_le<std::uint32_t>(out, stream_version);
  put_le<std::uint64_t>(out, file.n);
  put_le<std::uint64_t>(out, file.batches.size());
  for (const auto& b : file.batches) {
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(b.kind));
    put_le<std::uint64_t>(out, b.pairs.size());
    for (const edge& e : b.pairs) {
      put_le<std::uint64_t>(out, e.u);
      put_le<std::uint64_t>(out, e.v);
    }
  }
}

stream_file read_binary(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::memcmp(magic, stream_magic, 4) != 0) {
    throw stream_parse_error("bad magic, expected \"BPCC\"", 0);
  }
  byte_reader r(in, 4);
  auto at = [&] { return r.offset(); };

  const auto version = r.get<std::uint32_t>("version");
  if (version != stream_version) {
    throw stream_parse_error("unsupported version " + std::to_string(version), at() - 4);
  }
  stream_file file;
  const auto n = r.get<std::uint64_t>("vertex count");
  if (n > max_vertices) throw stream_parse_error("vertex count too large", at() - 8);
  file.n = static_cast<std::size_t>(n);
  const auto batches = r.get<std::uint64_t>("batch count");
  for (std::uint64_t b = 0; b < batches; ++b) {
    const std::size_t kind_at = at();
    const auto kind = r.get<std::uint32_t>("batch kind");
    if (kind > 1) throw stream_parse_error("unknown batch kind " + std::to_string(kind), kind_at);
    const auto count = r.get<std::uint64_t>("batch length");
    stream_batch batch;
    batch.kind = static_cast<batch_kind>(kind);
    batch.pairs.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1u << 20)));
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::size_t pair_at = at();
      const auto u = r.get<std::uint64_t>("pair");
      const auto v = r.get<std::uint64_t>("pair");
      if (u >= n || v >= n) throw stream_parse_error("vertex id out of range", pair_at);
      batch.pairs.push_back({static_cast<vertex>(u), static_cast<vertex>(v)});
    }
    file.batches.push_back(std::move(batch));
  }
  if (!r.at_end()) throw stream_parse_error("trailing bytes after last batch", at());
  return file;
}

void write_text(std::ostream& out, const stream_file& file) {
  out << "#bpcc n=" << file.n << '\n';
  for (const auto& b : file.batches) {
    out << "#batch " << (b.kind == batch_kind::update ? "update" : "query") << '\n';
    for (const edge& e : b.pairs) out << e.u << ' ' << e.v << '\n';
  }
}

stream_file read_text(std::istream& in) {
  stream_file file;
  std::string line;
  std::size_t offset = 0;
  bool have_header = false;
  auto parse_uint = [&](std::string_view s, std::size_t at, const char* what) {
    std::uint64_t x = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw stream_parse_error(std::string("bad ") + what + " '" + std::string(s) + "'", at);
    }
    return x;
  };
  while (std::getline(in, line)) {
    const std::size_t line_at = offset;
    offset += line.size() + 1;
    std::string_view s(line);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    if (s.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (!have_header) {
      constexpr std::string_view head = "#bpcc n=";
      if (s.substr(0, head.size()) != head) throw stream_parse_error("expected '#bpcc n=<n>' header", line_at);
      const auto n = parse_uint(s.substr(head.size()), line_at + head.size(), "vertex count");
      if (n > max_vertices) throw stream_parse_error("vertex count too large", line_at);
      file.n = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    if (s.substr(0, 6) == "#batch") {
      std::string_view kind = s.substr(6);
      kind.remove_prefix(std::min(kind.find_first_not_of(" \t"), kind.size()));
      stream_batch b;
      if (kind == "update" || kind.empty()) b.kind = batch_kind::update;
      else if (kind == "query") b.kind = batch_kind::query;
      else throw stream_parse_error("unknown batch kind '" + std::string(kind) + "'", line_at);
      file.batches.push_back(std::move(b));
      continue;
    }
    if (file.batches.empty()) throw stream_parse_error("pair before first #batch line", line_at);
    const auto first_end = s.find_first_of(" \t");
    if (first_end == std::string_view::npos) throw stream_parse_error("expected two ids", line_at);
    std::string_view rest = s.substr(first_end);
    const auto second_begin = rest.find_first_not_of(" \t");
    if (second_begin == std::string_view::npos) throw stream_parse_error("expected two ids", line_at);
    rest = rest.substr(second_begin);
    rest = rest.substr(0, rest.find_last_not_of(" \t") + 1);
    const auto u = parse_uint(s.substr(0, first_end), line_at, "vertex id");
    const auto v = parse_uint(rest, line_at + (rest.data() - s.data()), "vertex id");
    if (u >= file.n || v >= file.n) throw stream_parse_error("vertex id out of range", line_at);
    file.batches.back().pairs.push_back({static_cast<vertex>(u), static_cast<vertex>(v)});
  }
  if (!have_header) throw stream_parse_error("empty stream (missing header)", 0);
  return file;
}

stream_file read_stream(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char head[4] = {};
  in.read(head, 4);
  const bool binary = in.gcount() == 4 && std::memcmp(head, stream_magic, 4) == 0;
  in.clear();
  in.seekg(0);
  return binary ? read_binary(in) : read_text(in);
}

void write_stream(const std::filesystem::path& path, const stream_file& file, stream_format format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (format == stream_format::binary) write_binary(out, file);
  else write_text(out, file);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace bulkcc::io
