#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bulkcc/stream_io.hpp"
#include "bulkcc/union_find.hpp"

namespace bulkcc::bench {

enum class replay_mode {
  simple,          ///< bulk structure, independent finds
  work_efficient,  ///< bulk structure, all finds through bulk_find
  seq_uf,          ///< sequential union by size, no compression
  seq_ufpc,        ///< sequential union by size with full path compression
};

std::string_view mode_name(replay_mode m);
std::optional<replay_mode> parse_mode(std::string_view name);

struct replay_options {
  replay_mode mode = replay_mode::simple;
  find_mode simple_find = find_mode::pragmatic;  ///< forest mode of the bulk modes
  bool check_oracle = false;
  std::size_t threads = 0;  ///< recorded in the report; configure the runtime separately
  std::uint64_t seed = 0x5eed5eed5eed5eedULL;
};

struct report_row {
  std::size_t index = 0;
  io::batch_kind kind = io::batch_kind::update;
  std::size_t size = 0;
  double seconds = 0;
  double throughput = 0;  ///< size / seconds (0 for an empty batch)
  std::size_t components = 0;
};

struct run_report {
  replay_mode mode = replay_mode::simple;
  find_mode simple_find = find_mode::pragmatic;
  std::size_t threads = 0;
  std::size_t n = 0;
  std::vector<report_row> rows;
  std::vector<std::vector<std::uint8_t>> answers;  ///< one entry per query batch

  double total_seconds = 0;
  double update_seconds = 0;
  double query_seconds = 0;
  std::size_t update_edges = 0;
  std::size_t queries = 0;
  double update_throughput = 0;  ///< update_edges / update_seconds
  double query_throughput = 0;

  /// Recomputes the aggregate fields from rows.
  void recompute();
};

/// First diverging batch of an oracle-checked run.
class oracle_mismatch : public std::runtime_error {
 public:
  oracle_mismatch(const std::string& what, std::size_t batch)
      : std::runtime_error(what), batch_(batch) {}
  std::size_t batch() const { return batch_; }

 private:
  std::size_t batch_;
};

/// Plays every batch in order, timing each bulk call (I/O excluded).
run_report replay(const io::stream_file& file, const replay_options& opts);

/// Per-row median wall time over trials of one configuration (upper median
/// for an even count). Throws std::invalid_argument on mismatched runs.
run_report median_of_trials(std::span<const run_report> runs);

/// (percent of update stream consumed, components) with a leading (0, n).
std::vector<std::pair<double, std::size_t>> component_curve(const run_report& report);

/// CSV header: batch,kind,size,seconds,throughput,components
void write_report_csv(std::ostream& out, const run_report& report);
/// CSV header: percent,components
void write_curve_csv(std::ostream& out, const run_report& report);

}  // namespace bulkcc::bench
