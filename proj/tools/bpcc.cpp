// bpcc: replay minibatch streams through the bulk-parallel connectivity
// structure or the sequential baselines, and report per-batch timings.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 oracle mismatch.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bulkcc/generators.hpp"
#include "bulkcc/parallel.hpp"
#include "bulkcc/replay.hpp"
#include "bulkcc/stream_io.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_mismatch = 3;

bulkcc::io::stream_file stream_from_spec(bulkcc::gen::stream_spec spec, std::size_t queries_per_batch) {
  spec = bulkcc::gen::validate(spec);
  bulkcc::io::stream_file file;
  file.n = spec.n;
  const auto batches = bulkcc::gen::generate(spec);
  for (std::size_t i = 0; i < batches.size(); ++i) {
    file.batches.push_back({bulkcc::io::batch_kind::update, batches[i]});
    if (queries_per_batch > 0) {
      file.batches.push_back({bulkcc::io::batch_kind::query,
                              bulkcc::gen::random_pairs(spec.n, queries_per_batch, spec.seed * 7919 + i)});
    }
  }
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bulk-parallel incremental connectivity: stream replay and benchmark harness"};

  std::string input;
  std::string generate;
  std::size_t batch_size = 0;
  std::string mode_text = "simple";
  std::size_t threads = 0;
  std::size_t trials = 1;
  bool check_oracle = false;
  bool plain_find = false;
  std::string out_csv;
  std::string components_csv;
  std::size_t queries_per_batch = 0;
  std::string write_path;
  bool write_text = false;

  auto* source = app.add_option_group("source");
  source->add_option("--input", input, "Stream file (binary or text)")->check(CLI::ExistingFile);
  source->add_option("--generate", generate,
                     "Synthetic stream FAMILY:n=..,m=..,seed=.. (grid3d | random | local | rmat)");
  source->require_option(1);
  app.add_option("--batch-size", batch_size, "Edges per minibatch for --generate");
  app.add_option("--mode", mode_text, "simple | workEfficient | seqUF | seqUFPC");
  app.add_option("--threads", threads, "Worker threads (0 = all)");
  app.add_option("--trials", trials, "Repeat the run and report the median per batch")
      ->check(CLI::PositiveNumber);
  app.add_flag("--check-oracle", check_oracle, "Run the sequential oracle in lockstep");
  app.add_flag("--plain-find", plain_find, "Bulk modes: finds without path compression");
  app.add_option("--out", out_csv, "Per-batch report CSV");
  app.add_option("--components-out", components_csv, "Component-count curve CSV");
  app.add_option("--queries-per-batch", queries_per_batch,
                 "--generate: random query batch of this size after every update batch");
  app.add_option("--write-stream", write_path, "Write the input stream to this path and exit");
  app.add_flag("--text", write_text, "--write-stream in the text format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  const auto mode = bulkcc::bench::parse_mode(mode_text);
  if (!mode) {
    std::cerr << "unknown --mode '" << mode_text << "'\n";
    return exit_usage;
  }

  bulkcc::io::stream_file file;
  try {
    if (!input.empty()) {
      file = bulkcc::io::read_stream(input);
    } else {
      auto spec = bulkcc::gen::parse_spec(generate);
      if (batch_size > 0) spec.batch_size = batch_size;
      file = stream_from_spec(spec, queries_per_batch);
    }
  } catch (const bulkcc::io::stream_parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  }

  if (!write_path.empty()) {
    bulkcc::io::write_stream(write_path, file,
                             write_text ? bulkcc::io::stream_format::text : bulkcc::io::stream_format::binary);
    return exit_ok;
  }

  bulkcc::par::set_num_threads(threads);
  bulkcc::bench::replay_options opts;
  opts.mode = *mode;
  opts.simple_find = plain_find ? bulkcc::find_mode::plain : bulkcc::find_mode::pragmatic;
  opts.check_oracle = check_oracle;
  opts.threads = threads == 0 ? bulkcc::par::num_workers() : threads;

  std::vector<bulkcc::bench::run_report> runs;
  try {
    for (std::size_t t = 0; t < trials; ++t) runs.push_back(bulkcc::bench::replay(file, opts));
  } catch (const bulkcc::bench::oracle_mismatch& e) {
    std::cerr << "oracle mismatch at batch " << e.batch() << ": " << e.what() << '\n';
    return exit_mismatch;
  }
  const auto report = bulkcc::bench::median_of_trials(runs);

  if (!out_csv.empty()) {
    std::ofstream out(out_csv);
    bulkcc::bench::write_report_csv(out, report);
  }
  if (!components_csv.empty()) {
    std::ofstream out(components_csv);
    bulkcc::bench::write_curve_csv(out, report);
  }

  std::cout << "mode=" << bulkcc::bench::mode_name(report.mode) << " threads=" << report.threads
            << " n=" << report.n << " batches=" << report.rows.size() << " trials=" << trials << '\n'
            << "update: edges=" << report.update_edges << " seconds=" << report.update_seconds
            << " edges/s=" << report.update_throughput << '\n'
            << "query:  pairs=" << report.queries << " seconds=" << report.query_seconds
            << " pairs/s=" << report.query_throughput << '\n'
            << "components=" << (report.rows.empty() ? report.n : report.rows.back().components)
            << (check_oracle ? " oracle=ok" : "") << '\n';
  return exit_ok;
}
