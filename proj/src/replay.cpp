#include "bulkcc/replay.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>

#include "bulkcc/bulk.hpp"
#include "bulkcc/parprim.hpp"

namespace bulkcc::bench {

namespace {

using clock = std::chrono::steady_clock;

double throughput_of(std::size_t size, double seconds) {
  return seconds > 0 ? static_cast<double>(size) / seconds : 0.0;
}

bool is_bulk(replay_mode m) { return m == replay_mode::simple || m == replay_mode::work_efficient; }

// Checks that both root labelings induce the same partition of [0, n).
template <class RootA, class RootB>
std::optional<vertex> partition_divergence(std::size_t n, RootA&& ours, RootB&& theirs) {
  constexpr vertex unset = std::numeric_limits<vertex>::max();
  std::vector<vertex> fwd(n, unset), back(n, unset);
  for (std::size_t v = 0; v < n; ++v) {
    const vertex a = ours(static_cast<vertex>(v));
    const vertex b = theirs(static_cast<vertex>(v));
    if (fwd[a] == unset) fwd[a] = b;
    if (back[b] == unset) back[b] = a;
    if (fwd[a] != b || back[b] != a) return static_cast<vertex>(v);
  }
  return std::nullopt;
}

}  // namespace

std::string_view mode_name(replay_mode m) {
  switch (m) {
    case replay_mode::simple: return "simple";
    case replay_mode::work_efficient: return "workEfficient";
    case replay_mode::seq_uf: return "seqUF";
    case replay_mode::seq_ufpc: return "seqUFPC";
  }
  return "?";
}

std::optional<replay_mode> parse_mode(std::string_view name) {
  for (auto m : {replay_mode::simple, replay_mode::work_efficient, replay_mode::seq_uf,
                 replay_mode::seq_ufpc}) {
    if (name == mode_name(m)) return m;
  }
  return std::nullopt;
}

void run_report::recompute() {
  total_seconds = update_seconds = query_seconds = 0;
  update_edges = queries = 0;
  for (auto& r : rows) {
    r.throughput = throughput_of(r.size, r.seconds);
    total_seconds += r.seconds;
    if (r.kind == io::batch_kind::update) {
      update_seconds += r.seconds;
      update_edges += r.size;
    } else {
      query_seconds += r.seconds;
      queries += r.size;
    }
  }
  update_throughput = throughput_of(update_edges, update_seconds);
  query_throughput = throughput_of(queries, query_seconds);
}

run_report replay(const io::stream_file& file, const replay_options& opts) {
  run_report report;
  report.mode = opts.mode;
  report.simple_find = opts.simple_find;
  report.threads = opts.threads;
  report.n = file.n;

  std::optional<union_find_forest> forest;
  std::optional<sequential_union_find> seq;
  if (is_bulk(opts.mode)) {
    forest.emplace(file.n, opts.simple_find);
  } else {
    seq.emplace(file.n, opts.mode == replay_mode::seq_ufpc);
  }
  std::optional<sequential_union_find> oracle;
  if (opts.check_oracle) oracle.emplace(file.n, true);
  const find_strategy strategy = opts.mode == replay_mode::work_efficient
                                     ? find_strategy::bulk_find
                                     : find_strategy::independent;

  for (std::size_t i = 0; i < file.batches.size(); ++i) {
    const io::stream_batch& batch = file.batches[i];
    report_row row;
    row.index = i;
    row.kind = batch.kind;
    row.size = batch.pairs.size();

    if (batch.kind == io::batch_kind::update) {
      const auto t0 = clock::now();
      if (forest) {
        bulk_update(*forest, batch.pairs, strategy, parprim::mix64(opts.seed + i));
      } else {
        for (const edge& e : batch.pairs) seq->unite(e.u, e.v);
      }
      row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
      if (oracle) {
        for (const edge& e : batch.pairs) oracle->unite(e.u, e.v);
      }
    } else {
      std::vector<std::uint8_t> answers;
      const auto t0 = clock::now();
      if (forest) {
        answers = bulk_query(*forest, batch.pairs, strategy);
      } else {
        answers.resize(batch.pairs.size());
        for (std::size_t j = 0; j < batch.pairs.size(); ++j) {
          answers[j] = seq->connected(batch.pairs[j].u, batch.pairs[j].v);
        }
      }
      row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
      if (oracle) {
        for (std::size_t j = 0; j < batch.pairs.size(); ++j) {
          const bool expected = oracle->connected(batch.pairs[j].u, batch.pairs[j].v);
          if (static_cast<bool>(answers[j]) != expected) {
            throw oracle_mismatch("batch " + std::to_string(i) + ", query " + std::to_string(j) +
                                      " (" + std::to_string(batch.pairs[j].u) + ", " +
                                      std::to_string(batch.pairs[j].v) + "): answered " +
                                      (answers[j] ? "true" : "false") + ", oracle " +
                                      (expected ? "true" : "false"),
                                  i);
          }
        }
      }
      report.answers.push_back(std::move(answers));
    }
    row.throughput = throughput_of(row.size, row.seconds);
    row.components = forest ? forest->count_components() : seq->count_components();
    if (oracle && row.components != oracle->count_components()) {
      throw oracle_mismatch("batch " + std::to_string(i) + ": " + std::to_string(row.components) +
                                " components, oracle " + std::to_string(oracle->count_components()),
                            i);
    }
    report.rows.push_back(row);
  }

  if (oracle && !file.batches.empty()) {
    std::optional<vertex> bad;
    if (forest) {
      bad = partition_divergence(
          file.n, [&](vertex v) { return forest->find_root(v); },
          [&](vertex v) { return oracle->find(v); });
    } else {
      bad = partition_divergence(
          file.n, [&](vertex v) { return seq->find(v); }, [&](vertex v) { return oracle->find(v); });
    }
    if (bad) {
      throw oracle_mismatch("final partition differs from oracle at vertex " + std::to_string(*bad),
                            file.batches.size() - 1);
    }
  }
  report.recompute();
  return report;
}

run_report median_of_trials(std::span<const run_report> runs) {
  if (runs.empty()) throw std::invalid_argument("median_of_trials: no runs");
  const run_report& first = runs.front();
  for (const auto& r : runs) {
    bool same = r.mode == first.mode && r.simple_find == first.simple_find &&
                r.threads == first.threads && r.n == first.n && r.rows.size() == first.rows.size();
    for (std::size_t i = 0; same && i < r.rows.size(); ++i) {
      same = r.rows[i].kind == first.rows[i].kind && r.rows[i].size == first.rows[i].size &&
             r.rows[i].components == first.rows[i].components;
    }
    if (!same) throw std::invalid_argument("median_of_trials: runs differ in configuration");
  }
  run_report out = first;
  std::vector<double> times(runs.size());
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    for (std::size_t t = 0; t < runs.size(); ++t) times[t] = runs[t].rows[i].seconds;
    auto mid = times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2);
    std::nth_element(times.begin(), mid, times.end());
    out.rows[i].seconds = *mid;
  }
  out.recompute();
  return out;
}

std::vector<std::pair<double, std::size_t>> component_curve(const run_report& report) {
  std::size_t total = 0;
  for (const auto& r : report.rows) {
    if (r.kind == io::batch_kind::update) total += r.size;
  }
  std::vector<std::pair<double, std::size_t>> curve{{0.0, report.n}};
  std::size_t seen = 0;
  for (const auto& r : report.rows) {
    if (r.kind != io::batch_kind::update) continue;
    seen += r.size;
    const double pct = total == 0 ? 100.0 : 100.0 * static_cast<double>(seen) / static_cast<double>(total);
    curve.emplace_back(pct, r.components);
  }
  return curve;
}

void write_report_csv(std::ostream& out, const run_report& report) {
  out << "batch,kind,size,seconds,throughput,components\n";
  out << std::setprecision(9);
  for (const auto& r : report.rows) {
    out << r.index << ',' << (r.kind == io::batch_kind::update ? "update" : "query") << ','
        << r.size << ',' << r.seconds << ',' << r.throughput << ',' << r.components << '\n';
  }
}

void write_curve_csv(std::ostream& out, const run_report& report) {
  out << "percent,components\n";
  out << std::setprecision(9);
  for (const auto& [pct, comps] : component_curve(report)) out << pct << ',' << comps << '\n';
}

}  // namespace bulkcc::bench
