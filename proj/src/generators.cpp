#include "bulkcc/generators.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bulkcc/parprim.hpp"

namespace bulkcc::gen {

namespace {

using rng = std::mt19937_64;

// Uniform in [0, bound); multiply-high keeps the sequence library-independent.
std::uint64_t draw_below(rng& g, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(g()) * bound) >> 64);
}

// Integer threshold t with P(draw53 < t) = p for a 53-bit uniform draw.
std::uint64_t threshold53(double p) {
  return static_cast<std::uint64_t>(std::ldexp(std::min(std::max(p, 0.0), 1.0), 53));
}

std::size_t grid_side(std::size_t n) {
  auto s = static_cast<std::size_t>(std::llround(std::cbrt(static_cast<double>(n))));
  while (s * s * s > n) --s;
  while ((s + 1) * (s + 1) * (s + 1) <= n) ++s;
  return s;
}

std::size_t natural_edge_count(const stream_spec& s) {
  switch (s.kind) {
    case family::grid3d: {
      const std::size_t side = grid_side(s.n);
      return side == 0 ? 0 : 3 * side * side * (side - 1);
    }
    case family::random_k:
    case family::local:
      return s.n * s.k;
    case family::rmat:
      return 0;
  }
  return 0;
}

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument("stream spec: " + what); }

template <class Sink>
void emit_grid(const stream_spec& s, Sink&& sink) {
  const std::size_t side = grid_side(s.n);
  for (std::size_t id = 0; id < s.n; ++id) {
    const std::size_t x = id % side, y = (id / side) % side, z = id / (side * side);
    const auto v = static_cast<vertex>(id);
    if (x + 1 < side && !sink(edge{v, static_cast<vertex>(id + 1)})) return;
    if (y + 1 < side && !sink(edge{v, static_cast<vertex>(id + side)})) return;
    if (z + 1 < side && !sink(edge{v, static_cast<vertex>(id + side * side)})) return;
  }
}

template <class Sink>
void emit_random_k(const stream_spec& s, Sink&& sink) {
  rng g(s.seed);
  for (std::size_t u = 0; u < s.n; ++u) {
    for (std::size_t j = 0; j < s.k; ++j) {
      if (!sink(edge{static_cast<vertex>(u), static_cast<vertex>(draw_below(g, s.n))})) return;
    }
  }
}

// Neighbor offset 1 + Geometric(4 / window), redrawn until it fits the
// window, with a random sign; ids wrap around.
template <class Sink>
void emit_local(const stream_spec& s, Sink&& sink) {
  rng g(s.seed);
  const std::size_t window = std::min(s.window, s.n - 1);
  for (std::size_t u = 0; u < s.n; ++u) {
    for (std::size_t j = 0; j < s.k; ++j) {
      std::size_t dist;
      do {
        dist = 1;
        while (dist <= window && draw_below(g, s.window) >= 4) ++dist;
      } while (dist > window);
      const bool down = g() >> 63;
      const std::size_t v = down ? (u + s.n - dist) % s.n : (u + dist) % s.n;
      if (!sink(edge{static_cast<vertex>(u), static_cast<vertex>(v)})) return;
    }
  }
}

template <class Sink>
void emit_rmat(const stream_spec& s, Sink&& sink) {
  rng g(s.seed);
  const int levels = std::countr_zero(s.n);
  const std::uint64_t ta = threshold53(s.a);
  const std::uint64_t tab = threshold53(s.a + s.b);
  const std::uint64_t tabc = threshold53(s.a + s.b + s.c);
  for (std::size_t e = 0; e < s.m; ++e) {
    std::uint64_t u = 0, v = 0;
    for (int l = 0; l < levels; ++l) {
      const std::uint64_t r = g() >> 11;
      const std::uint64_t row = r >= tab;
      const std::uint64_t col = (r >= ta && r < tab) || r >= tabc;
      u = (u << 1) | row;
      v = (v << 1) | col;
    }
    if (!sink(edge{static_cast<vertex>(u), static_cast<vertex>(v)})) return;
  }
}

}  // namespace

std::string_view family_name(family f) {
  switch (f) {
    case family::grid3d: return "grid3d";
    case family::random_k: return "random";
    case family::local: return "local";
    case family::rmat: return "rmat";
  }
  return "?";
}

stream_spec validate(stream_spec s) {
  if (s.n == 0) invalid("n must be positive");
  if (s.batch_size == 0) invalid("batch size must be at least 1");
  switch (s.kind) {
    case family::grid3d: {
      const std::size_t side = grid_side(s.n);
      if (side * side * side != s.n) invalid("grid3d needs n to be a perfect cube");
      break;
    }
    case family::random_k:
      if (s.k == 0) invalid("k must be positive");
      break;
    case family::local:
      if (s.k == 0) invalid("average degree must be positive");
      if (s.n < 2) invalid("local needs n >= 2");
      if (s.window < 4) invalid("local window must be at least 4");
      break;
    case family::rmat: {
      for (double p : {s.a, s.b, s.c, s.d}) {
        if (!(p >= 0.0)) invalid("rmat probabilities must be non-negative");
      }
      if (std::abs(s.a + s.b + s.c + s.d - 1.0) > 1e-9) invalid("rmat probabilities must sum to 1");
      if (s.m == 0) invalid("rmat needs m");
      s.n = std::bit_ceil(s.n);
      break;
    }
  }
  if (s.n > max_vertices) invalid("n too large");
  if ((s.kind == family::random_k || s.kind == family::local) && s.m > s.n * s.k) {
    s.k = (s.m + s.n - 1) / s.n;  // an explicit m wins over the degree
  }
  if (s.kind != family::rmat) {
    const std::size_t natural = natural_edge_count(s);
    if (s.m == 0) s.m = natural;
    if (s.m > natural) invalid("m exceeds the family's edge count (" + std::to_string(natural) + ")");
  }
  return s;
}

stream_spec parse_spec(std::string_view text) {
  stream_spec s;
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  if (name == "grid3d") s.kind = family::grid3d;
  else if (name == "random") s.kind = family::random_k;
  else if (name == "local") s.kind = family::local;
  else if (name == "rmat") s.kind = family::rmat;
  else invalid("unknown family '" + std::string(name) + "'");
  if (colon == std::string_view::npos) return s;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) invalid("expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    auto as_size = [&]() -> std::size_t {
      // Accept plain integers and scientific shorthand such as 1e6.
      std::size_t x = 0;
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
      if (ec == std::errc() && p == value.data() + value.size()) return x;
      try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used == value.size() && d >= 0 && d == std::floor(d)) return static_cast<std::size_t>(d);
      } catch (const std::exception&) {
      }
      invalid("bad integer for " + key + ": '" + value + "'");
    };
    auto as_double = [&]() -> double {
      try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used == value.size()) return d;
      } catch (const std::exception&) {
      }
      invalid("bad number for " + key + ": '" + value + "'");
    };
    if (key == "n") s.n = as_size();
    else if (key == "m") s.m = as_size();
    else if (key == "k" || key == "deg") s.k = as_size();
    else if (key == "window") s.window = as_size();
    else if (key == "a") s.a = as_double();
    else if (key == "b") s.b = as_double();
    else if (key == "c") s.c = as_double();
    else if (key == "d") s.d = as_double();
    else if (key == "seed") s.seed = as_size();
    else if (key == "batch") s.batch_size = as_size();
    else if (key == "shuffle") s.shuffle_within_batch = as_size() != 0;
    else invalid("unknown key '" + key + "'");
  }
  return s;
}

std::vector<edge> generate_edges(const stream_spec& spec) {
  const stream_spec s = validate(spec);
  std::vector<edge> out;
  out.reserve(s.m);
  auto sink = [&](edge e) {
    out.push_back(e);
    return out.size() < s.m;
  };
  if (s.m == 0) return out;
  switch (s.kind) {
    case family::grid3d: emit_grid(s, sink); break;
    case family::random_k: emit_random_k(s, sink); break;
    case family::local: emit_local(s, sink); break;
    case family::rmat: emit_rmat(s, sink); break;
  }
  return out;
}

std::vector<std::vector<edge>> generate(const stream_spec& spec) {
  const stream_spec s = validate(spec);
  const std::vector<edge> all = generate_edges(s);
  std::vector<std::vector<edge>> batches;
  batches.reserve((all.size() + s.batch_size - 1) / s.batch_size);
  for (std::size_t lo = 0, b = 0; lo < all.size(); lo += s.batch_size, ++b) {
    const std::size_t hi = std::min(all.size(), lo + s.batch_size);
    auto& batch = batches.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(lo),
                                       all.begin() + static_cast<std::ptrdiff_t>(hi));
    if (s.shuffle_within_batch) {
      rng g(parprim::mix64(s.seed ^ (b + 1)));
      for (std::size_t i = batch.size(); i > 1; --i) {
        std::swap(batch[i - 1], batch[draw_below(g, i)]);
      }
    }
  }
  return batches;
}

std::vector<edge> random_pairs(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0 && count > 0) invalid("random_pairs needs n > 0");
  rng g(seed);
  std::vector<edge> out(count);
  for (auto& e : out) {
    e.u = static_cast<vertex>(draw_below(g, n));
    e.v = static_cast<vertex>(draw_below(g, n));
  }
  return out;
}

}  // namespace bulkcc::gen
