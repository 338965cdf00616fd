#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bulkcc/bulk.hpp"
#include "bulkcc/bulk_find.hpp"
#include "bulkcc/components.hpp"
#include "bulkcc/generators.hpp"
#include "bulkcc/parallel.hpp"
#include "bulkcc/replay.hpp"
#include "bulkcc/stream_io.hpp"

namespace py = pybind11;
using namespace bulkcc;

namespace {

using pair_array = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;
using id_array = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;

// Any (m, 2) integer array-like; ids are range-checked by the library.
std::vector<edge> to_edges(const pair_array& a) {
  if (a.size() == 0) return {};
  if (a.ndim() != 2 || a.shape(1) != 2) throw py::value_error("expected an (m, 2) array of vertex pairs");
  auto r = a.unchecked<2>();
  std::vector<edge> out(static_cast<std::size_t>(r.shape(0)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i) {
    const auto u = r(i, 0), v = r(i, 1);
    if (u < 0 || v < 0 || u > static_cast<std::int64_t>(max_vertices) ||
        v > static_cast<std::int64_t>(max_vertices)) {
      throw py::value_error("vertex id out of range");
    }
    out[static_cast<std::size_t>(i)] = {static_cast<vertex>(u), static_cast<vertex>(v)};
  }
  return out;
}

std::vector<vertex> to_ids(const id_array& a) {
  std::vector<vertex> out(static_cast<std::size_t>(a.size()));
  const std::int64_t* p = a.data();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (p[i] < 0 || p[i] > static_cast<std::int64_t>(max_vertices)) throw py::value_error("vertex id out of range");
    out[i] = static_cast<vertex>(p[i]);
  }
  return out;
}

py::array_t<std::uint32_t> edges_array(const std::vector<edge>& es) {
  py::array_t<std::uint32_t> out({static_cast<py::ssize_t>(es.size()), py::ssize_t{2}});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < es.size(); ++i) {
    w(static_cast<py::ssize_t>(i), 0) = es[i].u;
    w(static_cast<py::ssize_t>(i), 1) = es[i].v;
  }
  return out;
}

find_strategy strategy_of(const std::string& s) {
  if (s == "independent" || s == "simple") return find_strategy::independent;
  if (s == "bulk_find" || s == "workEfficient") return find_strategy::bulk_find;
  throw py::value_error("strategy must be 'independent' or 'bulk_find'");
}

}  // namespace

PYBIND11_MODULE(_bulkcc, m) {
  m.doc() = "Bulk-parallel incremental connectivity";

  py::register_exception<contract_violation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<io::stream_parse_error>(m, "StreamParseError", PyExc_ValueError);

  m.def("set_num_threads", &par::set_num_threads, py::arg("threads"), "0 restores the default");
  m.def("num_workers", &par::num_workers);
  m.def("set_debug_checks", &set_debug_checks, py::arg("on"));

  py::class_<union_find_forest>(m, "Forest")
      .def(py::init([](std::size_t n, bool compress) {
             return union_find_forest(n, compress ? find_mode::pragmatic : find_mode::plain);
           }),
           py::arg("n"), py::arg("compress") = true)
      .def_static("from_parents",
                  [](const id_array& parents, bool compress) {
                    return union_find_forest::from_parents(to_ids(parents),
                                                           compress ? find_mode::pragmatic : find_mode::plain);
                  },
                  py::arg("parents"), py::arg("compress") = false)
      .def("__len__", &union_find_forest::num_vertices)
      .def("find", &union_find_forest::find, py::arg("u"))
      .def("find_root", &union_find_forest::find_root, py::arg("u"))
      .def("union_roots", &union_find_forest::union_roots, py::arg("u"), py::arg("v"))
      .def("count_components", &union_find_forest::count_components)
      .def("max_depth", &union_find_forest::max_depth)
      .def("check_invariants", &union_find_forest::check_invariants)
      .def_property_readonly("parents", [](const union_find_forest& f) {
        auto p = f.parents();
        return py::array_t<std::uint32_t>(static_cast<py::ssize_t>(p.size()), p.data());
      })
      .def("update",
           [](union_find_forest& f, const pair_array& batch, const std::string& strategy, std::uint64_t seed) {
             const auto es = to_edges(batch);
             update_stats st;
             {
               py::gil_scoped_release release;
               st = bulk_update(f, es, strategy_of(strategy), seed);
             }
             py::dict d;
             d["edges"] = st.edges;
             d["crossing_edges"] = st.crossing_edges;
             d["components_joined"] = st.components_joined;
             d["unions"] = st.unions;
             return d;
           },
           py::arg("batch"), py::arg("strategy") = "independent", py::arg("seed") = 0x5eed5eed5eed5eedULL)
      .def("query",
           [](union_find_forest& f, const pair_array& queries, const std::string& strategy) {
             const auto qs = to_edges(queries);
             std::vector<std::uint8_t> ans;
             {
               py::gil_scoped_release release;
               ans = bulk_query(f, qs, strategy_of(strategy));
             }
             py::array_t<bool> out(static_cast<py::ssize_t>(ans.size()));
             auto w = out.mutable_unchecked<1>();
             for (std::size_t i = 0; i < ans.size(); ++i) w(static_cast<py::ssize_t>(i)) = ans[i] != 0;
             return out;
           },
           py::arg("queries"), py::arg("strategy") = "independent")
      .def("bulk_find",
           [](union_find_forest& f, const id_array& queries, std::uint64_t seed) {
             const auto qs = to_ids(queries);
             bulk_find_options o;
             o.seed = seed;
             const auto r = bulk_find(f, qs, o);
             py::dict d;
             d["roots"] = py::array_t<std::uint32_t>(static_cast<py::ssize_t>(r.roots.size()), r.roots.data());
             d["trail_size"] = r.trail_size;
             d["root_records"] = r.root_records;
             d["phase1_rounds"] = r.phase1_rounds;
             d["phase2_rounds"] = r.phase2_rounds;
             return d;
           },
           py::arg("queries"), py::arg("seed") = 0x2545f4914f6cdd1dULL);

  m.def("parallel_join",
        [](union_find_forest& f, const id_array& roots) {
          const auto rs = to_ids(roots);
          join_stats st;
          const vertex r = parallel_join(f, rs, &st);
          return py::make_tuple(r, st.unions, st.depth);
        },
        py::arg("forest"), py::arg("roots"), "Returns (root, unions, depth).");

  m.def("connected_components",
        [](const pair_array& edges, std::uint64_t seed) {
          const auto es = to_edges(edges);
          cc_options o;
          o.seed = seed;
          const auto p = connected_components(es, o);
          py::list out;
          for (std::size_t i = 0; i < p.size(); ++i) {
            const auto c = p[i];
            out.append(py::array_t<std::uint32_t>(static_cast<py::ssize_t>(c.size()), c.data()));
          }
          return out;
        },
        py::arg("edges"), py::arg("seed") = 0x5eed5eed5eed5eedULL);

  m.def("generate_edges",
        [](const std::string& spec) { return edges_array(gen::generate_edges(gen::validate(gen::parse_spec(spec)))); },
        py::arg("spec"), "Edges of a synthetic stream, e.g. 'rmat:n=1024,m=4096,seed=3'.");

  m.def("replay",
        [](const std::string& path, const std::string& mode, bool check_oracle) {
          const auto parsed = bench::parse_mode(mode);
          if (!parsed) throw py::value_error("unknown mode '" + mode + "'");
          const auto file = io::read_stream(path);
          bench::replay_options o;
          o.mode = *parsed;
          o.check_oracle = check_oracle;
          o.threads = par::num_workers();
          const auto r = bench::replay(file, o);
          py::list rows;
          for (const auto& row : r.rows) {
            rows.append(py::make_tuple(row.index, row.kind == io::batch_kind::update ? "update" : "query", row.size,
                                       row.seconds, row.components));
          }
          py::dict d;
          d["rows"] = rows;
          d["answers"] = r.answers;
          d["update_throughput"] = r.update_throughput;
          return d;
        },
        py::arg("path"), py::arg("mode") = "simple", py::arg("check_oracle") = false);

  py::register_exception<bench::oracle_mismatch>(m, "OracleMismatch", PyExc_RuntimeError);
}
