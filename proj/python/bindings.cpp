#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringmap/catalog.hpp"
#include "ringmap/errors.hpp"
#include "ringmap/patchfill.hpp"

namespace py = pybind11;
using namespace ringmap;

namespace {

Caps make_caps(double seconds, std::uint64_t nodes, int threads) {
  Caps caps = caps_from_env();
  if (seconds > 0) caps.seconds = seconds;
  if (nodes > 0) caps.node_cap = nodes;
  if (threads >= 0) caps.threads = threads;
  return caps;
}

py::dict admissibility_dict(const Admissibility& a) {
  py::dict d;
  d["admissible"] = a.admissible();
  d["constrained"] = a.verdict == Admissibility::Verdict::Admissible;
  d["excess"] = a.excess;
  d["reason"] = a.reason;
  d["text"] = a.to_string();
  return d;
}

py::dict record_dict(const MapRecord& r) {
  py::dict d;
  d["p"] = r.p;
  d["q"] = r.q;
  d["n"] = r.n;
  d["inner_seq"] = r.inner_seq.to_string();
  d["outer_seq"] = r.outer_seq.to_string();
  d["V"] = r.V;
  d["E"] = r.E;
  d["F"] = r.F;
  d["aut_order"] = r.aut_order;
  d["self_complementary"] = r.self_complementary;
  d["two_paths"] = r.two_paths;
  d["non_polyhedral"] = r.non_polyhedral;
  d["x_inner"] = r.x_inner;
  d["x_outer"] = r.x_outer;
  d["canonical_hex"] = r.canonical.hex();
  return d;
}

py::dict map_dict(const AssembledMap& m) {
  py::dict d;
  std::vector<std::vector<int>> faces;
  for (int f = 0; f < m.map.num_faces(); ++f) faces.push_back(m.map.face_vertices(f));
  d["V"] = m.map.num_vertices();
  d["E"] = m.map.num_edges();
  d["F"] = m.map.num_faces();
  d["faces"] = faces;
  d["ring"] = m.ring;
  d["canonical_hex"] = canonical_form(m.map, m.ring_marks()).code.hex();
  return d;
}

}  // namespace

PYBIND11_MODULE(_ringmap, m) {
  m.doc() = "Rings of q-gons in 3-valent planar maps";

  py::register_exception<StructuralError>(m, "StructuralError");
  py::register_exception<ComplementUndefined>(m, "ComplementUndefined");
  py::register_exception<ResourceExhausted>(m, "ResourceExhausted");
  py::register_exception<GlueMismatch>(m, "GlueMismatch");
  py::register_exception<NotARing>(m, "NotARing");
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);

  m.def("admissible", [](int p, int q, int n) { return admissibility_dict(admissible(p, q, n)); },
        py::arg("p"), py::arg("q"), py::arg("n"));

  m.def(
      "scan_domain",
      [](int p_min, int p_max, int q_min, int q_max, int n_max) {
        std::vector<std::tuple<int, int, int>> out;
        for (auto& e : scan_domain(p_min, p_max, q_min, q_max, n_max))
          if (e.admissibility.admissible()) out.emplace_back(e.p, e.q, e.n);
        return out;
      },
      py::arg("p_min"), py::arg("p_max"), py::arg("q_min"), py::arg("q_max"), py::arg("n_max"),
      "Admissible (p, q, n) triples in the box.");

  m.def("canonical_seq",
        [](const std::string& s) { return canonical_seq(BoundarySequence::parse(s)).to_string(); });
  m.def(
      "q_complement",
      [](const std::string& s, int q) {
        return q_complement(BoundarySequence::parse(s), q).to_string();
      },
      py::arg("seq"), py::arg("q"));
  m.def(
      "is_self_complemented",
      [](const std::string& s, int q) { return is_self_complemented(BoundarySequence::parse(s), q); },
      py::arg("seq"), py::arg("q"));

  m.def(
      "fill",
      [](const std::string& s, int p, bool enumerate, std::uint64_t nodes) {
        FillOptions opts;
        if (nodes > 0) opts.node_cap = nodes;
        auto r = fill(BoundarySequence::parse(s), p, enumerate ? FillMode::Enumerate : FillMode::Decide,
                      opts);
        py::dict d;
        d["fillable"] = r.fillable;
        d["nodes"] = r.nodes;
        py::list patches;
        for (auto& patch : r.patches) {
          auto st = patch_stats(patch);
          py::dict pd;
          pd["faces"] = patch.faces;
          pd["boundary"] = patch.boundary;
          pd["f"] = st.f;
          pd["x"] = st.x;
          patches.append(pd);
        }
        d["patches"] = patches;
        return d;
      },
      py::arg("seq"), py::arg("p"), py::arg("enumerate") = false, py::arg("nodes") = 0);

  m.def(
      "pgonal_sequences",
      [](int p, int n, int k) {
        std::vector<std::string> out;
        for (auto& s : pgonal_sequences(p, n, k)) out.push_back(s.to_string());
        return out;
      },
      py::arg("p"), py::arg("n"), py::arg("k"));

  m.def(
      "pentagonal_table",
      [](int k_max) {
        std::map<std::pair<int, int>, std::vector<std::string>> out;
        for (auto& [key, seqs] : pentagonal_table(k_max))
          for (auto& s : seqs) out[key].push_back(s.to_string());
        return out;
      },
      py::arg("k_max"), "{(k, n): [sequence, ...]} for k <= k_max.");

  m.def(
      "enumerate_maps",
      [](int p, int q, int n, double seconds, std::uint64_t nodes, int threads) {
        Catalog cat;
        {
          py::gil_scoped_release release;
          cat = enumerate_maps(p, q, n, make_caps(seconds, nodes, threads));
        }
        py::dict d;
        d["p"] = p;
        d["q"] = q;
        d["n"] = n;
        d["complete"] = cat.complete;
        d["note"] = cat.note;
        d["seconds"] = cat.seconds;
        d["nodes"] = cat.nodes;
        py::list maps;
        for (auto& e : cat.entries) maps.append(record_dict(e.record));
        d["maps"] = maps;
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("n"), py::arg("seconds") = 0.0, py::arg("nodes") = 0,
      py::arg("threads") = -1);

  m.def(
      "catalog_json",
      [](int p, int q, int n) {
        py::gil_scoped_release release;
        return to_json(records_of(enumerate_maps(p, q, n, caps_from_env())));
      },
      py::arg("p"), py::arg("q"), py::arg("n"));

  m.def("prism", [](int p) { return map_dict(prism(p)); }, py::arg("p"));
  m.def("decorate_prism", [](int q) { return map_dict(decorate_prism(q)); }, py::arg("q"));
  m.def(
      "fulleroid",
      [](int t, int variant) {
        auto v = variant == 3 ? FulleroidVariant::Q5t3 : FulleroidVariant::Q5t2;
        return map_dict(fulleroid_M45(t, v));
      },
      py::arg("t"), py::arg("variant") = 2, "M_4(5, 5t+2) (variant 2) or M_4(5, 5t+3) (variant 3).");

  m.def(
      "planar_code",
      [](const std::string& hex) {
        return py::bytes(to_planar_code({map_from_canonical_hex(hex).map}));
      },
      py::arg("canonical_hex"));

  m.def(
      "verify_theorem",
      [](bool full, double seconds) {
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify_theorem(full ? VerifyScope::Full : VerifyScope::Fast,
                                  make_caps(seconds, 0, -1));
        }
        py::list out;
        for (auto& c : report.claims) {
          py::dict d;
          d["id"] = c.id;
          d["statement"] = c.statement;
          d["expected"] = c.expected;
          d["computed"] = c.computed;
          d["status"] = to_string(c.status);
          d["seconds"] = c.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("full") = false, py::arg("seconds") = 0.0);
}
