#include "cetqft/dsl.hpp"
#include "cetqft/framing.hpp"
#include "cetqft/report.hpp"
#include "cetqft/surface.hpp"
#include "cetqft/tqft.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cetqft;

namespace {

py::dict report_dict(const RelationReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["r"] = r.r;
  d["residual"] = r.residual;
  d["pass"] = r.pass;
  d["labelings"] = r.labelings;
  d["uses_K"] = r.uses_K;
  d["worst"] = r.worst;
  return d;
}

Lagrangian to_lagrangian(const std::vector<std::vector<long>>& rows) {
  Lagrangian L;
  for (auto& row : rows) {
    QVec v;
    for (long x : row) v.emplace_back(x);
    L.span.push_back(v);
  }
  return L;
}

}  // namespace

PYBIND11_MODULE(_cetqft, m) {
  m.doc() = "Quantum sl(2) basic data, Moore-Seiberg checks and invariants";

  m.def("q_int", [](int n, int r) { return q_int(n, Params(r)); }, py::arg("n"), py::arg("r"));
  m.def("fusion_range", [](int a, int b, int r) { return fusion_range(a, b, Params(r)); }, py::arg("m"),
        py::arg("n"), py::arg("r"));
  m.def("torus_S", [](int r) { return BasicData(r).torus_S(); }, py::arg("r"));
  m.def("scalar_C", [](int r) { return BasicData(r).scalar_C(); }, py::arg("r"));
  m.def("weight_S", [](int k, int r) { return BasicData(r).weight_S(k); }, py::arg("k"), py::arg("r"));
  m.def("weyl_D", [](int k, int r) { return weyl_D(k, Params(r)); }, py::arg("k"), py::arg("r"));
  m.def("r_matrix", [](int k, int kp, int r) { return r_matrix(k, kp, Params(r)); }, py::arg("k"), py::arg("kp"),
        py::arg("r"));

  m.def("relation_ids", &relation_ids);
  m.def(
      "verify",
      [](const std::string& id, int r, bool signs_on, double tol) {
        return report_dict(verify(id, BasicData(r), signs_on, tol));
      },
      py::arg("id"), py::arg("r"), py::arg("signs_on") = true, py::arg("tol") = 1e-8);
  m.def(
      "verify_all",
      [](int r, bool signs_on, double tol) {
        py::list out;
        for (auto& rep : verify_all(BasicData(r), signs_on, tol)) out.append(report_dict(rep));
        return out;
      },
      py::arg("r"), py::arg("signs_on") = true, py::arg("tol") = 1e-8);

  m.def("validate_surface", [](const std::string& text) { return validate(parse_surface(text)); }, py::arg("text"));
  m.def("normalize_surface", [](const std::string& text) { return serialize_surface(normalize(parse_surface(text))); },
        py::arg("text"));
  m.def("dual_surface", [](const std::string& text) { return serialize_surface(dual(parse_surface(text))); },
        py::arg("text"));
  m.def("apply_moves",
        [](const std::string& text, const std::string& word) {
          return serialize_surface(apply_word(parse_surface(text), word));
        },
        py::arg("text"), py::arg("word"));
  m.def("dim_V",
        [](const std::string& text, const std::vector<int>& labels, int r) {
          return dim_V(parse_surface(text), labels, r);
        },
        py::arg("text"), py::arg("labels"), py::arg("r"));

  m.def(
      "invariant_closed",
      [](const std::string& word, int r, long framing) {
        BasicData B(r);
        auto z = Tqft(B).invariant_closed(word, framing);
        return py::make_tuple(z.value, z.word_framing);
      },
      py::arg("word"), py::arg("r"), py::arg("framing") = 0);
  m.def(
      "torus_operator",
      [](const std::string& word, int r) {
        BasicData B(r);
        return Tqft(B).torus_operator(word);
      },
      py::arg("word"), py::arg("r"));

  m.def(
      "wall_sigma",
      [](const std::vector<std::vector<long>>& L1, const std::vector<std::vector<long>>& L2,
         const std::vector<std::vector<long>>& L3) {
        if (L1.empty() || L1[0].size() % 2) throw std::invalid_argument("wall_sigma: need even-dimensional vectors");
        SymplecticSpace V{static_cast<int>(L1[0].size() / 2)};
        return wall_sigma(V, to_lagrangian(L1), to_lagrangian(L2), to_lagrangian(L3));
      },
      py::arg("L1"), py::arg("L2"), py::arg("L3"));
  m.def("word_framing", [](const std::string& w) { return word_framing(w); }, py::arg("word"));

  m.def("report", [](const std::vector<int>& rs) { return render_text(report_records(rs)); },
        py::arg("rs") = std::vector<int>{3, 4, 5, 6});

  py::register_exception<SurfaceError>(m, "SurfaceError", PyExc_ValueError);
  py::register_exception<WordError>(m, "WordError", PyExc_ValueError);
  py::register_exception<FramingError>(m, "FramingError", PyExc_ValueError);
}
