#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entgeo/construction.hpp"
#include "entgeo/coordinates.hpp"
#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/grid.hpp"
#include "entgeo/order.hpp"
#include "entgeo/poset.hpp"
#include "entgeo/verify.hpp"

namespace py = pybind11;
using namespace entgeo;

namespace {

Dist dist_from_obj(const py::object& obj) {
  if (py::isinstance<Dist>(obj)) return obj.cast<Dist>();
  if (py::isinstance<py::str>(obj)) return Dist::parse(obj.cast<std::string>());
  std::vector<Rat> entries;
  for (const auto& item : obj)
    entries.push_back(parse_rat(py::str(item).cast<std::string>()));
  return Dist(std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_entgeo, m) {
  m.doc() = "Bayesian order on probability simplices: exact-rational order "
            "queries, coordinate decomposition, entropy, and the "
            "order-theoretic state-space construction";

  py::register_exception<Error>(m, "EntgeoError");

  py::class_<Dist>(m, "Dist")
      .def(py::init([](const py::object& obj) { return dist_from_obj(obj); }))
      .def_static("parse", &Dist::parse)
      .def("__len__", &Dist::size)
      .def("__getitem__",
           [](const Dist& d, std::size_t i) {
             if (i >= d.size()) throw py::index_error();
             return rat_str(d[i]);
           })
      .def("__str__", &Dist::str)
      .def("__repr__",
           [](const Dist& d) { return "Dist(\"" + d.str() + "\")"; })
      .def("__eq__", [](const Dist& a, const Dist& b) { return a == b; })
      .def("__hash__",
           [](const Dist& d) { return py::hash(py::str(d.str())); })
      .def("floats", [](const Dist& d) {
        std::vector<double> out;
        for (const Rat& r : d.entries()) out.push_back(rat_double(r));
        return out;
      });

  py::class_<Perm>(m, "Perm")
      .def(py::init<std::vector<std::size_t>>())
      .def_static("identity", &Perm::identity)
      .def("__call__",
           [](const Perm& p, std::size_t i) {
             if (i >= p.size()) throw py::index_error();
             return p(i);
           })
      .def("inverse", &Perm::inverse)
      .def("images", &Perm::images)
      .def("__str__", &Perm::str);

  m.def("bottom", &bottom, py::arg("n"));
  m.def(
      "leq",
      [](const py::object& x, const py::object& y) {
        return leq(dist_from_obj(x), dist_from_obj(y));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "leq_inductive",
      [](const py::object& x, const py::object& y) {
        return leq_inductive(dist_from_obj(x), dist_from_obj(y));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "joint_monotonization",
      [](const py::object& x, const py::object& y) -> py::object {
        const auto s = joint_monotonization(dist_from_obj(x), dist_from_obj(y));
        if (!s) return py::none();
        return py::cast(*s);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "is_maximal",
      [](const py::object& x) { return is_maximal(dist_from_obj(x)); },
      py::arg("x"));
  m.def(
      "shannon",
      [](const py::object& x, double base, bool normalized) {
        return shannon(dist_from_obj(x), base, normalized).value;
      },
      py::arg("x"), py::arg("base") = 2.0, py::arg("normalized") = false);
  m.def(
      "mix",
      [](const py::object& x, const py::object& y, const std::string& p) {
        return mix(dist_from_obj(x), dist_from_obj(y), parse_rat(p));
      },
      py::arg("x"), py::arg("y"), py::arg("p"));
  m.def(
      "coordinates",
      [](const py::object& x) {
        const Dist d = dist_from_obj(x);
        py::list out;
        for (const Coordinate& c : coordinates_of(d)) {
          py::list axis;
          for (std::size_t i = 0; i < d.size(); ++i)
            if (c.axis & (IndexSet{1} << i)) axis.append(i + 1);
          out.append(py::make_tuple(c.dist, axis));
        }
        return out;
      },
      py::arg("x"));
  m.def(
      "sup_coordinates",
      [](std::size_t n, const py::list& coords) {
        CoordSet cs;
        for (const auto& item : coords) {
          const Dist d = dist_from_obj(py::reinterpret_borrow<py::object>(item));
          cs.push_back({d, spectral_rep(d).blocks[0]});
        }
        return entgeo::sup_coordinates(n, cs);
      },
      py::arg("n"), py::arg("coords"));
  m.def("simplex_grid", &simplex_grid, py::arg("n"), py::arg("denominator"));
  m.def(
      "classical_grid",
      [](std::size_t n, std::size_t interior_levels) {
        return classical_grid(n, GammaChain::uniform(interior_levels));
      },
      py::arg("n"), py::arg("interior_levels") = 1);
  m.def(
      "check_classical_iso",
      [](std::size_t n, std::size_t interior_levels) {
        const IsoCertificate cert =
            check_classical_iso(n, GammaChain::uniform(interior_levels));
        return py::make_tuple(cert.ok, cert.pairing.size(), cert.failure);
      },
      py::arg("n"), py::arg("interior_levels") = 1);
  m.def(
      "verify",
      [](const std::string& suite, std::size_t n, unsigned denominator) {
        py::list out;
        for (const PropertyResult& r : verify::run_suite(suite, n, denominator))
          out.append(py::make_tuple(r.name, r.instances, r.pass, r.detail));
        return out;
      },
      py::arg("suite") = "all", py::arg("n") = 3, py::arg("denominator") = 6);
}
