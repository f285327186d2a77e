#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twinv/automorphism.hpp"
#include "twinv/characters.hpp"
#include "twinv/errors.hpp"
#include "twinv/group.hpp"
#include "twinv/harness.hpp"
#include "twinv/involutions.hpp"
#include "twinv/number_theory.hpp"

namespace py = pybind11;
using namespace twinv;

namespace {

CampaignFamily family_from_name(const std::string& name) {
  if (name == "dihedral") return CampaignFamily::Dihedral;
  if (name == "orders") return CampaignFamily::OrderClasses;
  if (name == "order_p") return CampaignFamily::OrderP;
  if (name == "order_p2") return CampaignFamily::OrderPSquared;
  if (name == "order_2p") return CampaignFamily::Order2P;
  if (name == "table1") return CampaignFamily::Table1;
  if (name == "indicators") return CampaignFamily::Indicators;
  throw UsageError("unknown campaign family '" + name + "'");
}

RecordFilter filter_from_name(const std::string& name) {
  if (name == "all") return RecordFilter::All;
  if (name == "equality") return RecordFilter::Equality;
  if (name == "none") return RecordFilter::None;
  throw UsageError("unknown record filter '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(twinv, m) {
  m.doc() = "Twisted involutions and character degree sums for dihedral and small abelian groups";
  m.attr("__version__") = kToolVersion;

  py::class_<DihedralElement>(m, "DihedralElement")
      .def(py::init<std::int64_t, bool>(), py::arg("k") = 0, py::arg("refl") = false)
      .def_readonly("k", &DihedralElement::k)
      .def_readonly("refl", &DihedralElement::refl)
      .def("__eq__", [](const DihedralElement& a, const DihedralElement& b) { return a == b; })
      .def("__hash__", [](const DihedralElement& a) { return py::hash(py::make_tuple(a.k, a.refl)); })
      .def("__repr__", [](const DihedralElement& a) { return to_string(Element{a}); });

  py::class_<CyclicElement>(m, "CyclicElement")
      .def(py::init<std::int64_t>(), py::arg("residue") = 0)
      .def_readonly("residue", &CyclicElement::residue)
      .def("__eq__", [](const CyclicElement& a, const CyclicElement& b) { return a == b; })
      .def("__hash__", [](const CyclicElement& a) { return py::hash(py::int_(a.residue)); })
      .def("__repr__", [](const CyclicElement& a) { return to_string(Element{a}); });

  py::class_<PairElement>(m, "PairElement")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("first") = 0, py::arg("second") = 0)
      .def_readonly("first", &PairElement::first)
      .def_readonly("second", &PairElement::second)
      .def("__eq__", [](const PairElement& a, const PairElement& b) { return a == b; })
      .def("__hash__", [](const PairElement& a) { return py::hash(py::make_tuple(a.first, a.second)); })
      .def("__repr__", [](const PairElement& a) { return to_string(Element{a}); });

  py::class_<Group>(m, "Group")
      .def_static("dihedral", &Group::dihedral, py::arg("l"))
      .def_static("cyclic", &Group::cyclic, py::arg("n"))
      .def_static("two_cyclic", &Group::two_cyclic, py::arg("m"), py::arg("n"))
      .def_static("parse", [](const std::string& s) { return Group::parse(s); }, py::arg("literal"))
      .def_property_readonly("name", &Group::name)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("is_abelian", &Group::is_abelian)
      .def("identity", &Group::identity)
      .def("mul", &Group::mul)
      .def("inv", &Group::inv)
      .def("element_order", &Group::element_order)
      .def("elements", &Group::elements)
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; })
      .def("__repr__", [](const Group& g) { return "Group('" + g.name() + "')"; });

  m.def("conjugacy_classes", &conjugacy_classes, py::arg("group"));

  py::class_<DihedralAut>(m, "DihedralAut")
      .def(py::init(&DihedralAut::make), py::arg("l"), py::arg("u"), py::arg("v"))
      .def_readonly("l", &DihedralAut::l)
      .def_readonly("u", &DihedralAut::u)
      .def_readonly("v", &DihedralAut::v)
      .def("__call__", [](const DihedralAut& a, const DihedralElement& x) { return apply(a, x); })
      .def("__mul__", [](const DihedralAut& a, const DihedralAut& b) { return compose(a, b); })
      .def("__eq__", [](const DihedralAut& a, const DihedralAut& b) { return a == b; })
      .def("__repr__", [](const DihedralAut& a) {
        return "DihedralAut(l=" + std::to_string(a.l) + ", u=" + std::to_string(a.u) + ", v=" + std::to_string(a.v) + ")";
      });

  py::class_<CyclicAut>(m, "CyclicAut")
      .def(py::init(&CyclicAut::make), py::arg("n"), py::arg("w"))
      .def_readonly("n", &CyclicAut::n)
      .def_readonly("w", &CyclicAut::w)
      .def("__repr__", [](const CyclicAut& a) { return "CyclicAut(n=" + std::to_string(a.n) + ", w=" + std::to_string(a.w) + ")"; });

  py::class_<MatrixAut>(m, "MatrixAut")
      .def(py::init(&MatrixAut::make), py::arg("n"), py::arg("entries"))
      .def_readonly("n", &MatrixAut::n)
      .def_readonly("entries", &MatrixAut::entries)
      .def("__repr__", [](const MatrixAut& a) { return "MatrixAut(n=" + std::to_string(a.n) + ", " + to_string(Automorphism{a}) + ")"; });

  m.def("enumerate_dihedral_auts", &enumerate_dihedral_auts, py::arg("l"));
  m.def("enumerate_automorphisms", &enumerate_automorphisms, py::arg("group"));
  m.def("parse_automorphism", [](const Group& g, const std::string& s) { return parse_automorphism(g, s); },
        py::arg("group"), py::arg("literal"));
  m.def("apply", py::overload_cast<const Group&, const Automorphism&, const Element&>(&apply), py::arg("group"),
        py::arg("aut"), py::arg("x"));
  m.def("is_involutive", &is_involutive, py::arg("aut"));
  m.def("brute_force_auts", &brute_force_auts, py::arg("group"));

  py::class_<ClosedFormCount>(m, "ClosedFormCount")
      .def_readonly("total", &ClosedFormCount::total)
      .def_readonly("rotations", &ClosedFormCount::rotations)
      .def_readonly("reflections", &ClosedFormCount::reflections)
      .def("__iter__", [](const ClosedFormCount& c) {
        return py::iter(py::make_tuple(c.total, c.rotations, c.reflections));
      })
      .def("__repr__", [](const ClosedFormCount& c) {
        return "ClosedFormCount(total=" + std::to_string(c.total) + ", rotations=" + std::to_string(c.rotations) +
               ", reflections=" + std::to_string(c.reflections) + ")";
      });

  m.def("count_closed_form", py::overload_cast<std::int64_t, std::int64_t, std::int64_t>(&count_closed_form),
        py::arg("l"), py::arg("u"), py::arg("v"));
  m.def("twisted_involution_set", &twisted_involution_set, py::arg("group"), py::arg("aut"));
  m.def("twisted_involution_count", &twisted_involution_count, py::arg("group"), py::arg("aut"));
  m.def("identity_involution_count", &identity_involution_count, py::arg("l"));
  m.def("max_twisted_count", &max_twisted_count, py::arg("l"));
  m.def("degree_sum", &degree_sum, py::arg("group"));

  py::class_<CongruenceSolution>(m, "CongruenceSolution")
      .def_readonly("solvable", &CongruenceSolution::solvable)
      .def_readonly("count", &CongruenceSolution::count)
      .def_readonly("solutions", &CongruenceSolution::solutions)
      .def_readonly("truncated", &CongruenceSolution::truncated);
  m.def("solve_linear_congruence", &solve_linear_congruence, py::arg("a"), py::arg("c"), py::arg("n"),
        py::arg("cap") = kDefaultSolutionCap);
  m.def("check_gcd_lcm_inequality", &check_gcd_lcm_inequality, py::arg("x1"), py::arg("x2"));
  m.def("check_gcd_triple_inequality", &check_gcd_triple_inequality, py::arg("x1"), py::arg("x2"), py::arg("x3"));
  m.def("gcd_of_neighbors", &gcd_of_neighbors, py::arg("x1"));

  py::class_<CharacterTable>(m, "CharacterTable")
      .def_readonly("group", &CharacterTable::group)
      .def_readonly("classes", &CharacterTable::classes)
      .def_readonly("labels", &CharacterTable::labels)
      .def_readonly("degrees", &CharacterTable::degrees)
      .def_readonly("values", &CharacterTable::values)
      .def("__len__", &CharacterTable::size);
  py::class_<TwistedIndicator>(m, "TwistedIndicator")
      .def_readonly("raw", &TwistedIndicator::raw)
      .def_readonly("integral", &TwistedIndicator::integral)
      .def_readonly("value", &TwistedIndicator::value);
  m.def("character_table", &character_table, py::arg("group"));
  m.def("fs_indicator", &fs_indicator, py::arg("table"), py::arg("irrep"));
  m.def("twisted_fs_indicator", &twisted_fs_indicator, py::arg("table"), py::arg("irrep"), py::arg("aut"));

  m.def(
      "run_campaign",
      [](const std::string& family, std::int64_t max_l, std::vector<std::int64_t> primes, const std::string& records,
         int jobs) {
        CampaignConfig cfg;
        cfg.family = family_from_name(family);
        cfg.max_l = max_l;
        cfg.primes = std::move(primes);
        cfg.records = filter_from_name(records);
        cfg.parallelism = jobs;
        CampaignReport report;
        {
          py::gil_scoped_release release;
          report = run_campaign(cfg);
        }
        std::ostringstream os;
        write_json(report, os);
        return os.str();
      },
      py::arg("family"), py::arg("max_l") = 60, py::arg("primes") = std::vector<std::int64_t>{2, 3, 5, 7},
      py::arg("records") = "all", py::arg("jobs") = 1,
      "Runs a campaign and returns its JSON report as a string.");
}
