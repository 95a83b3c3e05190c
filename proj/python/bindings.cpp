#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "moufang/birep.hpp"
#include "moufang/catalog.hpp"
#include "moufang/cayley.hpp"
#include "moufang/classify.hpp"
#include "moufang/perm.hpp"
#include "moufang/perm_group.hpp"
#include "moufang/quotient.hpp"
#include "moufang/reconstruct.hpp"

namespace py = pybind11;
using namespace moufang;

namespace {

TrialitySub sub_from_name(const std::string& name) {
  for (TrialitySub sub : kAllTrialitySubs)
    if (to_string(sub) == name) return sub;
  throw std::invalid_argument("unknown substitution '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Moufang loops, their birepresentations and triality";

  py::class_<CayleyTable>(m, "CayleyTable")
      .def(py::init<std::vector<std::vector<int>>, std::vector<std::string>>(),
           py::arg("rows"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("order", &CayleyTable::order)
      .def("at", &CayleyTable::at)
      .def_property_readonly("rows", &CayleyTable::rows)
      .def_property_readonly("labels", &CayleyTable::labels)
      .def("label", &CayleyTable::label)
      .def("__eq__", [](const CayleyTable& a, const CayleyTable& b) { return a == b; })
      .def("__repr__", [](const CayleyTable& t) {
        return "<CayleyTable order " + std::to_string(t.order()) + ">";
      });

  m.def("parse_cayley_table",
        [](const std::string& text) { return parse_cayley_table(text); });
  m.def("format_cayley_table", &format_cayley_table);
  m.def("load_file", &load_file);
  m.def("save_file", &save_file);

  py::class_<ClassWitness>(m, "ClassWitness")
      .def_readonly("property", &ClassWitness::property)
      .def_readonly("triple", &ClassWitness::triple)
      .def_readonly("note", &ClassWitness::note);

  py::class_<AlgebraClass>(m, "AlgebraClass")
      .def_readonly("is_quasigroup", &AlgebraClass::is_quasigroup)
      .def_readonly("is_loop", &AlgebraClass::is_loop)
      .def_readonly("is_moufang", &AlgebraClass::is_moufang)
      .def_readonly("is_group", &AlgebraClass::is_group)
      .def_readonly("is_commutative", &AlgebraClass::is_commutative)
      .def_readonly("unit", &AlgebraClass::unit)
      .def_readonly("witnesses", &AlgebraClass::witnesses);

  m.def("classify", &classify);
  m.def("unit", &unit);
  m.def("inverse", &inverse);
  m.def("left_translation", &left_translation);
  m.def("right_translation", &right_translation);
  m.def("generated_subloop", &generated_subloop);

  py::class_<IdentityCheck>(m, "IdentityCheck")
      .def_readonly("identity", &IdentityCheck::identity)
      .def_readonly("passed", &IdentityCheck::passed)
      .def_readonly("witness", &IdentityCheck::witness);

  py::class_<DiassociativityReport>(m, "DiassociativityReport")
      .def_readonly("checks", &DiassociativityReport::checks)
      .def("all_passed", &DiassociativityReport::all_passed);

  m.def("check_diassociativity_identities", &check_diassociativity_identities);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("image", &Permutation::image)
      .def("__call__", &Permutation::operator())
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("cycle_string", &Permutation::cycle_string)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__mul__", [](const Permutation& a, const Permutation& b) {
        return compose(a, b);
      })
      .def("__repr__", &Permutation::to_string);

  m.def("compose", py::overload_cast<const Permutation&, const Permutation&>(&compose));
  m.def("inverse_perm", &inverse_perm);

  py::class_<PermGroup>(m, "PermGroup")
      .def_readonly("degree", &PermGroup::degree)
      .def_readonly("generators", &PermGroup::generators)
      .def_readonly("elements", &PermGroup::elements)
      .def_property_readonly("order", &PermGroup::order)
      .def("__contains__", [](const PermGroup& g, const Permutation& p) {
        return contains(g, p);
      });

  m.def("closure", &closure, py::arg("generators"),
        py::arg("max_order") = std::size_t{1000000});
  m.def("contains", &contains);

  py::class_<Violation>(m, "Violation")
      .def_readonly("g", &Violation::g)
      .def_readonly("h", &Violation::h)
      .def_readonly("lhs", &Violation::lhs)
      .def_readonly("rhs", &Violation::rhs);

  py::class_<RelationReport>(m, "RelationReport")
      .def_readonly("relation", &RelationReport::relation)
      .def_readonly("checked", &RelationReport::checked)
      .def_readonly("total_violations", &RelationReport::total_violations)
      .def_readonly("violations", &RelationReport::violations)
      .def("ok", &RelationReport::ok)
      .def("__repr__", [](const RelationReport& r) {
        return "<RelationReport '" + r.relation +
               (r.ok() ? "' ok>" : "' FAILED>");
      });

  py::class_<Birepresentation>(m, "Birepresentation")
      .def(py::init<CayleyTable, std::vector<Permutation>, std::vector<Permutation>>(),
           py::arg("loop"), py::arg("s_family"), py::arg("t_family"))
      .def_property_readonly("loop", &Birepresentation::loop)
      .def_property_readonly("degree", &Birepresentation::degree)
      .def("S", &Birepresentation::S)
      .def("T", &Birepresentation::T)
      .def_property_readonly("s_family", &Birepresentation::s_family)
      .def_property_readonly("t_family", &Birepresentation::t_family);

  m.def("validate_birepresentation", &validate_birepresentation);
  m.def("regular_birepresentation", &regular_birepresentation);

  py::class_<TrialityTriple>(m, "TrialityTriple")
      .def_readonly("base", &TrialityTriple::base)
      .def_readonly("p_family", &TrialityTriple::p)
      .def("S", &TrialityTriple::S)
      .def("T", &TrialityTriple::T)
      .def("P", &TrialityTriple::P);

  m.def("quadratic_family", &quadratic_family);
  m.def("make_triality_triple", &make_triality_triple);
  m.def("inverse_map_check", &inverse_map_check);
  m.def("commutation_check", &commutation_check);
  m.def("shifted_relation_check", &shifted_relation_check);
  m.def("division_expression_check", &division_expression_check);
  m.def("triality_pairs", &triality_pairs);
  m.def("triality_substitute", [](const TrialityTriple& t, const std::string& sub) {
    return triality_substitute(t, sub_from_name(sub));
  });
  m.def("kernel", &kernel);
  m.def("is_faithful", &is_faithful);
  m.def("enveloping_group", &enveloping_group, py::arg("birep"),
        py::arg("max_order") = std::size_t{1000000});
  m.def("triple_closure_check", &triple_closure_check);
  m.def("minimality_check", &minimality_check);
  m.def("is_associative_birep", &is_associative_birep);

  py::class_<AssociatorSet>(m, "AssociatorSet")
      .def_readonly("s_assoc", &AssociatorSet::s_assoc)
      .def_readonly("t_assoc", &AssociatorSet::t_assoc)
      .def_readonly("commutators", &AssociatorSet::commutators)
      .def_readonly("reversed_commutators", &AssociatorSet::reversed_commutators);

  m.def("associators", &associators);

  py::class_<InnerMaps>(m, "InnerMaps")
      .def_readonly("l_assoc", &InnerMaps::l_assoc)
      .def_readonly("m_plus", &InnerMaps::m_plus);

  m.def("inner_maps", &inner_maps);
  m.def("is_subloop", &is_subloop);
  m.def("is_normal_divisor", &is_normal_divisor);
  m.def("normal_divisors", &normal_divisors);

  py::class_<QuotientStructure>(m, "QuotientStructure")
      .def_readonly("parent", &QuotientStructure::parent)
      .def_readonly("divisor", &QuotientStructure::divisor)
      .def_readonly("cosets", &QuotientStructure::cosets)
      .def_readonly("projection", &QuotientStructure::projection)
      .def_readonly("quotient_table", &QuotientStructure::quotient_table)
      .def("coset_of", &QuotientStructure::coset_of);

  m.def("quotient", &quotient);
  m.def("pulled_back_birepresentation", &pulled_back_birepresentation);
  m.def("kernel_is_normal_check", &kernel_is_normal_check);

  py::class_<InducedBirepresentation>(m, "InducedBirepresentation")
      .def_readonly("structure", &InducedBirepresentation::structure)
      .def_readonly("birep", &InducedBirepresentation::birep);

  m.def("induced_birepresentation", &induced_birepresentation);

  py::class_<ConditionWitness>(m, "ConditionWitness")
      .def_readonly("condition", &ConditionWitness::condition)
      .def_readonly("g", &ConditionWitness::g)
      .def_readonly("h", &ConditionWitness::h)
      .def_readonly("detail", &ConditionWitness::detail);

  py::class_<ReconstructionVerdict>(m, "ReconstructionVerdict")
      .def_readonly("is_moufang_loop", &ReconstructionVerdict::is_moufang_loop)
      .def_readonly("unit", &ReconstructionVerdict::unit)
      .def_readonly("inverse_map", &ReconstructionVerdict::inverse_map)
      .def_readonly("failed", &ReconstructionVerdict::failed);

  py::class_<ReconstructionInput>(m, "ReconstructionInput")
      .def(py::init<>())
      .def_readwrite("groupoid", &ReconstructionInput::groupoid)
      .def_readwrite("degree", &ReconstructionInput::degree)
      .def_readwrite("s", &ReconstructionInput::s)
      .def_readwrite("t", &ReconstructionInput::t)
      .def_readwrite("p", &ReconstructionInput::p)
      .def_readwrite("bar", &ReconstructionInput::bar);

  m.def("check_conditions", &check_conditions);
  m.def("reconstruct_from_regular", &reconstruct_from_regular);
  m.def("forge_translation_input", &forge_translation_input);

  m.def("cyclic", &cyclic);
  m.def("klein_four", &klein_four);
  m.def("symmetric3", &symmetric3);
  m.def("chein_double", &chein_double);
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& entry : builtin_catalog()) names.push_back(entry.name);
    return names;
  });
  m.def("catalog_table",
        [](const std::string& name) { return catalog_entry(name).table; });
}
