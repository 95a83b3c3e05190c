#include "moufang/report.hpp"

#include <sstream>

namespace moufang {

using nlohmann::json;

json to_json(const Permutation& p) { return json(p.image()); }

json to_json(const AlgebraClass& c) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses)
    witnesses.push_back({{"property", w.property},
                         {"triple", w.triple},
                         {"note", w.note}});
  json out{{"quasigroup", c.is_quasigroup},
           {"loop", c.is_loop},
           {"moufang", c.is_moufang},
           {"group", c.is_group},
           {"commutative", c.is_commutative},
           {"witnesses", witnesses}};
  if (c.unit)
    out["unit"] = *c.unit;
  else
    out["unit"] = nullptr;
  return out;
}

json to_json(const RelationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"g", v.g},
                          {"h", v.h},
                          {"lhs", to_json(v.lhs)},
                          {"rhs", to_json(v.rhs)}});
  return json{{"relation", r.relation},
              {"checked", r.checked},
              {"violations", violations}};
}

json quotient_report_json(const QuotientStructure& q, bool faithful) {
  json divisor = json::array();
  for (element_t g : q.divisor) divisor.push_back(g);
  json cosets = json::array();
  for (const auto& coset : q.cosets) cosets.push_back(coset);
  return json{{"divisor", divisor},
              {"cosets", cosets},
              {"quotient_table", q.quotient_table.rows()},
              {"faithful", faithful}};
}

json to_json(const ReconstructionVerdict& v) {
  json out{{"ok", v.is_moufang_loop}};
  out["unit"] = v.unit ? json(*v.unit) : json(nullptr);
  out["inverse"] = json(v.inverse_map);
  if (v.failed) {
    out["failed_condition"] = v.failed->condition;
    out["witness"] = {{"g", v.failed->g},
                      {"h", v.failed->h},
                      {"detail", v.failed->detail}};
  } else {
    out["failed_condition"] = nullptr;
    out["witness"] = nullptr;
  }
  return out;
}

std::string render_class_text(const AlgebraClass& c, int order) {
  std::ostringstream out;
  if (c.is_group)
    out << (c.is_commutative ? "abelian group" : "nonabelian group");
  else if (c.is_moufang)
    out << "Moufang loop, nonassociative, "
        << (c.is_commutative ? "commutative" : "noncommutative");
  else if (c.is_loop)
    out << "loop (not Moufang)" << (c.is_commutative ? ", commutative" : "");
  else if (c.is_quasigroup)
    out << "quasigroup (no unit)";
  else
    out << "groupoid (not a quasigroup)";
  out << ", order " << order;
  if (c.unit) out << ", unit " << *c.unit;
  for (const auto& w : c.witnesses)
    out << "\n  " << w.property << " fails: " << w.note << " at (" << w.triple[0]
        << "," << w.triple[1] << "," << w.triple[2] << ")";
  return out.str();
}

std::string render_report_text(const RelationReport& r) {
  std::ostringstream out;
  out << (r.ok() ? "ok   " : "FAIL ") << r.relation << "  (" << r.checked
      << " checked";
  if (!r.ok()) out << ", " << r.total_violations << " violations";
  out << ")";
  for (const auto& v : r.violations) {
    out << "\n     (g,h)=(" << v.g << "," << v.h << ")  lhs "
        << v.lhs.cycle_string() << "  rhs " << v.rhs.cycle_string();
    if (r.violations.size() >= RelationReport::kMaxRecordedViolations &&
        &v == &r.violations.back() &&
        r.total_violations > static_cast<long long>(r.violations.size()))
      out << "\n     ... " << r.total_violations - static_cast<long long>(r.violations.size())
          << " more";
  }
  return out.str();
}

}  // namespace moufang
