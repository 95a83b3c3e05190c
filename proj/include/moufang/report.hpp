#pragma once

#include <string>

#include "moufang/json_compat.hpp"

#include "moufang/birep.hpp"
#include "moufang/classify.hpp"
#include "moufang/quotient.hpp"
#include "moufang/reconstruct.hpp"

namespace moufang {

// JSON shapes are stable: object keys are emitted sorted, arrays in
// ascending element order.
nlohmann::json to_json(const Permutation& p);  // image array
nlohmann::json to_json(const AlgebraClass& c);
nlohmann::json to_json(const RelationReport& r);
// {divisor, cosets, quotient_table, faithful}
nlohmann::json quotient_report_json(const QuotientStructure& q, bool faithful);
// {ok, unit, inverse, failed_condition, witness}
nlohmann::json to_json(const ReconstructionVerdict& v);

std::string render_class_text(const AlgebraClass& c, int order);
std::string render_report_text(const RelationReport& r);

}  // namespace moufang
