#ifndef ZETAFORMS_REPORT_HPP
#define ZETAFORMS_REPORT_HPP

#include <json.hpp>

#include "zetaforms/bounds.hpp"
#include "zetaforms/cotangent.hpp"
#include "zetaforms/extract.hpp"
#include "zetaforms/forms.hpp"
#include "zetaforms/saddle.hpp"

namespace zetaforms {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "zetaforms-report/1";

// Numbers carry their precision and provenance; rationals are exact strings.
json real_json(const Real& x, const char* provenance = "computed");
json rat_json(const Rat& q);
json complex_json(const Complex& z, const char* provenance = "computed");

json report_shell(const std::string& command);

json to_json(const CotangentBasis& basis);
json to_json(const LinearFormFamily& family);
json to_json(const GrowthTable& table);
json to_json(const SaddleData& data);
json to_json(const HypothesisReport& rep);
json to_json(const PlanReport& rep);
json to_json(const BoundEvaluation& ev);

ExtractionInstance instance_from_json(const json& j);
SpreadRequest request_from_json(const json& j);
json extraction_result_json(const std::vector<long>& result);

std::string growth_csv(const GrowthTable& table);
std::string bounds_csv(const std::vector<BoundEvaluation>& rows);

}  // namespace zetaforms

#endif
