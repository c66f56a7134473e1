#pragma once

#include <json.hpp>

#include "invgen/ffmc/sampling.hpp"
#include "invgen/generation.hpp"
#include "invgen/rootsys_g2.hpp"

namespace invgen::cli {

using Json = nlohmann::ordered_json;

// Decimal string with 6 digits after the point.
std::string decimal6(double v);

Json to_json(const TorusClass& t);
Json to_json(const std::vector<TorusClass>& ts);
Json to_json(const IncidenceMatrix& m);
Json to_json(const AbVerification& r);
Json to_json(const SharpnessReport& r);
Json to_json(const AlphaReport& r);
Json to_json(const g2::G2Incidence& inc);
Json to_json(const ffmc::SampleReport& r);
Json to_json(const ffmc::DeviationTable& t);

// Inverse of to_json(SampleReport); used by mc-compare --report.
ffmc::SampleReport sample_report_from_json(const Json& j);

// Standing modeling assumptions echoed into relation and verification reports.
Json catalog_assumptions(const GroupFamily& family);

}  // namespace invgen::cli
