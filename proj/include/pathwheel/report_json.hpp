#pragma once

#include <json.hpp>

#include "pathwheel/formula.hpp"
#include "pathwheel/lemmalab.hpp"
#include "pathwheel/search.hpp"
#include "pathwheel/witness.hpp"

namespace pw {

// Canonical JSON for every report type. Key order is fixed
// (nlohmann::ordered_json) and nothing time-dependent is included, so two
// runs that compute the same result serialize to identical bytes.
// SearchReport carries an elapsed duration for diagnostics; it is
// deliberately absent here.
using Json = nlohmann::ordered_json;

Json to_json(const formula::RamseyBreakdown& b);
Json to_json(const CliquePartition& p);
Json to_json(const WitnessReport& r);
Json to_json(const lemmalab::LemmaInstance& inst);
Json to_json(const lemmalab::SuiteResult& r);
Json to_json(const search::SearchReport& r);
Json to_json(const search::ConfirmReport& r);

} // namespace pw
