#pragma once

#include <json.hpp>

#include "fria/model/record.h"

namespace fria::model {

// JSON view of a record for API clients. IRIs are written in full; the
// remainder is reported as a triple count only.
nlohmann::json to_json(const FriaRecord& r);
nlohmann::json to_json(const ProcedureInputs& in);

}  // namespace fria::model
