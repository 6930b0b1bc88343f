#pragma once

#include <json.hpp>

#include "liepoisson/lie_core.hpp"

namespace liepoisson {

using Json = nlohmann::ordered_json;

/// Matrix JSON: {"kind","p","q","n","rows","cols","data":[[re,im],...]} row-major; a GROUP pair stores
/// its first block in "data" and its second in "block2".
Json matrix_to_json(const SpaceInstance& inst, const Mat& m);
/// The stored matrix and its instance; throws Error on malformed input.
std::pair<SpaceInstance, Mat> matrix_from_json(const Json& j);

/// {"rows","cols","data"} for a plain matrix.
Json plain_matrix_to_json(const Mat& m);
Mat plain_matrix_from_json(const Json& j);

} // namespace liepoisson
