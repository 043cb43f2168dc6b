#pragma once

// JSON documents for solutions, polynomials and connection matrices.
// Complex numbers are {"re": x, "im": y}; permutations are 1-based.

#include <json.hpp>

#include "macdonald/continuation.hpp"
#include "macdonald/hcseries.hpp"
#include "macdonald/laurent_poly.hpp"

namespace macdonald {

using json = nlohmann::json;

json complex_to_json(cplx z);
// Accepts {"re","im"} objects or plain numbers.
cplx complex_from_json(const json& j);

json to_json(const HCSolution& sol);
HCSolution hcsolution_from_json(const json& j);

json to_json(const LaurentPoly& poly);
LaurentPoly laurent_poly_from_json(const json& j);

json to_json(const ConnectionMatrix& m);
ConnectionMatrix connection_matrix_from_json(const json& j);

}  // namespace macdonald
