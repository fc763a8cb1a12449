#pragma once

#include "kcharge/polynomial.hpp"
#include "kcharge/tableau.hpp"

#include <json.hpp>

namespace kcharge::detail {

using nlohmann::json;

json tableau_json(const KTableau& t);
json polynomial_json(const TPolynomial& p);
json cell_json(Cell c);

}  // namespace kcharge::detail
