#pragma once

#include <json.hpp>

#include "ahm/circulant.hpp"
#include "ahm/designs.hpp"
#include "ahm/optimizer.hpp"
#include "ahm/two_entry.hpp"
#include "ahm/verify.hpp"

namespace ahm {

using Json = nlohmann::json;

// NaN report fields become null.
Json to_json(const AhmReport& r);
Json to_json(const CirculantSpec& c);
Json to_json(const BlockDesign& d);
Json to_json(const TwoEntrySolution& s);
Json to_json(const AscentResult& r);

/// Parses {v, k, lambda, incidence}. Throws ParseError on shape or type mismatch.
BlockDesign design_from_json(const Json& j);

/// One "0101..." string per block.
std::string design_bitrows(const BlockDesign& d);

}  // namespace ahm
