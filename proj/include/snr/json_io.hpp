#pragma once

// JSON forms of the library's values. Field layouts match the schemas under
// schemas/.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "snr/boolmaps.hpp"
#include "snr/hasse.hpp"
#include "snr/weights.hpp"

namespace snr {

using Json = nlohmann::ordered_json;

Json words_to_json(const LatticeParams& params, const std::vector<Word>& words);
Json diagram_to_json(const HasseDiagram& diagram);

// {n, r, tilde: ["p/q", ...], bar: [...]}; tilde[i-1] = f(~i), bar[j-1] = f(-j).
Json function_to_json(const NrFunction& f);
NrFunction function_from_json(const Json& j);
NrFunction load_function(const std::string& path);

Json map_to_json(const BooleanMap& map);
Json report_to_json(const GammaReport& report, bool complete = true);

Json weights_eval_to_json(const NrFunction& f, std::optional<int> d);

}  // namespace snr
