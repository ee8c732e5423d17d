#pragma once

#include "oddgirth/drg_verify.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace oddgirth {

/// Stable report schema:
///   {input, n, spectrum: [[value, mult]...], d, odd_girth (int or "inf"),
///    hypotheses{...}, certificates{name: {pass, residual, tolerance, ran}},
///    conclusion{applicable, distance_regular, intersection_array{b,c,a} | null,
///               generalized_odd_graph, witness}, tolerances{...}, warnings[]}
nlohmann::json report_to_json(const TheoremReport& rep, std::string_view input);

std::string report_to_text(const TheoremReport& rep, std::string_view input);

}  // namespace oddgirth
