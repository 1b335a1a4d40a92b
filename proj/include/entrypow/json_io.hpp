#pragma once

#include <string>

#include <json.hpp>

#include "entrypow/hset.hpp"
#include "entrypow/sym_matrix.hpp"
#include "entrypow/verifier.hpp"

namespace entrypow {

using Json = nlohmann::ordered_json;

// Canonical text form: insertion-ordered keys, 2-space indentation, doubles
// with 17 significant digits. parse + dump is a fixed point, so reports
// round-trip byte for byte.
std::string canonical_dump(const Json& j);

Json to_json(const HSet& h);
Json to_json(const HSetReport& rep);
Json to_json(const Graph& g, const PowerMap& p, const Verdict& v);
Json to_json(const ProbeReport& rep, const Graph& g, const PowerMap* kind_filter = nullptr);
Json to_json(const CrossCheckReport& rep);

struct ReplayResult {
  bool reproduced = false;
  bool in_cone_ok = false;
  double powered_min_eigenvalue = 0.0;
  double tolerance_used = 0.0;
};

// Re-checks a serialized falsify verdict: the embedded matrix must lie in
// the cone of the embedded graph and its powered image must fail the PSD
// test.
ReplayResult replay_verdict(const Json& verdict_json);

}  // namespace entrypow
