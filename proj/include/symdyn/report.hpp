#ifndef SYMDYN_REPORT_HPP
#define SYMDYN_REPORT_HPP

#include <json.hpp>

#include "symdyn/criteria.hpp"
#include "symdyn/shifts.hpp"
#include "symdyn/spectrum.hpp"
#include "symdyn/verdict.hpp"

namespace symdyn {

// Reports use insertion-ordered JSON so identical inputs render byte-equal.
using json = nlohmann::ordered_json;

extern char const* const kToolVersion;

// --- shift spec files --------------------------------------------------------
// {"alphabet": [...], "kind": "full"|"sft"|"sofic"|"oracle",
//  "forbidden": [...], "states": [...], "edges": [[src,label,dst],...],
//  "rule": "<name>", "depth_bound": n}
// Unknown fields are rejected.

Subshift load_spec_json(json const& j);
Subshift load_spec_file(std::string const& path);
json spec_json(Subshift const& s);

// --- serialization -----------------------------------------------------------

json verdict_json(Subshift const& s, std::string const& criterion, Verdict const& v);
json cost_json(Subshift const& s, CostReport const& r);
json ball_json(Subshift const& s, SpectrumBall const& xi);

// Top-level report envelope: spec echo, command, payload, version.
json report_document(Subshift const& s, std::string const& command, json body);

// --- reproduction suite -------------------------------------------------------

struct ReproduceResult {
  bool pass = false;
  json detail;
};

std::vector<std::string> reproduce_ids();
ReproduceResult reproduce(std::string const& id);

}  // namespace symdyn

#endif  // SYMDYN_REPORT_HPP
