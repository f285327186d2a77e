#pragma once

#include "json.hpp"
#include "twinv/harness.hpp"
#include "twinv/involutions.hpp"
#include "twinv/number_theory.hpp"

namespace twinv {

using ordered_json = nlohmann::ordered_json;

// {"group", "u", "v", ["aut"], ["label"], "m_brute", "m_closed", "rot",
//  "refl", "T", "m_e", "ineq_holds", "equality", ["S"]}
// u and v are null for abelian automorphisms, which carry "aut" instead.
ordered_json to_json(const InvolutionRecord& rec);

// {"a", "c", "n", "solvable", "count", "solutions", "truncated"}
ordered_json to_json(const CongruenceSolution& sol, std::int64_t a, std::int64_t c, std::int64_t n);

ordered_json to_json(const CampaignConfig& cfg);

}  // namespace twinv
