#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "l1/model.hpp"
#include "l1/rejection.hpp"
#include "l1/tableau.hpp"

namespace l1 {

struct BadCertificate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Part paths print as one letter per step: 'l'/'r' descend a disjunction,
// 'n' descends a negation. The empty string is the whole formula.
std::string path_to_string(const OccurrencePath& p);
OccurrencePath path_from_string(std::string_view s);

// {"kind":"tableau","formula":...,"mode":...,"verdict":...,"tree":...};
// each tree node carries formula, rule {kind, principals, introduced},
// children, leaf ("closed"|"hintikka") and, for closed leaves, the witness
// pair of paths.
nlohmann::json tableau_to_json(const Tableau& t, VerdictKind verdict);

// Revalidates an emitted tableau certificate from scratch: every rule
// instance must be applicable at its node, children must extend the branch
// formula accordingly, leaves must be genuinely closed or saturated open,
// and the verdict must match the leaves.
CheckResult check_tableau_json(const nlohmann::json& j);

// {"kind":"rejection","system":...,"goal":...,"steps":[...]}; steps carry
// index, judgment "+"|"-", formula, rule, premises and the rule payloads.
nlohmann::json derivation_to_json(const RejectionDerivation& d);
RejectionDerivation derivation_from_json(const nlohmann::json& j);

// {"assignment": {var: [ints]}, "anonymous": [[ints]], "universe": [ints]}
nlohmann::json model_to_json(const L1Model& m);
L1Model model_from_json(const nlohmann::json& j);

// Dispatches on "kind"; malformed certificates come back as failures rather
// than exceptions.
CheckResult check_certificate(const nlohmann::json& j);

}  // namespace l1
