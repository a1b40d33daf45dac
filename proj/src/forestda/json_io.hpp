#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "forestda/pipeline.hpp"
#include "forestda/syntactic.hpp"
#include "forestda/word.hpp"

namespace fda {

using Json = nlohmann::ordered_json;

/// AutomatonSpec JSON: alphabet, H, zero, plus (|H|x|H| table of names),
/// delta (letter -> H-name -> H-name), accepting.
AutomatonSpec spec_from_json(const Json& j);
AutomatonSpec spec_from_json_text(const std::string& text);

/// Monoid JSON: elements, identity, op table of names, optional pre
/// matrix (0/1) and optional letters object (letter -> element).
struct MonoidInput {
  FiniteMonoid mon;
  std::vector<char> pre;  // |M|x|M|; identity relation when absent
  WordLanguage lang;      // empty alphabet when no letters were given
};
MonoidInput monoid_from_json(const Json& j);
MonoidInput monoid_from_json_text(const std::string& text);

Json verdict_to_json(const Pipeline& pipeline, const Verdict& verdict);
Json pieces_to_json(const Pipeline& pipeline);
Json syntactic_to_json(const Recognizer& quotient,
                       const WitnessTable& witnesses);
Json word_expr_to_json(const WordExpr& expr, const FiniteMonoid* mon);
WordExpr word_expr_from_json(const Json& j);
Json lifted_to_json(const std::optional<LiftedCounterexample>& lifted);

std::string to_text(const Json& j);

}  // namespace fda
