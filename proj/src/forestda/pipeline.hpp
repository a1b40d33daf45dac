#pragma once

#include <memory>

#include "forestda/decide.hpp"
#include "forestda/syntactic.hpp"
#include "forestda/word.hpp"

namespace fda {

struct PipelineOptions {
  bool minimize = true;  // quotient to the syntactic algebra first
  bool pieces_transitive = false;
  BuildOptions build;
};

/// Everything the decision procedure derives from a spec: the transition
/// algebra, the syntactic quotient (unless disabled), the piece relation
/// and the witness table for naming V elements in reports.
struct Pipeline {
  Recognizer recognizer;  // the algebra the checks run on
  PieceRelation pieces;
  WitnessTable witnesses;
  bool minimized = true;
};

Pipeline run_pipeline(const AutomatonSpec& spec,
                      const PipelineOptions& options = {});

Verdict decide(const Pipeline& pipeline, Order order);

}  // namespace fda
