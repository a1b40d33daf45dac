#include "forestda/pipeline.hpp"

namespace fda {

Pipeline run_pipeline(const AutomatonSpec& spec,
                      const PipelineOptions& options) {
  Pipeline out;
  Recognizer built = build_transition_algebra(spec, options.build);
  if (options.minimize) {
    out.recognizer = syntactic_quotient(built).quotient;
    out.minimized = true;
  } else {
    out.recognizer = std::move(built);
    out.minimized = false;
  }
  out.pieces = compute_pieces(out.recognizer,
                              PieceOptions{options.pieces_transitive});
  out.witnesses = build_witness_table(out.recognizer);
  return out;
}

Verdict decide(const Pipeline& pipeline, Order order) {
  CheckOptions options;
  options.input_is_syntactic = pipeline.minimized;
  return check_delta2(pipeline.recognizer, pipeline.pieces, order, options);
}

}  // namespace fda
