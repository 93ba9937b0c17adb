#pragma once

#include <utility>
#include <vector>

#include "csumm/tape.hpp"
#include "csumm/tensor.hpp"

namespace csumm {

struct DecoderConfig {
  int vocab_size = 0;  // includes the special ids
  int hidden = 1024;   // equals the thought-vector dimension
  int layers = 1;      // 1..3

  void validate() const;
};

struct DecoderLayerParams {
  Tensor wx;  // {hidden, 4*hidden}
  Tensor wh;  // {hidden, 4*hidden}
  Tensor b;   // {4*hidden}
};

struct DecoderParams {
  Tensor token_embed;  // {vocab_size, hidden}
  std::vector<DecoderLayerParams> layers;
  Tensor out_w;  // {hidden, vocab_size}
  Tensor out_b;  // {vocab_size}

  // Zero tensors of the configured shapes; the trainer owns initialization.
  static DecoderParams create(const DecoderConfig& cfg);
  std::vector<Tensor*> parameters();
  std::vector<const Tensor*> parameters() const;
};

struct DecoderState {
  std::vector<Tensor> h;  // one {hidden} per layer
  std::vector<Tensor> c;
};

// Layer 1's h starts at the thought vector; every other state starts at zero.
DecoderState init_state(const Tensor& thought, const DecoderConfig& cfg);

// One step of the stacked LSTM: feed the embedding of prev_token, return the
// probability distribution over the vocabulary and the advanced state.
std::pair<Tensor, DecoderState> decoder_step(int prev_token, const DecoderState& state,
                                             const DecoderParams& params,
                                             const DecoderConfig& cfg);

// Mean per-step cross-entropy of predicting target[t+1] from target[t], with
// the state initialized from the thought vector. target must hold at least
// START and END.
NodeId teacher_forced_loss_on_tape(Tape& tape, NodeId thought, const std::vector<int>& target,
                                   const DecoderParams& params, const DecoderConfig& cfg);

// Loss value only, on a private tape.
double teacher_forced_loss(const Tensor& thought, const std::vector<int>& target,
                           const DecoderParams& params, const DecoderConfig& cfg);

struct BeamConfig {
  int width = 2;
  int max_len = 50;

  void validate() const;
};

struct BeamHypothesis {
  std::vector<int> tokens;  // emitted ids; END present unless cut at max_len
  double log_prob = 0.0;    // raw sum of log p, no length normalization
  DecoderState state;
  bool finished = false;
};

// Survivors kept at each step, best first; finished ones included.
struct BeamStepTrace {
  std::vector<std::vector<int>> prefixes;
  std::vector<double> scores;
};

struct BeamTrace {
  std::vector<BeamStepTrace> steps;
};

// Beam search from START. Each step keeps the width highest-scoring
// extensions of the live hypotheses; a hypothesis finishes on END or at
// max_len. Ties break toward the lexicographically smaller token sequence,
// so the lower token id wins. Returns the best finished hypothesis's tokens.
std::vector<int> beam_search_decode(const Tensor& thought, const DecoderParams& params,
                                    const DecoderConfig& cfg, const BeamConfig& bcfg,
                                    BeamTrace* trace = nullptr);

}  // namespace csumm
