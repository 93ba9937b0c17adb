#pragma once

#include <string>
#include <vector>

#include "csumm/corpus.hpp"
#include "csumm/decoder.hpp"
#include "csumm/encoder.hpp"
#include "csumm/rng.hpp"
#include "csumm/tape.hpp"
#include "csumm/tensor.hpp"
#include "csumm/vocab.hpp"

namespace csumm {

struct ModelConfig {
  EncoderConfig encoder;
  DecoderConfig decoder;

  // The thought vector seeds the decoder's hidden state, so the dimensions
  // must agree.
  void validate() const;
};

struct ModelParams {
  EncoderParams encoder;
  DecoderParams decoder;

  static ModelParams create(const ModelConfig& cfg);
  // Canonical order: encoder tensors then decoder tensors. The checkpoint
  // blob and the optimizer both follow this order.
  std::vector<Tensor*> parameters();
  std::vector<const Tensor*> parameters() const;
  long long total_size() const;
};

// One name per tensor, aligned with ModelParams::parameters().
std::vector<std::string> parameter_names(const ModelConfig& cfg);

// Uniform(-0.08, 0.08) weights, zero biases, LSTM forget-gate bias 1.0.
void init_params(ModelParams& params, const ModelConfig& cfg, Rng& rng);

// One precomputed example: code bytes and the target token ids.
struct TrainPair {
  std::vector<int> code_ids;
  std::vector<int> target;
};

std::vector<TrainPair> prepare_pairs(const std::vector<DatasetRecord>& records,
                                     const Vocabulary& vocab, const EncoderConfig& cfg);

// Teacher-forced loss of one pair through the encoder and decoder.
NodeId pair_loss_on_tape(Tape& tape, const TrainPair& pair, const ModelParams& params,
                         const ModelConfig& cfg);
double pair_loss(const TrainPair& pair, const ModelParams& params, const ModelConfig& cfg);

// Encode the code, beam-decode, and reassemble the comment text.
std::string predict_comment(const std::string& code, const ModelParams& params,
                            const ModelConfig& cfg, const Vocabulary& vocab,
                            const BeamConfig& beam);

}  // namespace csumm
