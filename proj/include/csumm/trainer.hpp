#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "csumm/model.hpp"

namespace csumm {

struct TrainSchedule {
  enum class Kind { epochs, rounds };
  Kind kind = Kind::epochs;
  int count = 25;                        // epochs or rounds
  long long samples_per_round = 100000;  // rounds only
  int val_samples = 9600;                // rounds only; capped at the val set size

  void validate() const;
};

struct TrainConfig {
  TrainSchedule schedule;
  int batch_size = 32;
  double lr = 1e-3;        // Adam, beta 0.9/0.999, eps 1e-8
  double clip_norm = 5.0;  // global-norm gradient clip
  uint64_t seed = 0;
  // Consumed by callers that build the vocabulary and model, not by train().
  int vocab_threshold = 2;
  int decoder_layers = 1;

  void validate() const;
};

struct EpochStats {
  int epoch = 0;  // 1-based epoch or round number
  double train_loss = 0.0;  // nats/token, mean over the samples visited
  double val_loss = 0.0;
};

struct TrainResult {
  ModelParams params;  // parameters at the minimum validation loss
  double best_val_loss = 0.0;
  int best_epoch = 0;
  std::vector<EpochStats> history;
};

// Invoked after every epoch with the live parameters; is_best marks a new
// minimum validation loss.
using EpochCallback = std::function<void(const EpochStats&, const ModelParams&, bool is_best)>;

// Mean per-pair teacher-forced loss; read-only.
double validate_loss(const std::vector<TrainPair>& val, const ModelParams& params,
                     const ModelConfig& cfg);

// Seeded init, per-epoch shuffles, mean-of-batch gradients, Adam updates,
// best-validation retention. Deterministic for a fixed seed. Throws
// numeric_error when a loss or gradient turns non-finite; checkpoints already
// written through the callback survive.
TrainResult train(const std::vector<TrainPair>& train_set, const std::vector<TrainPair>& val_set,
                  const ModelConfig& mcfg, const TrainConfig& cfg,
                  const EpochCallback& on_epoch = {});

// CSV with an "epoch,train_loss,val_loss" header line.
void write_history_csv(const std::string& path, const std::vector<EpochStats>& history);

}  // namespace csumm
