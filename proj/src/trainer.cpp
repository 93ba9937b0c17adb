#include "csumm/trainer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <vector>

#include "csumm/adam.hpp"
#include "csumm/errors.hpp"

namespace csumm {

void TrainSchedule::validate() const {
  if (count < 1) throw input_error("schedule count must be >= 1");
  if (kind == Kind::rounds) {
    if (samples_per_round < 1) throw input_error("samples_per_round must be >= 1");
    if (val_samples < 1) throw input_error("val_samples must be >= 1");
  }
}

void TrainConfig::validate() const {
  schedule.validate();
  if (batch_size < 1) throw input_error("batch_size must be >= 1");
  if (!(lr > 0.0)) throw input_error("learning rate must be positive");
  if (!(clip_norm > 0.0)) throw input_error("clip_norm must be positive");
}

double validate_loss(const std::vector<TrainPair>& val, const ModelParams& params,
                     const ModelConfig& cfg) {
  if (val.empty()) throw input_error("validation set is empty");
  double sum = 0.0;
  for (const auto& pair : val) sum += pair_loss(pair, params, cfg);
  return sum / static_cast<double>(val.size());
}

namespace {

// Scale so the global L2 norm never exceeds the cap.
void clip_gradients(GradientMap& grads, double clip_norm) {
  double sq = 0.0;
  for (const auto& [param, grad] : grads.items()) {
    for (float g : grad.data) sq += static_cast<double>(g) * static_cast<double>(g);
  }
  const double norm = std::sqrt(sq);
  if (!std::isfinite(norm)) throw numeric_error("gradient norm is not finite");
  if (norm > clip_norm) grads.scale(clip_norm / norm);
}

}  // namespace

TrainResult train(const std::vector<TrainPair>& train_set, const std::vector<TrainPair>& val_set,
                  const ModelConfig& mcfg, const TrainConfig& cfg,
                  const EpochCallback& on_epoch) {
  mcfg.validate();
  cfg.validate();
  if (train_set.empty()) throw input_error("training set is empty");
  if (val_set.empty()) throw input_error("validation set is empty");

  ModelParams params = ModelParams::create(mcfg);
  Rng init_rng(cfg.seed);
  init_params(params, mcfg, init_rng);
  AdamState adam(params.parameters(), AdamConfig{cfg.lr, 0.9, 0.999, 1e-8});
  Rng shuffle_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), size_t{0});
  size_t cursor = order.size();  // forces a shuffle before the first sample

  const bool rounds = cfg.schedule.kind == TrainSchedule::Kind::rounds;
  const size_t per_step = rounds ? static_cast<size_t>(cfg.schedule.samples_per_round)
                                 : train_set.size();
  const std::vector<TrainPair> val_view(
      val_set.begin(),
      rounds ? val_set.begin() + static_cast<long>(std::min<size_t>(
                                     val_set.size(), static_cast<size_t>(cfg.schedule.val_samples)))
             : val_set.end());

  TrainResult result;
  result.best_val_loss = std::numeric_limits<double>::infinity();

  std::vector<size_t> todo;
  for (int epoch = 1; epoch <= cfg.schedule.count; ++epoch) {
    todo.clear();
    for (size_t k = 0; k < per_step; ++k) {
      if (cursor == order.size()) {
        shuffle_rng.shuffle(order);
        cursor = 0;
      }
      todo.push_back(order[cursor++]);
    }

    double loss_sum = 0.0;
    for (size_t start = 0; start < todo.size(); start += static_cast<size_t>(cfg.batch_size)) {
      const size_t end = std::min(todo.size(), start + static_cast<size_t>(cfg.batch_size));
      GradientMap batch_grads;
      double batch_loss = 0.0;
      for (size_t k = start; k < end; ++k) {
        const TrainPair& pair = train_set[todo[k]];
        Tape tape;
        NodeId loss = pair_loss_on_tape(tape, pair, params, mcfg);
        batch_loss += static_cast<double>(tape.value(loss).at(0));
        GradientMap grads = tape.backward(loss);
        for (const auto& [param, grad] : grads.items()) batch_grads.add(param, grad);
      }
      if (!std::isfinite(batch_loss)) throw numeric_error("training loss is not finite");
      batch_grads.scale(1.0 / static_cast<double>(end - start));
      clip_gradients(batch_grads, cfg.clip_norm);
      adam.step(batch_grads);
      loss_sum += batch_loss;
    }

    EpochStats stats;
    stats.epoch = epoch;
    stats.train_loss = loss_sum / static_cast<double>(todo.size());
    stats.val_loss = validate_loss(val_view, params, mcfg);
    if (!std::isfinite(stats.val_loss)) throw numeric_error("validation loss is not finite");
    result.history.push_back(stats);

    const bool is_best = stats.val_loss < result.best_val_loss;
    if (is_best) {
      result.best_val_loss = stats.val_loss;
      result.best_epoch = epoch;
      result.params = params;
    }
    if (on_epoch) on_epoch(stats, params, is_best);
  }
  return result;
}

void write_history_csv(const std::string& path, const std::vector<EpochStats>& history) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write history file: " + path);
  out << "epoch,train_loss,val_loss\n";
  char line[96];
  for (const auto& stats : history) {
    std::snprintf(line, sizeof(line), "%d,%.17g,%.17g\n", stats.epoch, stats.train_loss,
                  stats.val_loss);
    out << line;
  }
  if (!out) throw input_error("failed writing history file: " + path);
}

}  // namespace csumm
