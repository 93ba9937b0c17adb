#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "csumm/codec.hpp"
#include "csumm/errors.hpp"
#include "csumm/model.hpp"
#include "csumm/rng.hpp"
#include "csumm/trainer.hpp"
#include "csumm/vocab.hpp"
#include "doctest.h"

using namespace csumm;

namespace {

ModelConfig tiny_model_config(int vocab_size, int layers = 1) {
  ModelConfig cfg;
  cfg.encoder.embed_dim = 3;
  cfg.encoder.conv1_width = 2;
  cfg.encoder.conv1_filters = 3;
  cfg.encoder.conv2_width = 2;
  cfg.encoder.conv2_filters = 4;
  cfg.encoder.thought_dim = 6;
  cfg.decoder = {vocab_size, 6, layers};
  return cfg;
}

std::vector<DatasetRecord> toy_records() {
  return {
      {"int size() { return n; }", "returns the size", "java", "a"},
      {"void close() { fd = -1; }", "closes the file", "java", "b"},
      {"int getId() { return id; }", "returns the id", "java", "c"},
      {"bool empty() { return n == 0; }", "checks if empty", "java", "d"},
      {"void open(File f) { fd = f; }", "opens a file", "java", "e"},
      {"int next() { return ++i; }", "returns the next value", "java", "f"},
  };
}

Vocabulary toy_vocab(const std::vector<DatasetRecord>& records) {
  WordCounts counts;
  for (const auto& record : records) {
    WordCounts one = build_word_counts({record.comment});
    for (const auto& [word, count] : one) counts[word] += count;
  }
  return build_vocabulary(counts, EnglishDictionary::embedded(), 1);
}

bool params_equal(const ModelParams& a, const ModelParams& b) {
  auto pa = a.parameters();
  auto pb = b.parameters();
  if (pa.size() != pb.size()) return false;
  for (size_t i = 0; i < pa.size(); ++i) {
    if (pa[i]->shape != pb[i]->shape || pa[i]->data != pb[i]->data) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("trainer") {

TEST_CASE("model config validation ties the thought vector to the decoder") {
  ModelConfig cfg = tiny_model_config(8);
  CHECK_NOTHROW(cfg.validate());
  cfg.decoder.hidden = 5;
  CHECK_THROWS_AS(cfg.validate(), input_error);
  CHECK_THROWS_AS(ModelParams::create(cfg), input_error);
}

TEST_CASE("canonical parameter order and names") {
  ModelConfig cfg = tiny_model_config(8, 2);
  ModelParams p = ModelParams::create(cfg);
  auto params = p.parameters();
  auto names = parameter_names(cfg);
  REQUIRE(params.size() == names.size());
  REQUIRE(params.size() == 7 + 1 + 3 * 2 + 2);
  CHECK(names[0] == "encoder.embed");
  CHECK(params[0] == &p.encoder.embed);
  CHECK(names[7] == "decoder.token_embed");
  CHECK(params[7] == &p.decoder.token_embed);
  CHECK(names[8] == "decoder.layer0.wx");
  CHECK(names[11] == "decoder.layer1.wx");
  CHECK(names.back() == "decoder.out_bias");
  CHECK(params.back() == &p.decoder.out_b);
  long long total = 0;
  for (const Tensor* t : params) total += t->numel();
  CHECK(p.total_size() == total);
}

TEST_CASE("initialization bounds, zero biases, and open forget gates") {
  ModelConfig cfg = tiny_model_config(8, 2);
  ModelParams p = ModelParams::create(cfg);
  Rng rng(5);
  init_params(p, cfg, rng);
  for (const Tensor* t :
       {&p.encoder.embed, &p.encoder.conv1_f, &p.encoder.conv2_f, &p.encoder.dense_w,
        &p.decoder.token_embed, &p.decoder.out_w}) {
    for (float x : t->data) CHECK(std::fabs(x) <= 0.08f);
  }
  for (const Tensor* t : {&p.encoder.conv1_b, &p.encoder.conv2_b, &p.encoder.dense_b,
                          &p.decoder.out_b}) {
    for (float x : t->data) CHECK(x == 0.0f);
  }
  for (const auto& layer : p.decoder.layers) {
    for (int i = 0; i < 6; ++i) CHECK(layer.b.at(i) == 0.0f);
    for (int i = 6; i < 12; ++i) CHECK(layer.b.at(i) == 1.0f);
    for (int i = 12; i < 24; ++i) CHECK(layer.b.at(i) == 0.0f);
  }
  // Same seed reproduces the exact initialization.
  ModelParams q = ModelParams::create(cfg);
  Rng rng2(5);
  init_params(q, cfg, rng2);
  CHECK(params_equal(p, q));
}

TEST_CASE("prepare_pairs encodes codes and comments against the vocabulary") {
  auto records = toy_records();
  Vocabulary vocab = toy_vocab(records);
  EncoderConfig ecfg;
  auto pairs = prepare_pairs(records, vocab, ecfg);
  REQUIRE(pairs.size() == records.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    CHECK(pairs[i].code_ids == code_to_ids(records[i].code, ecfg));
    CHECK(pairs[i].target == encode_target(tokenize_comment(records[i].comment), vocab));
    CHECK(pairs[i].target.front() == Vocabulary::kStart);
    CHECK(pairs[i].target.back() == Vocabulary::kEnd);
  }
}

TEST_CASE("validation loss is the mean of per-pair losses") {
  auto records = toy_records();
  Vocabulary vocab = toy_vocab(records);
  ModelConfig cfg = tiny_model_config(vocab.size());
  auto pairs = prepare_pairs(records, vocab, cfg.encoder);
  ModelParams p = ModelParams::create(cfg);
  Rng rng(17);
  init_params(p, cfg, rng);
  double sum = 0.0;
  for (const auto& pair : pairs) sum += pair_loss(pair, p, cfg);
  CHECK(validate_loss(pairs, p, cfg) == doctest::Approx(sum / pairs.size()).epsilon(1e-12));
  CHECK_THROWS_AS(validate_loss({}, p, cfg), input_error);
}

TEST_CASE("zero parameters give log-vocabulary validation loss") {
  auto records = toy_records();
  Vocabulary vocab = toy_vocab(records);
  ModelConfig cfg = tiny_model_config(vocab.size());
  auto pairs = prepare_pairs(records, vocab, cfg.encoder);
  ModelParams p = ModelParams::create(cfg);
  CHECK(std::fabs(validate_loss(pairs, p, cfg) - std::log(static_cast<double>(vocab.size()))) <
        1e-5);
}

TEST_CASE("a rigged perfect model scores near zero") {
  ModelConfig cfg = tiny_model_config(6);
  ModelParams p = ModelParams::create(cfg);
  p.decoder.out_b.at(Vocabulary::kEnd) = 50.0f;
  TrainPair pair;
  pair.code_ids = {97, 98, 99};
  pair.target = {Vocabulary::kStart, Vocabulary::kEnd};
  CHECK(validate_loss({pair}, p, cfg) < 1e-5);
}

TEST_CASE("tape loss value matches the kernel-direct pair loss") {
  auto records = toy_records();
  Vocabulary vocab = toy_vocab(records);
  ModelConfig cfg = tiny_model_config(vocab.size(), 2);
  auto pairs = prepare_pairs(records, vocab, cfg.encoder);
  ModelParams p = ModelParams::create(cfg);
  Rng rng(23);
  init_params(p, cfg, rng);
  for (const auto& pair : pairs) {
    Tape tape;
    NodeId loss = pair_loss_on_tape(tape, pair, p, cfg);
    CHECK(static_cast<double>(tape.value(loss).at(0)) == pair_loss(pair, p, cfg));
  }
}

TEST_CASE("config validation") {
  TrainConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.batch_size == 32);
  CHECK(cfg.lr == 1e-3);
  CHECK(cfg.clip_norm == 5.0);
  CHECK(cfg.schedule.count == 25);
  cfg.batch_size = 0;
  CHECK_THROWS_AS(cfg.validate(), input_error);
  cfg = TrainConfig{};
  cfg.schedule.count = 0;
  CHECK_THROWS_AS(cfg.validate(), input_error);
  cfg = TrainConfig{};
  cfg.schedule.kind = TrainSchedule::Kind::rounds;
  cfg.schedule.samples_per_round = 0;
  CHECK_THROWS_AS(cfg.validate(), input_error);
  cfg.schedule.samples_per_round = 10;
  cfg.schedule.val_samples = 0;
  CHECK_THROWS_AS(cfg.validate(), input_error);
}

TEST_CASE("training learns, tracks the best epoch, and repeats bit-for-bit") {
  auto records = toy_records();
  Vocabulary vocab = toy_vocab(records);
  ModelConfig mcfg = tiny_model_config(vocab.size());
  auto pairs = prepare_pairs(records, vocab, mcfg.encoder);

  TrainConfig tcfg;
  tcfg.schedule.count = 6;
  tcfg.batch_size = 2;
  tcfg.seed = 11;

  std::vector<int> seen_epochs;
  int best_count = 0;
  TrainResult r1 = train(pairs, pairs, mcfg, tcfg,
                         [&](const EpochStats& stats, const ModelParams&, bool is_best) {
                           seen_epochs.push_back(stats.epoch);
                           if (is_best) ++best_count;
                         });
  REQUIRE(r1.history.size() == 6);
  CHECK(seen_epochs == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(best_count >= 1);
  double min_val = r1.history[0].val_loss;
  for (const auto& stats : r1.history) {
    CHECK(stats.train_loss == doctest::Approx(stats.train_loss));  // finite
    min_val = std::min(min_val, stats.val_loss);
  }
  CHECK(r1.best_val_loss == min_val);
  CHECK(r1.history[static_cast<size_t>(r1.best_epoch - 1)].val_loss == min_val);
  // Returned parameters really are the best-epoch snapshot.
  CHECK(validate_loss(pairs, r1.params, mcfg) == r1.best_val_loss);
  // Six epochs of Adam on six pairs must improve on the initial loss.
  CHECK(r1.history.back().train_loss < r1.history.front().train_loss);

  TrainResult r2 = train(pairs, pairs, mcfg, tcfg);
  REQUIRE(r2.history.size() == r1.history.size());
  for (size_t i = 0; i < r1.history.size(); ++i) {
    CHECK(r1.history[i].train_loss == r2.history[i].train_loss);
    CHECK(r1.history[i].val_loss == r2.history[i].val_loss);
  }
  CHECK(params_equal(r1.params, r2.params));

  TrainConfig other = tcfg;
  other.seed = 12;
  TrainResult r3 = train(pairs, pairs, mcfg, other);
  bool any_diff = false;
  for (size_t i = 0; i < r1.history.size(); ++i) {
    any_diff = any_diff || r1.history[i].train_loss != r3.history[i].train_loss;
  }
  CHECK(any_diff);
}

TEST_CASE("rounds schedule visits the requested sample count per round") {
  auto records = toy_records();
  Vocabulary vocab = toy_vocab(records);
  ModelConfig mcfg = tiny_model_config(vocab.size());
  auto pairs = prepare_pairs(records, vocab, mcfg.encoder);

  TrainConfig tcfg;
  tcfg.schedule.kind = TrainSchedule::Kind::rounds;
  tcfg.schedule.count = 3;
  tcfg.schedule.samples_per_round = 4;
  tcfg.schedule.val_samples = 2;
  tcfg.batch_size = 3;
  tcfg.seed = 7;
  TrainResult r1 = train(pairs, pairs, mcfg, tcfg);
  REQUIRE(r1.history.size() == 3);
  CHECK(r1.history[2].epoch == 3);
  TrainResult r2 = train(pairs, pairs, mcfg, tcfg);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(r1.history[i].train_loss == r2.history[i].train_loss);
    CHECK(r1.history[i].val_loss == r2.history[i].val_loss);
  }
}

TEST_CASE("empty splits and divergence raise") {
  auto records = toy_records();
  Vocabulary vocab = toy_vocab(records);
  ModelConfig mcfg = tiny_model_config(vocab.size());
  auto pairs = prepare_pairs(records, vocab, mcfg.encoder);
  TrainConfig tcfg;
  tcfg.schedule.count = 2;
  CHECK_THROWS_AS(train({}, pairs, mcfg, tcfg), input_error);
  CHECK_THROWS_AS(train(pairs, {}, mcfg, tcfg), input_error);

  TrainConfig exploding = tcfg;
  exploding.lr = 1e30;
  exploding.schedule.count = 4;
  CHECK_THROWS_AS(train(pairs, pairs, mcfg, exploding), numeric_error);
}

TEST_CASE("history CSV round-trips the recorded losses") {
  std::vector<EpochStats> history = {{1, 4.25, 4.5}, {2, 0.125, 0.375}};
  const std::string path = "trainer_history_test.csv";
  write_history_csv(path, history);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header, line1, line2;
  std::getline(in, header);
  std::getline(in, line1);
  std::getline(in, line2);
  CHECK(header == "epoch,train_loss,val_loss");
  CHECK(line1 == "1,4.25,4.5");
  CHECK(line2 == "2,0.125,0.375");
  in.close();
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_history_csv("no_such_dir/sub/x.csv", history), input_error);
}

TEST_CASE("predict_comment decodes an untrained model to the empty string") {
  // Uniform probabilities: the beam ends immediately at END, which decodes
  // to no words at all.
  ModelConfig cfg = tiny_model_config(Vocabulary::kNumSpecials + 68);
  Vocabulary vocab = build_vocabulary({}, EnglishDictionary::from_words({"stub"}), 1);
  REQUIRE(vocab.size() == cfg.decoder.vocab_size);
  ModelParams p = ModelParams::create(cfg);
  BeamConfig beam{2, 10};
  CHECK(predict_comment("int f() { return 1; }", p, cfg, vocab, beam) == "");
}

}  // TEST_SUITE
