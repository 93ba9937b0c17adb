#include "csumm/model.hpp"

#include <string>
#include <vector>

#include "csumm/codec.hpp"
#include "csumm/errors.hpp"

namespace csumm {

void ModelConfig::validate() const {
  encoder.validate();
  decoder.validate();
  if (encoder.thought_dim != decoder.hidden) {
    throw input_error("encoder thought_dim must equal decoder hidden size");
  }
}

ModelParams ModelParams::create(const ModelConfig& cfg) {
  cfg.validate();
  ModelParams p;
  p.encoder = EncoderParams::create(cfg.encoder);
  p.decoder = DecoderParams::create(cfg.decoder);
  return p;
}

std::vector<Tensor*> ModelParams::parameters() {
  std::vector<Tensor*> out = encoder.parameters();
  for (Tensor* t : decoder.parameters()) out.push_back(t);
  return out;
}

std::vector<const Tensor*> ModelParams::parameters() const {
  std::vector<const Tensor*> out = encoder.parameters();
  for (const Tensor* t : decoder.parameters()) out.push_back(t);
  return out;
}

long long ModelParams::total_size() const {
  long long total = 0;
  for (const Tensor* t : parameters()) total += t->numel();
  return total;
}

std::vector<std::string> parameter_names(const ModelConfig& cfg) {
  std::vector<std::string> names = {
      "encoder.embed",        "encoder.conv1_filters", "encoder.conv1_bias",
      "encoder.conv2_filters", "encoder.conv2_bias",   "encoder.dense_weight",
      "encoder.dense_bias",   "decoder.token_embed",
  };
  for (int l = 0; l < cfg.decoder.layers; ++l) {
    const std::string base = "decoder.layer" + std::to_string(l);
    names.push_back(base + ".wx");
    names.push_back(base + ".wh");
    names.push_back(base + ".bias");
  }
  names.push_back("decoder.out_weight");
  names.push_back("decoder.out_bias");
  return names;
}

void init_params(ModelParams& params, const ModelConfig& cfg, Rng& rng) {
  cfg.validate();
  auto fill = [&rng](Tensor& t) {
    for (auto& x : t.data) x = rng.uniform(-0.08f, 0.08f);
  };
  fill(params.encoder.embed);
  fill(params.encoder.conv1_f);
  fill(params.encoder.conv2_f);
  fill(params.encoder.dense_w);
  fill(params.decoder.token_embed);
  for (auto& layer : params.decoder.layers) {
    fill(layer.wx);
    fill(layer.wh);
    for (auto& x : layer.b.data) x = 0.0f;
    // Gate layout [i | f | g | o]: open the forget gate at the start.
    for (int i = cfg.decoder.hidden; i < 2 * cfg.decoder.hidden; ++i) layer.b.at(i) = 1.0f;
  }
  fill(params.decoder.out_w);
  for (auto& x : params.encoder.conv1_b.data) x = 0.0f;
  for (auto& x : params.encoder.conv2_b.data) x = 0.0f;
  for (auto& x : params.encoder.dense_b.data) x = 0.0f;
  for (auto& x : params.decoder.out_b.data) x = 0.0f;
}

std::vector<TrainPair> prepare_pairs(const std::vector<DatasetRecord>& records,
                                     const Vocabulary& vocab, const EncoderConfig& cfg) {
  std::vector<TrainPair> pairs;
  pairs.reserve(records.size());
  for (const auto& record : records) {
    TrainPair pair;
    pair.code_ids = code_to_ids(record.code, cfg);
    pair.target = encode_target(tokenize_comment(record.comment), vocab);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

NodeId pair_loss_on_tape(Tape& tape, const TrainPair& pair, const ModelParams& params,
                         const ModelConfig& cfg) {
  NodeId thought = encode_on_tape(tape, pair.code_ids, params.encoder, cfg.encoder);
  return teacher_forced_loss_on_tape(tape, thought, pair.target, params.decoder, cfg.decoder);
}

double pair_loss(const TrainPair& pair, const ModelParams& params, const ModelConfig& cfg) {
  Tensor thought = encode(pair.code_ids, params.encoder, cfg.encoder);
  return teacher_forced_loss(thought, pair.target, params.decoder, cfg.decoder);
}

std::string predict_comment(const std::string& code, const ModelParams& params,
                            const ModelConfig& cfg, const Vocabulary& vocab,
                            const BeamConfig& beam) {
  cfg.validate();
  Tensor thought = encode(code_to_ids(code, cfg.encoder), params.encoder, cfg.encoder);
  std::vector<int> tokens = beam_search_decode(thought, params.decoder, cfg.decoder, beam);
  return decode_prediction(tokens, vocab);
}

}  // namespace csumm
