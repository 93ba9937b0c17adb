#include "csumm/encoder.hpp"

#include <string>
#include <vector>

#include "csumm/errors.hpp"
#include "csumm/kernels.hpp"

namespace csumm {

void EncoderConfig::validate() const {
  if (embed_dim < 1) throw input_error("encoder embed_dim must be >= 1");
  if (conv1_width < 1 || conv2_width < 1) throw input_error("conv widths must be >= 1");
  if (conv1_filters < 1 || conv2_filters < 1) throw input_error("conv filter counts must be >= 1");
  if (thought_dim < 1) throw input_error("thought_dim must be >= 1");
}

EncoderParams EncoderParams::create(const EncoderConfig& cfg) {
  cfg.validate();
  EncoderParams p;
  p.embed = Tensor::zeros({kByteVocab, cfg.embed_dim});
  p.conv1_f = Tensor::zeros({cfg.conv1_width, cfg.embed_dim, cfg.conv1_filters});
  p.conv1_b = Tensor::zeros({cfg.conv1_filters});
  p.conv2_f = Tensor::zeros({cfg.conv2_width, cfg.conv1_filters, cfg.conv2_filters});
  p.conv2_b = Tensor::zeros({cfg.conv2_filters});
  p.dense_w = Tensor::zeros({cfg.conv2_filters, cfg.thought_dim});
  p.dense_b = Tensor::zeros({cfg.thought_dim});
  return p;
}

std::vector<Tensor*> EncoderParams::parameters() {
  return {&embed, &conv1_f, &conv1_b, &conv2_f, &conv2_b, &dense_w, &dense_b};
}

std::vector<const Tensor*> EncoderParams::parameters() const {
  return {&embed, &conv1_f, &conv1_b, &conv2_f, &conv2_b, &dense_w, &dense_b};
}

std::vector<int> code_to_ids(const std::string& code, const EncoderConfig& cfg) {
  if (code.empty()) throw input_error("cannot encode empty code");
  std::vector<int> ids;
  ids.reserve(code.size());
  for (char ch : code) ids.push_back(static_cast<int>(static_cast<unsigned char>(ch)));
  const int min_len = cfg.receptive_field();
  while (static_cast<int>(ids.size()) < min_len) ids.push_back(kPadByte);
  return ids;
}

namespace {

void check_ids(const std::vector<int>& ids, const EncoderConfig& cfg) {
  if (static_cast<int>(ids.size()) < cfg.receptive_field()) {
    throw input_error("input shorter than the encoder receptive field");
  }
  for (int id : ids) {
    if (id < 0 || id >= kByteVocab) throw index_error("byte id out of range");
  }
}

}  // namespace

NodeId encode_on_tape(Tape& tape, const std::vector<int>& ids, const EncoderParams& params,
                      const EncoderConfig& cfg) {
  cfg.validate();
  check_ids(ids, cfg);
  NodeId embed = tape.param(&params.embed);
  NodeId conv1_f = tape.param(&params.conv1_f);
  NodeId conv1_b = tape.param(&params.conv1_b);
  NodeId conv2_f = tape.param(&params.conv2_f);
  NodeId conv2_b = tape.param(&params.conv2_b);
  NodeId dense_w = tape.param(&params.dense_w);
  NodeId dense_b = tape.param(&params.dense_b);

  NodeId x = tape.embed_lookup(embed, ids);
  NodeId c1 = tape.relu(tape.conv1d(x, conv1_f, conv1_b));
  NodeId c2 = tape.relu(tape.conv1d(c1, conv2_f, conv2_b));
  NodeId pooled = tape.sum_over_time(c2);
  return tape.dense(pooled, dense_w, dense_b);
}

Tensor encode(const std::vector<int>& ids, const EncoderParams& params, const EncoderConfig& cfg) {
  cfg.validate();
  check_ids(ids, cfg);
  const int len = static_cast<int>(ids.size());
  const int len1 = len - cfg.conv1_width + 1;
  const int len2 = len1 - cfg.conv2_width + 1;

  Tensor x = Tensor::zeros({len, cfg.embed_dim});
  kernels::embed_forward(params.embed.data.data(), ids.data(), x.data.data(), len, cfg.embed_dim);

  Tensor c1 = Tensor::zeros({len1, cfg.conv1_filters});
  kernels::conv1d_forward(x.data.data(), params.conv1_f.data.data(), params.conv1_b.data.data(),
                          c1.data.data(), len, cfg.conv1_width, cfg.embed_dim, cfg.conv1_filters);
  kernels::relu_forward(c1.data.data(), c1.data.data(), c1.numel());

  Tensor c2 = Tensor::zeros({len2, cfg.conv2_filters});
  kernels::conv1d_forward(c1.data.data(), params.conv2_f.data.data(), params.conv2_b.data.data(),
                          c2.data.data(), len1, cfg.conv2_width, cfg.conv1_filters,
                          cfg.conv2_filters);
  kernels::relu_forward(c2.data.data(), c2.data.data(), c2.numel());

  Tensor pooled = Tensor::zeros({cfg.conv2_filters});
  kernels::sum_over_time_forward(c2.data.data(), pooled.data.data(), len2, cfg.conv2_filters);

  Tensor thought = Tensor::zeros({cfg.thought_dim});
  kernels::dense_forward(pooled.data.data(), params.dense_w.data.data(),
                         params.dense_b.data.data(), thought.data.data(), cfg.conv2_filters,
                         cfg.thought_dim);
  return thought;
}

}  // namespace csumm
