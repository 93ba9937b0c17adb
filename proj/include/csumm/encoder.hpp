#pragma once

#include <string>
#include <vector>

#include "csumm/tape.hpp"
#include "csumm/tensor.hpp"

namespace csumm {

// Byte ids 0..255 plus a padding id.
inline constexpr int kByteVocab = 257;
inline constexpr int kPadByte = 256;

struct EncoderConfig {
  int embed_dim = 16;
  int conv1_width = 3;
  int conv1_filters = 64;
  int conv2_width = 3;
  int conv2_filters = 128;
  int thought_dim = 1024;

  // Shortest input the two stacked convolutions accept.
  int receptive_field() const { return conv1_width + conv2_width - 1; }
  void validate() const;
};

struct EncoderParams {
  Tensor embed;    // {kByteVocab, embed_dim}
  Tensor conv1_f;  // {conv1_width, embed_dim, conv1_filters}
  Tensor conv1_b;  // {conv1_filters}
  Tensor conv2_f;  // {conv2_width, conv1_filters, conv2_filters}
  Tensor conv2_b;  // {conv2_filters}
  Tensor dense_w;  // {conv2_filters, thought_dim}
  Tensor dense_b;  // {thought_dim}

  // Zero tensors of the configured shapes; the trainer owns initialization.
  static EncoderParams create(const EncoderConfig& cfg);
  std::vector<Tensor*> parameters();
  std::vector<const Tensor*> parameters() const;
};

// UTF-8 bytes of the code, right-padded with kPadByte up to the receptive
// field. Never truncates.
std::vector<int> code_to_ids(const std::string& code, const EncoderConfig& cfg);

// embed -> conv+relu -> conv+relu -> sum over time -> dense. Returns the
// thought-vector node, shape {thought_dim}.
NodeId encode_on_tape(Tape& tape, const std::vector<int>& ids, const EncoderParams& params,
                      const EncoderConfig& cfg);

// Same forward pass without a tape, for inference.
Tensor encode(const std::vector<int>& ids, const EncoderParams& params, const EncoderConfig& cfg);

}  // namespace csumm
