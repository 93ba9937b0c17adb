#pragma once

#include <cstdint>
#include <string>

#include "csumm/model.hpp"

namespace csumm {

struct CheckpointManifest {
  int format_version = 1;
  ModelConfig model;
  uint64_t vocab_fingerprint = 0;  // Vocabulary::content_fingerprint()
  int epoch = 0;                   // schedule position the parameters came from
  double val_loss = 0.0;
  uint64_t seed = 0;
};

// Writes manifest.json and params.bin into dir, creating it if needed.
// params.bin holds the tensors flat in canonical order as little-endian
// float32, then the payload byte length (uint64 LE) and its CRC-32
// (uint32 LE).
void save_checkpoint(const std::string& dir, const ModelParams& params,
                     const CheckpointManifest& manifest);

struct LoadedCheckpoint {
  ModelParams params;
  CheckpointManifest manifest;
};

// Verifies the manifest, the blob length, and the checksum, then rebuilds the
// parameters bit-exactly. expected_vocab_fingerprint must match the manifest,
// proving the checkpoint and the vocabulary in use belong together.
LoadedCheckpoint load_checkpoint(const std::string& dir, uint64_t expected_vocab_fingerprint);

}  // namespace csumm
