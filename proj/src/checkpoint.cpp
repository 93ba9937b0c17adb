#include "csumm/checkpoint.hpp"

#include <zlib.h>

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "csumm/errors.hpp"
#include "json.hpp"

namespace csumm {

static_assert(std::endian::native == std::endian::little,
              "checkpoint blob layout assumes a little-endian host");

namespace {

using nlohmann::json;

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

uint64_t parse_hex64(const std::string& s) {
  if (s.size() != 16) throw format_error("manifest: expected a 16-digit hex field");
  uint64_t v = 0;
  for (char ch : s) {
    int digit;
    if (ch >= '0' && ch <= '9') {
      digit = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      digit = ch - 'a' + 10;
    } else {
      throw format_error("manifest: bad hex digit");
    }
    v = (v << 4) | static_cast<uint64_t>(digit);
  }
  return v;
}

uint32_t blob_crc(const std::vector<char>& data, size_t n) {
  uLong crc = crc32(0L, Z_NULL, 0);
  return static_cast<uint32_t>(
      crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(n)));
}

json config_json(const ModelConfig& cfg) {
  return json{{"encoder",
               {{"embed_dim", cfg.encoder.embed_dim},
                {"conv1_width", cfg.encoder.conv1_width},
                {"conv1_filters", cfg.encoder.conv1_filters},
                {"conv2_width", cfg.encoder.conv2_width},
                {"conv2_filters", cfg.encoder.conv2_filters},
                {"thought_dim", cfg.encoder.thought_dim}}},
              {"decoder",
               {{"vocab_size", cfg.decoder.vocab_size},
                {"hidden", cfg.decoder.hidden},
                {"layers", cfg.decoder.layers}}}};
}

ModelConfig config_from_json(const json& j) {
  ModelConfig cfg;
  const json& e = j.at("encoder");
  cfg.encoder.embed_dim = e.at("embed_dim").get<int>();
  cfg.encoder.conv1_width = e.at("conv1_width").get<int>();
  cfg.encoder.conv1_filters = e.at("conv1_filters").get<int>();
  cfg.encoder.conv2_width = e.at("conv2_width").get<int>();
  cfg.encoder.conv2_filters = e.at("conv2_filters").get<int>();
  cfg.encoder.thought_dim = e.at("thought_dim").get<int>();
  const json& d = j.at("decoder");
  cfg.decoder.vocab_size = d.at("vocab_size").get<int>();
  cfg.decoder.hidden = d.at("hidden").get<int>();
  cfg.decoder.layers = d.at("layers").get<int>();
  return cfg;
}

}  // namespace

void save_checkpoint(const std::string& dir, const ModelParams& params,
                     const CheckpointManifest& manifest) {
  manifest.model.validate();
  std::filesystem::create_directories(dir);

  json tensors = json::array();
  const auto names = parameter_names(manifest.model);
  const auto tensor_ptrs = params.parameters();
  if (names.size() != tensor_ptrs.size()) {
    throw input_error("parameter list does not match the model configuration");
  }
  for (size_t i = 0; i < names.size(); ++i) {
    tensors.push_back(json{{"name", names[i]}, {"shape", tensor_ptrs[i]->shape}});
  }
  json m = {
      {"format_version", manifest.format_version},
      {"model", config_json(manifest.model)},
      {"vocab_fingerprint", hex64(manifest.vocab_fingerprint)},
      {"epoch", manifest.epoch},
      {"val_loss", manifest.val_loss},
      {"seed", hex64(manifest.seed)},
      {"tensors", tensors},
  };

  const std::string manifest_path = dir + "/manifest.json";
  {
    std::ofstream out(manifest_path, std::ios::binary);
    if (!out) throw input_error("cannot write " + manifest_path);
    out << m.dump(2) << "\n";
    if (!out) throw input_error("failed writing " + manifest_path);
  }

  const std::string blob_path = dir + "/params.bin";
  std::vector<char> data;
  for (const Tensor* t : tensor_ptrs) {
    const size_t bytes = t->data.size() * sizeof(float);
    const size_t offset = data.size();
    data.resize(offset + bytes);
    std::memcpy(data.data() + offset, t->data.data(), bytes);
  }
  const uint64_t length = data.size();
  const uint32_t crc = blob_crc(data, data.size());
  std::ofstream out(blob_path, std::ios::binary);
  if (!out) throw input_error("cannot write " + blob_path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.write(reinterpret_cast<const char*>(&length), sizeof(length));
  out.write(reinterpret_cast<const char*>(&crc), sizeof(crc));
  if (!out) throw input_error("failed writing " + blob_path);
}

LoadedCheckpoint load_checkpoint(const std::string& dir, uint64_t expected_vocab_fingerprint) {
  const std::string manifest_path = dir + "/manifest.json";
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw input_error("cannot open " + manifest_path);

  LoadedCheckpoint loaded;
  json tensors;
  try {
    json m = json::parse(in);
    loaded.manifest.format_version = m.at("format_version").get<int>();
    if (loaded.manifest.format_version != 1) {
      throw format_error("unsupported checkpoint format version");
    }
    loaded.manifest.model = config_from_json(m.at("model"));
    loaded.manifest.vocab_fingerprint = parse_hex64(m.at("vocab_fingerprint").get<std::string>());
    loaded.manifest.epoch = m.at("epoch").get<int>();
    loaded.manifest.val_loss = m.at("val_loss").get<double>();
    loaded.manifest.seed = parse_hex64(m.at("seed").get<std::string>());
    tensors = m.at("tensors");
  } catch (const json::exception& e) {
    throw format_error(std::string("bad checkpoint manifest: ") + e.what());
  }
  try {
    loaded.manifest.model.validate();
  } catch (const input_error& e) {
    throw format_error(std::string("bad checkpoint manifest: ") + e.what());
  }

  if (loaded.manifest.vocab_fingerprint != expected_vocab_fingerprint) {
    throw compat_error("checkpoint was built against a different vocabulary");
  }

  loaded.params = ModelParams::create(loaded.manifest.model);
  const auto names = parameter_names(loaded.manifest.model);
  const auto tensor_ptrs = loaded.params.parameters();
  if (!tensors.is_array() || tensors.size() != names.size()) {
    throw format_error("manifest tensor list does not match the model configuration");
  }
  for (size_t i = 0; i < names.size(); ++i) {
    try {
      if (tensors[i].at("name").get<std::string>() != names[i] ||
          tensors[i].at("shape").get<std::vector<int>>() != tensor_ptrs[i]->shape) {
        throw format_error("manifest tensor entry mismatch: " + names[i]);
      }
    } catch (const json::exception&) {
      throw format_error("manifest tensor entry mismatch: " + names[i]);
    }
  }

  const std::string blob_path = dir + "/params.bin";
  std::ifstream blob(blob_path, std::ios::binary | std::ios::ate);
  if (!blob) throw input_error("cannot open " + blob_path);
  const std::streamsize file_size = blob.tellg();
  blob.seekg(0);

  uint64_t expected_bytes = 0;
  for (const Tensor* t : tensor_ptrs) expected_bytes += t->data.size() * sizeof(float);
  const uint64_t expected_total = expected_bytes + sizeof(uint64_t) + sizeof(uint32_t);
  if (static_cast<uint64_t>(file_size) != expected_total) {
    throw format_error("parameter blob is truncated or oversized");
  }

  std::vector<char> data(static_cast<size_t>(expected_bytes));
  uint64_t stored_length = 0;
  uint32_t stored_crc = 0;
  blob.read(data.data(), static_cast<std::streamsize>(data.size()));
  blob.read(reinterpret_cast<char*>(&stored_length), sizeof(stored_length));
  blob.read(reinterpret_cast<char*>(&stored_crc), sizeof(stored_crc));
  if (!blob) throw format_error("parameter blob is truncated");
  if (stored_length != expected_bytes) throw format_error("parameter blob length mismatch");
  if (blob_crc(data, data.size()) != stored_crc) {
    throw format_error("parameter blob checksum mismatch");
  }

  size_t offset = 0;
  for (Tensor* t : tensor_ptrs) {
    const size_t bytes = t->data.size() * sizeof(float);
    std::memcpy(t->data.data(), data.data() + offset, bytes);
    offset += bytes;
  }
  return loaded;
}

}  // namespace csumm
