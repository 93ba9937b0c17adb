#include "csumm/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "csumm/checkpoint.hpp"
#include "csumm/codec.hpp"
#include "csumm/corpus.hpp"
#include "csumm/errors.hpp"
#include "csumm/metrics.hpp"
#include "csumm/model.hpp"
#include "csumm/trainer.hpp"
#include "csumm/vocab.hpp"
#include "json.hpp"

namespace csumm {

namespace {

using nlohmann::json;

// Everything the config file can set; flags override afterwards.
struct CliConfig {
  TrainConfig train;
  BeamConfig beam;
  int embed_dim = 16;
  int conv1_width = 3;
  int conv1_filters = 64;
  int conv2_width = 3;
  int conv2_filters = 128;
  int hidden = 1024;
};

void require_known_keys(const json& j, const std::vector<std::string>& known,
                        const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw usage_error("config: unknown key \"" + key + "\" in " + where);
    }
  }
}

void apply_config_file(CliConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw usage_error(std::string("config: ") + e.what());
  }
  try {
    require_known_keys(j,
                       {"schedule", "batch_size", "lr", "clip_norm", "seed", "vocab_threshold",
                        "decoder_layers", "beam", "model"},
                       "the top level");
    if (j.contains("schedule")) {
      const json& s = j["schedule"];
      require_known_keys(s, {"kind", "count", "samples_per_round", "val_samples"}, "schedule");
      if (s.contains("kind")) {
        const std::string kind = s["kind"].get<std::string>();
        if (kind == "epochs") {
          cfg.train.schedule.kind = TrainSchedule::Kind::epochs;
        } else if (kind == "rounds") {
          cfg.train.schedule.kind = TrainSchedule::Kind::rounds;
        } else {
          throw usage_error("config: schedule.kind must be \"epochs\" or \"rounds\"");
        }
      }
      if (s.contains("count")) cfg.train.schedule.count = s["count"].get<int>();
      if (s.contains("samples_per_round")) {
        cfg.train.schedule.samples_per_round = s["samples_per_round"].get<long long>();
      }
      if (s.contains("val_samples")) cfg.train.schedule.val_samples = s["val_samples"].get<int>();
    }
    if (j.contains("batch_size")) cfg.train.batch_size = j["batch_size"].get<int>();
    if (j.contains("lr")) cfg.train.lr = j["lr"].get<double>();
    if (j.contains("clip_norm")) cfg.train.clip_norm = j["clip_norm"].get<double>();
    if (j.contains("seed")) cfg.train.seed = j["seed"].get<uint64_t>();
    if (j.contains("vocab_threshold")) cfg.train.vocab_threshold = j["vocab_threshold"].get<int>();
    if (j.contains("decoder_layers")) cfg.train.decoder_layers = j["decoder_layers"].get<int>();
    if (j.contains("beam")) {
      const json& b = j["beam"];
      require_known_keys(b, {"width", "max_len"}, "beam");
      if (b.contains("width")) cfg.beam.width = b["width"].get<int>();
      if (b.contains("max_len")) cfg.beam.max_len = b["max_len"].get<int>();
    }
    if (j.contains("model")) {
      const json& m = j["model"];
      require_known_keys(
          m, {"embed_dim", "conv1_width", "conv1_filters", "conv2_width", "conv2_filters", "hidden"},
          "model");
      if (m.contains("embed_dim")) cfg.embed_dim = m["embed_dim"].get<int>();
      if (m.contains("conv1_width")) cfg.conv1_width = m["conv1_width"].get<int>();
      if (m.contains("conv1_filters")) cfg.conv1_filters = m["conv1_filters"].get<int>();
      if (m.contains("conv2_width")) cfg.conv2_width = m["conv2_width"].get<int>();
      if (m.contains("conv2_filters")) cfg.conv2_filters = m["conv2_filters"].get<int>();
      if (m.contains("hidden")) cfg.hidden = m["hidden"].get<int>();
    }
  } catch (const json::exception& e) {
    throw usage_error(std::string("config: ") + e.what());
  }
}

ModelConfig model_config_from(const CliConfig& cfg, int vocab_size) {
  ModelConfig m;
  m.encoder = {cfg.embed_dim,    cfg.conv1_width, cfg.conv1_filters,
               cfg.conv2_width, cfg.conv2_filters, cfg.hidden};
  m.decoder = {vocab_size, cfg.hidden, cfg.train.decoder_layers};
  return m;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

TokenSequence split_whitespace(const std::string& text) {
  TokenSequence tokens;
  std::string token;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') {
      if (!token.empty()) tokens.push_back(std::move(token));
      token.clear();
    } else {
      token += ch;
    }
  }
  if (!token.empty()) tokens.push_back(std::move(token));
  return tokens;
}

int cmd_ingest(const std::string& in_path, const std::string& out_dir, const std::string& scheme,
               uint64_t seed, std::ostream& out) {
  SplitScheme parsed_scheme = SplitScheme::parse(scheme);
  auto records = read_jsonl(in_path);
  FilterOutcome outcome = filter_corpus(records);
  DatasetSplits splits = split_dataset(outcome.accepted, parsed_scheme, seed);
  std::filesystem::create_directories(out_dir);
  write_jsonl(splits.train, out_dir + "/train.jsonl");
  write_jsonl(splits.val, out_dir + "/val.jsonl");
  write_jsonl(splits.test, out_dir + "/test.jsonl");
  out << filter_report_json(outcome.report) << "\n";
  out << json{{"train", splits.train.size()},
              {"val", splits.val.size()},
              {"test", splits.test.size()}}
             .dump()
      << "\n";
  return 0;
}

int cmd_build_vocab(const std::string& in_path, const std::string& out_path, int threshold,
                    const std::string& dict_path, std::ostream& out) {
  auto records = read_jsonl(in_path);
  std::vector<std::string> comments;
  comments.reserve(records.size());
  for (const auto& record : records) comments.push_back(record.comment);
  EnglishDictionary dict =
      dict_path.empty() ? EnglishDictionary::embedded() : EnglishDictionary::from_file(dict_path);
  Vocabulary vocab = build_vocabulary(build_word_counts(comments), dict, threshold);
  save_vocabulary(vocab, out_path);
  out << json{{"elements", vocab.size()}, {"threshold", threshold}}.dump() << "\n";
  return 0;
}

int cmd_train(const std::string& train_path, const std::string& val_path,
              const std::string& vocab_path, const std::string& model_dir, const CliConfig& cfg,
              std::ostream& out) {
  Vocabulary vocab = load_vocabulary(vocab_path);
  ModelConfig mcfg = model_config_from(cfg, vocab.size());
  auto train_pairs = prepare_pairs(read_jsonl(train_path), vocab, mcfg.encoder);
  auto val_pairs = prepare_pairs(read_jsonl(val_path), vocab, mcfg.encoder);
  const uint64_t fingerprint = vocab.content_fingerprint();
  std::filesystem::create_directories(model_dir);

  TrainResult result =
      train(train_pairs, val_pairs, mcfg, cfg.train,
            [&](const EpochStats& stats, const ModelParams& params, bool is_best) {
              out << "epoch " << stats.epoch << " train " << stats.train_loss << " val "
                  << stats.val_loss << (is_best ? " *" : "") << "\n";
              if (is_best) {
                CheckpointManifest manifest;
                manifest.model = mcfg;
                manifest.vocab_fingerprint = fingerprint;
                manifest.epoch = stats.epoch;
                manifest.val_loss = stats.val_loss;
                manifest.seed = cfg.train.seed;
                save_checkpoint(model_dir, params, manifest);
              }
            });
  write_history_csv(model_dir + "/history.csv", result.history);
  out << "best epoch " << result.best_epoch << " val " << result.best_val_loss << "\n";
  return 0;
}

int cmd_predict(const std::string& model_dir, const std::string& vocab_path,
                const std::string& code_path, const BeamConfig& beam, std::istream& in,
                std::ostream& out) {
  Vocabulary vocab = load_vocabulary(vocab_path);
  LoadedCheckpoint loaded = load_checkpoint(model_dir, vocab.content_fingerprint());
  std::string code;
  if (code_path.empty()) {
    code.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(code_path, std::ios::binary);
    if (!file) throw input_error("cannot open " + code_path);
    code.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  out << predict_comment(code, loaded.params, loaded.manifest.model, vocab, beam) << "\n";
  return 0;
}

int cmd_evaluate(const std::string& pred_path, const std::string& ref_path, bool corpus_level,
                 std::ostream& out) {
  auto pred_lines = read_lines(pred_path);
  auto ref_lines = read_lines(ref_path);
  if (pred_lines.size() != ref_lines.size()) {
    throw input_error("prediction and reference line counts differ");
  }
  std::vector<std::pair<TokenSequence, TokenSequence>> pairs;
  std::vector<TokenSequence> preds, refs;
  pairs.reserve(pred_lines.size());
  for (size_t i = 0; i < pred_lines.size(); ++i) {
    preds.push_back(split_whitespace(pred_lines[i]));
    refs.push_back(split_whitespace(ref_lines[i]));
    pairs.emplace_back(preds.back(), refs.back());
  }
  CorpusBleuReport report = corpus_bleu_report(pairs, corpus_level);
  json result = {
      {"score", report.score},
      {"n_pairs", report.n_pairs},
      {"mean_p_n", report.mean_p},
      {"mean_B", report.mean_B},
      {"entropy_pred", comment_entropy(preds).E},
      {"entropy_ref", comment_entropy(refs).E},
  };
  out << result.dump(2) << "\n";
  return 0;
}

int cmd_stats(const std::string& in_path, const std::string& train_path,
              const std::string& test_path, std::ostream& out) {
  auto records = read_jsonl(in_path);
  FilterOutcome outcome = filter_corpus(records);

  std::map<std::string, long long> comment_hist;
  std::map<std::string, long long> code_hist;
  std::vector<TokenSequence> comments;
  for (const auto& record : outcome.accepted) {
    TokenSequence tokens = tokenize_comment(record.comment);
    comment_hist[std::to_string(tokens.size())] += 1;
    const size_t bucket = record.code.size() / 128 * 128;
    code_hist[std::to_string(bucket)] += 1;
    comments.push_back(std::move(tokens));
  }

  json j;
  j["filter_report"] = json::parse(filter_report_json(outcome.report));
  j["comment_token_length_hist"] = comment_hist;
  j["code_byte_length_hist_bin128"] = code_hist;
  j["comment_entropy_bits"] =
      comments.empty() ? json(nullptr) : json(comment_entropy(comments).E);
  if (!train_path.empty() || !test_path.empty()) {
    if (train_path.empty() || test_path.empty()) {
      throw usage_error("--train and --test must be given together");
    }
    LeakageReport leak = count_leakage(read_jsonl(train_path), read_jsonl(test_path));
    j["leakage"] = {{"n_test", leak.n_test}, {"leaked", leak.leaked}};
  }
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"character-level code summarizer"};
  app.require_subcommand(1);

  std::string config_path, in_path, out_path, scheme = "ratio", dict_path;
  std::string train_path, val_path, vocab_path, model_dir, code_path, pred_path, ref_path;
  std::string stats_train, stats_test;
  uint64_t seed = 0;
  bool seed_given = false, corpus_level = false;
  int threshold = 2;
  int epochs = 0, batch = 0, layers = 0, hidden = 0, beam_width = 0, max_len = 0;

  CLI::App* ingest = app.add_subcommand("ingest", "filter a raw corpus and write splits");
  ingest->add_option("--in", in_path, "raw JSONL corpus")->required();
  ingest->add_option("--out", out_path, "output directory for the split files")->required();
  ingest->add_option("--scheme", scheme, "ratio or fixed-test:<N>");
  ingest->add_option("--seed", seed, "shuffle seed");

  CLI::App* vocab_cmd = app.add_subcommand("build-vocab", "build the vocabulary from a split");
  vocab_cmd->add_option("--in", in_path, "training JSONL split")->required();
  vocab_cmd->add_option("--out", out_path, "vocabulary file to write")->required();
  vocab_cmd->add_option("--threshold", threshold, "minimum word count");
  vocab_cmd->add_option("--dict", dict_path, "dictionary word list (default: built in)");

  CLI::App* train_cmd = app.add_subcommand("train", "train a model");
  train_cmd->add_option("--train", train_path, "training JSONL split")->required();
  train_cmd->add_option("--val", val_path, "validation JSONL split")->required();
  train_cmd->add_option("--vocab", vocab_path, "vocabulary file")->required();
  train_cmd->add_option("--model", model_dir, "checkpoint directory to write")->required();
  train_cmd->add_option("--config", config_path, "JSON config file");
  train_cmd->add_option("--seed", seed, "training seed");
  train_cmd->add_option("--epochs", epochs, "epoch count (sets the epochs schedule)");
  train_cmd->add_option("--batch", batch, "batch size");
  train_cmd->add_option("--layers", layers, "decoder LSTM layers");
  train_cmd->add_option("--hidden", hidden, "thought-vector and decoder hidden size");

  CLI::App* predict = app.add_subcommand("predict", "decode a comment for one code input");
  predict->add_option("--model", model_dir, "checkpoint directory")->required();
  predict->add_option("--vocab", vocab_path, "vocabulary file")->required();
  predict->add_option("--code", code_path, "code file (default: standard input)");
  predict->add_option("--beam", beam_width, "beam width");
  predict->add_option("--max-len", max_len, "maximum output tokens");
  predict->add_option("--config", config_path, "JSON config file");

  CLI::App* evaluate = app.add_subcommand("evaluate", "score predictions against references");
  evaluate->add_option("--pred", pred_path, "predictions, one per line")->required();
  evaluate->add_option("--ref", ref_path, "references, one per line")->required();
  evaluate->add_flag("--corpus-level", corpus_level, "pool n-gram counts across the corpus");

  CLI::App* stats = app.add_subcommand("stats", "corpus filter, length, and entropy report");
  stats->add_option("--in", in_path, "raw JSONL corpus")->required();
  stats->add_option("--train", stats_train, "training split for the leakage report");
  stats->add_option("--test", stats_test, "test split for the leakage report");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("csumm");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    seed_given = ingest->count("--seed") > 0 || train_cmd->count("--seed") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    CliConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (seed_given) cfg.train.seed = seed;
    if (epochs > 0) {
      cfg.train.schedule.kind = TrainSchedule::Kind::epochs;
      cfg.train.schedule.count = epochs;
    }
    if (batch > 0) cfg.train.batch_size = batch;
    if (layers > 0) cfg.train.decoder_layers = layers;
    if (hidden > 0) cfg.hidden = hidden;
    if (beam_width > 0) cfg.beam.width = beam_width;
    if (max_len > 0) cfg.beam.max_len = max_len;

    if (ingest->parsed()) return cmd_ingest(in_path, out_path, scheme, cfg.train.seed, out);
    if (vocab_cmd->parsed()) return cmd_build_vocab(in_path, out_path, threshold, dict_path, out);
    if (train_cmd->parsed()) {
      return cmd_train(train_path, val_path, vocab_path, model_dir, cfg, out);
    }
    if (predict->parsed()) {
      return cmd_predict(model_dir, vocab_path, code_path, cfg.beam, in, out);
    }
    if (evaluate->parsed()) return cmd_evaluate(pred_path, ref_path, corpus_level, out);
    if (stats->parsed()) return cmd_stats(in_path, stats_train, stats_test, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace csumm
