#include "csumm/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "csumm/errors.hpp"
#include "csumm/kernels.hpp"
#include "csumm/vocab.hpp"

namespace csumm {

void DecoderConfig::validate() const {
  if (vocab_size < Vocabulary::kNumSpecials) {
    throw input_error("decoder vocab_size must cover the special ids");
  }
  if (hidden < 1) throw input_error("decoder hidden size must be >= 1");
  if (layers < 1 || layers > 3) throw input_error("decoder layer count must be 1, 2, or 3");
}

DecoderParams DecoderParams::create(const DecoderConfig& cfg) {
  cfg.validate();
  DecoderParams p;
  p.token_embed = Tensor::zeros({cfg.vocab_size, cfg.hidden});
  p.layers.resize(static_cast<size_t>(cfg.layers));
  for (auto& layer : p.layers) {
    layer.wx = Tensor::zeros({cfg.hidden, 4 * cfg.hidden});
    layer.wh = Tensor::zeros({cfg.hidden, 4 * cfg.hidden});
    layer.b = Tensor::zeros({4 * cfg.hidden});
  }
  p.out_w = Tensor::zeros({cfg.hidden, cfg.vocab_size});
  p.out_b = Tensor::zeros({cfg.vocab_size});
  return p;
}

std::vector<Tensor*> DecoderParams::parameters() {
  std::vector<Tensor*> out = {&token_embed};
  for (auto& layer : layers) {
    out.push_back(&layer.wx);
    out.push_back(&layer.wh);
    out.push_back(&layer.b);
  }
  out.push_back(&out_w);
  out.push_back(&out_b);
  return out;
}

std::vector<const Tensor*> DecoderParams::parameters() const {
  std::vector<const Tensor*> out = {&token_embed};
  for (const auto& layer : layers) {
    out.push_back(&layer.wx);
    out.push_back(&layer.wh);
    out.push_back(&layer.b);
  }
  out.push_back(&out_w);
  out.push_back(&out_b);
  return out;
}

DecoderState init_state(const Tensor& thought, const DecoderConfig& cfg) {
  cfg.validate();
  require_shape(thought, {cfg.hidden}, "thought vector");
  DecoderState state;
  state.h.push_back(thought);
  for (int l = 1; l < cfg.layers; ++l) state.h.push_back(Tensor::zeros({cfg.hidden}));
  for (int l = 0; l < cfg.layers; ++l) state.c.push_back(Tensor::zeros({cfg.hidden}));
  return state;
}

std::pair<Tensor, DecoderState> decoder_step(int prev_token, const DecoderState& state,
                                             const DecoderParams& params,
                                             const DecoderConfig& cfg) {
  cfg.validate();
  if (prev_token < 0 || prev_token >= cfg.vocab_size) {
    throw index_error("decoder token id out of range");
  }
  if (static_cast<int>(state.h.size()) != cfg.layers ||
      static_cast<int>(state.c.size()) != cfg.layers) {
    throw input_error("decoder state layer count mismatch");
  }
  const int h = cfg.hidden;

  Tensor x = Tensor::zeros({h});
  std::memcpy(x.data.data(), params.token_embed.data.data() + static_cast<size_t>(prev_token) * h,
              sizeof(float) * static_cast<size_t>(h));

  DecoderState next;
  Tensor gates = Tensor::zeros({4 * h});
  for (int l = 0; l < cfg.layers; ++l) {
    Tensor h_out = Tensor::zeros({h});
    Tensor c_out = Tensor::zeros({h});
    const auto& layer = params.layers[static_cast<size_t>(l)];
    kernels::lstm_forward(x.data.data(), state.h[static_cast<size_t>(l)].data.data(),
                          state.c[static_cast<size_t>(l)].data.data(), layer.wx.data.data(),
                          layer.wh.data.data(), layer.b.data.data(), gates.data.data(),
                          h_out.data.data(), c_out.data.data(), h, h);
    x = h_out;
    next.h.push_back(std::move(h_out));
    next.c.push_back(std::move(c_out));
  }

  Tensor logits = Tensor::zeros({cfg.vocab_size});
  kernels::dense_forward(x.data.data(), params.out_w.data.data(), params.out_b.data.data(),
                         logits.data.data(), h, cfg.vocab_size);
  Tensor probs = Tensor::zeros({cfg.vocab_size});
  kernels::softmax(logits.data.data(), probs.data.data(), cfg.vocab_size);
  return {std::move(probs), std::move(next)};
}

NodeId teacher_forced_loss_on_tape(Tape& tape, NodeId thought, const std::vector<int>& target,
                                   const DecoderParams& params, const DecoderConfig& cfg) {
  cfg.validate();
  if (target.size() < 2) throw input_error("target must hold at least START and END");
  for (int id : target) {
    if (id < 0 || id >= cfg.vocab_size) throw index_error("target id out of range");
  }

  NodeId table = tape.param(&params.token_embed);
  std::vector<NodeId> wx, wh, b;
  for (const auto& layer : params.layers) {
    wx.push_back(tape.param(&layer.wx));
    wh.push_back(tape.param(&layer.wh));
    b.push_back(tape.param(&layer.b));
  }
  NodeId out_w = tape.param(&params.out_w);
  NodeId out_b = tape.param(&params.out_b);

  std::vector<NodeId> h(static_cast<size_t>(cfg.layers));
  std::vector<NodeId> c(static_cast<size_t>(cfg.layers));
  h[0] = thought;
  for (int l = 1; l < cfg.layers; ++l) h[static_cast<size_t>(l)] = tape.input(Tensor::zeros({cfg.hidden}));
  for (int l = 0; l < cfg.layers; ++l) c[static_cast<size_t>(l)] = tape.input(Tensor::zeros({cfg.hidden}));

  const int steps = static_cast<int>(target.size()) - 1;
  std::vector<NodeId> losses;
  losses.reserve(static_cast<size_t>(steps));
  for (int t = 0; t < steps; ++t) {
    NodeId x = tape.reshape(tape.embed_lookup(table, {target[static_cast<size_t>(t)]}),
                            {cfg.hidden});
    for (int l = 0; l < cfg.layers; ++l) {
      LstmNodes cell = tape.lstm_cell(x, h[static_cast<size_t>(l)], c[static_cast<size_t>(l)],
                                      wx[static_cast<size_t>(l)], wh[static_cast<size_t>(l)],
                                      b[static_cast<size_t>(l)]);
      h[static_cast<size_t>(l)] = cell.h;
      c[static_cast<size_t>(l)] = cell.c;
      x = cell.h;
    }
    NodeId logits = tape.dense(x, out_w, out_b);
    losses.push_back(tape.softmax_cross_entropy(logits, target[static_cast<size_t>(t) + 1]));
  }
  return tape.scaled_sum(losses, std::vector<double>(losses.size(), 1.0 / steps));
}

double teacher_forced_loss(const Tensor& thought, const std::vector<int>& target,
                           const DecoderParams& params, const DecoderConfig& cfg) {
  cfg.validate();
  require_shape(thought, {cfg.hidden}, "thought vector");
  Tape tape;
  NodeId thought_node = tape.input(thought);
  NodeId loss = teacher_forced_loss_on_tape(tape, thought_node, target, params, cfg);
  return static_cast<double>(tape.value(loss).at(0));
}

void BeamConfig::validate() const {
  if (width < 1) throw input_error("beam width must be >= 1");
  if (max_len < 1) throw input_error("beam max_len must be >= 1");
}

namespace {

// Score descending, then token sequence ascending so the lower id wins ties.
bool beam_order(const std::vector<int>& a_tokens, double a_score,
                const std::vector<int>& b_tokens, double b_score) {
  if (a_score != b_score) return a_score > b_score;
  return std::lexicographical_compare(a_tokens.begin(), a_tokens.end(), b_tokens.begin(),
                                      b_tokens.end());
}

}  // namespace

std::vector<int> beam_search_decode(const Tensor& thought, const DecoderParams& params,
                                    const DecoderConfig& cfg, const BeamConfig& bcfg,
                                    BeamTrace* trace) {
  cfg.validate();
  bcfg.validate();
  if (trace) trace->steps.clear();

  std::vector<BeamHypothesis> live;
  {
    BeamHypothesis root;
    root.state = init_state(thought, cfg);
    live.push_back(std::move(root));
  }
  std::vector<BeamHypothesis> finished;

  for (int step = 0; step < bcfg.max_len && !live.empty(); ++step) {
    // Advance every live hypothesis once; extensions share the new state.
    std::vector<Tensor> next_probs;
    std::vector<DecoderState> next_states;
    next_probs.reserve(live.size());
    next_states.reserve(live.size());
    for (const auto& hyp : live) {
      int prev = hyp.tokens.empty() ? Vocabulary::kStart : hyp.tokens.back();
      auto [probs, state] = decoder_step(prev, hyp.state, params, cfg);
      next_probs.push_back(std::move(probs));
      next_states.push_back(std::move(state));
    }

    struct Extension {
      std::vector<int> tokens;
      double score;
      size_t parent;
    };
    std::vector<Extension> extensions;
    extensions.reserve(live.size() * static_cast<size_t>(cfg.vocab_size));
    for (size_t i = 0; i < live.size(); ++i) {
      for (int v = 0; v < cfg.vocab_size; ++v) {
        Extension ext;
        ext.tokens = live[i].tokens;
        ext.tokens.push_back(v);
        ext.score = live[i].log_prob + std::log(static_cast<double>(next_probs[i].at(v)));
        ext.parent = i;
        extensions.push_back(std::move(ext));
      }
    }
    std::sort(extensions.begin(), extensions.end(), [](const Extension& a, const Extension& b) {
      return beam_order(a.tokens, a.score, b.tokens, b.score);
    });
    size_t keep = std::min<size_t>(static_cast<size_t>(bcfg.width), extensions.size());

    if (trace) {
      BeamStepTrace step_trace;
      for (size_t i = 0; i < keep; ++i) {
        step_trace.prefixes.push_back(extensions[i].tokens);
        step_trace.scores.push_back(extensions[i].score);
      }
      trace->steps.push_back(std::move(step_trace));
    }

    std::vector<BeamHypothesis> next_live;
    for (size_t i = 0; i < keep; ++i) {
      BeamHypothesis hyp;
      hyp.tokens = std::move(extensions[i].tokens);
      hyp.log_prob = extensions[i].score;
      hyp.state = next_states[extensions[i].parent];
      hyp.finished = hyp.tokens.back() == Vocabulary::kEnd ||
                     static_cast<int>(hyp.tokens.size()) >= bcfg.max_len;
      if (hyp.finished) {
        finished.push_back(std::move(hyp));
      } else {
        next_live.push_back(std::move(hyp));
      }
    }
    live = std::move(next_live);
  }

  const BeamHypothesis* best = nullptr;
  for (const auto& hyp : finished) {
    if (!best || beam_order(hyp.tokens, hyp.log_prob, best->tokens, best->log_prob)) best = &hyp;
  }
  return best ? best->tokens : std::vector<int>{};
}

}  // namespace csumm
