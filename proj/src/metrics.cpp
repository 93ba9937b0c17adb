#include "csumm/metrics.hpp"

#include <cmath>

#include "csumm/errors.hpp"

namespace csumm {

namespace {

std::map<std::vector<std::string>, long long> ngram_counts(const TokenSequence& tokens, int n) {
  std::map<std::vector<std::string>, long long> counts;
  if (static_cast<size_t>(n) > tokens.size()) return counts;
  for (size_t i = 0; i + static_cast<size_t>(n) <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<long>(i),
                                      tokens.begin() + static_cast<long>(i) + n)];
  }
  return counts;
}

}  // namespace

PrecisionCount precision_counts(const TokenSequence& pred, const TokenSequence& ref, int n) {
  if (n < 1 || n > 4) throw input_error("n-gram order must be in 1..4, got " + std::to_string(n));
  PrecisionCount out;
  if (pred.size() >= static_cast<size_t>(n)) {
    out.total = static_cast<long long>(pred.size()) - n + 1;
  }
  if (out.total == 0) return out;
  auto ref_counts = ngram_counts(ref, n);
  for (const auto& [gram, count] : ngram_counts(pred, n)) {
    auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) out.clipped += std::min(count, it->second);
  }
  return out;
}

double modified_precision(const TokenSequence& pred, const TokenSequence& ref, int n) {
  auto pc = precision_counts(pred, ref, n);
  if (pc.total == 0) return 0.0;
  return static_cast<double>(pc.clipped) / static_cast<double>(pc.total);
}

double brevity_penalty(long long c, long long r) {
  if (c < 0) throw input_error("prediction length is negative");
  if (r < 1) throw input_error("reference length must be >= 1");
  if (c == 0) return 0.0;
  if (c > r) return 1.0;
  return std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c));
}

namespace {

double score_from(const std::array<PrecisionCount, 4>& counts, double B) {
  int considered = 0;
  double log_sum = 0.0;
  for (const auto& pc : counts) {
    if (pc.total == 0) continue;
    if (pc.clipped == 0) return 0.0;
    ++considered;
    log_sum += std::log(static_cast<double>(pc.clipped) / static_cast<double>(pc.total));
  }
  if (considered == 0) return 0.0;
  return B * std::exp(log_sum / considered);
}

}  // namespace

BleuReport bleu4_report(const TokenSequence& pred, const TokenSequence& ref) {
  BleuReport rep;
  rep.w = {0.25, 0.25, 0.25, 0.25};
  rep.c = static_cast<long long>(pred.size());
  rep.r = static_cast<long long>(ref.size());

  std::array<PrecisionCount, 4> counts;
  for (int n = 1; n <= 4; ++n) {
    counts[static_cast<size_t>(n - 1)] = precision_counts(pred, ref, n);
    rep.p[static_cast<size_t>(n - 1)] =
        counts[static_cast<size_t>(n - 1)].total == 0
            ? 0.0
            : static_cast<double>(counts[static_cast<size_t>(n - 1)].clipped) /
                  static_cast<double>(counts[static_cast<size_t>(n - 1)].total);
  }

  if (rep.r == 0) {
    rep.B = rep.c > 0 ? 1.0 : 0.0;
    rep.score = 0.0;
    return rep;
  }
  rep.B = brevity_penalty(rep.c, rep.r);
  rep.score = score_from(counts, rep.B);
  return rep;
}

double bleu4(const TokenSequence& pred, const TokenSequence& ref) {
  return bleu4_report(pred, ref).score;
}

CorpusBleuReport corpus_bleu_report(
    const std::vector<std::pair<TokenSequence, TokenSequence>>& pairs, bool corpus_level) {
  if (pairs.empty()) throw input_error("corpus BLEU needs at least one pair");
  CorpusBleuReport rep;
  rep.n_pairs = static_cast<long long>(pairs.size());

  if (corpus_level) {
    std::array<PrecisionCount, 4> pooled;
    long long c = 0, r = 0;
    for (const auto& [pred, ref] : pairs) {
      c += static_cast<long long>(pred.size());
      r += static_cast<long long>(ref.size());
      for (int n = 1; n <= 4; ++n) {
        auto pc = precision_counts(pred, ref, n);
        pooled[static_cast<size_t>(n - 1)].clipped += pc.clipped;
        pooled[static_cast<size_t>(n - 1)].total += pc.total;
      }
    }
    for (size_t i = 0; i < 4; ++i) {
      rep.mean_p[i] = pooled[i].total == 0 ? 0.0
                                           : static_cast<double>(pooled[i].clipped) /
                                                 static_cast<double>(pooled[i].total);
    }
    rep.mean_B = r == 0 ? (c > 0 ? 1.0 : 0.0) : brevity_penalty(c, r);
    rep.score = 100.0 * (r == 0 ? 0.0 : score_from(pooled, rep.mean_B));
    return rep;
  }

  double score_sum = 0.0;
  double b_sum = 0.0;
  std::array<double, 4> p_sum{};
  for (const auto& [pred, ref] : pairs) {
    auto one = bleu4_report(pred, ref);
    score_sum += one.score;
    b_sum += one.B;
    for (size_t i = 0; i < 4; ++i) p_sum[i] += one.p[i];
  }
  rep.score = 100.0 * score_sum / static_cast<double>(pairs.size());
  rep.mean_B = b_sum / static_cast<double>(pairs.size());
  for (size_t i = 0; i < 4; ++i) rep.mean_p[i] = p_sum[i] / static_cast<double>(pairs.size());
  return rep;
}

double corpus_bleu(const std::vector<std::pair<TokenSequence, TokenSequence>>& pairs,
                   bool corpus_level) {
  return corpus_bleu_report(pairs, corpus_level).score;
}

EntropyReport comment_entropy(const std::vector<TokenSequence>& comments) {
  long long total = 0;
  std::map<std::string, long long> counts;
  for (const auto& comment : comments) {
    for (const auto& tok : comment) {
      ++counts[tok];
      ++total;
    }
  }
  if (comments.empty() || total == 0) {
    throw input_error("entropy needs at least one non-empty comment");
  }

  EntropyReport rep;
  rep.V = static_cast<long long>(counts.size());
  rep.w = static_cast<double>(total) / static_cast<double>(comments.size());
  double h = 0.0;
  for (const auto& [tok, count] : counts) {
    double ratio = static_cast<double>(count) / static_cast<double>(total);
    rep.p[tok] = ratio;
    h -= ratio * std::log2(ratio);
  }
  rep.E = rep.w * h;
  return rep;
}

}  // namespace csumm
