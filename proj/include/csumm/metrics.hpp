#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace csumm {

using TokenSequence = std::vector<std::string>;

// Clipped n-gram tally as an exact rational, clipped/total.
struct PrecisionCount {
  long long clipped = 0;
  long long total = 0;
};

struct BleuReport {
  std::array<double, 4> p{};   // clipped precision per order, 0/0 counts as 0
  std::array<double, 4> w{};   // uniform quarter weights
  long long c = 0;             // prediction length
  long long r = 0;             // reference length
  double B = 0.0;              // brevity penalty
  double score = 0.0;          // in [0, 1]
};

struct CorpusBleuReport {
  double score = 0.0;  // scaled by 100
  long long n_pairs = 0;
  std::array<double, 4> mean_p{};
  double mean_B = 0.0;
};

struct EntropyReport {
  double E = 0.0;        // bits
  double w = 0.0;        // average comment length in tokens
  long long V = 0;       // unique tokens
  std::map<std::string, double> p;  // occurrence ratio per token
};

PrecisionCount precision_counts(const TokenSequence& pred, const TokenSequence& ref, int n);

// clipped/total with 0/0 defined as 0.
double modified_precision(const TokenSequence& pred, const TokenSequence& ref, int n);

// 0 when c = 0, 1 when c > r, e^(1 - r/c) otherwise.
double brevity_penalty(long long c, long long r);

// Unsmoothed BLEU-4: any zero precision zeroes the score. Orders with no
// prediction n-grams at all (prediction shorter than n) are left out of the
// product with the weights renormalized, so identical short pairs score 1.
BleuReport bleu4_report(const TokenSequence& pred, const TokenSequence& ref);
double bleu4(const TokenSequence& pred, const TokenSequence& ref);

// Mean per-pair score by default; corpus_level pools n-gram counts and
// lengths across pairs before scoring. Either way scaled by 100.
CorpusBleuReport corpus_bleu_report(
    const std::vector<std::pair<TokenSequence, TokenSequence>>& pairs, bool corpus_level = false);
double corpus_bleu(const std::vector<std::pair<TokenSequence, TokenSequence>>& pairs,
                   bool corpus_level = false);

// E = w * (-sum_i p_i log2 p_i) over the pooled token distribution.
EntropyReport comment_entropy(const std::vector<TokenSequence>& comments);

}  // namespace csumm
