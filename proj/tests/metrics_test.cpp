#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "csumm/errors.hpp"
#include "csumm/metrics.hpp"
#include "csumm/rng.hpp"
#include "doctest.h"

using namespace csumm;

namespace {

// Positional-scan clipped counting, deliberately a different algorithm from
// the library's map-based tally: prediction position i scores iff fewer equal
// n-grams precede it than the reference contains.
long long oracle_clipped(const TokenSequence& pred, const TokenSequence& ref, int n) {
  auto gram_at = [n](const TokenSequence& s, size_t i) {
    return std::vector<std::string>(s.begin() + static_cast<long>(i),
                                    s.begin() + static_cast<long>(i) + n);
  };
  if (pred.size() < static_cast<size_t>(n)) return 0;
  long long clipped = 0;
  for (size_t i = 0; i + static_cast<size_t>(n) <= pred.size(); ++i) {
    auto g = gram_at(pred, i);
    long long before = 0;
    for (size_t j = 0; j < i; ++j) {
      if (gram_at(pred, j) == g) ++before;
    }
    long long in_ref = 0;
    for (size_t j = 0; j + static_cast<size_t>(n) <= ref.size(); ++j) {
      if (gram_at(ref, j) == g) ++in_ref;
    }
    if (before < in_ref) ++clipped;
  }
  return clipped;
}

double oracle_bleu4(const TokenSequence& pred, const TokenSequence& ref) {
  if (pred.empty() || ref.empty()) return 0.0;
  double b = pred.size() > ref.size()
                 ? 1.0
                 : std::exp(1.0 - static_cast<double>(ref.size()) / static_cast<double>(pred.size()));
  int considered = 0;
  double log_sum = 0.0;
  for (int n = 1; n <= 4; ++n) {
    long long total = static_cast<long long>(pred.size()) - n + 1;
    if (total <= 0) continue;
    long long clipped = oracle_clipped(pred, ref, n);
    if (clipped == 0) return 0.0;
    ++considered;
    log_sum += std::log(static_cast<double>(clipped) / static_cast<double>(total));
  }
  if (considered == 0) return 0.0;
  return b * std::exp(log_sum / considered);
}

TokenSequence random_tokens(Rng& rng, size_t max_len, int alphabet) {
  TokenSequence out;
  size_t len = rng.index(max_len + 1);
  for (size_t i = 0; i < len; ++i) {
    out.push_back(std::string(1, static_cast<char>('a' + rng.index(static_cast<size_t>(alphabet)))));
  }
  return out;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("hand-counted precision pair") {
  TokenSequence pred{"sets", "the", "length", "of", "the", "file", "."};
  TokenSequence ref{"change", "the", "length", "of", "the", "file", "."};

  auto p1 = precision_counts(pred, ref, 1);
  CHECK(p1.clipped == 6);
  CHECK(p1.total == 7);
  auto p2 = precision_counts(pred, ref, 2);
  CHECK(p2.clipped == 5);
  CHECK(p2.total == 6);
  auto p3 = precision_counts(pred, ref, 3);
  CHECK(p3.clipped == 4);
  CHECK(p3.total == 5);
  auto p4 = precision_counts(pred, ref, 4);
  CHECK(p4.clipped == 3);
  CHECK(p4.total == 4);

  auto rep = bleu4_report(pred, ref);
  CHECK(rep.B == 1.0);
  CHECK(rep.c == 7);
  CHECK(rep.r == 7);
  CHECK(rep.score == doctest::Approx(std::pow(3.0 / 7.0, 0.25)).epsilon(1e-12));
  CHECK(rep.score == doctest::Approx(0.8091).epsilon(2e-4));
}

TEST_CASE("precision basics") {
  TokenSequence x{"a", "b", "c", "d", "e"};
  for (int n = 1; n <= 4; ++n) {
    CHECK(modified_precision(x, x, n) == 1.0);
  }
  CHECK(modified_precision({"a", "b"}, {"c", "d"}, 1) == 0.0);

  auto clip = precision_counts({"the", "the", "the"}, {"the"}, 1);
  CHECK(clip.clipped == 1);
  CHECK(clip.total == 3);

  auto zero = precision_counts({"a"}, {"a", "b"}, 2);
  CHECK(zero.clipped == 0);
  CHECK(zero.total == 0);
  CHECK(modified_precision({"a"}, {"a", "b"}, 2) == 0.0);

  CHECK_THROWS_AS(precision_counts(x, x, 0), input_error);
  CHECK_THROWS_AS(precision_counts(x, x, 5), input_error);
}

TEST_CASE("brevity penalty branches") {
  CHECK(brevity_penalty(8, 7) == 1.0);
  CHECK(brevity_penalty(5, 5) == 1.0);
  CHECK(brevity_penalty(5, 10) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(brevity_penalty(0, 3) == 0.0);
  CHECK_THROWS_AS(brevity_penalty(-1, 3), input_error);
  CHECK_THROWS_AS(brevity_penalty(3, 0), input_error);

  // Shortening the prediction below the reference never raises B.
  double prev = brevity_penalty(0, 10);
  for (long long c = 1; c <= 11; ++c) {
    double b = brevity_penalty(c, 10);
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("identical sequences score 1 at any length") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    TokenSequence x = random_tokens(rng, 10, 4);
    if (x.empty()) x.push_back("a");
    CHECK(bleu4(x, x) == 1.0);
  }
}

TEST_CASE("unsmoothed zero rule") {
  TokenSequence pred{"a", "b", "c", "d", "e"};
  TokenSequence ref{"a", "b", "c", "x", "e"};
  auto rep = bleu4_report(pred, ref);
  CHECK(rep.p[0] > 0.0);
  CHECK(rep.p[3] == 0.0);
  CHECK(rep.score == 0.0);

  CHECK(bleu4({}, {"a"}) == 0.0);
}

TEST_CASE("precision and score match the positional oracle") {
  Rng rng(5150);
  for (int i = 0; i < 400; ++i) {
    TokenSequence pred = random_tokens(rng, 12, 5);
    TokenSequence ref = random_tokens(rng, 12, 5);
    for (int n = 1; n <= 4; ++n) {
      auto pc = precision_counts(pred, ref, n);
      long long expected_total =
          pred.size() >= static_cast<size_t>(n) ? static_cast<long long>(pred.size()) - n + 1 : 0;
      CHECK(pc.total == expected_total);
      CHECK(pc.clipped == oracle_clipped(pred, ref, n));
    }
    if (!ref.empty()) {
      CHECK(bleu4(pred, ref) == doctest::Approx(oracle_bleu4(pred, ref)).epsilon(1e-12));
    }
  }
}

TEST_CASE("corpus aggregation") {
  TokenSequence a{"get", "the", "file", "contents", "now"};
  TokenSequence b{"set", "a", "flag", "value", "here"};
  TokenSequence z{"q", "w", "r", "t", "y"};

  CHECK(corpus_bleu({{a, a}, {b, b}}) == 100.0);
  CHECK(corpus_bleu({{a, a}, {z, b}}) == 50.0);
  CHECK_THROWS_AS(corpus_bleu({}), input_error);

  auto rep = corpus_bleu_report({{a, a}, {z, b}});
  CHECK(rep.n_pairs == 2);
  CHECK(rep.mean_B == 1.0);
  CHECK(rep.mean_p[0] == 0.5);

  SUBCASE("corpus-level pooling") {
    // Pooled counts: unigrams 10 predicted, 5 clipped; higher orders halve.
    auto pooled = corpus_bleu_report({{a, a}, {z, b}}, true);
    CHECK(pooled.mean_p[0] == 0.5);
    CHECK(pooled.mean_p[3] == 0.5);
    CHECK(pooled.mean_B == 1.0);
    CHECK(pooled.score == doctest::Approx(50.0).epsilon(1e-12));

    // A pair that zeroes per-sentence scores can still pool to nonzero.
    TokenSequence shared{"a", "b", "c", "d"};
    TokenSequence off{"a", "b", "c", "x"};
    CHECK(corpus_bleu({{off, shared}}) == 0.0);
    CHECK(corpus_bleu({{off, shared}, {shared, shared}}, true) > 0.0);
  }
}

TEST_CASE("entropy fixtures") {
  auto rep = comment_entropy({{"a", "b"}, {"a", "c"}});
  CHECK(rep.E == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(rep.w == 2.0);
  CHECK(rep.V == 3);
  CHECK(rep.p.at("a") == 0.5);
  CHECK(rep.p.at("b") == 0.25);

  CHECK(comment_entropy({{"x"}, {"x"}, {"x"}}).E == 0.0);

  CHECK_THROWS_AS(comment_entropy({}), input_error);
  CHECK_THROWS_AS(comment_entropy({{}, {}}), input_error);
}

TEST_CASE("entropy is permutation invariant and non-negative") {
  Rng rng(88);
  std::vector<TokenSequence> comments;
  for (int i = 0; i < 24; ++i) comments.push_back(random_tokens(rng, 8, 6));
  comments.push_back({"anchor"});

  auto base = comment_entropy(comments);
  CHECK(base.E >= 0.0);
  for (int shuffle = 0; shuffle < 100; ++shuffle) {
    rng.shuffle(comments);
    auto rep = comment_entropy(comments);
    CHECK(rep.E == base.E);
    CHECK(rep.w == base.w);
    CHECK(rep.V == base.V);
  }
}

}  // TEST_SUITE
