#include <string>
#include <vector>

#include "csumm/codec.hpp"
#include "csumm/errors.hpp"
#include "csumm/rng.hpp"
#include "csumm/vocab.hpp"
#include "doctest.h"

using namespace csumm;

namespace {

Vocabulary fixture_vocab(const WordCounts& counts) {
  return build_vocabulary(counts, EnglishDictionary::embedded(), 1);
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("tokenizer fixtures") {
  CHECK(tokenize_comment("Returns the version.") ==
        std::vector<std::string>{"returns", "the", "version", "."});
  CHECK(tokenize_comment("get contents of a file") ==
        std::vector<std::string>{"get", "contents", "of", "a", "file"});
  CHECK(tokenize_comment("").empty());
}

TEST_CASE("tokenizer details") {
  SUBCASE("every punctuation mark is its own token") {
    CHECK(tokenize_comment("a.b,c") == std::vector<std::string>{"a", ".", "b", ",", "c"});
    CHECK(tokenize_comment("(x)") == std::vector<std::string>{"(", "x", ")"});
    CHECK(tokenize_comment("!?") == std::vector<std::string>{"!", "?"});
  }
  SUBCASE("uppercase folds to lowercase") {
    CHECK(tokenize_comment("ABC Def") == std::vector<std::string>{"abc", "def"});
  }
  SUBCASE("whitespace runs separate") {
    CHECK(tokenize_comment("a \t b\n\nc") == std::vector<std::string>{"a", "b", "c"});
  }
  SUBCASE("control bytes separate") {
    CHECK(tokenize_comment(std::string("a\x01") + "b") == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("bytes past ascii stay inside words") {
    CHECK(tokenize_comment("caf\xc3\xa9 x") == std::vector<std::string>{"caf\xc3\xa9", "x"});
  }
  SUBCASE("digits stay inside words") {
    CHECK(tokenize_comment("utf8 v2") == std::vector<std::string>{"utf8", "v2"});
  }
}

TEST_CASE("greedy split covers filenotfound") {
  auto vocab = fixture_vocab({{"file", 5}, {"not", 5}, {"found", 5}, {"no", 5}});
  REQUIRE(vocab.contains("file"));
  REQUIRE(vocab.contains("not"));
  REQUIRE(vocab.contains("found"));
  REQUIRE(vocab.contains("no"));
  CHECK(greedy_split_word("filenotfound", vocab) == std::vector<std::string>{"file", "not", "found"});
}

TEST_CASE("greedy split basics") {
  auto vocab = fixture_vocab({{"file", 5}});
  SUBCASE("whole word in vocabulary") {
    CHECK(greedy_split_word("file", vocab) == std::vector<std::string>{"file"});
  }
  SUBCASE("letter fallback") {
    CHECK(greedy_split_word("zq", vocab) == std::vector<std::string>{"z", "q"});
  }
  SUBCASE("empty word rejected") {
    CHECK_THROWS_AS(greedy_split_word("", vocab), input_error);
  }
  SUBCASE("byte outside the base set") {
    CHECK_THROWS_AS(greedy_split_word("\xc3\xa9", vocab), encoding_error);
  }
  SUBCASE("parts concatenate to the word") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      std::string w;
      size_t len = 1 + rng.index(12);
      for (size_t k = 0; k < len; ++k) w += static_cast<char>('a' + rng.index(26));
      auto parts = greedy_split_word(w, vocab);
      std::string joined;
      for (const auto& p : parts) joined += p;
      CHECK(joined == w);
    }
  }
}

TEST_CASE("target encoding fixtures") {
  auto vocab = fixture_vocab({{"create", 5}, {"to", 5}, {"file", 5}, {"reader", 5}});
  REQUIRE(vocab.contains("create"));
  REQUIRE(vocab.contains("reader"));
  REQUIRE_FALSE(vocab.contains("filereader"));

  SUBCASE("all tokens in vocabulary") {
    CHECK(encode_target({"create", "to"}, vocab) ==
          std::vector<int>{Vocabulary::kStart, vocab.id_of("create"), vocab.id_of("to"),
                           Vocabulary::kEnd});
  }
  SUBCASE("out-of-vocabulary token becomes a spell span") {
    CHECK(encode_target({"create", "filereader", "to"}, vocab) ==
          std::vector<int>{Vocabulary::kStart, vocab.id_of("create"), Vocabulary::kBeginSpell,
                           vocab.id_of("file"), vocab.id_of("reader"), Vocabulary::kEndSpell,
                           vocab.id_of("to"), Vocabulary::kEnd});
  }
  SUBCASE("empty token list") {
    CHECK(encode_target({}, vocab) == std::vector<int>{Vocabulary::kStart, Vocabulary::kEnd});
  }
}

TEST_CASE("decoding fixtures") {
  auto vocab = fixture_vocab({{"create", 5}, {"to", 5}, {"file", 5}, {"reader", 5}, {"get", 5},
                              {"the", 5}, {"id", 5}, {"gui", 5}});

  SUBCASE("spell span concatenates") {
    std::vector<int> ids{vocab.id_of("create"), Vocabulary::kBeginSpell, vocab.id_of("file"),
                         vocab.id_of("reader"), Vocabulary::kEndSpell, vocab.id_of("to")};
    CHECK(decode_prediction(ids, vocab) == "create filereader to");
  }
  SUBCASE("plain sequence joins with spaces") {
    std::vector<int> ids{vocab.id_of("get"), vocab.id_of("the"), vocab.id_of("id")};
    CHECK(decode_prediction(ids, vocab) == "get the id");
  }
  SUBCASE("unclosed span closes at the end") {
    CHECK(decode_prediction({Vocabulary::kBeginSpell, vocab.id_of("gui")}, vocab) == "gui");
  }
  SUBCASE("stray closer drops") {
    CHECK(decode_prediction({Vocabulary::kEndSpell, vocab.id_of("gui")}, vocab) == "gui");
  }
  SUBCASE("nested opener drops") {
    std::vector<int> ids{Vocabulary::kBeginSpell, vocab.id_of("file"), Vocabulary::kBeginSpell,
                         vocab.id_of("reader"), Vocabulary::kEndSpell};
    CHECK(decode_prediction(ids, vocab) == "filereader");
  }
  SUBCASE("empty span vanishes") {
    std::vector<int> ids{vocab.id_of("get"), Vocabulary::kBeginSpell, Vocabulary::kEndSpell,
                         vocab.id_of("id")};
    CHECK(decode_prediction(ids, vocab) == "get id");
  }
  SUBCASE("start end pad drop") {
    std::vector<int> ids{Vocabulary::kStart, vocab.id_of("get"), Vocabulary::kPad,
                         vocab.id_of("id"), Vocabulary::kEnd};
    CHECK(decode_prediction(ids, vocab) == "get id");
  }
  SUBCASE("empty input") {
    CHECK(decode_prediction({}, vocab).empty());
  }
  SUBCASE("out-of-range id rejected") {
    CHECK_THROWS_AS(decode_prediction({vocab.size()}, vocab), index_error);
    CHECK_THROWS_AS(decode_prediction({-1}, vocab), index_error);
  }
}

TEST_CASE("round trip over random comments") {
  Rng rng(99);
  const std::string punct = ".,;:()[]!?";
  for (int iter = 0; iter < 50; ++iter) {
    // A fresh vocabulary per iteration, seeded with random words so some
    // comment tokens are in-vocabulary and the rest spell out.
    WordCounts counts;
    for (int i = 0; i < 12; ++i) {
      std::string w;
      size_t len = 2 + rng.index(5);
      for (size_t k = 0; k < len; ++k) w += static_cast<char>('a' + rng.index(26));
      counts[w] += 3;
    }
    auto vocab = fixture_vocab(counts);

    for (int c = 0; c < 10; ++c) {
      std::string comment;
      size_t n_tokens = rng.index(12);
      for (size_t t = 0; t < n_tokens; ++t) {
        if (rng.index(4) == 0) {
          comment += punct[rng.index(punct.size())];
        } else {
          size_t len = 1 + rng.index(8);
          for (size_t k = 0; k < len; ++k) comment += static_cast<char>('a' + rng.index(26));
        }
        comment += ' ';
      }
      auto tokens = tokenize_comment(comment);
      auto ids = encode_target(tokens, vocab);
      CHECK(decode_prediction(ids, vocab) == join(tokens));
      CHECK(encode_target(tokens, vocab) == ids);

      // Spans balanced and ids in range by construction.
      int depth = 0;
      for (int id : ids) {
        CHECK(id >= 0);
        CHECK(id < vocab.size());
        if (id == Vocabulary::kBeginSpell) {
          CHECK(depth == 0);
          ++depth;
        } else if (id == Vocabulary::kEndSpell) {
          CHECK(depth == 1);
          --depth;
        }
      }
      CHECK(depth == 0);
      CHECK(ids.front() == Vocabulary::kStart);
      CHECK(ids.back() == Vocabulary::kEnd);
    }
  }
}

}  // TEST_SUITE
