#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "csumm/errors.hpp"
#include "csumm/rng.hpp"
#include "csumm/vocab.hpp"
#include "doctest.h"

using namespace csumm;

namespace {

long long char_mass(const WordCounts& counts) {
  long long mass = 0;
  for (const auto& [key, count] : counts) mass += count * static_cast<long long>(key.size());
  return mass;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string random_word(Rng& rng, size_t min_len, size_t max_len) {
  size_t len = min_len + rng.index(max_len - min_len + 1);
  std::string w;
  for (size_t i = 0; i < len; ++i) w += static_cast<char>('a' + rng.index(26));
  return w;
}

}  // namespace

TEST_SUITE("vocab") {

TEST_CASE("fnv1a64 matches reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("base elements cover letters digits and punctuation in order") {
  const auto& base = base_elements();
  REQUIRE(base.size() == 26 + 10 + 32);
  CHECK(base[0] == "a");
  CHECK(base[25] == "z");
  CHECK(base[26] == "0");
  CHECK(base[35] == "9");
  CHECK(base[36] == "!");
  CHECK(base.back() == "~");
  std::set<std::string> uniq(base.begin(), base.end());
  CHECK(uniq.size() == base.size());
  for (const auto& e : base) CHECK(e.size() == 1);
}

TEST_CASE("embedded dictionary has the words the split fixtures need") {
  auto dict = EnglishDictionary::embedded();
  CHECK(dict.size() > 1000);
  for (const char* w : {"file", "reader", "frame", "return", "not", "found", "no"}) {
    CAPTURE(w);
    CHECK(dict.contains(w));
  }
  // Fragments that would shadow the intended decompositions.
  for (const char* w : {"re", "er", "ed", "urn", "filer", "ing", "ly"}) {
    CAPTURE(w);
    CHECK_FALSE(dict.contains(w));
  }
}

TEST_CASE("dictionary construction validates words") {
  CHECK_THROWS_AS(EnglishDictionary::from_words({}), input_error);
  CHECK_THROWS_AS(EnglishDictionary::from_words({"ok", ""}), input_error);
  CHECK_THROWS_AS(EnglishDictionary::from_words({"Bad"}), input_error);
  CHECK_THROWS_AS(EnglishDictionary::from_words({"hy-phen"}), input_error);

  auto d = EnglishDictionary::from_words({"beta", "alpha", "beta"});
  CHECK(d.size() == 2);
  CHECK(d.contains("alpha"));
  auto d2 = EnglishDictionary::from_words({"alpha", "beta"});
  CHECK(d.fingerprint() == d2.fingerprint());
  auto d3 = EnglishDictionary::from_words({"alpha", "gamma"});
  CHECK(d.fingerprint() != d3.fingerprint());
}

TEST_CASE("dictionary loads from a word-list file") {
  const std::string path = "vocab_test_dict.txt";
  {
    std::ofstream out(path, std::ios::binary);
    out << "alpha\r\nbeta\n\ngamma\n";
  }
  auto d = EnglishDictionary::from_file(path);
  CHECK(d.size() == 3);
  CHECK(d.contains("alpha"));
  CHECK(d.contains("gamma"));
  CHECK(d.fingerprint() == EnglishDictionary::from_words({"alpha", "beta", "gamma"}).fingerprint());

  {
    std::ofstream out(path, std::ios::binary);
    out << "alpha\nBeta\n";
  }
  CHECK_THROWS_AS(EnglishDictionary::from_file(path), format_error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(EnglishDictionary::from_file(path), input_error);
}

TEST_CASE("word counts come from tokenized lowercased comments") {
  auto c1 = build_word_counts({"a b", "a"});
  CHECK(c1 == WordCounts{{"a", 2}, {"b", 1}});

  auto c2 = build_word_counts({"Returns x."});
  CHECK(c2 == WordCounts{{"returns", 1}, {"x", 1}, {".", 1}});

  CHECK(build_word_counts({}).empty());
}

TEST_CASE("split fixtures") {
  auto dict = EnglishDictionary::embedded();

  CHECK(split_element("filereader", dict, {}) == std::vector<std::string>{"file", "reader"});
  CHECK(split_element("returning", dict, {}) == std::vector<std::string>{"return", "ing"});
  CHECK(split_element("returns", dict, {{"return", 5}}) == std::vector<std::string>{"return", "s"});
  CHECK(split_element("guiframe", dict, {{"gui", 6}}) == std::vector<std::string>{"gui", "frame"});
}

TEST_CASE("split behavior per rule") {
  auto dict = EnglishDictionary::embedded();

  SUBCASE("no rule applies") {
    CHECK(split_element("qqq", dict, {}) == std::vector<std::string>{"qqq"});
  }
  SUBCASE("dictionary words do not split into smaller words") {
    CHECK(split_element("into", dict, {}) == std::vector<std::string>{"into"});
    CHECK(split_element("frame", dict, {{"me", 3}}) == std::vector<std::string>{"frame"});
  }
  SUBCASE("word decomposition uses the fewest parts") {
    CHECK(split_element("sundown", dict, {}) == std::vector<std::string>{"sun", "down"});
  }
  SUBCASE("word decomposition wins over the suffix rule") {
    CHECK(split_element("earring", dict, {}) == std::vector<std::string>{"ear", "ring"});
  }
  SUBCASE("ly suffix") {
    CHECK(split_element("quickly", dict, {}) == std::vector<std::string>{"quick", "ly"});
    CHECK(split_element("ly", dict, {}) == std::vector<std::string>{"ly"});
    CHECK(split_element("aly", dict, {}) == std::vector<std::string>{"aly"});
  }
  SUBCASE("s suffix requires the stem in counts") {
    CHECK(split_element("qqqs", dict, {}) == std::vector<std::string>{"qqqs"});
    CHECK(split_element("qqqs", dict, {{"qqq", 1}}) == std::vector<std::string>{"qqq", "s"});
    CHECK(split_element("qqqd", dict, {{"qqq", 1}}) == std::vector<std::string>{"qqq", "d"});
  }
  SUBCASE("counts decomposition") {
    CHECK(split_element("abcxyz", dict, {{"abc", 3}, {"xyz", 9}}) ==
          std::vector<std::string>{"abc", "xyz"});
  }
  SUBCASE("counts decomposition never uses the element itself") {
    CHECK(split_element("abc", dict, {{"abc", 5}}) == std::vector<std::string>{"abc"});
  }
  SUBCASE("parts recurse") {
    CHECK(split_element("filereaders", dict, {{"filereader", 1}}) ==
          std::vector<std::string>{"file", "reader", "s"});
  }
  SUBCASE("empty element rejected") {
    CHECK_THROWS_AS(split_element("", dict, {}), input_error);
  }
}

TEST_CASE("split output concatenates back to the input") {
  auto dict = EnglishDictionary::embedded();
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    std::string w = random_word(rng, 1, 12);
    auto parts = split_element(w, dict, {{"qq", 2}, {"turn", 4}});
    std::string joined;
    for (const auto& p : parts) joined += p;
    CHECK(joined == w);
  }
}

TEST_CASE("propagation matches the hand-worked example") {
  auto dict = EnglishDictionary::embedded();
  WordCounts counts{{"guiframe", 5}, {"gui", 6}, {"frame", 2}};
  auto propagated = propagate_counts(counts, dict);
  CHECK(propagated == WordCounts{{"gui", 11}, {"frame", 7}});
}

TEST_CASE("propagation gives each part occurrence the full count") {
  auto dict = EnglishDictionary::embedded();
  auto propagated = propagate_counts({{"haha", 3}, {"ha", 1}}, dict);
  CHECK(propagated == WordCounts{{"ha", 7}});
}

TEST_CASE("propagation conserves character mass on random inputs") {
  Rng rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<std::string> dict_words;
    for (int i = 0; i < 30; ++i) dict_words.push_back(random_word(rng, 2, 6));
    auto dict = EnglishDictionary::from_words(dict_words);

    WordCounts counts;
    for (int i = 0; i < 40; ++i) {
      std::string w = random_word(rng, 1, 4);
      // Mix in compounds of dictionary words so splits actually fire.
      if (rng.index(2) == 0) {
        w = dict_words[rng.index(dict_words.size())] + dict_words[rng.index(dict_words.size())];
      }
      counts[w] += 1 + static_cast<long long>(rng.index(9));
    }

    auto propagated = propagate_counts(counts, dict);
    CHECK(char_mass(propagated) == char_mass(counts));
    for (const auto& [key, count] : propagated) {
      CHECK_FALSE(key.empty());
      CHECK(count >= 1);
    }

    auto twice = propagate_counts(propagated, dict);
    CHECK(twice == propagated);
  }
}

TEST_CASE("vocabulary from empty counts is specials plus the base set") {
  auto dict = EnglishDictionary::embedded();
  auto vocab = build_vocabulary({}, dict, 1);
  REQUIRE(vocab.size() == 5 + 68);
  CHECK(vocab.elements[0] == "<START>");
  CHECK(vocab.elements[1] == "<END>");
  CHECK(vocab.elements[2] == "<BEGIN_SPELL>");
  CHECK(vocab.elements[3] == "<END_SPELL>");
  CHECK(vocab.elements[4] == "<PAD>");
  CHECK(vocab.elements[5] == "a");
  CHECK(vocab.id_of("a") == 5);
  CHECK(vocab.threshold == 1);
  CHECK(vocab.source_fingerprint == dict.fingerprint());
  for (int i = 0; i < vocab.size(); ++i) {
    CHECK(vocab.id_of(vocab.element_of(i)) == i);
  }
}

TEST_CASE("vocabulary thresholding matches the propagation example") {
  auto dict = EnglishDictionary::embedded();
  auto vocab = build_vocabulary({{"guiframe", 5}, {"gui", 6}, {"frame", 2}}, dict, 10);
  CHECK(vocab.contains("gui"));
  CHECK_FALSE(vocab.contains("frame"));
  CHECK(vocab.size() == 5 + 68 + 1);
  CHECK(vocab.id_of("gui") == 73);
}

TEST_CASE("vocabulary orders elements by count then lexicographically") {
  auto dict = EnglishDictionary::embedded();
  auto vocab = build_vocabulary({{"bb", 20}, {"aa", 20}, {"cc", 30}}, dict, 1);
  REQUIRE(vocab.size() == 73 + 3);
  CHECK(vocab.element_of(73) == "cc");
  CHECK(vocab.element_of(74) == "aa");
  CHECK(vocab.element_of(75) == "bb");
}

TEST_CASE("base elements are never duplicated") {
  auto dict = EnglishDictionary::embedded();
  auto vocab = build_vocabulary({{"a", 100}, {".", 50}}, dict, 1);
  CHECK(vocab.size() == 73);
}

TEST_CASE("vocabulary build validates inputs") {
  auto dict = EnglishDictionary::embedded();
  CHECK_THROWS_AS(build_vocabulary({}, dict, 0), input_error);
  CHECK_THROWS_AS(build_vocabulary({{"", 3}}, dict, 1), input_error);
  CHECK_THROWS_AS(build_vocabulary({{"ok", 0}}, dict, 1), input_error);
}

TEST_CASE("vocabulary build is idempotent over propagated counts") {
  auto dict = EnglishDictionary::embedded();
  WordCounts counts{{"guiframe", 5}, {"gui", 6}, {"frame", 2}, {"returning", 4}, {"haha", 2}, {"ha", 1}};
  auto direct = build_vocabulary(counts, dict, 2);
  auto presplit = build_vocabulary(propagate_counts(counts, dict), dict, 2);
  CHECK(direct.elements == presplit.elements);
  CHECK(direct.content_fingerprint() == presplit.content_fingerprint());
}

TEST_CASE("lookup errors") {
  auto vocab = build_vocabulary({}, EnglishDictionary::embedded(), 1);
  CHECK_THROWS_AS(vocab.id_of("missing"), index_error);
  CHECK_THROWS_AS(vocab.element_of(-1), index_error);
  CHECK_THROWS_AS(vocab.element_of(vocab.size()), index_error);
}

TEST_CASE("serialization round trips and is byte identical") {
  auto dict = EnglishDictionary::embedded();
  auto vocab = build_vocabulary({{"guiframe", 5}, {"gui", 6}, {"frame", 2}}, dict, 2);

  const std::string p1 = "vocab_test_v1.txt";
  const std::string p2 = "vocab_test_v2.txt";
  save_vocabulary(vocab, p1);
  save_vocabulary(vocab, p2);
  CHECK(read_file(p1) == read_file(p2));

  auto loaded = load_vocabulary(p1);
  CHECK(loaded.elements == vocab.elements);
  CHECK(loaded.ids == vocab.ids);
  CHECK(loaded.threshold == vocab.threshold);
  CHECK(loaded.source_fingerprint == vocab.source_fingerprint);
  CHECK(loaded.content_fingerprint() == vocab.content_fingerprint());

  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("loading rejects malformed vocabulary files") {
  const std::string path = "vocab_test_bad.txt";
  auto write = [&](const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
  };

  CHECK_THROWS_AS(load_vocabulary("vocab_test_missing.txt"), input_error);

  write("");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write("#threshold=2\n<START>\n");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write("#threshold=x #fingerprint=0000000000000000\n");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write("#threshold=2 #fingerprint=123\n");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write("#threshold=2 #fingerprint=0000000000000000\n<START>\n<END>\n");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write("#threshold=2 #fingerprint=0000000000000000\n<START>\n<END>\n<BEGIN_SPELL>\n<END_SPELL>\n<WRONG>\n");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write(
      "#threshold=2 #fingerprint=0000000000000000\n<START>\n<END>\n<BEGIN_SPELL>\n<END_SPELL>\n<PAD>\na\na\n");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write(
      "#threshold=2 #fingerprint=0000000000000000\n<START>\n<END>\n<BEGIN_SPELL>\n<END_SPELL>\n<PAD>\n\na\n");
  CHECK_THROWS_AS(load_vocabulary(path), format_error);

  write(
      "#threshold=7 #fingerprint=00000000deadbeef\n<START>\n<END>\n<BEGIN_SPELL>\n<END_SPELL>\n<PAD>\nab\n");
  auto ok = load_vocabulary(path);
  CHECK(ok.threshold == 7);
  CHECK(ok.source_fingerprint == 0xdeadbeefULL);
  CHECK(ok.id_of("ab") == 5);

  std::remove(path.c_str());
}

}  // TEST_SUITE
