#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace csumm {

// Lowercased token -> occurrence count.
using WordCounts = std::map<std::string, long long>;

class EnglishDictionary {
 public:
  static EnglishDictionary embedded();
  static EnglishDictionary from_file(const std::string& path);
  static EnglishDictionary from_words(const std::vector<std::string>& words);

  bool contains(const std::string& word) const { return words_.count(word) != 0; }
  size_t size() const { return words_.size(); }
  uint64_t fingerprint() const { return fingerprint_; }
  const std::set<std::string>& words() const { return words_; }

 private:
  std::set<std::string> words_;
  uint64_t fingerprint_ = 0;
};

// Output vocabulary: specials, then the base set (letters, digits, ASCII
// punctuation), then corpus elements in descending propagated count with
// lexicographic tie-break.
struct Vocabulary {
  static constexpr int kStart = 0;
  static constexpr int kEnd = 1;
  static constexpr int kBeginSpell = 2;
  static constexpr int kEndSpell = 3;
  static constexpr int kPad = 4;
  static constexpr int kNumSpecials = 5;

  std::vector<std::string> elements;
  std::map<std::string, int> ids;
  long long threshold = 1;
  uint64_t source_fingerprint = 0;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(const std::string& element) const { return ids.count(element) != 0; }
  int id_of(const std::string& element) const;
  const std::string& element_of(int id) const;
  // Over the serialized form, so equal files mean equal fingerprints.
  uint64_t content_fingerprint() const;
};

// Letters a-z, digits 0-9, the 32 ASCII punctuation marks, in that order.
const std::vector<std::string>& base_elements();

// Whitespace-separated blob backing EnglishDictionary::embedded().
const char* embedded_word_list();

uint64_t fnv1a64(const std::string& bytes);

WordCounts build_word_counts(const std::vector<std::string>& comments);

// Splitting rules, first that fires wins: (1) cover by two or more dictionary
// words, (2) ing/ly suffix with a stem of length >= 2, (3) s/d suffix with the
// stem present in counts, (4) cover by two or more elements drawn from counts
// or the dictionary. Covers use the fewest parts; parts recurse until no rule
// fires. An element that is itself a dictionary word never splits by rule 1.
std::vector<std::string> split_element(const std::string& element, const EnglishDictionary& dict,
                                       const WordCounts& counts);

Vocabulary build_vocabulary(const WordCounts& counts, const EnglishDictionary& dict,
                            long long threshold);

// Counts after split propagation, exposed for conservation checks:
// sum of count*length over keys is invariant under propagation.
WordCounts propagate_counts(const WordCounts& counts, const EnglishDictionary& dict);

void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);

}  // namespace csumm
