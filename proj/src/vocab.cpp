#include "csumm/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "csumm/codec.hpp"
#include "csumm/errors.hpp"

namespace csumm {

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::vector<std::string>& base_elements() {
  static const std::vector<std::string> base = [] {
    std::vector<std::string> v;
    for (char c = 'a'; c <= 'z'; ++c) v.emplace_back(1, c);
    for (char c = '0'; c <= '9'; ++c) v.emplace_back(1, c);
    for (int c = 33; c < 127; ++c) {
      if (!std::isalnum(c)) v.emplace_back(1, static_cast<char>(c));
    }
    return v;
  }();
  return base;
}

namespace {

bool is_lower_alpha(const std::string& w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

}  // namespace

EnglishDictionary EnglishDictionary::from_words(const std::vector<std::string>& words) {
  EnglishDictionary d;
  for (const auto& w : words) {
    if (!is_lower_alpha(w)) throw input_error("dictionary word is not lowercase alphabetic: \"" + w + "\"");
    d.words_.insert(w);
  }
  if (d.words_.empty()) throw input_error("dictionary is empty");
  std::string joined;
  for (const auto& w : d.words_) {
    joined += w;
    joined += '\n';
  }
  d.fingerprint_ = fnv1a64(joined);
  return d;
}

EnglishDictionary EnglishDictionary::embedded() {
  static const EnglishDictionary d = [] {
    std::istringstream in(embedded_word_list());
    std::vector<std::string> words;
    std::string w;
    while (in >> w) words.push_back(w);
    return from_words(words);
  }();
  return d;
}

EnglishDictionary EnglishDictionary::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open dictionary file: " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    if (!is_lower_alpha(line)) throw format_error("dictionary line is not a lowercase word: \"" + line + "\" in " + path);
    words.push_back(line);
  }
  if (words.empty()) throw format_error("dictionary file has no words: " + path);
  return from_words(words);
}

int Vocabulary::id_of(const std::string& element) const {
  auto it = ids.find(element);
  if (it == ids.end()) throw index_error("element not in vocabulary: \"" + element + "\"");
  return it->second;
}

const std::string& Vocabulary::element_of(int id) const {
  if (id < 0 || id >= size()) {
    throw index_error("vocabulary id out of range: " + std::to_string(id) + " (size " + std::to_string(size()) + ")");
  }
  return elements[static_cast<size_t>(id)];
}

WordCounts build_word_counts(const std::vector<std::string>& comments) {
  WordCounts counts;
  for (const auto& raw : comments) {
    for (const auto& tok : tokenize_comment(raw)) ++counts[tok];
  }
  return counts;
}

namespace {

constexpr size_t kMinPartLen = 2;

// Fewest-parts exact cover of word by parts accepted by `in_lexicon`, each of
// length >= 2. Ties pick the longest final part, applied recursively, which
// fixes one canonical cover. Empty result means no cover exists.
template <typename Pred>
std::vector<std::string> min_parts_cover(const std::string& word, Pred in_lexicon) {
  const size_t n = word.size();
  constexpr int kInf = 1 << 29;
  std::vector<int> dp(n + 1, kInf);
  std::vector<size_t> prev(n + 1, 0);
  dp[0] = 0;
  for (size_t i = kMinPartLen; i <= n; ++i) {
    for (size_t j = 0; j + kMinPartLen <= i; ++j) {
      if (dp[j] == kInf) continue;
      if (dp[j] + 1 >= dp[i]) continue;
      if (in_lexicon(word.substr(j, i - j))) {
        dp[i] = dp[j] + 1;
        prev[i] = j;
      }
    }
  }
  std::vector<std::string> parts;
  if (dp[n] == kInf) return parts;
  for (size_t i = n; i > 0; i = prev[i]) parts.push_back(word.substr(prev[i], i - prev[i]));
  std::reverse(parts.begin(), parts.end());
  return parts;
}

// One application of the first rule that fires; nullopt when none does.
// `lexicon` carries the counts keys (and, during propagation, every key ever
// produced, so split decisions do not depend on map iteration order).
std::optional<std::vector<std::string>> split_once(const std::string& element,
                                                   const EnglishDictionary& dict,
                                                   const std::set<std::string>& lexicon) {
  const size_t n = element.size();

  // Rule 1: cover by dictionary words. The element itself is a legal one-part
  // cover when it is a dictionary word, which blocks splitting it.
  auto dict_parts = min_parts_cover(element, [&](const std::string& s) { return dict.contains(s); });
  if (dict_parts.size() >= 2) return dict_parts;

  // Rule 2: ing/ly suffix, stem length >= 2.
  if (n >= 3 + kMinPartLen && element.compare(n - 3, 3, "ing") == 0) {
    return std::vector<std::string>{element.substr(0, n - 3), "ing"};
  }
  if (n >= 2 + kMinPartLen && element.compare(n - 2, 2, "ly") == 0) {
    return std::vector<std::string>{element.substr(0, n - 2), "ly"};
  }

  // Rule 3: s/d suffix with the stem already a counts element.
  if (n >= 1 + kMinPartLen && (element.back() == 's' || element.back() == 'd')) {
    std::string stem = element.substr(0, n - 1);
    if (lexicon.count(stem) != 0) {
      return std::vector<std::string>{stem, std::string(1, element.back())};
    }
  }

  // Rule 4: cover by other counts elements or dictionary words. A dictionary
  // word stays whole here for the same reason it does under rule 1: the word
  // itself is already the minimal cover.
  if (!dict.contains(element)) {
    auto mixed_parts = min_parts_cover(element, [&](const std::string& s) {
      return s != element && (lexicon.count(s) != 0 || dict.contains(s));
    });
    if (mixed_parts.size() >= 2) return mixed_parts;
  }

  return std::nullopt;
}

void expand_element(const std::string& element, const EnglishDictionary& dict,
                    const std::set<std::string>& lexicon, std::vector<std::string>& out) {
  auto once = split_once(element, dict, lexicon);
  if (!once) {
    out.push_back(element);
    return;
  }
  for (const auto& part : *once) expand_element(part, dict, lexicon, out);
}

}  // namespace

std::vector<std::string> split_element(const std::string& element, const EnglishDictionary& dict,
                                       const WordCounts& counts) {
  if (element.empty()) throw input_error("cannot split an empty element");
  std::set<std::string> lexicon;
  for (const auto& [key, count] : counts) lexicon.insert(key);
  std::vector<std::string> out;
  expand_element(element, dict, lexicon, out);
  return out;
}

WordCounts propagate_counts(const WordCounts& counts, const EnglishDictionary& dict) {
  WordCounts work = counts;
  std::set<std::string> lexicon;
  for (const auto& [key, count] : work) lexicon.insert(key);

  // Splitting one level per pass and re-examining produced parts reaches the
  // same fixpoint as full recursion. The lexicon only grows, so whether a rule
  // fires for a given key never depends on which pass reaches it first.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::string> keys;
    keys.reserve(work.size());
    for (const auto& [key, count] : work) keys.push_back(key);
    for (const auto& key : keys) {
      auto it = work.find(key);
      if (it == work.end()) continue;
      auto once = split_once(key, dict, lexicon);
      if (!once) continue;
      long long c = it->second;
      work.erase(it);
      changed = true;
      for (const auto& part : *once) {
        work[part] += c;
        lexicon.insert(part);
      }
    }
  }
  return work;
}

Vocabulary build_vocabulary(const WordCounts& counts, const EnglishDictionary& dict,
                            long long threshold) {
  if (threshold < 1) throw input_error("vocabulary threshold must be >= 1");
  for (const auto& [key, count] : counts) {
    if (key.empty()) throw input_error("word counts contain an empty key");
    if (count < 1) throw input_error("word count for \"" + key + "\" is not positive");
  }

  WordCounts propagated = propagate_counts(counts, dict);

  Vocabulary vocab;
  vocab.threshold = threshold;
  vocab.source_fingerprint = dict.fingerprint();
  vocab.elements = {"<START>", "<END>", "<BEGIN_SPELL>", "<END_SPELL>", "<PAD>"};
  std::set<std::string> base_set;
  for (const auto& b : base_elements()) {
    vocab.elements.push_back(b);
    base_set.insert(b);
  }

  std::vector<std::pair<std::string, long long>> survivors;
  for (const auto& [key, count] : propagated) {
    if (count >= threshold && base_set.count(key) == 0) survivors.emplace_back(key, count);
  }
  std::sort(survivors.begin(), survivors.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [key, count] : survivors) vocab.elements.push_back(key);

  for (int i = 0; i < static_cast<int>(vocab.elements.size()); ++i) {
    vocab.ids[vocab.elements[static_cast<size_t>(i)]] = i;
  }
  return vocab;
}

namespace {

std::string hex16(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string serialize_vocabulary(const Vocabulary& vocab) {
  std::string out = "#threshold=" + std::to_string(vocab.threshold) +
                    " #fingerprint=" + hex16(vocab.source_fingerprint) + "\n";
  for (const auto& e : vocab.elements) {
    out += e;
    out += '\n';
  }
  return out;
}

const std::vector<std::string>& special_strings() {
  static const std::vector<std::string> s = {"<START>", "<END>", "<BEGIN_SPELL>", "<END_SPELL>",
                                             "<PAD>"};
  return s;
}

}  // namespace

uint64_t Vocabulary::content_fingerprint() const { return fnv1a64(serialize_vocabulary(*this)); }

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open vocabulary file for writing: " + path);
  out << serialize_vocabulary(vocab);
  if (!out) throw input_error("failed writing vocabulary file: " + path);
}

Vocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open vocabulary file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw format_error("vocabulary file is empty: " + path);
  uint64_t fp = 0;
  long long threshold = 0;
  {
    std::istringstream header(line);
    std::string t_field, f_field;
    if (!(header >> t_field >> f_field) || (header >> std::ws, !header.eof()) ||
        t_field.rfind("#threshold=", 0) != 0 || f_field.rfind("#fingerprint=", 0) != 0) {
      throw format_error("bad vocabulary header: \"" + line + "\"");
    }
    std::string t_val = t_field.substr(11);
    std::string f_val = f_field.substr(13);
    size_t pos = 0;
    try {
      threshold = std::stoll(t_val, &pos);
    } catch (const std::exception&) {
      throw format_error("bad threshold in vocabulary header: \"" + t_val + "\"");
    }
    if (pos != t_val.size() || threshold < 1) {
      throw format_error("bad threshold in vocabulary header: \"" + t_val + "\"");
    }
    if (f_val.size() != 16) throw format_error("bad fingerprint in vocabulary header: \"" + f_val + "\"");
    for (char c : f_val) {
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else throw format_error("bad fingerprint in vocabulary header: \"" + f_val + "\"");
      fp = (fp << 4) | static_cast<uint64_t>(d);
    }
  }

  Vocabulary vocab;
  vocab.threshold = threshold;
  vocab.source_fingerprint = fp;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw format_error("empty element line in vocabulary file: " + path);
    vocab.elements.push_back(line);
  }

  if (vocab.elements.size() < special_strings().size()) {
    throw format_error("vocabulary file is missing special tokens: " + path);
  }
  for (size_t i = 0; i < special_strings().size(); ++i) {
    if (vocab.elements[i] != special_strings()[i]) {
      throw format_error("vocabulary special token " + std::to_string(i) + " is \"" +
                         vocab.elements[i] + "\", expected \"" + special_strings()[i] + "\"");
    }
  }
  for (int i = 0; i < static_cast<int>(vocab.elements.size()); ++i) {
    auto [it, inserted] = vocab.ids.emplace(vocab.elements[static_cast<size_t>(i)], i);
    if (!inserted) {
      throw format_error("duplicate vocabulary element: \"" + it->first + "\"");
    }
  }
  return vocab;
}

}  // namespace csumm
