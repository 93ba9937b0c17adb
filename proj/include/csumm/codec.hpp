#pragma once

#include <string>
#include <vector>

#include "csumm/vocab.hpp"

namespace csumm {

// Lowercases, splits punctuation marks into standalone tokens, collapses
// whitespace.
std::vector<std::string> tokenize_comment(const std::string& raw);

// Longest-prefix-first cover of word by non-special vocabulary elements.
std::vector<std::string> greedy_split_word(const std::string& word, const Vocabulary& vocab);

// START ... END with out-of-vocabulary words expanded to
// BEGIN_SPELL parts END_SPELL; single-part expansions stay undelimited.
std::vector<int> encode_target(const std::vector<std::string>& tokens, const Vocabulary& vocab);

// Total over arbitrary id sequences: spell spans concatenate, other elements
// join with spaces, specials drop, malformed delimiters are repaired.
std::string decode_prediction(const std::vector<int>& ids, const Vocabulary& vocab);

}  // namespace csumm
