#include "csumm/codec.hpp"

#include "csumm/errors.hpp"

namespace csumm {

std::vector<std::string> tokenize_comment(const std::string& raw) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  };
  for (unsigned char c : raw) {
    if (c >= 'A' && c <= 'Z') {
      cur += static_cast<char>(c - 'A' + 'a');
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 128) {
      // Bytes >= 128 stay word characters so UTF-8 sequences hold together.
      cur += static_cast<char>(c);
    } else if (c >= 33 && c != 127) {
      flush();
      tokens.emplace_back(1, static_cast<char>(c));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> greedy_split_word(const std::string& word, const Vocabulary& vocab) {
  if (word.empty()) throw input_error("cannot split an empty word");
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos < word.size()) {
    size_t best = 0;
    for (size_t len = word.size() - pos; len >= 1; --len) {
      auto it = vocab.ids.find(word.substr(pos, len));
      if (it != vocab.ids.end() && it->second >= Vocabulary::kNumSpecials) {
        best = len;
        break;
      }
    }
    if (best == 0) {
      throw encoding_error("no vocabulary element covers \"" + word.substr(pos, 1) +
                           "\" in word \"" + word + "\"");
    }
    parts.push_back(word.substr(pos, best));
    pos += best;
  }
  return parts;
}

std::vector<int> encode_target(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  std::vector<int> ids;
  ids.push_back(Vocabulary::kStart);
  for (const auto& tok : tokens) {
    auto it = vocab.ids.find(tok);
    if (it != vocab.ids.end() && it->second >= Vocabulary::kNumSpecials) {
      ids.push_back(it->second);
      continue;
    }
    auto parts = greedy_split_word(tok, vocab);
    if (parts.size() == 1) {
      ids.push_back(vocab.id_of(parts[0]));
      continue;
    }
    ids.push_back(Vocabulary::kBeginSpell);
    for (const auto& part : parts) ids.push_back(vocab.id_of(part));
    ids.push_back(Vocabulary::kEndSpell);
  }
  ids.push_back(Vocabulary::kEnd);
  return ids;
}

std::string decode_prediction(const std::vector<int>& ids, const Vocabulary& vocab) {
  std::vector<std::string> words;
  bool in_spell = false;
  std::string spell;
  for (int id : ids) {
    if (id < 0 || id >= vocab.size()) {
      throw index_error("prediction id out of range: " + std::to_string(id));
    }
    switch (id) {
      case Vocabulary::kBeginSpell:
        // A nested opener carries no content; the open span continues.
        if (!in_spell) {
          in_spell = true;
          spell.clear();
        }
        break;
      case Vocabulary::kEndSpell:
        if (in_spell) {
          if (!spell.empty()) words.push_back(spell);
          in_spell = false;
        }
        break;
      case Vocabulary::kStart:
      case Vocabulary::kEnd:
      case Vocabulary::kPad:
        break;
      default:
        if (in_spell) {
          spell += vocab.element_of(id);
        } else {
          words.push_back(vocab.element_of(id));
        }
    }
  }
  if (in_spell && !spell.empty()) words.push_back(spell);

  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  return out;
}

}  // namespace csumm
