#include "csumm/corpus.hpp"

#include <fstream>
#include <set>
#include <utility>

#include "csumm/codec.hpp"
#include "csumm/errors.hpp"
#include "csumm/rng.hpp"
#include "json.hpp"

namespace csumm {

const char* filter_rule_name(FilterRule rule) {
  switch (rule) {
    case FilterRule::accept: return "accept";
    case FilterRule::blacklist: return "blacklist";
    case FilterRule::comment_too_short: return "comment-too-short";
    case FilterRule::comment_too_long: return "comment-too-long";
    case FilterRule::code_too_short: return "code-too-short";
    case FilterRule::code_too_long: return "code-too-long";
    case FilterRule::duplicate: return "duplicate";
  }
  return "unknown";
}

std::string filter_report_json(const FilterReport& report) {
  nlohmann::json j{
      {"blacklist", report.blacklist},
      {"comment_too_short", report.comment_too_short},
      {"comment_too_long", report.comment_too_long},
      {"code_too_short", report.code_too_short},
      {"code_too_long", report.code_too_long},
      {"duplicate", report.duplicate},
      {"passed", report.passed},
      {"input", report.input()},
  };
  return j.dump();
}

std::string extract_first_sentence(const std::string& comment) {
  // The period keeps itself; the other markers are cut away.
  static const std::vector<std::pair<std::string, bool>> kMarkers = {
      {".", true},       {"\n\n", false},    {":param", false},
      {"@param", false}, {"@return", false}, {"@rtype", false},
  };
  size_t best_pos = std::string::npos;
  size_t best_end = comment.size();
  for (const auto& [marker, inclusive] : kMarkers) {
    size_t pos = comment.find(marker);
    if (pos == std::string::npos || pos >= best_pos) continue;
    best_pos = pos;
    best_end = inclusive ? pos + marker.size() : pos;
  }
  return comment.substr(0, best_end);
}

namespace {

const std::vector<std::string>& blacklist_strings() {
  static const std::vector<std::string> kList = {
      "created by", "thanks to", "precondition", "copyright", "do not remove",
      " bug ",      " fix ",     "?",            "->",        ">>>",
      "(self,",
  };
  return kList;
}

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

FilterRule filter_record(const DatasetRecord& rec) {
  std::string lowered = ascii_lower(rec.comment);
  for (const auto& bad : blacklist_strings()) {
    if (lowered.find(bad) != std::string::npos) return FilterRule::blacklist;
  }
  size_t n_tokens = tokenize_comment(rec.comment).size();
  if (n_tokens < 3) return FilterRule::comment_too_short;
  if (n_tokens > 50) return FilterRule::comment_too_long;
  if (rec.code.size() < 8) return FilterRule::code_too_short;
  if (rec.code.size() > 4096) return FilterRule::code_too_long;
  return FilterRule::accept;
}

std::vector<DatasetRecord> deduplicate(const std::vector<DatasetRecord>& records) {
  std::vector<DatasetRecord> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& rec : records) {
    if (seen.emplace(rec.code, rec.comment).second) out.push_back(rec);
  }
  return out;
}

FilterOutcome filter_corpus(const std::vector<DatasetRecord>& records) {
  FilterOutcome out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& rec : records) {
    DatasetRecord cut = rec;
    cut.comment = extract_first_sentence(rec.comment);
    switch (filter_record(cut)) {
      case FilterRule::blacklist: ++out.report.blacklist; continue;
      case FilterRule::comment_too_short: ++out.report.comment_too_short; continue;
      case FilterRule::comment_too_long: ++out.report.comment_too_long; continue;
      case FilterRule::code_too_short: ++out.report.code_too_short; continue;
      case FilterRule::code_too_long: ++out.report.code_too_long; continue;
      case FilterRule::duplicate:
      case FilterRule::accept: break;
    }
    if (!seen.emplace(cut.code, cut.comment).second) {
      ++out.report.duplicate;
      continue;
    }
    ++out.report.passed;
    out.accepted.push_back(std::move(cut));
  }
  return out;
}

SplitScheme SplitScheme::parse(const std::string& text) {
  if (text == "ratio") return {Kind::ratio, 0};
  const std::string prefix = "fixed-test:";
  if (text.rfind(prefix, 0) == 0) {
    std::string num = text.substr(prefix.size());
    size_t pos = 0;
    long long n = 0;
    try {
      n = std::stoll(num, &pos);
    } catch (const std::exception&) {
      throw usage_error("bad split scheme: \"" + text + "\"");
    }
    if (pos != num.size() || n < 1) throw usage_error("bad split scheme: \"" + text + "\"");
    return {Kind::fixed_test, n};
  }
  throw usage_error("bad split scheme: \"" + text + "\" (want ratio or fixed-test:<N>)");
}

std::string SplitScheme::str() const {
  if (kind == Kind::ratio) return "ratio";
  return "fixed-test:" + std::to_string(test_count);
}

DatasetSplits split_dataset(const std::vector<DatasetRecord>& records, const SplitScheme& scheme,
                            uint64_t seed) {
  const long long n = static_cast<long long>(records.size());
  std::vector<size_t> order(records.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);

  long long n_test = 0, n_train = 0;
  if (scheme.kind == SplitScheme::Kind::ratio) {
    if (n < 10) throw input_error("ratio split needs at least 10 records, got " + std::to_string(n));
    n_train = n * 8 / 10;
    long long n_val = n / 10;
    n_test = n - n_train - n_val;
    DatasetSplits splits;
    for (long long i = 0; i < n; ++i) {
      const DatasetRecord& rec = records[order[static_cast<size_t>(i)]];
      if (i < n_train) splits.train.push_back(rec);
      else if (i < n_train + n_val) splits.val.push_back(rec);
      else splits.test.push_back(rec);
    }
    (void)n_test;
    return splits;
  }

  n_test = scheme.test_count;
  if (n < n_test + 5) {
    throw input_error("fixed-test split needs at least " + std::to_string(n_test + 5) +
                      " records, got " + std::to_string(n));
  }
  long long rest = n - n_test;
  n_train = rest * 8 / 10;
  DatasetSplits splits;
  for (long long i = 0; i < n; ++i) {
    const DatasetRecord& rec = records[order[static_cast<size_t>(i)]];
    if (i < n_test) splits.test.push_back(rec);
    else if (i < n_test + n_train) splits.train.push_back(rec);
    else splits.val.push_back(rec);
  }
  return splits;
}

LeakageReport count_leakage(const std::vector<DatasetRecord>& train,
                            const std::vector<DatasetRecord>& test) {
  std::set<std::pair<std::string, std::string>> train_pairs;
  for (const auto& rec : train) train_pairs.emplace(rec.code, rec.comment);
  LeakageReport rep;
  rep.n_test = static_cast<long long>(test.size());
  for (const auto& rec : test) {
    if (train_pairs.count({rec.code, rec.comment}) != 0) ++rep.leaked;
  }
  return rep;
}

std::vector<DatasetRecord> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open dataset file: " + path);
  std::vector<DatasetRecord> records;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw format_error("bad JSON on line " + std::to_string(line_no) + " of " + path + ": " +
                         e.what());
    }
    if (!j.is_object() || !j.contains("code") || !j.contains("comment") ||
        !j["code"].is_string() || !j["comment"].is_string()) {
      throw format_error("line " + std::to_string(line_no) + " of " + path +
                         " needs string fields code and comment");
    }
    DatasetRecord rec;
    rec.code = j["code"].get<std::string>();
    rec.comment = j["comment"].get<std::string>();
    if (j.contains("language") && j["language"].is_string()) {
      rec.language = j["language"].get<std::string>();
    }
    if (j.contains("origin") && j["origin"].is_string()) {
      rec.origin = j["origin"].get<std::string>();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_jsonl(const std::vector<DatasetRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open dataset file for writing: " + path);
  for (const auto& rec : records) {
    nlohmann::json j{
        {"code", rec.code},
        {"comment", rec.comment},
        {"language", rec.language},
        {"origin", rec.origin},
    };
    out << j.dump() << '\n';
  }
  if (!out) throw input_error("failed writing dataset file: " + path);
}

}  // namespace csumm
