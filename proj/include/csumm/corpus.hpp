#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csumm {

struct DatasetRecord {
  std::string code;
  std::string comment;
  std::string language;
  std::string origin;
};

enum class FilterRule {
  accept,
  blacklist,
  comment_too_short,
  comment_too_long,
  code_too_short,
  code_too_long,
  duplicate,
};

const char* filter_rule_name(FilterRule rule);

struct FilterReport {
  long long blacklist = 0;
  long long comment_too_short = 0;
  long long comment_too_long = 0;
  long long code_too_short = 0;
  long long code_too_long = 0;
  long long duplicate = 0;
  long long passed = 0;

  long long input() const {
    return blacklist + comment_too_short + comment_too_long + code_too_short + code_too_long +
           duplicate + passed;
  }
};

std::string filter_report_json(const FilterReport& report);

// Truncates at the earliest sentence terminator: "." stays in the result,
// "\n\n", ":param", "@param", "@return", "@rtype" do not. The result is
// always a prefix of the input.
std::string extract_first_sentence(const std::string& comment);

// First matching rule wins: blacklist, comment length (3..50 tokens), code
// length (8..4096 bytes). Expects the comment already cut to its first
// sentence. Never returns duplicate; dedup is a whole-corpus pass.
FilterRule filter_record(const DatasetRecord& rec);

// Removes exact (code, comment) duplicates, keeping first occurrences.
std::vector<DatasetRecord> deduplicate(const std::vector<DatasetRecord>& records);

struct FilterOutcome {
  std::vector<DatasetRecord> accepted;
  FilterReport report;
};

// Full pipeline: first-sentence extraction, per-record filters, then dedup.
FilterOutcome filter_corpus(const std::vector<DatasetRecord>& records);

struct SplitScheme {
  enum class Kind { ratio, fixed_test };
  Kind kind = Kind::ratio;
  long long test_count = 0;

  // "ratio" or "fixed-test:<N>".
  static SplitScheme parse(const std::string& text);
  std::string str() const;
};

struct DatasetSplits {
  std::vector<DatasetRecord> train;
  std::vector<DatasetRecord> val;
  std::vector<DatasetRecord> test;
};

// ratio: shuffled 80/10/10 (train = n*8/10, val = n/10, test = rest),
// needs >= 10 records. fixed-test:N: N shuffled records become the test set,
// the rest split 80/20 into train/val, needs >= N + 5 records.
DatasetSplits split_dataset(const std::vector<DatasetRecord>& records, const SplitScheme& scheme,
                            uint64_t seed);

struct LeakageReport {
  long long n_test = 0;
  long long leaked = 0;  // test records whose exact (code, comment) pair is in train
};

LeakageReport count_leakage(const std::vector<DatasetRecord>& train,
                            const std::vector<DatasetRecord>& test);

// JSON-lines with fields code, comment, language, origin per record.
std::vector<DatasetRecord> read_jsonl(const std::string& path);
void write_jsonl(const std::vector<DatasetRecord>& records, const std::string& path);

}  // namespace csumm
