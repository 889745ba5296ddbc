#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codepres/bitword.hpp"
#include "codepres/error.hpp"

namespace codepres {

/// How the code space of a CharacterSet is read. `listed` means the space
/// is exactly the listed words; `full` means the space is all 2^n words
/// and the listed records mark which of them carry a character assignment.
enum class UniverseMode { listed, full };

constexpr std::string_view to_string(UniverseMode m) noexcept {
  return m == UniverseMode::listed ? "listed" : "full";
}

/// One entry of a character set: a word and an optional character name.
/// Labels are carried metadata; no operation reads them.
struct Record {
  Word word;
  std::optional<std::string> label;

  friend bool operator==(const Record&, const Record&) = default;
};

/// An ordered uniform code. Record order is the collating sequence.
/// Immutable after construction; all invariants are checked here.
class CharacterSet {
 public:
  CharacterSet(std::string name, std::size_t blocklength, UniverseMode mode,
               std::vector<Record> records)
      : name_(std::move(name)),
        blocklength_(blocklength),
        mode_(mode),
        records_(std::move(records)) {
    if (blocklength_ == 0)
      throw Error(Errc::empty_word, "blocklength must be positive");
    if (blocklength_ > max_blocklength)
      throw Error(Errc::word_too_long,
                  "blocklength " + std::to_string(blocklength_) +
                      " exceeds " + std::to_string(max_blocklength));
    if (mode_ == UniverseMode::listed && records_.empty())
      throw Error(Errc::empty_code, "a listed code needs at least one word");
    std::set<Word> seen;
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const Word& w = records_[i].word;
      if (w.size() != blocklength_)
        throw Error(Errc::blocklength_mismatch,
                    "record " + std::to_string(i) + " has blocklength " +
                        std::to_string(w.size()) + ", expected " +
                        std::to_string(blocklength_),
                    i);
      if (!seen.insert(w).second)
        throw Error(Errc::duplicate_word, "duplicate word " + w.str(), i);
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t blocklength() const noexcept { return blocklength_; }
  UniverseMode universe() const noexcept { return mode_; }
  const std::vector<Record>& records() const noexcept { return records_; }

  /// Number of listed words (the order of the code).
  std::size_t order() const noexcept { return records_.size(); }

  /// Listed words in collating order, without labels.
  std::vector<Word> words() const {
    std::vector<Word> ws;
    ws.reserve(records_.size());
    for (const auto& r : records_) ws.push_back(r.word);
    return ws;
  }

  friend bool operator==(const CharacterSet&, const CharacterSet&) = default;

 private:
  std::string name_;
  std::size_t blocklength_;
  UniverseMode mode_;
  std::vector<Record> records_;
};

inline CharacterSet build_code(std::string name, std::size_t blocklength,
                               UniverseMode mode, std::vector<Record> records) {
  return CharacterSet(std::move(name), blocklength, mode, std::move(records));
}

inline CharacterSet build_code(std::size_t blocklength, UniverseMode mode,
                               std::vector<Record> records) {
  return build_code("", blocklength, mode, std::move(records));
}

/// Records reordered ascending by decimal value. The result is
/// well-ordered: every non-empty subset has a least element.
inline CharacterSet well_order(const CharacterSet& c) {
  std::vector<Record> records = c.records();
  std::sort(records.begin(), records.end(),
            [](const Record& a, const Record& b) {
              return decimal_value(a.word) < decimal_value(b.word);
            });
  return CharacterSet(c.name(), c.blocklength(), c.universe(),
                      std::move(records));
}

/// The inverse of a code: the same records in exactly reversed order.
inline CharacterSet code_inverse(const CharacterSet& c) {
  std::vector<Record> records = c.records();
  std::reverse(records.begin(), records.end());
  return CharacterSet(c.name(), c.blocklength(), c.universe(),
                      std::move(records));
}

/// First word-sum that escapes the code, if any.
struct ClosureWitness {
  Word left;
  Word right;
  Word sum;  // left + right, not a member of the code
};

/// Outcome of the group-axiom check under the word sum. When a non-empty
/// code is closed, identity and inverses follow (each word cancels
/// itself), so `is_group` reduces to closure.
struct ClosureReport {
  bool closed = false;
  std::optional<ClosureWitness> witness;
  bool contains_zero = false;
  bool is_group = false;
};

/// Scans all ordered pairs of listed words in collating-sequence order and
/// reports the first sum outside the code. Only meaningful for listed
/// codes; over a full universe closure is trivially true.
inline ClosureReport closure_check(const CharacterSet& c) {
  if (c.universe() != UniverseMode::listed)
    throw Error(Errc::universe_mode_unsupported,
                "closure check applies to listed codes only");
  const std::vector<Word> words = c.words();
  const std::set<Word> members(words.begin(), words.end());

  ClosureReport report;
  report.contains_zero =
      members.count(Word::from_value(0, c.blocklength())) > 0;
  report.closed = true;
  for (const Word& w1 : words) {
    for (const Word& w2 : words) {
      Word sum = word_sum(w1, w2);
      if (!members.count(sum)) {
        report.closed = false;
        report.witness = ClosureWitness{w1, w2, std::move(sum)};
        break;
      }
    }
    if (!report.closed) break;
  }
  report.is_group = report.closed && !words.empty();
  return report;
}

/// Sub-code of the records at `indices`, keeping the parent's relative
/// order. Duplicate indices collapse.
inline CharacterSet subset(const CharacterSet& c,
                           std::span<const std::size_t> indices) {
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Record> records;
  records.reserve(sorted.size());
  for (std::size_t i : sorted) {
    if (i >= c.records().size())
      throw Error(Errc::index_out_of_range,
                  "record index " + std::to_string(i) + " out of range", i);
    records.push_back(c.records()[i]);
  }
  return CharacterSet(c.name(), c.blocklength(), c.universe(),
                      std::move(records));
}

/// Sub-code of the records satisfying `pred`, keeping relative order.
template <class Pred>
CharacterSet subset_if(const CharacterSet& c, Pred pred) {
  std::vector<Record> records;
  for (const Record& r : c.records())
    if (pred(r)) records.push_back(r);
  return CharacterSet(c.name(), c.blocklength(), c.universe(),
                      std::move(records));
}

}  // namespace codepres
