#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "codepres/bitword.hpp"
#include "codepres/codemodel.hpp"
#include "codepres/error.hpp"

namespace codepres {

/// One equivalence class of the zoned-portion relation: the words of a
/// code sharing a single constant zoned portion.
///
/// `decinumers` are the decimal values of all members' numeric portions,
/// sorted ascending; `assigned_decinumers` is the subset belonging to
/// listed records. Under a listed universe the two coincide; under a full
/// universe the members cover every word with this zone and the assigned
/// subset tracks the records.
struct Equizone {
  Word zone;
  std::vector<Word> members;
  std::vector<std::uint64_t> decinumers;
  std::vector<std::uint64_t> assigned_decinumers;
};

/// The decinumer set of an equizone: the sorted decimal values of the
/// numeric portions of its assigned members.
inline const std::vector<std::uint64_t>& decinumer_set(const Equizone& e) {
  return e.assigned_decinumers;
}

/// A code presentation: the split scheme together with the ordered list
/// of (zone, decinumer set) entries. Each (zone, decinumer) pair across
/// the entries names exactly one word of the code.
struct Presentation {
  SplitScheme scheme = SplitScheme::even;
  std::size_t blocklength = 0;
  std::size_t split = 0;  // zoned-portion length s
  UniverseMode universe = UniverseMode::listed;
  std::vector<Equizone> entries;  // ascending by zone decimal value
  std::vector<Word> zoned_set;    // the distinct zones, in entry order
  std::vector<Word> numer_set;    // distinct numeric portions, ascending

  /// The degree: number of equizones.
  std::size_t degree() const noexcept { return entries.size(); }
};

namespace detail {

inline void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Assigned numeric values per zone, collected from the listed records.
inline std::map<Word, std::vector<std::uint64_t>> assigned_by_zone(
    const CharacterSet& c, SplitScheme scheme) {
  std::map<Word, std::vector<std::uint64_t>> zones;
  for (const Record& r : c.records()) {
    auto [zoned, numeric] = split_word(r.word, scheme);
    zones[zoned].push_back(decimal_value(numeric));
  }
  return zones;
}

}  // namespace detail

/// Partitions a code into its equizones: two words belong to the same
/// class exactly when the word difference of their zoned portions is the
/// all-zero word. Classes come back ordered by the decimal value of their
/// zone; members keep collating order (listed) or ascending value order
/// (full universe).
inline std::vector<Equizone> equizone_partition(const CharacterSet& c,
                                                SplitScheme scheme) {
  const std::size_t s = split_point(c.blocklength(), scheme);
  const std::size_t numeric_width = c.blocklength() - s;

  if (c.universe() == UniverseMode::full) {
    auto assigned = detail::assigned_by_zone(c, scheme);
    std::vector<Equizone> classes;
    const std::uint64_t zone_count = std::uint64_t{1} << s;
    const std::uint64_t numer_count = std::uint64_t{1} << numeric_width;
    classes.reserve(zone_count);
    for (std::uint64_t z = 0; z < zone_count; ++z) {
      Equizone e{Word::from_value(z, s), {}, {}, {}};
      e.members.reserve(numer_count);
      e.decinumers.reserve(numer_count);
      for (std::uint64_t g = 0; g < numer_count; ++g) {
        e.members.push_back(
            concat(e.zone, Word::from_value(g, numeric_width)));
        e.decinumers.push_back(g);
      }
      if (auto it = assigned.find(e.zone); it != assigned.end()) {
        e.assigned_decinumers = it->second;
        detail::sort_unique(e.assigned_decinumers);
      }
      classes.push_back(std::move(e));
    }
    return classes;
  }

  // Listed universe: only zones that occur among the listed words.
  std::map<Word, Equizone> by_zone;
  for (const Record& r : c.records()) {
    auto [zoned, numeric] = split_word(r.word, scheme);
    Equizone& e = by_zone.try_emplace(zoned, Equizone{zoned, {}, {}, {}})
                      .first->second;
    e.members.push_back(r.word);
    e.decinumers.push_back(decimal_value(numeric));
  }
  std::vector<Equizone> classes;
  classes.reserve(by_zone.size());
  for (auto& [zone, e] : by_zone) {
    detail::sort_unique(e.decinumers);
    e.assigned_decinumers = e.decinumers;
    classes.push_back(std::move(e));
  }
  return classes;  // map order == ascending zone value
}

/// The zoned set: the distinct constant zoned portions, in zone order.
inline std::vector<Word> zoned_set(const CharacterSet& c, SplitScheme scheme) {
  std::vector<Word> zones;
  for (const Equizone& e : equizone_partition(c, scheme))
    zones.push_back(e.zone);
  return zones;
}

/// The numer set: the distinct numeric portions across the whole code,
/// in ascending decimal order.
inline std::vector<Word> numer_set(const CharacterSet& c, SplitScheme scheme) {
  const std::size_t s = split_point(c.blocklength(), scheme);
  const std::size_t numeric_width = c.blocklength() - s;
  if (c.universe() == UniverseMode::full) {
    std::vector<Word> numerics;
    const std::uint64_t numer_count = std::uint64_t{1} << numeric_width;
    numerics.reserve(numer_count);
    for (std::uint64_t g = 0; g < numer_count; ++g)
      numerics.push_back(Word::from_value(g, numeric_width));
    return numerics;
  }
  std::set<Word> distinct;
  for (const Record& r : c.records())
    distinct.insert(split_word(r.word, scheme).second);
  return {distinct.begin(), distinct.end()};
}

/// Builds the code presentation of `c` under `scheme`: its equizones with
/// their decinumer sets, plus the zoned and numer sets.
inline Presentation present(const CharacterSet& c, SplitScheme scheme) {
  Presentation p;
  p.scheme = scheme;
  p.blocklength = c.blocklength();
  p.split = split_point(c.blocklength(), scheme);
  p.universe = c.universe();
  p.entries = equizone_partition(c, scheme);
  p.zoned_set.reserve(p.entries.size());
  for (const Equizone& e : p.entries) p.zoned_set.push_back(e.zone);
  p.numer_set = numer_set(c, scheme);
  return p;
}

/// Rebuilds the word set a presentation encodes: every zone concatenated
/// with the bit pattern of each of its decinumers. Returns the words
/// sorted ascending. For a well-formed presentation this is exactly the
/// (assigned) word set of the original code.
inline std::vector<Word> reconstruct(const Presentation& p) {
  const std::size_t numeric_width = p.blocklength - p.split;
  std::vector<Word> words;
  for (const Equizone& e : p.entries) {
    for (std::uint64_t g : decinumer_set(e)) {
      if (numeric_width < 64 && (g >> numeric_width) != 0)
        throw Error(Errc::decinumer_overflow,
                    "decinumer " + std::to_string(g) + " does not fit in " +
                        std::to_string(numeric_width) + " bits");
      words.push_back(concat(e.zone, Word::from_value(g, numeric_width)));
    }
  }
  std::sort(words.begin(), words.end());
  return words;
}

/// Every presentation a code admits: one (even scheme) for even
/// blocklengths, two (type1 then type2) for odd ones.
inline std::vector<Presentation> all_presentations(const CharacterSet& c) {
  std::vector<Presentation> ps;
  for (SplitScheme scheme : valid_schemes(c.blocklength()))
    ps.push_back(present(c, scheme));
  return ps;
}

}  // namespace codepres
