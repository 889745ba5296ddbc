#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codepres/error.hpp"

namespace codepres {

/// Largest blocklength the library accepts. Decimal values must fit an
/// unsigned 64-bit integer because they serve as sort keys and decinumers.
inline constexpr std::size_t max_blocklength = 64;

/// A fixed-blocklength binary word. The leftmost bit is the most
/// significant one; length is fixed at construction. Words are immutable
/// values with structural equality, so they can serve as partition keys.
class Word {
 public:
  explicit Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw Error(Errc::empty_word, "word has no bits");
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] > 1)
        throw Error(Errc::invalid_character,
                    "bit " + std::to_string(i) + " is not 0 or 1", i);
    }
  }

  /// Word of `width` bits whose decimal value is `value`.
  static Word from_value(std::uint64_t value, std::size_t width) {
    if (width == 0) throw Error(Errc::empty_word, "word has no bits");
    if (width > max_blocklength)
      throw Error(Errc::word_too_long,
                  "blocklength " + std::to_string(width) + " exceeds " +
                      std::to_string(max_blocklength));
    if (width < 64 && (value >> width) != 0)
      throw Error(Errc::decinumer_overflow,
                  std::to_string(value) + " does not fit in " +
                      std::to_string(width) + " bits");
    std::vector<std::uint8_t> bits(width);
    for (std::size_t i = 0; i < width; ++i)
      bits[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1u);
    return Word(std::move(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t bit(std::size_t i) const { return bits_.at(i); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// ASCII rendering, most significant bit first: "1010".
  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  /// Uppercase hex rendering with no prefix; requires size() % 4 == 0.
  std::string hex() const {
    if (bits_.size() % 4 != 0)
      throw Error(Errc::length_mismatch,
                  "hex rendering needs a multiple of 4 bits, got " +
                      std::to_string(bits_.size()));
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string s;
    s.reserve(bits_.size() / 4);
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
      unsigned v = unsigned(bits_[i]) << 3 | unsigned(bits_[i + 1]) << 2 |
                   unsigned(bits_[i + 2]) << 1 | unsigned(bits_[i + 3]);
      s.push_back(digits[v]);
    }
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic on bits; for equal blocklengths this is the numeric order.
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Selects where a word is cut into its zoned and numeric portions.
/// `even` applies to even blocklengths only; `type1` and `type2` to odd
/// ones, putting the middle bit into the zoned or numeric portion
/// respectively.
enum class SplitScheme { even, type1, type2 };

constexpr std::string_view to_string(SplitScheme s) noexcept {
  switch (s) {
    case SplitScheme::even: return "even";
    case SplitScheme::type1: return "type1";
    case SplitScheme::type2: return "type2";
  }
  return "unknown";
}

inline Word parse_word(std::string_view text) {
  if (text.empty()) throw Error(Errc::empty_word, "empty word text");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw Error(Errc::invalid_character,
                  std::string("invalid character '") + text[i] +
                      "' at position " + std::to_string(i),
                  i);
    bits.push_back(text[i] == '1');
  }
  return Word(std::move(bits));
}

inline std::uint64_t decimal_value(const Word& w) {
  if (w.size() > max_blocklength)
    throw Error(Errc::word_too_long,
                "decimal value of a " + std::to_string(w.size()) +
                    "-bit word does not fit 64 bits");
  std::uint64_t v = 0;
  for (auto b : w.bits()) v = (v << 1) | b;
  return v;
}

/// Componentwise application of an arbitrary binary digit operation.
/// `op` receives two digits (0/1) and its result is taken as a truth
/// value for the output digit.
template <class BitOp>
Word apply_bitwise(const Word& w1, const Word& w2, BitOp op) {
  if (w1.size() != w2.size())
    throw Error(Errc::length_mismatch,
                "blocklength mismatch: " + std::to_string(w1.size()) +
                    " vs " + std::to_string(w2.size()));
  std::vector<std::uint8_t> bits(w1.size());
  for (std::size_t i = 0; i < w1.size(); ++i)
    bits[i] = op(w1.bit(i), w2.bit(i)) ? 1 : 0;
  return Word(std::move(bits));
}

/// Word difference: digit is 0 where the operands agree, 1 where they
/// differ.
inline Word word_diff(const Word& w1, const Word& w2) {
  return apply_bitwise(w1, w2,
                       [](std::uint8_t a, std::uint8_t b) { return a != b; });
}

/// Carry-free computer addition: 0+0=0, 0+1=1, 1+0=1, 1+1=0.
inline Word word_sum(const Word& w1, const Word& w2) {
  static constexpr std::uint8_t table[2][2] = {{0, 1}, {1, 0}};
  return apply_bitwise(
      w1, w2, [](std::uint8_t a, std::uint8_t b) { return table[a][b]; });
}

/// Computer multiplication: 0.0=0, 0.1=0, 1.0=0, 1.1=1.
inline Word word_product(const Word& w1, const Word& w2) {
  static constexpr std::uint8_t table[2][2] = {{0, 0}, {0, 1}};
  return apply_bitwise(
      w1, w2, [](std::uint8_t a, std::uint8_t b) { return table[a][b]; });
}

/// Inverse of a word: digits reversed and each digit complemented.
/// An involution, since reversal and complement commute.
inline Word word_inverse(const Word& w) {
  std::vector<std::uint8_t> bits(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    bits[i] = w.bit(w.size() - 1 - i) ? 0 : 1;
  return Word(std::move(bits));
}

/// Zone/numeric boundary for a blocklength under a split scheme:
/// n/2 for even, (n+1)/2 for type1, (n-1)/2 for type2. Both portions
/// must be non-empty, so blocklength 1 is rejected for every scheme.
inline std::size_t split_point(std::size_t blocklength, SplitScheme scheme) {
  const bool is_even = blocklength % 2 == 0;
  if ((scheme == SplitScheme::even) != is_even)
    throw Error(Errc::parity_mismatch,
                std::string(to_string(scheme)) +
                    " split does not apply to blocklength " +
                    std::to_string(blocklength));
  std::size_t s = 0;
  switch (scheme) {
    case SplitScheme::even: s = blocklength / 2; break;
    case SplitScheme::type1: s = (blocklength + 1) / 2; break;
    case SplitScheme::type2: s = (blocklength - 1) / 2; break;
  }
  if (s == 0 || s >= blocklength)
    throw Error(Errc::degenerate_split,
                "split of blocklength " + std::to_string(blocklength) +
                    " leaves an empty portion");
  return s;
}

/// All schemes valid for a given blocklength: {even} or {type1, type2}.
inline std::vector<SplitScheme> valid_schemes(std::size_t blocklength) {
  if (blocklength % 2 == 0) return {SplitScheme::even};
  return {SplitScheme::type1, SplitScheme::type2};
}

/// Splits a word into (zoned portion, numeric portion). Concatenating the
/// two portions reproduces the word.
inline std::pair<Word, Word> split_word(const Word& w, SplitScheme scheme) {
  const std::size_t s = split_point(w.size(), scheme);
  std::vector<std::uint8_t> zoned(w.bits().begin(), w.bits().begin() + s);
  std::vector<std::uint8_t> numeric(w.bits().begin() + s, w.bits().end());
  return {Word(std::move(zoned)), Word(std::move(numeric))};
}

inline Word concat(const Word& zoned, const Word& numeric) {
  std::vector<std::uint8_t> bits;
  bits.reserve(zoned.size() + numeric.size());
  bits.insert(bits.end(), zoned.bits().begin(), zoned.bits().end());
  bits.insert(bits.end(), numeric.bits().begin(), numeric.bits().end());
  return Word(std::move(bits));
}

}  // namespace codepres
