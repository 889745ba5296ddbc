#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace codepres {

/// Classified failure reasons. Every throwing operation in the library
/// reports one of these, so callers (and the CLI) can react without
/// parsing message text.
enum class Errc {
  empty_word,
  invalid_character,
  length_mismatch,
  parity_mismatch,
  degenerate_split,
  word_too_long,
  blocklength_mismatch,
  duplicate_word,
  empty_code,
  index_out_of_range,
  universe_mode_unsupported,
  decinumer_overflow,
  syntax_error,
  unknown_directive,
  unknown_row,
  cyclic_alias,
  io_error,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::empty_word: return "empty_word";
    case Errc::invalid_character: return "invalid_character";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::parity_mismatch: return "parity_mismatch";
    case Errc::degenerate_split: return "degenerate_split";
    case Errc::word_too_long: return "word_too_long";
    case Errc::blocklength_mismatch: return "blocklength_mismatch";
    case Errc::duplicate_word: return "duplicate_word";
    case Errc::empty_code: return "empty_code";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::universe_mode_unsupported: return "universe_mode_unsupported";
    case Errc::decinumer_overflow: return "decinumer_overflow";
    case Errc::syntax_error: return "syntax_error";
    case Errc::unknown_directive: return "unknown_directive";
    case Errc::unknown_row: return "unknown_row";
    case Errc::cyclic_alias: return "cyclic_alias";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

/// Library exception. `where()` carries the position-like detail named by
/// the failing operation: a character position, a record index, or a
/// 1-based line number, depending on context. `npos` means "not set".
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, std::string message, std::size_t where = npos)
      : std::runtime_error(std::move(message)), code_(code), where_(where) {}

  Errc code() const noexcept { return code_; }
  std::size_t where() const noexcept { return where_; }

 private:
  Errc code_;
  std::size_t where_;
};

}  // namespace codepres
