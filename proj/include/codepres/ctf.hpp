#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codepres/codemodel.hpp"
#include "codepres/error.hpp"

namespace codepres {

// Code table file (CTF): UTF-8 lines; '#' starts a comment; optional
// directives `@name <id>` and `@universe full|listed` before the records;
// each record is BITS or BITS,LABEL; all records share one blocklength.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses CTF text into a character set. Record order is the file order,
/// which becomes the collating sequence. Errors carry 1-based line
/// numbers in `where()`.
inline CharacterSet parse_table_file(std::string_view text) {
  std::string name;
  UniverseMode mode = UniverseMode::listed;
  bool saw_name = false, saw_universe = false, saw_record = false;
  std::vector<Record> records;
  std::map<Word, std::size_t> first_line;
  std::size_t blocklength = 0;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    const std::string_view line = detail::trim(raw);
    if (line.empty()) continue;

    if (line.front() == '@') {
      if (saw_record)
        throw Error(Errc::syntax_error,
                    "directive after the first record (line " +
                        std::to_string(lineno) + ")",
                    lineno);
      const auto space = line.find_first_of(" \t");
      const std::string_view key = line.substr(0, space);
      const std::string_view arg =
          space == std::string_view::npos ? std::string_view{}
                                          : detail::trim(line.substr(space));
      if (key == "@name") {
        if (saw_name || arg.empty())
          throw Error(Errc::syntax_error,
                      "bad @name directive (line " + std::to_string(lineno) +
                          ")",
                      lineno);
        name = std::string(arg);
        saw_name = true;
      } else if (key == "@universe") {
        if (saw_universe || (arg != "full" && arg != "listed"))
          throw Error(Errc::syntax_error,
                      "bad @universe directive (line " +
                          std::to_string(lineno) + ")",
                      lineno);
        mode = arg == "full" ? UniverseMode::full : UniverseMode::listed;
        saw_universe = true;
      } else {
        throw Error(Errc::unknown_directive,
                    "unknown directive " + std::string(key) + " (line " +
                        std::to_string(lineno) + ")",
                    lineno);
      }
      continue;
    }

    // Record line.
    const auto comma = line.find(',');
    const std::string_view bits_text =
        detail::trim(line.substr(0, comma));
    std::optional<std::string> label;
    if (comma != std::string_view::npos) {
      const std::string_view label_text = detail::trim(line.substr(comma + 1));
      if (label_text.empty())
        throw Error(Errc::syntax_error,
                    "empty label (line " + std::to_string(lineno) + ")",
                    lineno);
      label = std::string(label_text);
    }
    Word word = [&] {
      try {
        return parse_word(bits_text);
      } catch (const Error& e) {
        throw Error(Errc::syntax_error,
                    std::string(e.what()) + " (line " +
                        std::to_string(lineno) + ")",
                    lineno);
      }
    }();
    if (!saw_record) {
      blocklength = word.size();
    } else if (word.size() != blocklength) {
      throw Error(Errc::blocklength_mismatch,
                  "blocklength " + std::to_string(word.size()) +
                      " does not match " + std::to_string(blocklength) +
                      " (line " + std::to_string(lineno) + ")",
                  lineno);
    }
    if (auto [it, fresh] = first_line.try_emplace(word, lineno); !fresh)
      throw Error(Errc::duplicate_word,
                  "word " + word.str() + " already listed on line " +
                      std::to_string(it->second) + " (line " +
                      std::to_string(lineno) + ")",
                  lineno);
    saw_record = true;
    records.push_back(Record{std::move(word), std::move(label)});
  }

  if (!saw_record)
    throw Error(Errc::syntax_error,
                mode == UniverseMode::full
                    ? "a full-universe file needs at least one record to fix "
                      "the blocklength"
                    : "no records in file");
  return CharacterSet(std::move(name), blocklength, mode, std::move(records));
}

/// Serializes a character set back to CTF text. Parsing the result yields
/// an identical set.
inline std::string to_ctf(const CharacterSet& c) {
  std::string out;
  if (!c.name().empty()) out += "@name " + c.name() + "\n";
  if (c.universe() == UniverseMode::full) out += "@universe full\n";
  for (const Record& r : c.records()) {
    out += r.word.str();
    if (r.label) {
      out += ',';
      out += *r.label;
    }
    out += '\n';
  }
  return out;
}

inline CharacterSet load_ctf_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table_file(buffer.str());
}

}  // namespace codepres
