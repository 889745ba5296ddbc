#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "codepres/codemodel.hpp"
#include "codepres/ctf.hpp"
#include "codepres/error.hpp"
#include "codepres/presentation.hpp"
#include "codepres/render.hpp"

namespace codepres::cli {

// Exit codes: 0 success, 1 validation failure, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline void emit_error(std::ostream& err, std::string_view kind,
                       const std::string& message,
                       std::size_t where = Error::npos) {
  nlohmann::json j{{"error", std::string(kind)}, {"message", message}};
  if (where != Error::npos) j["where"] = where;
  err << j.dump() << '\n';
}

inline SplitScheme scheme_from_name(const std::string& name) {
  if (name == "even") return SplitScheme::even;
  if (name == "type1") return SplitScheme::type1;
  return SplitScheme::type2;
}

inline std::string join_decinumers(const std::vector<std::uint64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

// Zones print as bits, with a hex alias for 4-bit zones.
inline std::string zone_text(const Word& zone) {
  std::string s = zone.str();
  if (zone.size() == 4) s += "(" + zone.hex() + ")";
  return s;
}

inline void print_presentation_text(std::ostream& out, const Presentation& p) {
  out << "scheme: " << to_string(p.scheme) << '\n';
  out << "degree: " << p.degree() << '\n';
  for (const Equizone& e : p.entries)
    out << zone_text(e.zone) << '\t' << join_decinumers(decinumer_set(e))
        << '\n';
}

inline nlohmann::json presentation_json(const Presentation& p) {
  nlohmann::json entries = nlohmann::json::array();
  for (const Equizone& e : p.entries) {
    entries.push_back({{"zone", e.zone.str()},
                       {"decinumers", decinumer_set(e)},
                       {"count", decinumer_set(e).size()}});
  }
  return {{"scheme", std::string(to_string(p.scheme))},
          {"degree", p.degree()},
          {"entries", std::move(entries)}};
}

inline int cmd_present(std::ostream& out, const CharacterSet& c,
                       const std::string& scheme, const std::string& format) {
  std::vector<Presentation> ps;
  if (scheme == "all")
    ps = all_presentations(c);
  else
    ps.push_back(present(c, scheme_from_name(scheme)));

  if (format == "json") {
    nlohmann::json j{{"blocklength", c.blocklength()},
                     {"universe", std::string(to_string(c.universe()))}};
    auto arr = nlohmann::json::array();
    for (const Presentation& p : ps) arr.push_back(presentation_json(p));
    j["presentations"] = std::move(arr);
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  out << "blocklength: " << c.blocklength() << '\n';
  out << "universe: " << to_string(c.universe()) << '\n';
  for (const Presentation& p : ps) {
    out << '\n';
    print_presentation_text(out, p);
  }
  return exit_ok;
}

inline int cmd_partition(std::ostream& out, const CharacterSet& c,
                         const std::string& scheme) {
  out << "zone\tdecinumers\tmembers\n";
  for (const Equizone& e : equizone_partition(c, scheme_from_name(scheme))) {
    out << zone_text(e.zone) << '\t' << join_decinumers(decinumer_set(e))
        << '\t';
    for (std::size_t i = 0; i < e.members.size(); ++i) {
      if (i) out << ',';
      out << e.members[i].str();
    }
    out << '\n';
  }
  return exit_ok;
}

inline int cmd_table(std::ostream& out, const CharacterSet& c) {
  // Even blocklengths have a single presentation; odd ones default to the
  // zoned-heavy split, the first of the two.
  out << render_table(all_presentations(c).front());
  return exit_ok;
}

inline int cmd_info(std::ostream& out, const CharacterSet& c) {
  if (!c.name().empty()) out << "name: " << c.name() << '\n';
  out << "blocklength: " << c.blocklength() << '\n';
  out << "universe: " << to_string(c.universe()) << '\n';
  out << "order: " << c.order() << '\n';
  const auto ps = all_presentations(c);
  out << "presentations: " << ps.size() << '\n';
  for (const Presentation& p : ps) {
    out << "scheme " << to_string(p.scheme) << ": degree " << p.degree()
        << '\n';
    for (const Equizone& e : p.entries)
      out << "  " << zone_text(e.zone) << ": " << decinumer_set(e).size()
          << '\n';
  }
  return exit_ok;
}

inline int cmd_word(std::ostream& out, std::ostream& err,
                    const std::string& op, const std::string& w1_text,
                    const std::optional<std::string>& w2_text) {
  const bool unary = op == "invert";
  if (unary != !w2_text.has_value()) {
    emit_error(err, "usage",
               unary ? "word invert takes exactly one word"
                     : "word " + op + " takes exactly two words");
    return exit_usage;
  }
  const Word w1 = parse_word(w1_text);
  if (unary) {
    out << word_inverse(w1).str() << '\n';
    return exit_ok;
  }
  const Word w2 = parse_word(*w2_text);
  Word result = op == "diff"  ? word_diff(w1, w2)
                : op == "sum" ? word_sum(w1, w2)
                              : word_product(w1, w2);
  out << result.str() << '\n';
  return exit_ok;
}

// Structural-law suite behind `check`. Returns the number of violations.
class CheckRunner {
 public:
  CheckRunner(std::ostream& out, const CharacterSet& c) : out_(out), c_(c) {}

  int run() {
    check_well_ordering();
    for (SplitScheme scheme : valid_schemes(c_.blocklength())) {
      check_partition_laws(scheme);
      check_round_trip(scheme);
    }
    check_presentation_count();
    check_diff_equals_sum();
    report_closure();
    if (failures_ == 0) out_ << "all checks passed\n";
    return failures_;
  }

 private:
  void pass(const std::string& name) { out_ << "ok: " << name << '\n'; }
  void fail(const std::string& name, const std::string& detail) {
    ++failures_;
    out_ << "FAIL: " << name << ": " << detail << '\n';
  }

  void check_well_ordering() {
    const std::string name = "well-ordering (ascending and idempotent)";
    const CharacterSet sorted = well_order(c_);
    for (std::size_t i = 1; i < sorted.records().size(); ++i) {
      if (decimal_value(sorted.records()[i - 1].word) >=
          decimal_value(sorted.records()[i].word))
        return fail(name, "records " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + " not ascending");
    }
    if (!(well_order(sorted) == sorted)) return fail(name, "not idempotent");
    pass(name);
  }

  void check_partition_laws(SplitScheme scheme) {
    const std::string name =
        "partition laws [" + std::string(to_string(scheme)) + "]";
    const auto classes = equizone_partition(c_, scheme);
    const std::size_t s = split_point(c_.blocklength(), scheme);

    std::vector<Word> covered;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Equizone& e = classes[i];
      if (e.members.empty()) return fail(name, "empty equizone");
      if (i > 0 && !(classes[i - 1].zone < e.zone))
        return fail(name, "zones not ascending");
      for (const Word& m : e.members) {
        auto [zoned, numeric] = split_word(m, scheme);
        if (!(zoned == e.zone))
          return fail(name, "member " + m.str() + " outside its zone");
        covered.push_back(m);
      }
      if (e.decinumers.size() != e.members.size())
        return fail(name, "decinumer count mismatch in zone " + e.zone.str());
    }

    std::vector<Word> space;
    if (c_.universe() == UniverseMode::full) {
      const std::uint64_t total = std::uint64_t{1} << c_.blocklength();
      for (std::uint64_t v = 0; v < total; ++v)
        space.push_back(Word::from_value(v, c_.blocklength()));
    } else {
      space = c_.words();
    }
    std::sort(space.begin(), space.end());
    std::sort(covered.begin(), covered.end());
    if (covered != space)
      return fail(name, "classes do not partition the code");

    const std::size_t max_degree = std::size_t{1} << s;
    if (classes.size() > max_degree ||
        (c_.universe() == UniverseMode::listed && classes.size() > c_.order()))
      return fail(name, "degree exceeds its bound");
    pass(name);
  }

  void check_round_trip(SplitScheme scheme) {
    const std::string name =
        "round-trip [" + std::string(to_string(scheme)) + "]";
    std::vector<Word> expected = c_.words();
    std::sort(expected.begin(), expected.end());
    if (reconstruct(present(c_, scheme)) != expected)
      return fail(name, "reconstructed word set differs");
    pass(name);
  }

  void check_presentation_count() {
    const bool is_even = c_.blocklength() % 2 == 0;
    const std::size_t expected = is_even ? 1 : 2;
    const std::string name =
        "presentation count (" + std::to_string(expected) + " for " +
        (is_even ? "even" : "odd") + " blocklength)";
    if (all_presentations(c_).size() != expected)
      return fail(name, "unexpected count");
    pass(name);
  }

  void check_diff_equals_sum() {
    const std::vector<Word> words = c_.words();
    // Quadratic; step over the left operand when the code is large.
    const std::size_t stride =
        words.size() > 500 ? words.size() / 500 + 1 : 1;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < words.size(); i += stride) {
      for (const Word& w2 : words) {
        ++pairs;
        if (!(word_diff(words[i], w2) == word_sum(words[i], w2)))
          return fail("difference equals sum",
                      words[i].str() + " vs " + w2.str());
      }
    }
    pass("difference equals sum (" + std::to_string(pairs) + " pairs)");
  }

  void report_closure() {
    if (c_.universe() != UniverseMode::listed) {
      out_ << "note: closure: skipped (full universe)\n";
      return;
    }
    const ClosureReport r = closure_check(c_);
    if (r.closed) {
      out_ << "note: closure: closed; group code\n";
    } else {
      out_ << "note: closure: not closed; witness " << r.witness->left.str()
           << " + " << r.witness->right.str() << " = " << r.witness->sum.str()
           << '\n';
    }
  }

  std::ostream& out_;
  const CharacterSet& c_;
  int failures_ = 0;
};

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. Output goes
/// to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"code presentations of binary uniform digital codes"};
  app.require_subcommand(1);

  std::string file, scheme = "all", format = "text";
  std::string word_op, word_w1;
  std::optional<std::string> word_w2;

  auto* cmd_present = app.add_subcommand(
      "present", "presentations of a code as (zone, decinumer set) entries");
  cmd_present->add_option("file", file)->required();
  cmd_present->add_option("--scheme", scheme)
      ->check(CLI::IsMember({"even", "type1", "type2", "all"}));
  cmd_present->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_partition =
      app.add_subcommand("partition", "equizones of a code under one scheme");
  cmd_partition->add_option("file", file)->required();
  cmd_partition->add_option("--scheme", scheme)
      ->required()
      ->check(CLI::IsMember({"even", "type1", "type2"}));

  auto* cmd_table =
      app.add_subcommand("table", "compact decinumer table of a code");
  cmd_table->add_option("file", file)->required();

  auto* cmd_info = app.add_subcommand("info", "summary of a code table file");
  cmd_info->add_option("file", file)->required();

  auto* cmd_check =
      app.add_subcommand("check", "verify the structural laws of a code");
  cmd_check->add_option("file", file)->required();

  auto* cmd_word = app.add_subcommand("word", "word arithmetic");
  cmd_word->add_option("op", word_op)
      ->required()
      ->check(CLI::IsMember({"diff", "sum", "prod", "invert"}));
  cmd_word->add_option("w1", word_w1)->required();
  cmd_word->add_option("w2", word_w2);

  auto* cmd_invert_code =
      app.add_subcommand("invert-code", "reverse the collating sequence");
  cmd_invert_code->add_option("file", file)->required();

  auto* cmd_sort =
      app.add_subcommand("sort", "well-order a code by decimal value");
  cmd_sort->add_option("file", file)->required();

  std::vector<const char*> argv{"codepres"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    detail::emit_error(err, "usage", e.what());
    return exit_usage;
  }

  try {
    if (cmd_word->parsed())
      return detail::cmd_word(out, err, word_op, word_w1, word_w2);

    const CharacterSet code = load_ctf_file(file);
    if (cmd_present->parsed())
      return detail::cmd_present(out, code, scheme, format);
    if (cmd_partition->parsed())
      return detail::cmd_partition(out, code, scheme);
    if (cmd_table->parsed()) return detail::cmd_table(out, code);
    if (cmd_info->parsed()) return detail::cmd_info(out, code);
    if (cmd_check->parsed()) {
      detail::CheckRunner runner(out, code);
      return runner.run() == 0 ? exit_ok : exit_validation;
    }
    if (cmd_invert_code->parsed()) {
      out << to_ctf(code_inverse(code));
      return exit_ok;
    }
    if (cmd_sort->parsed()) {
      out << to_ctf(well_order(code));
      return exit_ok;
    }
  } catch (const Error& e) {
    detail::emit_error(err, errc_name(e.code()), e.what(), e.where());
    return exit_validation;
  } catch (const std::exception& e) {
    detail::emit_error(err, "internal", e.what());
    return exit_validation;
  }
  detail::emit_error(err, "usage", "no subcommand");
  return exit_usage;
}

}  // namespace codepres::cli
