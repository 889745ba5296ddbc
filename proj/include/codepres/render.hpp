#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "codepres/error.hpp"
#include "codepres/presentation.hpp"

namespace codepres {

/// Compact forms a decinumer set can be written in. `removed`/`added`
/// deltas are sorted; the universe T is the full decinumer range of the
/// context.
struct EmptySet {
  friend bool operator==(const EmptySet&, const EmptySet&) = default;
};
struct ExplicitSet {
  std::vector<std::uint64_t> values;
  friend bool operator==(const ExplicitSet&, const ExplicitSet&) = default;
};
struct ComplementSet {  // T - removed
  std::vector<std::uint64_t> removed;
  friend bool operator==(const ComplementSet&, const ComplementSet&) = default;
};
struct AliasRef {  // l_row
  std::size_t row;
  friend bool operator==(const AliasRef&, const AliasRef&) = default;
};
struct AliasUnionExpr {  // l_row ∪ added; added non-empty, disjoint from target
  std::size_t row;
  std::vector<std::uint64_t> added;
  friend bool operator==(const AliasUnionExpr&, const AliasUnionExpr&) = default;
};
struct AliasDiffExpr {  // l_row - removed; removed non-empty, inside target
  std::size_t row;
  std::vector<std::uint64_t> removed;
  friend bool operator==(const AliasDiffExpr&, const AliasDiffExpr&) = default;
};

using SetExpression = std::variant<EmptySet, ExplicitSet, ComplementSet,
                                   AliasRef, AliasUnionExpr, AliasDiffExpr>;

/// One named decinumer set of a rendering context.
struct RenderRow {
  std::string label;  // hex digit for 4-bit zones, zone bits otherwise
  std::vector<std::uint64_t> values;  // sorted ascending
};

/// The universe T = {0, ..., universe_size-1} plus the ordered rows an
/// expression may reference.
struct RenderContext {
  std::uint64_t universe_size = 0;
  std::vector<RenderRow> rows;
};

/// Expression cost: one per explicitly enumerated integer, plus one per
/// alias or universe reference.
inline std::size_t expression_cost(const SetExpression& expr) {
  struct Visitor {
    std::size_t operator()(const EmptySet&) const { return 0; }
    std::size_t operator()(const ExplicitSet& e) const {
      return e.values.size();
    }
    std::size_t operator()(const ComplementSet& e) const {
      return e.removed.size() + 1;
    }
    std::size_t operator()(const AliasRef&) const { return 1; }
    std::size_t operator()(const AliasUnionExpr& e) const {
      return e.added.size() + 1;
    }
    std::size_t operator()(const AliasDiffExpr& e) const {
      return e.removed.size() + 1;
    }
  };
  return std::visit(Visitor{}, expr);
}

/// Row referenced by an expression, if any.
inline std::optional<std::size_t> alias_target(const SetExpression& expr) {
  if (const auto* a = std::get_if<AliasRef>(&expr)) return a->row;
  if (const auto* u = std::get_if<AliasUnionExpr>(&expr)) return u->row;
  if (const auto* d = std::get_if<AliasDiffExpr>(&expr)) return d->row;
  return std::nullopt;
}

namespace detail {

inline std::vector<std::uint64_t> universe_values(const RenderContext& ctx) {
  std::vector<std::uint64_t> t(ctx.universe_size);
  for (std::uint64_t v = 0; v < ctx.universe_size; ++v) t[v] = v;
  return t;
}

inline const std::vector<std::uint64_t>& row_values(const RenderContext& ctx,
                                                    std::size_t row) {
  if (row >= ctx.rows.size())
    throw Error(Errc::unknown_row, "row " + std::to_string(row) +
                                       " not in context",
                row);
  return ctx.rows[row].values;
}

inline std::vector<std::uint64_t> set_minus(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<std::uint64_t> set_plus(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// Tie-break rank of a form; lower wins at equal cost.
inline int form_rank(const SetExpression& expr) {
  struct Visitor {
    int operator()(const EmptySet&) const { return 0; }
    int operator()(const AliasRef&) const { return 1; }
    int operator()(const ExplicitSet&) const { return 2; }
    int operator()(const ComplementSet&) const { return 3; }
    int operator()(const AliasUnionExpr&) const { return 4; }
    int operator()(const AliasDiffExpr&) const { return 5; }
  };
  return std::visit(Visitor{}, expr);
}

inline bool better(const SetExpression& a, const SetExpression& b) {
  const auto ka = expression_cost(a), kb = expression_cost(b);
  if (ka != kb) return ka < kb;
  const int ra = form_rank(a), rb = form_rank(b);
  if (ra != rb) return ra < rb;
  const auto ta = alias_target(a), tb = alias_target(b);
  return ta.value_or(0) < tb.value_or(0);
}

// Lowest-index row with an equal set, per row.
inline std::vector<std::size_t> representatives(const RenderContext& ctx) {
  std::map<std::vector<std::uint64_t>, std::size_t> first_seen;
  std::vector<std::size_t> rep(ctx.rows.size());
  for (std::size_t i = 0; i < ctx.rows.size(); ++i)
    rep[i] = first_seen.try_emplace(ctx.rows[i].values, i).first->second;
  return rep;
}

}  // namespace detail

/// The set an expression denotes under a context. Pass `self_row` when
/// the expression stands for one of the context's own rows; referencing
/// that row from within its own expression is rejected as cyclic.
inline std::vector<std::uint64_t> evaluate(
    const SetExpression& expr, const RenderContext& ctx,
    std::optional<std::size_t> self_row = std::nullopt) {
  if (auto target = alias_target(expr)) {
    if (self_row && *target == *self_row)
      throw Error(Errc::cyclic_alias,
                  "row " + std::to_string(*target) + " references itself",
                  *target);
  }
  struct Visitor {
    const RenderContext& ctx;
    std::vector<std::uint64_t> operator()(const EmptySet&) const { return {}; }
    std::vector<std::uint64_t> operator()(const ExplicitSet& e) const {
      return e.values;
    }
    std::vector<std::uint64_t> operator()(const ComplementSet& e) const {
      return detail::set_minus(detail::universe_values(ctx), e.removed);
    }
    std::vector<std::uint64_t> operator()(const AliasRef& e) const {
      return detail::row_values(ctx, e.row);
    }
    std::vector<std::uint64_t> operator()(const AliasUnionExpr& e) const {
      return detail::set_plus(detail::row_values(ctx, e.row), e.added);
    }
    std::vector<std::uint64_t> operator()(const AliasDiffExpr& e) const {
      return detail::set_minus(detail::row_values(ctx, e.row), e.removed);
    }
  };
  return std::visit(Visitor{ctx}, expr);
}

/// Minimum-cost expression for a row of the context.
///
/// Selection rule: cost as in expression_cost, ties broken by form order
/// (empty, alias, explicit, complement, alias-union, alias-difference),
/// then by lowest target row. To keep every emitted table acyclic, an
/// alias may only point at a row that is itself rendered from its own
/// set: rows repeating an earlier row's set alias that first row, the
/// first row of any repeated set stays alias-free, and union/difference
/// forms may only build on such alias-free rows.
inline SetExpression compact_expression(std::size_t row,
                                        const RenderContext& ctx) {
  const std::vector<std::uint64_t>& value = detail::row_values(ctx, row);
  const std::vector<std::size_t> rep = detail::representatives(ctx);

  if (rep[row] != row) {
    if (value.empty()) return EmptySet{};
    return AliasRef{rep[row]};
  }

  // Targets: alias-free rows, i.e. representatives of repeated sets.
  std::vector<std::size_t> targets;
  bool row_is_target = false;
  for (std::size_t j = 0; j < ctx.rows.size(); ++j) {
    if (rep[j] != j) continue;
    if (std::count(rep.begin(), rep.end(), j) < 2) continue;
    if (j == row)
      row_is_target = true;
    else
      targets.push_back(j);
  }

  SetExpression best = ExplicitSet{value};
  if (value.empty()) best = EmptySet{};
  SetExpression complement =
      ComplementSet{detail::set_minus(detail::universe_values(ctx), value)};
  if (detail::better(complement, best)) best = std::move(complement);

  if (!row_is_target) {
    for (std::size_t t : targets) {
      const auto& tv = ctx.rows[t].values;
      if (std::includes(value.begin(), value.end(), tv.begin(), tv.end())) {
        auto added = detail::set_minus(value, tv);
        if (!added.empty()) {
          SetExpression cand = AliasUnionExpr{t, std::move(added)};
          if (detail::better(cand, best)) best = std::move(cand);
        }
      }
      if (std::includes(tv.begin(), tv.end(), value.begin(), value.end())) {
        auto removed = detail::set_minus(tv, value);
        if (!removed.empty()) {
          SetExpression cand = AliasDiffExpr{t, std::move(removed)};
          if (detail::better(cand, best)) best = std::move(cand);
        }
      }
    }
  }
  return best;
}

namespace detail {

inline std::string joined_set(const std::vector<std::uint64_t>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s + "}";
}

}  // namespace detail

/// Text form of an expression: `∅`, `{a,b,c}`, `T - {…}`, `l_<row>`,
/// `l_<row> ∪ {…}`, `l_<row> - {…}`.
inline std::string to_string(const SetExpression& expr,
                             const RenderContext& ctx) {
  struct Visitor {
    const RenderContext& ctx;
    std::string label(std::size_t row) const {
      detail::row_values(ctx, row);  // bounds check
      return "l_" + ctx.rows[row].label;
    }
    std::string operator()(const EmptySet&) const { return "∅"; }
    std::string operator()(const ExplicitSet& e) const {
      return detail::joined_set(e.values);
    }
    std::string operator()(const ComplementSet& e) const {
      if (e.removed.empty()) return "T";
      return "T - " + detail::joined_set(e.removed);
    }
    std::string operator()(const AliasRef& e) const { return label(e.row); }
    std::string operator()(const AliasUnionExpr& e) const {
      return label(e.row) + " ∪ " + detail::joined_set(e.added);
    }
    std::string operator()(const AliasDiffExpr& e) const {
      return label(e.row) + " - " + detail::joined_set(e.removed);
    }
  };
  return std::visit(Visitor{ctx}, expr);
}

/// Row label for a zone: a single uppercase hex digit for 4-bit zones,
/// the zone bits otherwise.
inline std::string zone_label(const Word& zone) {
  return zone.size() == 4 ? zone.hex() : zone.str();
}

/// Rendering context of a presentation: the numeric-portion universe and
/// one row per equizone holding its decinumer set.
inline RenderContext make_context(const Presentation& p) {
  RenderContext ctx;
  ctx.universe_size = std::uint64_t{1} << (p.blocklength - p.split);
  ctx.rows.reserve(p.entries.size());
  for (const Equizone& e : p.entries)
    ctx.rows.push_back(RenderRow{zone_label(e.zone), decinumer_set(e)});
  return ctx;
}

/// Decinumer table of a presentation: a tab-separated row per equizone
/// with its label, compact expression and cardinality. Deterministic,
/// byte-exact for a fixed input.
inline std::string render_table(const Presentation& p) {
  const RenderContext ctx = make_context(p);
  std::string out = "i\tl_i\t|l_i|\n";
  for (std::size_t r = 0; r < ctx.rows.size(); ++r) {
    out += ctx.rows[r].label;
    out += '\t';
    out += to_string(compact_expression(r, ctx), ctx);
    out += '\t';
    out += std::to_string(ctx.rows[r].values.size());
    out += '\n';
  }
  return out;
}

}  // namespace codepres
