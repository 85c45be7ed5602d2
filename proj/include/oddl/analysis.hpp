// Copyright 2026 The ODDL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file analysis.hpp
/// @brief Scenario membership, ODD containment and diff over evaluated trees.
///
/// What a configured leaf admits is decided by an AnalysisProfile:
///
///   comparator      | scenario value s admitted by ODD value o
///   ----------------+------------------------------------------
///   EQ              | s == o
///   EQ_TOLERANCE(e) | |s - o| <= e
///   LEQ             | low <= s <= o   (low from the leaf's isBetween, if any)
///   GEQ             | o <= s <= high
///   RANGE           | low <= s <= high (EQ when the leaf is unconstrained)
///   FLAG_INCLUSION  | s is false, or o is true
///
/// Containment holds at a leaf when everything the inner ODD admits is also
/// admitted by the outer one. Listings take no part in membership or
/// containment.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "oddl/bundled.hpp"
#include "oddl/render.hpp"
#include "oddl/source.hpp"
#include "oddl/value.hpp"

namespace oddl {

/// A malformed or ambiguous profile, or a malformed scenario.
class ConfigError : public Error {
  using Error::Error;
};

/// Two trees that were not evaluated from the same class closure.
class ShapeMismatchError : public Error {
  using Error::Error;
};

enum class ComparatorKind : std::uint8_t { Eq, EqTolerance, Leq, Geq, Range, FlagInclusion };

inline std::string_view to_string(ComparatorKind kind) {
  switch (kind) {
    case ComparatorKind::Eq: return "EQ";
    case ComparatorKind::EqTolerance: return "EQ_TOLERANCE";
    case ComparatorKind::Leq: return "LEQ";
    case ComparatorKind::Geq: return "GEQ";
    case ComparatorKind::Range: return "RANGE";
    case ComparatorKind::FlagInclusion: return "FLAG_INCLUSION";
  }
  return "?";
}

inline std::optional<ComparatorKind> parse_comparator_kind(std::string_view name) {
  for (auto k : {ComparatorKind::Eq, ComparatorKind::EqTolerance, ComparatorKind::Leq,
                 ComparatorKind::Geq, ComparatorKind::Range, ComparatorKind::FlagInclusion})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

struct Comparator {
  ComparatorKind kind = ComparatorKind::Eq;
  double epsilon = 0;  ///< Only used by EQ_TOLERANCE.

  bool operator==(const Comparator&) const = default;
};

/// Whether `c` can be applied to a leaf of kind `kind`.
inline bool comparator_applies(const Comparator& c, ValueKind kind) {
  switch (kind) {
    case ValueKind::Float: return c.kind != ComparatorKind::FlagInclusion;
    case ValueKind::Bool:
      return c.kind == ComparatorKind::Eq || c.kind == ComparatorKind::FlagInclusion;
    case ValueKind::String:
    case ValueKind::Enum: return c.kind == ComparatorKind::Eq;
    default: return false;
  }
}

namespace detail {

inline std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    parts.push_back(path.substr(start, dot == std::string_view::npos ? dot : dot - start));
    if (dot == std::string_view::npos) return parts;
    start = dot + 1;
  }
}

inline bool match_components(const std::vector<std::string_view>& pattern, std::size_t pi,
                             const std::vector<std::string_view>& path, std::size_t qi) {
  if (pi == pattern.size()) return qi == path.size();
  if (qi == path.size()) return false;
  if (pattern[pi] == "*" && pi == 0) {
    for (std::size_t skip = qi + 1; skip <= path.size(); ++skip)
      if (match_components(pattern, 1, path, skip)) return true;
    return false;
  }
  if (pattern[pi] != "*" && pattern[pi] != path[qi]) return false;
  return match_components(pattern, pi + 1, path, qi + 1);
}

}  // namespace detail

/// True when `pattern` matches the dotted `path`. A leading `*` stands for
/// one or more components; any other `*` stands for exactly one.
inline bool pattern_matches(std::string_view pattern, std::string_view path) {
  return detail::match_components(detail::split_path(pattern), 0, detail::split_path(path), 0);
}

inline bool is_wildcard(std::string_view pattern) { return pattern.find('*') != std::string_view::npos; }

/// Number of non-wildcard components.
inline std::size_t pattern_specificity(std::string_view pattern) {
  std::size_t n = 0;
  for (auto part : detail::split_path(pattern))
    if (part != "*") ++n;
  return n;
}

struct AnalysisProfile {
  std::vector<std::pair<std::string, Comparator>> rules;
  Comparator default_float{ComparatorKind::Eq};
  Comparator default_bool{ComparatorKind::FlagInclusion};
  Comparator default_enum{ComparatorKind::Eq};

  void validate() const {
    std::set<std::string> seen;
    for (const auto& [pattern, c] : rules) {
      if (!seen.insert(pattern).second) throw ConfigError("duplicate profile pattern '" + pattern + "'");
      check_epsilon(c, pattern);
    }
    check_epsilon(default_float, "defaults.float");
    if (!comparator_applies(default_float, ValueKind::Float))
      throw ConfigError("defaults.float cannot be " + std::string(to_string(default_float.kind)));
    if (!comparator_applies(default_bool, ValueKind::Bool))
      throw ConfigError("defaults.bool cannot be " + std::string(to_string(default_bool.kind)));
    if (!comparator_applies(default_enum, ValueKind::Enum))
      throw ConfigError("defaults.enum cannot be " + std::string(to_string(default_enum.kind)));
  }

  /// The comparator governing `path`, a leaf of kind `kind`. The most
  /// specific matching pattern wins; an exact path beats every wildcard.
  Comparator comparator_for(std::string_view path, ValueKind kind) const {
    const std::pair<std::string, Comparator>* best = nullptr;
    bool best_exact = false;
    std::size_t best_score = 0;
    bool tie = false;
    for (const auto& rule : rules) {
      if (!pattern_matches(rule.first, path)) continue;
      const bool exact = !is_wildcard(rule.first);
      const std::size_t score = pattern_specificity(rule.first);
      if (!best || exact > best_exact || (exact == best_exact && score > best_score)) {
        best = &rule;
        best_exact = exact;
        best_score = score;
        tie = false;
      } else if (exact == best_exact && score == best_score) {
        tie = true;
      }
    }
    if (tie)
      throw ConfigError("ambiguous profile: several patterns of equal specificity match '" +
                        std::string(path) + "'");
    Comparator c = best ? best->second
                        : kind == ValueKind::Float ? default_float
                        : kind == ValueKind::Bool  ? default_bool
                                                   : default_enum;
    if (!comparator_applies(c, kind))
      throw ConfigError("comparator " + std::string(to_string(c.kind)) + " from pattern '" +
                        (best ? best->first : std::string("defaults")) + "' cannot apply to '" +
                        std::string(path) + "'");
    return c;
  }

 private:
  static void check_epsilon(const Comparator& c, const std::string& where) {
    if (c.kind == ComparatorKind::EqTolerance && !(c.epsilon >= 0 && std::isfinite(c.epsilon)))
      throw ConfigError("epsilon for '" + where + "' must be a finite number >= 0");
  }
};

namespace detail {

inline Comparator comparator_from_json(const nlohmann::ordered_json& j, const std::string& where) {
  Comparator c;
  std::string kind_name;
  if (j.is_string()) {
    kind_name = j.get<std::string>();
  } else if (j.is_object() && j.contains("kind") && j["kind"].is_string()) {
    kind_name = j["kind"].get<std::string>();
    for (const auto& [key, value] : j.items())
      if (key != "kind" && key != "epsilon")
        throw ConfigError("unknown field '" + key + "' in comparator for '" + where + "'");
  } else {
    throw ConfigError("comparator for '" + where + "' must be a string or an object with \"kind\"");
  }
  auto kind = parse_comparator_kind(kind_name);
  if (!kind) throw ConfigError("unknown comparator '" + kind_name + "' for '" + where + "'");
  c.kind = *kind;
  if (c.kind == ComparatorKind::EqTolerance) {
    if (!j.is_object() || !j.contains("epsilon") || !j["epsilon"].is_number())
      throw ConfigError("EQ_TOLERANCE for '" + where + "' needs a numeric \"epsilon\"");
    c.epsilon = j["epsilon"].get<double>();
  } else if (j.is_object() && j.contains("epsilon")) {
    throw ConfigError("\"epsilon\" is only valid for EQ_TOLERANCE ('" + where + "')");
  }
  return c;
}

/// Parses JSON, rejecting duplicate keys in any object.
inline nlohmann::ordered_json parse_strict_json(std::string_view text, std::string_view what) {
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  const nlohmann::ordered_json::parser_callback_t cb =
      [&](int, nlohmann::ordered_json::parse_event_t event, nlohmann::ordered_json& parsed) {
        using E = nlohmann::ordered_json::parse_event_t;
        if (event == E::object_start) keys.emplace_back();
        else if (event == E::object_end) keys.pop_back();
        else if (event == E::key && !keys.back().insert(parsed.get<std::string>()).second &&
                 duplicate.empty())
          duplicate = parsed.get<std::string>();
        return true;
      };
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text.begin(), text.end(), cb);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed " + std::string(what) + ": " + e.what());
  }
  if (!duplicate.empty())
    throw ConfigError("duplicate key '" + duplicate + "' in " + std::string(what));
  return j;
}

}  // namespace detail

/// Reads a profile: `{"<pattern>": <comparator>, ..., "defaults": {"float": ..,
/// "bool": .., "enum": ..}}` where a comparator is a kind name or
/// `{"kind": "EQ_TOLERANCE", "epsilon": 1e-9}`.
inline AnalysisProfile parse_profile(std::string_view json_text) {
  const auto j = detail::parse_strict_json(json_text, "profile");
  if (!j.is_object()) throw ConfigError("profile must be a JSON object");
  AnalysisProfile profile;
  for (const auto& [key, value] : j.items()) {
    if (key == "defaults") {
      if (!value.is_object()) throw ConfigError("profile \"defaults\" must be an object");
      for (const auto& [dkey, dvalue] : value.items()) {
        const Comparator c = detail::comparator_from_json(dvalue, "defaults." + dkey);
        if (dkey == "float") profile.default_float = c;
        else if (dkey == "bool") profile.default_bool = c;
        else if (dkey == "enum") profile.default_enum = c;
        else throw ConfigError("unknown default '" + dkey + "'; expected float, bool or enum");
      }
      continue;
    }
    if (key.empty()) throw ConfigError("empty profile pattern");
    for (auto part : detail::split_path(key))
      if (part.empty()) throw ConfigError("malformed profile pattern '" + key + "'");
    profile.rules.emplace_back(key, detail::comparator_from_json(value, key));
  }
  profile.validate();
  return profile;
}

/// The profile shipped with the taxonomy templates.
inline const AnalysisProfile& standard_profile() {
  static const AnalysisProfile profile = parse_profile(kStandardProfileJson);
  return profile;
}

/// Concrete attribute values keyed by dotted path, in file order.
struct Scenario {
  std::vector<std::pair<std::string, Scalar>> assignments;
};

/// Reads `{"<dotted path>": <number | bool | string>, ...}`.
inline Scenario parse_scenario(std::string_view json_text) {
  const auto j = detail::parse_strict_json(json_text, "scenario");
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
  Scenario s;
  for (const auto& [key, value] : j.items()) {
    if (value.is_number()) s.assignments.emplace_back(key, value.get<double>());
    else if (value.is_boolean()) s.assignments.emplace_back(key, value.get<bool>());
    else if (value.is_string()) s.assignments.emplace_back(key, value.get<std::string>());
    else throw ConfigError("scenario value for '" + key + "' must be a number, boolean or string");
  }
  return s;
}

enum class Outcome : std::uint8_t { Pass, Fail, Unresolved };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

struct PathOutcome {
  std::string path;
  Outcome outcome = Outcome::Pass;
  std::string reason;
};

struct Verdict {
  bool within = true;
  std::vector<PathOutcome> per_path;
};

struct ContainmentReport {
  bool contains = true;
  std::vector<PathOutcome> per_path;
};

struct DiffEntry {
  std::string path;
  Value a;
  Value b;
};

namespace detail {

struct Interval {
  double low;
  double high;
};

/// The closed interval of Float scenario values a leaf admits.
inline Interval admitted(const FloatLeaf& leaf, const Comparator& c) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double lo = leaf.bounds ? leaf.bounds->low : -kInf;
  const double hi = leaf.bounds ? leaf.bounds->high : kInf;
  switch (c.kind) {
    case ComparatorKind::Leq: return {lo, leaf.value};
    case ComparatorKind::Geq: return {leaf.value, hi};
    case ComparatorKind::Range:
      return leaf.bounds ? Interval{lo, hi} : Interval{leaf.value, leaf.value};
    default: return {leaf.value, leaf.value};
  }
}

inline PathOutcome check_float(const std::string& path, double s, const FloatLeaf& leaf,
                               const Comparator& c) {
  const std::string st = format_float(s);
  const std::string ot = format_float(leaf.value);
  if (c.kind == ComparatorKind::EqTolerance) {
    const bool ok = std::fabs(s - leaf.value) <= c.epsilon;
    return {path, ok ? Outcome::Pass : Outcome::Fail,
            "|" + st + " - " + ot + "| " + (ok ? "<= " : "> ") + format_float(c.epsilon)};
  }
  if (c.kind == ComparatorKind::Eq) {
    const bool ok = s == leaf.value;
    return {path, ok ? Outcome::Pass : Outcome::Fail, st + (ok ? " == " : " != ") + ot};
  }
  const Interval in = admitted(leaf, c);
  if (s < in.low) return {path, Outcome::Fail, st + " < " + format_float(in.low)};
  if (s > in.high) return {path, Outcome::Fail, st + " > " + format_float(in.high)};
  if (c.kind == ComparatorKind::Leq) return {path, Outcome::Pass, st + " <= " + ot};
  if (c.kind == ComparatorKind::Geq) return {path, Outcome::Pass, st + " >= " + ot};
  return {path, Outcome::Pass,
          st + " in [" + format_float(in.low) + ", " + format_float(in.high) + "]"};
}

inline std::string_view scalar_kind(const Scalar& s) {
  if (std::holds_alternative<double>(s)) return "Float";
  if (std::holds_alternative<bool>(s)) return "Boolean";
  return "String";
}

inline PathOutcome check_leaf(const std::string& path, const Scalar& s, const Value& leaf,
                              const AnalysisProfile& profile) {
  const Comparator c = profile.comparator_for(path, leaf.kind());
  switch (leaf.kind()) {
    case ValueKind::Float:
      if (const auto* d = std::get_if<double>(&s)) return check_float(path, *d, leaf.as_float(), c);
      break;
    case ValueKind::Bool:
      if (const auto* b = std::get_if<bool>(&s)) {
        const bool o = leaf.as_bool();
        if (c.kind == ComparatorKind::FlagInclusion) {
          if (*b && !o) return {path, Outcome::Fail, "true but the ODD flag is false"};
          return {path, Outcome::Pass, *b ? "true and the ODD flag is true" : "false is always admitted"};
        }
        return {path, *b == o ? Outcome::Pass : Outcome::Fail,
                scalar_text(s) + (*b == o ? " == " : " != ") + leaf_text(leaf)};
      }
      break;
    default:
      if (const auto* t = std::get_if<std::string>(&s)) {
        const bool ok = *t == leaf.as_text();
        return {path, ok ? Outcome::Pass : Outcome::Fail,
                scalar_text(s) + (ok ? " == " : " != ") + leaf_text(leaf)};
      }
  }
  return {path, Outcome::Fail,
          std::string(scalar_kind(s)) + " value " + scalar_text(s) + " for a " +
              (leaf.kind() == ValueKind::Float ? "Float" : leaf.kind() == ValueKind::Bool ? "Boolean" : "String") +
              " attribute"};
}

inline void require_object(const Value& v, std::string_view what) {
  if (!v.is_object()) throw ShapeMismatchError(std::string(what) + " is not an evaluated object");
}

/// Walks two trees of the same shape, calling `leaf(path, a, b)` for every
/// leaf (and every listing when `with_listings`).
template <typename F>
void zip_leaves(const Value& a, const Value& b, const std::string& path, bool with_listings, F&& leaf) {
  const auto where = [&] { return path.empty() ? std::string("the root") : "'" + path + "'"; };
  if (a.kind() != b.kind()) throw ShapeMismatchError("different node kinds at " + where());
  if (a.is_object()) {
    const auto& ma = a.as_object();
    const auto& mb = b.as_object();
    if (ma.class_name != mb.class_name)
      throw ShapeMismatchError("different classes at " + where() + ": " + ma.class_name + " vs " +
                               mb.class_name);
    if (ma.members.size() != mb.members.size())
      throw ShapeMismatchError("different members at " + where());
    for (std::size_t i = 0; i < ma.members.size(); ++i) {
      if (ma.members[i].first != mb.members[i].first)
        throw ShapeMismatchError("different members at " + where() + ": '" + ma.members[i].first +
                                 "' vs '" + mb.members[i].first + "'");
      const std::string child = path.empty() ? ma.members[i].first : path + "." + ma.members[i].first;
      zip_leaves(ma.members[i].second, mb.members[i].second, child, with_listings, leaf);
    }
  } else if (a.is_listing()) {
    if (with_listings) leaf(path, a, b);
  } else {
    if (a.kind() == ValueKind::Enum && a.node().index() == b.node().index() &&
        std::get<EnumLeaf>(a.node()).alias != std::get<EnumLeaf>(b.node()).alias)
      throw ShapeMismatchError("different enumeration types at " + where());
    leaf(path, a, b);
  }
}

}  // namespace detail

/// Per-path verdict for every scenario assignment. Unknown, non-leaf and
/// listing paths are UNRESOLVED and do not affect `within`.
inline Verdict scenario_within(const Value& odd, const Scenario& scenario,
                               const AnalysisProfile& profile = standard_profile()) {
  Verdict v;
  for (const auto& [path, scalar] : scenario.assignments) {
    const Value* leaf = path.empty() ? nullptr : odd.at_path(path);
    if (!leaf) {
      v.per_path.push_back({path, Outcome::Unresolved, "no such attribute"});
    } else if (!leaf->is_leaf()) {
      v.per_path.push_back({path, Outcome::Unresolved,
                            leaf->is_listing() ? "listings are not analysed" : "not a leaf attribute"});
    } else {
      v.per_path.push_back(detail::check_leaf(path, scalar, *leaf, profile));
    }
    if (v.per_path.back().outcome == Outcome::Fail) v.within = false;
  }
  return v;
}

/// Whether every scenario admitted by `inner` is admitted by `outer`, leaf by leaf.
inline ContainmentReport contains(const Value& outer, const Value& inner,
                                  const AnalysisProfile& profile = standard_profile()) {
  detail::require_object(outer, "outer tree");
  detail::require_object(inner, "inner tree");
  ContainmentReport report;
  detail::zip_leaves(outer, inner, "", false, [&](const std::string& path, const Value& o, const Value& i) {
    const Comparator c = profile.comparator_for(path, o.kind());
    PathOutcome out{path, Outcome::Pass, {}};
    if (o.kind() == ValueKind::Float) {
      const FloatLeaf& fo = o.as_float();
      const FloatLeaf& fi = i.as_float();
      if (c.kind == ComparatorKind::EqTolerance || c.kind == ComparatorKind::Eq) {
        const bool ok = fo.value == fi.value;
        out.outcome = ok ? Outcome::Pass : Outcome::Fail;
        out.reason = format_float(fi.value) + (ok ? " == " : " != ") + format_float(fo.value);
      } else {
        const auto ai = detail::admitted(fi, c);
        const auto ao = detail::admitted(fo, c);
        const bool ok = ai.low > ai.high || (ai.low >= ao.low && ai.high <= ao.high);
        out.outcome = ok ? Outcome::Pass : Outcome::Fail;
        if (c.kind == ComparatorKind::Leq)
          out.reason = format_float(fo.value) + (ok ? " >= " : " < ") + format_float(fi.value);
        else if (c.kind == ComparatorKind::Geq)
          out.reason = format_float(fo.value) + (ok ? " <= " : " > ") + format_float(fi.value);
        else
          out.reason = "[" + format_float(ai.low) + ", " + format_float(ai.high) + "]" +
                       (ok ? " within " : " not within ") + "[" + format_float(ao.low) + ", " +
                       format_float(ao.high) + "]";
      }
    } else if (o.kind() == ValueKind::Bool && c.kind == ComparatorKind::FlagInclusion) {
      const bool ok = !i.as_bool() || o.as_bool();
      out.outcome = ok ? Outcome::Pass : Outcome::Fail;
      out.reason = ok ? (i.as_bool() ? "included in both" : "not included by inner")
                      : "included by inner but not by outer";
    } else {
      const bool ok = leaf_text(o) == leaf_text(i);
      out.outcome = ok ? Outcome::Pass : Outcome::Fail;
      out.reason = leaf_text(i) + (ok ? " == " : " != ") + leaf_text(o);
    }
    if (out.outcome == Outcome::Fail) report.contains = false;
    report.per_path.push_back(std::move(out));
  });
  return report;
}

/// Leaf paths (listings compared whole) whose values differ, in declaration order.
inline std::vector<DiffEntry> diff(const Value& a, const Value& b) {
  detail::require_object(a, "first tree");
  detail::require_object(b, "second tree");
  std::vector<DiffEntry> out;
  detail::zip_leaves(a, b, "", true, [&](const std::string& path, const Value& x, const Value& y) {
    const bool same = x.is_listing() ? render_json(x) == render_json(y) : leaf_text(x) == leaf_text(y);
    if (!same) out.push_back({path, x, y});
  });
  return out;
}

/// nlohmann representation of a tree; floats keep their fractional part when dumped.
inline nlohmann::ordered_json to_json(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Object: {
      nlohmann::ordered_json j = nlohmann::ordered_json::object();
      for (const auto& [k, child] : v.as_object().members) j[k] = to_json(child);
      return j;
    }
    case ValueKind::Listing: {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : v.as_listing().records) j.push_back(to_json(r));
      return j;
    }
    case ValueKind::Float: return v.as_float().value;
    case ValueKind::Bool: return v.as_bool();
    default: return v.as_text();
  }
}

inline nlohmann::ordered_json outcomes_json(const std::vector<PathOutcome>& outcomes) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& o : outcomes)
    arr.push_back({{"path", o.path}, {"outcome", std::string(to_string(o.outcome))}, {"reason", o.reason}});
  return arr;
}

inline nlohmann::ordered_json to_json(const Verdict& v) {
  return {{"within", v.within}, {"per_path", outcomes_json(v.per_path)}};
}

inline nlohmann::ordered_json to_json(const ContainmentReport& r) {
  return {{"contains", r.contains}, {"per_path", outcomes_json(r.per_path)}};
}

inline nlohmann::ordered_json to_json(const std::vector<DiffEntry>& entries) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) arr.push_back({{"path", e.path}, {"a", to_json(e.a)}, {"b", to_json(e.b)}});
  return arr;
}

}  // namespace oddl
