#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flatcheck/errors.hpp"
#include "flatcheck/flatness.hpp"

namespace flatcheck {

/// One named declaration of a problem file with the span of its name.
struct Declaration {
  std::string kind;  // ring, module, cover, ideal, option, assert
  std::string name;
  SourceSpan span;
};

/// A parsed problem file:
///
///   ring R = Q[y1,y2] / (4*y1^3 + 27*y2^2);
///   module F over R = Q[y1,y2,x] / radical(4*y1^3 + 27*y2^2, x^3 + y1*x + y2);
///   cover S over R = Q[y1,y2,u] / (y1 + 3*u^2, y2 - 2*u^3);
///   ideal K = Q[x,y] / (x^2 - 1, x*y - 1);
///   option power = 1;
///   assert analytically_irreducible;
///
/// `/ (...)` may be omitted for a polynomial ring.
struct ProblemFile {
  std::vector<Declaration> declarations;
  std::optional<BaseRing> base;
  std::optional<ModuleSpec> module;
  std::optional<RegularCover> cover;
  /// Standalone ideals, in declaration order.
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::optional<int> power;
  std::set<std::string> assertions;

  const Declaration* find(const std::string& kind) const;

  /// Flatness problem of the file. Throws InvalidInput when the base ring
  /// or the module is missing.
  FlatnessProblem problem(const DecompositionOptions& options = {},
                          const std::set<std::string>& waivers = {}) const;
};

/// Parses a problem file; `radical(...)` is resolved immediately with the
/// given decomposition options. Throws ParseError with the offending span
/// and the expected tokens, VariableClash (with a span) for duplicate
/// declarations or variables.
ProblemFile parse_problem(std::string_view text, const DecompositionOptions& options = {});

/// Parses "(g1, ..., gm)" or "g1, ..., gm" over `ring`.
Ideal parse_ideal(std::string_view text, const RingPtr& ring);

}  // namespace flatcheck
