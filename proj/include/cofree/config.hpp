#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cofree/braid.hpp"
#include "cofree/expr.hpp"
#include "cofree/grouphopf.hpp"
#include "cofree/presets.hpp"

namespace cofree {

/// A parsed configuration file. One document fully determines a YDSpec and,
/// optionally, a braiding that overrides the induced one.
///
/// Format (INI-style, '#' or ';' starts a comment line):
///
///   [group]
///   free = 1
///   torsion = 2, 3
///   names = K1, a, b
///
///   [basis]
///   v1 = 1, 0, 0
///
///   [action]
///   K1 diag q, q^-1
///   a row v1 = 0, 1
///
///   [mult]
///   v1 v1 -> 2 v2
///   unit = one
///
///   [braiding]
///   v1 v2 -> q v2@v1
struct ConfigDocument {
  YDSpec spec;
  std::optional<LocalTable> braiding;
  /// Torsion exponents that were reduced while reading [basis].
  std::vector<std::string> notes;

  /// The override when present, the YD-induced braiding otherwise.
  BraidingTable braiding_table() const;
  BraidedAlgebraSpec algebra() const;

  friend bool operator==(const ConfigDocument& a, const ConfigDocument& b) {
    return a.spec == b.spec && a.braiding == b.braiding;
  }
};

/// Throws ParseError (with line and column) on malformed input, unknown
/// names, or structurally invalid tables.
ConfigDocument parse_config(std::string_view text);

/// Canonical text of a spec; parse_config(emit_config(s)) reproduces s.
std::string emit_config(const YDSpec& spec, const std::optional<LocalTable>& braiding = std::nullopt);
std::string emit_config(const ConfigDocument& doc);

/// Reads an integer matrix, one row per line, entries separated by spaces or commas.
CartanMatrix parse_cartan(std::string_view text);

}  // namespace cofree
