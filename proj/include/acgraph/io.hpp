#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "acgraph/ac_graph.hpp"
#include "acgraph/group.hpp"

namespace acg {

inline constexpr const char* kEngineVersion = "acgraph 0.1.0";

/// A group file:
///   {"type":"permutation","degree":N,"generators":[[...],...]}
///   {"type":"table","table":[[...],...]}
///   {"type":"abelian","factors":[...]}
/// An optional "name" is carried along for reports.
struct GroupSpec {
  enum class Type { Permutation, Table, Abelian };

  Type type = Type::Abelian;
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::vector<Element>> table;
  std::vector<std::uint64_t> factors;

  /// Throws InputError on schema violations.
  static GroupSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  /// Builds and fully validates the group.
  GroupPtr build(const GroupLimits& limits = {}) const;
};

GroupSpec read_group_spec(const std::string& path);

/// Reads, builds and validates a group file.
GroupPtr parse_group_file(const std::string& path, const GroupLimits& limits = {});

/// {"autos":[[image of each element index], ...]} with an optional
/// "group_hash" that must match.
OperatorSet parse_autos_file(const std::string& path, const FiniteGroup& g);

nlohmann::json to_json(const MoveSpec& m);
MoveSpec move_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Certificate& c);

/// Header line (JSON) followed by little-endian (u64 code, u32 id) pairs.
void save_component_table(const std::string& path, const ComponentTable& table,
                          const FiniteGroup& g, const MoveAlphabet& alphabet);
/// Throws InputError if the header does not match the group or alphabet.
ComponentTable load_component_table(const std::string& path, const FiniteGroup& g,
                                    const MoveAlphabet& alphabet);

inline constexpr std::size_t kDotVertexLimit = 5000;

/// Graphviz rendering, vertices labelled by entries and filled by component.
/// Throws BudgetExceeded above kDotVertexLimit vertices.
void emit_dot(const ComponentTable& table, const MoveAlphabet& alphabet, std::ostream& out);
void emit_dot(const ComponentTable& table, const MoveAlphabet& alphabet, const std::string& path);

}  // namespace acg
