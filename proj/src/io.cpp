#include "acgraph/io.hpp"

#include <fstream>
#include <ostream>
#include <set>

namespace acg {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

GroupSpec GroupSpec::from_json(const json& j) {
  if (!j.is_object()) throw InputError("group spec must be a JSON object");
  GroupSpec s;
  const auto type = field<std::string>(j, "type");
  if (j.contains("name")) s.name = field<std::string>(j, "name");
  if (type == "permutation") {
    s.type = Type::Permutation;
    s.degree = field<std::size_t>(j, "degree");
    s.generators = field<std::vector<Permutation>>(j, "generators");
  } else if (type == "table") {
    s.type = Type::Table;
    s.table = field<std::vector<std::vector<Element>>>(j, "table");
  } else if (type == "abelian") {
    s.type = Type::Abelian;
    s.factors = field<std::vector<std::uint64_t>>(j, "factors");
  } else {
    throw InputError("unknown group type '" + type + "'");
  }
  return s;
}

json GroupSpec::to_json() const {
  json j;
  switch (type) {
    case Type::Permutation:
      j = {{"type", "permutation"}, {"degree", degree}, {"generators", generators}};
      break;
    case Type::Table: j = {{"type", "table"}, {"table", table}}; break;
    case Type::Abelian: j = {{"type", "abelian"}, {"factors", factors}}; break;
  }
  if (!name.empty()) j["name"] = name;
  return j;
}

GroupPtr GroupSpec::build(const GroupLimits& limits) const {
  GroupPtr g;
  switch (type) {
    case Type::Permutation: g = build_from_permutations(degree, generators, limits); break;
    case Type::Table: g = build_from_table(table, limits); break;
    case Type::Abelian: g = build_abelian(factors, limits); break;
  }
  g->validate(limits);
  return g;
}

GroupSpec read_group_spec(const std::string& path) { return GroupSpec::from_json(load_json(path)); }

GroupPtr parse_group_file(const std::string& path, const GroupLimits& limits) {
  return read_group_spec(path).build(limits);
}

OperatorSet parse_autos_file(const std::string& path, const FiniteGroup& g) {
  const json j = load_json(path);
  if (j.contains("group_hash") && field<std::string>(j, "group_hash") != g.hash())
    throw InputError("automorphism file refers to a different group");
  return OperatorSet::from_tables(g, field<std::vector<std::vector<Element>>>(j, "autos"));
}

json to_json(const MoveSpec& m) {
  json j{{"kind", to_string(m.kind)}, {"i", m.i}};
  switch (m.kind) {
    case MoveKind::RightMult:
    case MoveKind::LeftMult:
      j["j"] = m.j;
      j["sign"] = m.sign;
      break;
    case MoveKind::Invert: break;
    case MoveKind::Conjugate:
      if (m.w.type == Conjugator::Type::Element) {
        j["w"] = m.w.index;
      } else {
        j["auto"] = m.w.index;
        j["sign"] = m.w.sign;
      }
      break;
  }
  return j;
}

MoveSpec move_from_json(const json& j) {
  MoveSpec m;
  const auto kind = field<std::string>(j, "kind");
  m.i = field<std::uint32_t>(j, "i");
  if (kind == "RightMult" || kind == "LeftMult") {
    m.kind = kind == "RightMult" ? MoveKind::RightMult : MoveKind::LeftMult;
    m.j = field<std::uint32_t>(j, "j");
    m.sign = field<int>(j, "sign");
  } else if (kind == "Invert") {
    m.kind = MoveKind::Invert;
  } else if (kind == "Conjugate") {
    m.kind = MoveKind::Conjugate;
    if (j.contains("w")) {
      m.w = {Conjugator::Type::Element, field<std::uint32_t>(j, "w"), 1};
    } else {
      m.w = {Conjugator::Type::Automorphism, field<std::uint32_t>(j, "auto"), field<int>(j, "sign")};
    }
  } else {
    throw InputError("unknown move kind '" + kind + "'");
  }
  return m;
}

json to_json(const Certificate& c) {
  json arr = json::array();
  for (const auto& m : c.moves) arr.push_back(to_json(m));
  return arr;
}

// --- persistence -----------------------------------------------------------------

void save_component_table(const std::string& path, const ComponentTable& table,
                          const FiniteGroup& g, const MoveAlphabet& alphabet) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  const json header{{"format", "acgraph-components"},
                    {"engine", kEngineVersion},
                    {"group_hash", g.hash()},
                    {"order", g.order()},
                    {"k", table.k()},
                    {"alphabet", alphabet.descriptor()},
                    {"vertices", table.vertex_count()}};
  out << header.dump() << '\n';
  std::string buf;
  buf.reserve(12 * table.vertex_count());
  for (std::size_t p = 0; p < table.vertex_count(); ++p) {
    const Code c = table.codes()[p];
    for (int s = 0; s < 64; s += 8) buf.push_back(static_cast<char>((c >> s) & 0xff));
    const std::uint32_t id = table.ids()[p];
    for (int s = 0; s < 32; s += 8) buf.push_back(static_cast<char>((id >> s) & 0xff));
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw InputError("failed writing " + path);
}

ComponentTable load_component_table(const std::string& path, const FiniteGroup& g,
                                    const MoveAlphabet& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::string line;
  std::getline(in, line);
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw InputError(path + ": bad header: " + e.what());
  }
  if (field<std::string>(header, "format") != "acgraph-components")
    throw InputError(path + ": not a component table");
  if (field<std::string>(header, "group_hash") != g.hash())
    throw InputError(path + ": group hash mismatch");
  if (field<std::string>(header, "alphabet") != alphabet.descriptor())
    throw InputError(path + ": alphabet mismatch");
  const auto k = field<std::size_t>(header, "k");
  const auto count = field<std::size_t>(header, "vertices");
  std::vector<Code> codes(count);
  std::vector<std::uint32_t> ids(count);
  unsigned char rec[12];
  for (std::size_t p = 0; p < count; ++p) {
    if (!in.read(reinterpret_cast<char*>(rec), sizeof rec)) throw InputError(path + ": truncated");
    Code c = 0;
    for (int b = 7; b >= 0; --b) c = (c << 8) | rec[b];
    std::uint32_t id = 0;
    for (int b = 11; b >= 8; --b) id = (id << 8) | rec[b];
    codes[p] = c;
    ids[p] = id;
  }
  return ComponentTable(k, g.order(), std::move(codes), std::move(ids));
}

// --- DOT ---------------------------------------------------------------------------

void emit_dot(const ComponentTable& table, const MoveAlphabet& alphabet, std::ostream& out) {
  if (table.vertex_count() > kDotVertexLimit)
    throw BudgetExceeded("graph has " + std::to_string(table.vertex_count()) +
                         " vertices; DOT output is limited to " +
                         std::to_string(kDotVertexLimit));
  static constexpr const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                            "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                                            "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  const FiniteGroup& g = alphabet.group();
  const std::size_t n = g.order(), k = table.k();
  out << "graph ac {\n  node [style=filled];\n";
  for (std::size_t p = 0; p < table.vertex_count(); ++p) {
    const KTuple t = KTuple::from_code(table.codes()[p], n, k);
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) label += (i ? ", " : "") + g.name(t.entries[i]);
    label += ")";
    out << "  v" << table.codes()[p] << " [label=\"" << label << "\", fillcolor=\""
        << palette[table.ids()[p] % std::size(palette)] << "\", component=" << table.ids()[p]
        << "];\n";
  }
  const auto moves = alphabet.moves(k);
  std::set<std::pair<Code, Code>> edges;
  for (Code c : table.codes()) {
    const KTuple t = KTuple::from_code(c, n, k);
    for (const MoveSpec& m : moves) {
      KTuple nb = t;
      nb.entries[m.i] = alphabet.image(m, t.entries);
      const Code d = nb.code(n);
      if (d != c) edges.emplace(std::min(c, d), std::max(c, d));
    }
  }
  for (const auto& [a, b] : edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
}

void emit_dot(const ComponentTable& table, const MoveAlphabet& alphabet, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  emit_dot(table, alphabet, out);
}

}  // namespace acg
