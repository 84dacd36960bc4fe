#include "liecat/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "liecat/text_format.hpp"

namespace liecat {
namespace {

using KeyValues = std::map<std::string, std::string>;

const std::string& require(const KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw Error(ErrorKind::InvalidSpec, "spec lacks required key '" + key + "'");
  return it->second;
}

Monoid parse_monoid(const std::string& kind, const KeyValues& kv) {
  if (kind == "matrix") return MatrixMonoid{text::parse_count(require(kv, "n"))};
  if (kind == "halfspace") return HalfSpaceMonoid{text::parse_count(require(kv, "n"))};
  if (kind == "algebra") {
    AlgebraSpec spec;
    spec.dim = text::parse_count(require(kv, "dim"));
    spec.structure_constants = text::parse_list(require(kv, "structure_constants"));
    spec.unit_coords = text::parse_vector(require(kv, "unit_coords"));
    return AlgebraMonoid{std::move(spec)};
  }
  throw Error(ErrorKind::InvalidSpec, "unknown monoid '" + kind + "'");
}

std::set<std::string> monoid_keys(const std::string& kind) {
  if (kind == "algebra") return {"dim", "structure_constants", "unit_coords"};
  return {"n"};
}

void write_monoid(std::ostringstream& out, const Monoid& m) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AlgebraMonoid>) {
          out << "dim = " << v.algebra.dim << "\n";
          out << "structure_constants = " << text::format_list(v.algebra.structure_constants) << "\n";
          out << "unit_coords = " << text::format_vector(v.algebra.unit_coords) << "\n";
        } else {
          out << "n = " << v.n << "\n";
        }
      },
      m);
}

}  // namespace

Realization parse_realization_spec(const std::string& source) {
  const KeyValues kv = text::parse_key_values(source);
  const std::string& family = require(kv, "family");

  std::set<std::string> allowed{"family"};
  auto allow = [&](const std::set<std::string>& keys) { allowed.insert(keys.begin(), keys.end()); };

  std::optional<Family> parsed;
  if (family == "matrix" || family == "algebra" || family == "halfspace") {
    allow(monoid_keys(family));
    std::visit([&](auto m) { parsed = Family(std::move(m)); }, parse_monoid(family, kv));
  } else if (family == "order") {
    parsed = OrderCategory{};
  } else if (family == "entropy") {
    allow({"n"});
    parsed = EntropyCategory{text::parse_count(require(kv, "n"))};
  } else if (family == "trivial") {
    const std::string& inner = require(kv, "monoid");
    allow({"monoid", "dim_X"});
    allow(monoid_keys(inner));
    parsed = TrivialCategory{text::parse_count(require(kv, "dim_X")), parse_monoid(inner, kv)};
  } else if (family == "action") {
    const std::string& inner = require(kv, "monoid");
    allow({"monoid", "dim_X", "action"});
    allow(monoid_keys(inner));
    parsed = ActionCategory{parse_monoid(inner, kv), parse_action(require(kv, "action")),
                            text::parse_count(require(kv, "dim_X"))};
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown family '" + family + "'");
  }

  for (const auto& [key, value] : kv)
    if (!allowed.contains(key)) throw Error(ErrorKind::InvalidSpec, "key '" + key + "' does not apply to family " + family);
  return Realization(std::move(*parsed));
}

std::string write_realization_spec(const Realization& c) {
  std::ostringstream out;
  out << "family = " << c.family_name() << "\n";
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, MatrixMonoid> || std::is_same_v<T, AlgebraMonoid> ||
                      std::is_same_v<T, HalfSpaceMonoid>) {
          write_monoid(out, Monoid(f));
        } else if constexpr (std::is_same_v<T, EntropyCategory>) {
          out << "n = " << f.n << "\n";
        } else if constexpr (std::is_same_v<T, TrivialCategory>) {
          out << "dim_X = " << f.dim_objects << "\n";
          out << "monoid = " << monoid::name(f.inner) << "\n";
          write_monoid(out, f.inner);
        } else if constexpr (std::is_same_v<T, ActionCategory>) {
          out << "dim_X = " << f.dim_objects << "\n";
          out << "action = " << to_string(f.action) << "\n";
          out << "monoid = " << monoid::name(f.monoid) << "\n";
          write_monoid(out, f.monoid);
        }
      },
      c.family());
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace liecat
