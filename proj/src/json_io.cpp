#include "contralg/json_io.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

namespace contralg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::IoError, "malformed JSON: " + what);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

nlohmann::ordered_json lattice_to_json(const FiniteLattice& L, std::optional<int> e) {
  nlohmann::ordered_json j;
  j["name"] = L.name();
  j["elements"] = L.element_names();
  auto pairs = nlohmann::ordered_json::array();
  for (auto [x, y] : L.order_pairs()) pairs.push_back({x, y});
  j["leq"] = std::move(pairs);
  if (e) j["e"] = *e;
  return j;
}

LatticePtr lattice_from_json(const nlohmann::json& j) {
  require(j.is_object(), "expected an object");
  require(j.contains("elements") && j["elements"].is_array(), "missing \"elements\" array");
  std::vector<std::string> names;
  for (const auto& n : j["elements"]) {
    require(n.is_string(), "\"elements\" entries must be strings");
    names.push_back(n.get<std::string>());
  }
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("leq")) {
    require(j["leq"].is_array(), "\"leq\" must be an array of pairs");
    for (const auto& p : j["leq"]) {
      require(p.is_array() && p.size() == 2 && p[0].is_number_integer() && p[1].is_number_integer(),
              "\"leq\" entries must be [i, j] index pairs");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  std::string name = j.value("name", std::string{});
  const int n = static_cast<int>(names.size());
  return build_lattice(n, pairs, std::move(names), std::move(name));
}

std::optional<int> json_declared_e(const nlohmann::json& j) {
  if (j.is_object() && j.contains("e")) {
    require(j["e"].is_number_integer(), "\"e\" must be an element index");
    return j["e"].get<int>();
  }
  return std::nullopt;
}

nlohmann::ordered_json boolalg_to_json(const BoolAlg& B) {
  nlohmann::ordered_json j;
  j["atoms"] = B.atom_names();
  return j;
}

BoolAlgPtr boolalg_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("atoms") && j["atoms"].is_array(),
          "expected {\"atoms\": [...]}");
  std::vector<std::string> atoms;
  for (const auto& a : j["atoms"]) {
    require(a.is_string(), "\"atoms\" entries must be strings");
    atoms.push_back(a.get<std::string>());
  }
  const int k = static_cast<int>(atoms.size());
  return powerset_algebra(k, std::move(atoms), j.value("name", std::string{}));
}

nlohmann::ordered_json hom_to_json(const BoolHom& h) {
  nlohmann::ordered_json j;
  j["source"] = h.src->name();
  j["target"] = h.dst->name();
  j["map"] = h.map;
  return j;
}

nlohmann::ordered_json hom_to_json(const StoneHom& h) {
  nlohmann::ordered_json j;
  j["source"] = h.src->name();
  j["target"] = h.dst->name();
  j["map"] = h.map;
  return j;
}

std::string to_dot(const FiniteLattice& L) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(L.name()) << "\" {\n  rankdir=BT;\n";
  for (int x = 0; x < L.size(); ++x)
    os << "  n" << x << " [label=\"" << dot_escape(L.element_name(x)) << "\"];\n";
  for (auto [x, y] : L.cover_pairs()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

void print_table(std::ostringstream& os, const FiniteLattice& L, const std::string& title,
                 const std::function<int(int, int)>& op) {
  const int n = L.size();
  int width = 1;
  for (int v = n - 1; v >= 10; v /= 10) ++width;
  os << title << ":\n";
  os << std::setw(width + 2) << " " << "|";
  for (int y = 0; y < n; ++y) os << " " << std::setw(width) << y;
  os << "\n" << std::string(width + 2, '-') << "+" << std::string((width + 1) * n, '-') << "\n";
  for (int x = 0; x < n; ++x) {
    os << " " << std::setw(width) << x << " |";
    for (int y = 0; y < n; ++y) os << " " << std::setw(width) << op(x, y);
    os << "\n";
  }
}

}  // namespace

std::string to_table(const FiniteLattice& L) {
  std::ostringstream os;
  os << "# " << L.name() << ": " << L.size() << " elements\n";
  for (int x = 0; x < L.size(); ++x) os << "  " << x << ": " << L.element_name(x) << "\n";
  os << "\n";
  print_table(os, L, "meet", [&](int x, int y) { return L.meet(x, y); });
  os << "\n";
  print_table(os, L, "join", [&](int x, int y) { return L.join(x, y); });
  if (L.heyting()) {
    os << "\n";
    print_table(os, L, "impl", [&](int x, int y) { return L.implies(x, y); });
  } else {
    os << "\nimpl: not a Heyting algebra\n";
  }
  return os.str();
}

}  // namespace contralg
