#include "chaintutte/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chaintutte/error.hpp"

namespace chaintutte {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name)) parse_error(std::string("matroid JSON lacks \"") + name + "\"");
  return j[name];
}

int int_field(const nlohmann::json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_number_integer()) parse_error(std::string("\"") + name + "\" must be an integer");
  return v.get<int>();
}

Mask subset_from_json(const nlohmann::json& list, int n) {
  if (!list.is_array()) parse_error("a subset must be an array of element indices");
  Mask out = 0;
  for (const auto& e : list) {
    if (!e.is_number_integer()) parse_error("subset entries must be integers");
    const int i = e.get<int>();
    if (i < 0 || i >= n) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(i) + " out of range");
    out |= bit(i);
  }
  return out;
}

std::vector<int> index_set_from_key(const std::string& key) {
  std::vector<int> out;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument(part);
      out.push_back(v - 1);
    } catch (const std::exception&) {
      parse_error("bad intersection key \"" + key + "\"");
    }
  }
  if (out.empty()) parse_error("empty intersection key");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Matroid matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) parse_error("a matroid must be a JSON object");
  const auto& type = field(j, "type");
  if (!type.is_string()) parse_error("\"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "uniform") return make_uniform(int_field(j, "r"), int_field(j, "n"));
  if (t == "graph") {
    const int v = int_field(j, "vertices");
    const auto& edges = field(j, "edges");
    if (!edges.is_array()) parse_error("\"edges\" must be an array");
    std::vector<std::pair<int, int>> list;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        parse_error("each edge must be a pair of vertex indices");
      list.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (list.size() > static_cast<std::size_t>(kMaxGround)) parse_error("too many edges");
    return make_graphic(v, list);
  }
  if (t == "bases") {
    const int n = int_field(j, "n");
    if (n < 0 || n > kMaxGround) parse_error("bad ground set size");
    const auto& bs = field(j, "bases");
    if (!bs.is_array()) parse_error("\"bases\" must be an array");
    std::vector<Mask> list;
    for (const auto& b : bs) list.push_back(subset_from_json(b, n));
    return make_from_bases(n, list);
  }
  if (t == "rank_table") {
    const int n = int_field(j, "n");
    if (n < 0 || n > Matroid::kDenseRankLimit) parse_error("rank tables are limited to n <= 24");
    const auto& table = field(j, "table");
    if (!table.is_object()) parse_error("\"table\" must be an object keyed by decimal bitmasks");
    std::vector<int> values(std::size_t{1} << n, -1);
    for (const auto& [key, v] : table.items()) {
      unsigned long long mask = 0;
      try {
        std::size_t used = 0;
        mask = std::stoull(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        parse_error("bad rank table key \"" + key + "\"");
      }
      if (mask >= values.size()) throw Error(ErrorKind::OutOfRange, "rank table key " + key + " out of range");
      if (!v.is_number_integer()) parse_error("rank values must be integers");
      values[mask] = v.get<int>();
    }
    for (std::size_t s = 0; s < values.size(); ++s)
      if (values[s] < 0 && !table.contains(std::to_string(s)))
        parse_error("rank table is missing subset " + std::to_string(s));
    return make_from_rank_table(n, values);
  }
  if (t == "direct_sum") {
    const auto& parts = field(j, "parts");
    if (!parts.is_array()) parse_error("\"parts\" must be an array");
    Matroid out;
    for (const auto& p : parts) {
      const Matroid next = matroid_from_json(p);
      if (out.size() + next.size() > kMaxGround) parse_error("direct sum too large");
      out = direct_sum(out, next);
    }
    return out;
  }
  parse_error("unknown matroid type \"" + t + "\"");
}

nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json table = nlohmann::json::object();
  const std::vector<int> ranks = m.rank_table();
  for (std::size_t s = 0; s < ranks.size(); ++s) table[std::to_string(s)] = ranks[s];
  return {{"type", "rank_table"}, {"n", m.size()}, {"table", table}};
}

NerveInput nerve_from_json(const nlohmann::json& j) {
  if (!j.is_object()) parse_error("a nerve must be a JSON object");
  if (!j.contains("big") || !j.contains("cells")) parse_error("nerve JSON needs \"big\" and \"cells\"");
  NerveInput out{matroid_from_json(j["big"]), {}};
  if (!j["cells"].is_array()) parse_error("\"cells\" must be an array");
  for (const auto& c : j["cells"]) out.nerve.cells.push_back(matroid_from_json(c));
  if (j.contains("intersections")) {
    const auto& inter = j["intersections"];
    if (!inter.is_object()) parse_error("\"intersections\" must be an object");
    for (const auto& [key, v] : inter.items()) {
      std::vector<int> idx = index_set_from_key(key);
      if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        parse_error("repeated index in intersection key \"" + key + "\"");
      if (v.is_string()) {
        if (v.get<std::string>() != "empty") parse_error("intersection values are matroids or \"empty\"");
        out.nerve.intersections[idx] = std::nullopt;
      } else {
        out.nerve.intersections[idx] = matroid_from_json(v);
      }
    }
  }
  return out;
}

nlohmann::json load_json_source(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (source[first] == '{' || source[first] == '['))
      return nlohmann::json::parse(source);
    std::ifstream in(source);
    if (!in) parse_error("cannot read \"" + source + "\"");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace chaintutte
