#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pg/error.hpp"
#include "pg/group.hpp"

namespace pg {

using nlohmann::json;

std::string group_to_json(const Group& g) {
  const std::size_t n = g.order();
  json table = json::array();
  for (Elem a = 0; a < n; ++a) {
    const auto r = g.row(a);
    table.push_back(std::vector<Elem>(r.begin(), r.end()));
  }
  json j;
  j["name"] = g.name();
  j["order"] = n;
  j["labels"] = std::vector<std::string>(g.labels().begin(), g.labels().end());
  j["table"] = std::move(table);
  return j.dump();
}

Group group_from_json(const std::string& text, const Limits& limits) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Validation, std::string("malformed JSON: ") + e.what());
  }
  auto bad = [](const std::string& what) { fail(ErrorKind::Validation, "Cayley-table JSON: " + what); };
  if (!j.is_object()) bad("top level must be an object");
  for (const char* key : {"name", "order", "table"})
    if (!j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  if (!j["name"].is_string()) bad("\"name\" must be a string");
  if (!j["order"].is_number_unsigned() || j["order"].get<std::uint64_t>() == 0)
    bad("\"order\" must be a positive integer");
  const auto n = j["order"].get<std::uint64_t>();
  if (n > limits.max_order)
    fail(ErrorKind::Resource, "group order " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(limits.max_order));

  const auto& rows = j["table"];
  if (!rows.is_array() || rows.size() != n) bad("\"table\" must hold " + std::to_string(n) + " rows");
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      bad("row " + std::to_string(i) + " must hold " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& v = rows[i][k];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
        bad("entry (" + std::to_string(i) + "," + std::to_string(k) + ") must be an integer in [0, " +
            std::to_string(n) + ")");
      table.push_back(v.get<Elem>());
    }
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (!l.is_array() || l.size() != n) bad("\"labels\" must hold " + std::to_string(n) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) bad("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return Group::from_table(j["name"].get<std::string>(), n, std::move(table), std::move(labels), {},
                           limits);
}

void save_group(const Group& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Usage, "cannot open " + path + " for writing");
  out << group_to_json(g) << '\n';
}

Group load_group(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Usage, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return group_from_json(ss.str(), limits);
}

}  // namespace pg
