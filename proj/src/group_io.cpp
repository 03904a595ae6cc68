#include "group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "builtin.hpp"
#include "error.hpp"

namespace charposet {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> int_matrix(const json& j, const char* field) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, std::string(field) + " must be an array");
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (!row.is_array()) {
      throw Error(ErrorCode::InvalidInput,
                  std::string(field) + "[" + std::to_string(r) + "] must be an array");
    }
    std::vector<int> vals;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer()) {
        throw Error(ErrorCode::InvalidInput, std::string(field) + "[" + std::to_string(r) + "][" +
                                                 std::to_string(c) + "] must be an integer");
      }
      vals.push_back(row[c].get<int>());
    }
    out.push_back(std::move(vals));
  }
  return out;
}

}  // namespace

GroupTable group_from_json(const std::string& text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "group file must be a JSON object");
  std::string name = "G";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorCode::InvalidInput, "name must be a string");
    name = doc["name"].get<std::string>();
  }
  if (doc.contains("cayley")) {
    auto table = int_matrix(doc["cayley"], "cayley");
    if (static_cast<int>(table.size()) > limits.closure_cap) {
      throw Error(ErrorCode::OrderCapExceeded, "table order " + std::to_string(table.size()));
    }
    return GroupTable::from_cayley(table, std::move(name));
  }
  if (doc.contains("perm_gens")) {
    auto gens = int_matrix(doc["perm_gens"], "perm_gens");
    if (doc.contains("degree")) {
      if (!doc["degree"].is_number_integer()) {
        throw Error(ErrorCode::InvalidInput, "degree must be an integer");
      }
      const int degree = doc["degree"].get<int>();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<int>(gens[i].size()) != degree) {
          throw Error(ErrorCode::InvalidInput, "perm_gens[" + std::to_string(i) + "] has length " +
                                                   std::to_string(gens[i].size()) +
                                                   ", degree is " + std::to_string(degree));
        }
      }
      if (gens.empty()) gens.push_back({});
      if (gens.front().empty() && degree > 0) {
        std::vector<int> id(degree);
        for (int i = 0; i < degree; ++i) id[i] = i;
        gens.front() = id;
      }
    }
    return GroupTable::from_permutations(gens, std::move(name), limits.closure_cap);
  }
  throw Error(ErrorCode::InvalidInput, "group file needs \"cayley\" or \"perm_gens\"");
}

GroupTable group_from_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_json(buf.str(), limits);
}

GroupTable load_group(const std::string& source, const Limits& limits) {
  if (!source.empty() && source.front() == '@') return group_from_file(source.substr(1), limits);
  return builtin(source, limits);
}

}  // namespace charposet
