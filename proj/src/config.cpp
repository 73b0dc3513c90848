#include "config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gtpa {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    fail(errc::parse, "config: missing field " + path + "." + key);
  return j.at(key);
}

std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(errc::parse, "config: " + path + " must be a string");
  return j.get<std::string>();
}

std::vector<int> parse_perm(const json& j, const std::string& path) {
  if (!j.is_array()) fail(errc::parse, "config: " + path + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(errc::parse, "config: " + path + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<int>>> parse_perm_list(const json& arr,
                                                                      const std::string& path) {
  if (!arr.is_array()) fail(errc::parse, "config: " + path + " must be an array");
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    const json& item = arr.at(i);
    out.emplace_back(need_string(need(item, "name", p), p + ".name"),
                     parse_perm(need(item, "perm", p), p + ".perm"));
  }
  return out;
}

int points_of(const json& j, const std::string& path,
              const std::vector<std::pair<std::string, std::vector<int>>>& perms) {
  if (j.contains("points")) {
    const json& p = j.at("points");
    if (!p.is_number_integer() || p.get<int>() <= 0)
      fail(errc::parse, "config: " + path + ".points must be a positive integer");
    return p.get<int>();
  }
  if (perms.empty()) fail(errc::parse, "config: " + path + " needs points or a permutation");
  return static_cast<int>(perms.front().second.size());
}

FiniteGroup parse_group(const json& j, const std::string& path) {
  if (!j.is_object()) fail(errc::parse, "config: " + path + " must be an object");
  try {
    if (j.contains("table")) {
      const json& els = need(j, "elements", path);
      if (!els.is_array()) fail(errc::parse, "config: " + path + ".elements must be an array");
      std::vector<std::string> names;
      for (size_t i = 0; i < els.size(); ++i)
        names.push_back(need_string(els.at(i), path + ".elements[" + std::to_string(i) + "]"));
      const json& tab = need(j, "table", path);
      if (!tab.is_array()) fail(errc::parse, "config: " + path + ".table must be an array");
      std::vector<std::vector<int>> table;
      for (size_t i = 0; i < tab.size(); ++i)
        table.push_back(parse_perm(tab.at(i), path + ".table[" + std::to_string(i) + "]"));
      return FiniteGroup::from_table(std::move(names), std::move(table));
    }
    if (j.contains("generators")) {
      auto gens = parse_perm_list(j.at("generators"), path + ".generators");
      return FiniteGroup::from_permutations(points_of(j, path, gens), gens);
    }
    if (j.contains("elements")) {
      auto els = parse_perm_list(j.at("elements"), path + ".elements");
      return FiniteGroup::from_named_permutations(points_of(j, path, els), els);
    }
  } catch (const error& e) {
    if (e.kind == errc::parse && std::string(e.what()).rfind("config:", 0) == 0) throw;
    fail(errc::parse, "config: " + path + ": " + e.what());
  }
  fail(errc::parse, "config: " + path + " needs a table, named permutations, or generators");
}

std::vector<int> parse_embedding(const json& arr, const std::string& path,
                                 const FiniteGroup& sub, const FiniteGroup& big) {
  if (!arr.is_array() || arr.size() != static_cast<size_t>(sub.order))
    fail(errc::parse, "config: " + path + " must list one ambient element per subgroup element");
  std::vector<int> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string name = need_string(arr.at(i), path + "[" + std::to_string(i) + "]");
    auto it = big.index.find(name);
    if (it == big.index.end())
      fail(errc::parse, "config: " + path + ": '" + name + "' is not an ambient element");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

GroupContext load_context_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(errc::parse, std::string("config: invalid JSON: ") + e.what());
  }
  FiniteGroup H = parse_group(need(j, "H", "$"), "H");
  FiniteGroup K = parse_group(need(j, "K", "$"), "K");
  const json& amb = need(j, "ambient", "$");
  std::string mode = need_string(need(amb, "mode", "ambient"), "ambient.mode");
  try {
    if (mode == "concrete") {
      FiniteGroup G = parse_group(need(amb, "G", "ambient"), "ambient.G");
      auto ek = parse_embedding(need(amb, "embedK", "ambient"), "ambient.embedK", K, G);
      auto eh = parse_embedding(need(amb, "embedH", "ambient"), "ambient.embedH", H, G);
      return GroupContext::make(H, K, AmbientGroup::make_concrete(std::move(G), K, H, ek, eh));
    }
    if (mode == "free_product") {
      size_t maxlen = 64;
      if (amb.contains("max_word_length")) {
        const json& m = amb.at("max_word_length");
        if (!m.is_number_integer() || m.get<int>() <= 0)
          fail(errc::parse, "config: ambient.max_word_length must be a positive integer");
        maxlen = static_cast<size_t>(m.get<int>());
      }
      return GroupContext::make(H, K, AmbientGroup::make_free(K, H, maxlen));
    }
  } catch (const error& e) {
    if (e.kind == errc::parse && std::string(e.what()).rfind("config:", 0) == 0) throw;
    fail(errc::parse, std::string("config: ambient: ") + e.what());
  }
  fail(errc::parse, "config: ambient.mode must be \"concrete\" or \"free_product\"");
}

GroupContext load_context_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::argument, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_context_json(buf.str());
}

}  // namespace gtpa
