#include "nodalk/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace nodalk {

OutputFormat output_format_from_string(const std::string& text) {
  if (text == "text")
    return OutputFormat::Text;
  if (text == "json")
    return OutputFormat::Json;
  throw SchemaError("unknown output format '" + text + "' (expected text or json)");
}

namespace {

void reject_unknown_keys(const YAML::Node& node, const std::string& section, const std::set<std::string>& allowed) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key))
      throw SchemaError("unknown key '" + key + "' in section '" + section + "'");
  }
}

YAML::Node section(const YAML::Node& root, const std::string& name, bool required) {
  const YAML::Node node = root[name];
  if (!node) {
    if (required)
      throw SchemaError("missing section '" + name + "'");
    return node;
  }
  if (!node.IsMap())
    throw SchemaError("section '" + name + "' must be a mapping");
  return node;
}

std::int64_t integer(const YAML::Node& parent, const std::string& sec, const std::string& key) {
  const YAML::Node node = parent[key];
  if (!node)
    throw SchemaError("missing key '" + sec + "." + key + "'");
  try {
    return node.as<std::int64_t>();
  } catch (const YAML::BadConversion&) {
    throw SchemaError("key '" + sec + "." + key + "' must be an integer");
  }
}

std::optional<std::int64_t> optional_integer(const YAML::Node& parent, const std::string& sec,
                                             const std::string& key) {
  if (!parent[key])
    return std::nullopt;
  return integer(parent, sec, key);
}

int small_int(std::int64_t v, const std::string& what) {
  if (v < INT32_MIN || v > INT32_MAX)
    throw SchemaError(what + " out of range");
  return static_cast<int>(v);
}

} // namespace

Scenario parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw SchemaError(std::string("scenario is not valid YAML: ") + e.what());
  }
  if (!root.IsMap())
    throw SchemaError("scenario must be a mapping with sections curve, pair, hypotheses");
  reject_unknown_keys(root, "<top>", {"curve", "pair", "hypotheses", "options"});

  const YAML::Node curve = section(root, "curve", true);
  reject_unknown_keys(curve, "curve", {"g1", "g2"});
  const YAML::Node pair = section(root, "pair", true);
  reject_unknown_keys(pair, "pair", {"r", "d1", "d2", "k", "s1", "s2"});

  Scenario s;
  s.curve = CurveData(small_int(integer(curve, "curve", "g1"), "g1"), small_int(integer(curve, "curve", "g2"), "g2"));
  s.pair.r = small_int(integer(pair, "pair", "r"), "r");
  s.pair.d1 = integer(pair, "pair", "d1");
  s.pair.d2 = integer(pair, "pair", "d2");
  s.pair.k = integer(pair, "pair", "k");
  s.pair.s1 = optional_integer(pair, "pair", "s1");
  s.pair.s2 = optional_integer(pair, "pair", "s2");
  s.pair.validate();

  const YAML::Node hyps = root["hypotheses"];
  if (!hyps)
    throw SchemaError("missing section 'hypotheses' (use [] for none)");
  if (!hyps.IsSequence())
    throw SchemaError("section 'hypotheses' must be a list of fact names");
  for (const auto& item : hyps) {
    const auto name = item.as<std::string>();
    auto fact = fact_from_name(name);
    if (!fact) {
      std::string valid;
      for (Fact f : all_facts())
        valid += (valid.empty() ? "" : ", ") + std::string(fact_name(f));
      throw SchemaError("unknown fact '" + name + "'; did you mean '" + std::string(nearest_fact_name(name)) +
                        "'? valid facts: " + valid);
    }
    s.hypotheses.assert_fact(*fact);
  }

  if (const YAML::Node opts = section(root, "options", false)) {
    reject_unknown_keys(opts, "options", {"grid", "format"});
    if (opts["grid"])
      s.options.grid = integer(opts, "options", "grid");
    if (opts["format"])
      s.options.format = output_format_from_string(opts["format"].as<std::string>());
    if (s.options.grid < 2)
      throw SchemaError("options.grid must be at least 2");
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw IoError("error while reading '" + path + "'");
  return parse_scenario(buf.str());
}

} // namespace nodalk
