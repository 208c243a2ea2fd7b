#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nodalk/curve.hpp"
#include "nodalk/errors.hpp"
#include "nodalk/facts.hpp"
#include "nodalk/pair.hpp"

namespace nodalk {

/// Scenario file could not be read.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scenario document is malformed (missing keys, wrong types, unknown facts).
class SchemaError : public InvariantError {
public:
  using InvariantError::InvariantError;
};

enum class OutputFormat { Text, Json };

OutputFormat output_format_from_string(const std::string& text);

struct ScenarioOptions {
  std::int64_t grid = 1000;
  OutputFormat format = OutputFormat::Text;
};

/*
 * A classification input.  On disk it is a YAML document:
 *
 *   curve:      {g1: 2, g2: 2}
 *   pair:       {r: 1, d1: 4, d2: 4, k: 5}      # s1, s2 optional
 *   hypotheses: [pair_is_complete, E1_semistable, ...]
 *   options:    {grid: 1000, format: text}      # optional
 */
struct Scenario {
  CurveData curve{2, 2};
  PairNumerics pair;
  HypothesisSet hypotheses;
  ScenarioOptions options;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

} // namespace nodalk
