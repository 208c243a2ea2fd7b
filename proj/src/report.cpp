#include "nodalk/report.hpp"

#include <ostream>

namespace nodalk {

using nlohmann::json;

json interval_to_json(const RatInterval& w) {
  if (w.empty())
    return json{{"empty", true}};
  return json{{"empty", false},
              {"lo", w.lo().str()},
              {"hi", w.hi().str()},
              {"lo_closed", w.lo_closed()},
              {"hi_closed", w.hi_closed()}};
}

RatInterval interval_from_json(const json& j) {
  if (j.at("empty").get<bool>())
    return {};
  return RatInterval::make(Rat::parse(j.at("lo").get<std::string>()), j.at("lo_closed").get<bool>(),
                           Rat::parse(j.at("hi").get<std::string>()), j.at("hi_closed").get<bool>());
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["verdict"] = to_string(v.kind);
  out["rule_id"] = v.rule_id;
  out["window"] = v.window ? interval_to_json(*v.window) : json(nullptr);
  if (v.instability_bounds)
    out["instability_bounds"] = json::array({(*v.instability_bounds)[0].str(), (*v.instability_bounds)[1].str()});
  else
    out["instability_bounds"] = nullptr;
  out["restriction_unstable"] = json::array({v.restriction_unstable[0], v.restriction_unstable[1]});
  json cert = json::array();
  for (const auto& e : v.certificate) {
    cert.push_back({{"rule_id", e.rule_id},
                    {"citation", e.citation},
                    {"statement", e.statement},
                    {"inequality", e.inequality ? json(e.inequality->str()) : json(nullptr)}});
  }
  out["certificate"] = std::move(cert);
  out["inferred_facts"] = v.inferred_facts;
  out["missing"] = v.missing;
  return out;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.kind = verdict_kind_from_string(j.at("verdict").get<std::string>());
  v.rule_id = j.at("rule_id").get<std::string>();
  if (!j.at("window").is_null())
    v.window = interval_from_json(j.at("window"));
  if (const auto& b = j.at("instability_bounds"); !b.is_null())
    v.instability_bounds = std::array<Rat, 2>{Rat::parse(b.at(0).get<std::string>()),
                                              Rat::parse(b.at(1).get<std::string>())};
  v.restriction_unstable = {j.at("restriction_unstable").at(0).get<bool>(),
                            j.at("restriction_unstable").at(1).get<bool>()};
  for (const auto& e : j.at("certificate")) {
    CertificateEntry entry{e.at("rule_id").get<std::string>(), e.at("citation").get<std::string>(),
                           e.at("statement").get<std::string>(), std::nullopt};
    if (!e.at("inequality").is_null())
      entry.inequality = Inequality::parse(e.at("inequality").get<std::string>());
    v.certificate.push_back(std::move(entry));
  }
  v.inferred_facts = j.at("inferred_facts").get<std::vector<std::string>>();
  v.missing = j.at("missing").get<std::vector<std::string>>();
  return v;
}

json scenario_to_json(const Scenario& s) {
  json pair{{"r", s.pair.r}, {"d1", s.pair.d1}, {"d2", s.pair.d2}, {"k", s.pair.k}};
  pair["s1"] = s.pair.s1 ? json(*s.pair.s1) : json(nullptr);
  pair["s2"] = s.pair.s2 ? json(*s.pair.s2) : json(nullptr);
  json hyps = json::array();
  for (Fact f : all_facts())
    if (s.hypotheses.asserted(f))
      hyps.push_back(std::string(fact_name(f)));
  return json{{"curve", {{"g1", s.curve.g1()}, {"g2", s.curve.g2()}}}, {"pair", pair}, {"hypotheses", hyps}};
}

void write_verdict_json(std::ostream& os, const Scenario& s, const Verdict& v) {
  json out = verdict_to_json(v);
  out["scenario"] = scenario_to_json(s);
  os << out.dump(2) << '\n';
}

namespace {

template <typename List>
void write_list(std::ostream& os, const char* title, const List& items) {
  os << title << ':';
  if (items.empty()) {
    os << " none\n";
    return;
  }
  os << '\n';
  for (const auto& item : items)
    os << "  - " << item << '\n';
}

} // namespace

void write_verdict_text(std::ostream& os, const Scenario& s, const Verdict& v) {
  os << "scenario: g=(" << s.curve.g1() << "," << s.curve.g2() << ") p_a=" << s.curve.arithmetic_genus()
     << " r=" << s.pair.r << " d=(" << s.pair.d1 << "," << s.pair.d2 << ") k=" << s.pair.k << '\n';
  os << "verdict: " << to_string(v.kind) << '\n';
  os << "rule: " << v.rule_id << '\n';
  if (v.instability_bounds) {
    const auto& b = *v.instability_bounds;
    os << "instability bounds: w_1 <= " << b[0] << ", w_2 <= " << b[1] << " (sum " << (b[0] + b[1]) << " < 1)\n";
  }
  if (v.window) {
    os << "window: w_1 in " << *v.window << '\n';
    os << "safe choice: any w_1 in " << v.window->interior() << '\n';
  }
  for (Side i : {Side::One, Side::Two})
    if (v.restriction_unstable[index(i)])
      os << "restriction to C_" << index(i) + 1 << ": unstable\n";

  os << "certificate:";
  if (v.certificate.empty())
    os << " none\n";
  else
    os << '\n';
  int n = 0;
  for (const auto& e : v.certificate) {
    os << "  " << ++n << ". [" << e.rule_id << "] " << e.statement;
    if (e.inequality)
      os << "  :: " << e.inequality->str() << (e.inequality->holds() ? "" : "  (FAILS)");
    os << "\n     by: " << e.citation << '\n';
  }
  write_list(os, "inferred facts", v.inferred_facts);
  write_list(os, "missing", v.missing);
}

} // namespace nodalk
