#include "octo/json_io.hpp"

#include <string>

#include "octo/errors.hpp"

namespace octo {

Json to_json(const CDNumber<Rational>& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(c.get_str());
  return {{"level", x.level()}, {"coords", std::move(coords)}};
}

Json to_json(const MultiplicationTable& t) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) basis.push_back("e" + std::to_string(i));
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto& e = t.at(i, j);
      row.push_back({{"sign", e.sign}, {"index", e.index}});
    }
    rows.push_back(std::move(row));
  }
  return {{"level", t.level()}, {"basis", std::move(basis)}, {"table", std::move(rows)}};
}

MultiplicationTable table_from_json(const Json& j) {
  try {
    const int level = j.at("level").get<int>();
    if (level < 0 || level > kMaxTableLevel) throw ContractViolation("table_from_json: level out of range");
    const std::size_t n = std::size_t{1} << level;
    const auto& rows = j.at("table");
    if (rows.size() != n) throw ContractViolation("table_from_json: wrong row count");
    std::vector<TableEntry> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw ContractViolation("table_from_json: wrong column count");
      for (const auto& e : row) entries.push_back({e.at("sign").get<int>(), e.at("index").get<std::size_t>()});
    }
    return MultiplicationTable(level, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("table_from_json: ") + e.what());
  }
}

Json to_json(const PropertyReport& r) {
  Json j = {{"property", property_name(r.property)},
            {"level", r.level},
            {"verdict", verdict_name(r.verdict)},
            {"expected", verdict_name(expected_verdict(r.property, r.level))},
            {"samples_tested", r.samples_tested},
            {"basis_cases", r.basis_cases}};
  if (r.counterexample.empty()) {
    j["counterexample"] = nullptr;
  } else {
    Json ce = Json::array();
    for (const auto& x : r.counterexample) ce.push_back(to_json(x));
    j["counterexample"] = std::move(ce);
  }
  return j;
}

Json to_json(const ZeroDivisorPair& p) { return {{"left", to_json(p.left)}, {"right", to_json(p.right)}}; }

Json to_json(const AbelianGroup& g) { return {{"rank", g.rank}, {"torsion", g.torsion}}; }

Json to_json(const ChartRoundtripReport& r) {
  return {{"level", r.level},
          {"samples", r.samples},
          {"seed", r.seed},
          {"max_error", r.max_error()},
          {"forward_error", r.forward_error},
          {"backward_error", r.backward_error},
          {"well_defined_error", r.well_defined_error},
          {"tolerance", r.tolerance},
          {"verdict", r.passed() ? "pass" : "fail"}};
}

Json to_json(const EquivalenceReport& r) {
  return {{"level", r.level},
          {"samples", r.samples},
          {"seed", r.seed},
          {"max_error", r.max_error},
          {"false_positives", r.false_positives},
          {"relation_failures", r.relation_failures},
          {"tolerance", r.tolerance},
          {"verdict", r.passed() ? "pass" : "fail"}};
}

Json to_json(const Bidegree& b) {
  return {{"hopf_invariant", b.left * b.right},
          {"method", "bidegree"},
          {"proxy", true},
          {"bidegree", {b.left, b.right}},
          {"samples", b.samples},
          {"max_det_deviation", b.max_det_deviation}};
}

Json to_json(const LinkingReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"first", p.first}, {"second", p.second}, {"raw", p.raw}, {"linking", p.linking}});
  }
  return {{"hopf_invariant", r.hopf_invariant},
          {"method", "linking"},
          {"proxy", true},
          {"segments", r.segments},
          {"pairs", std::move(pairs)}};
}

}  // namespace octo
