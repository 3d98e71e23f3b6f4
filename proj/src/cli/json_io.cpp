#include "hyperlab/cli/json_io.hpp"

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::cli {

json to_json(const BigInt& z) {
  if (z >= BigInt(INT64_MIN) && z <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(z);
  return to_string(z);
}

json to_json(const Rational& q) { return {{"num", to_json(numerator_of(q))}, {"den", to_json(denominator_of(q))}}; }

json to_json(const Hypergraph& g) {
  return {{"s", g.arity()},
          {"n", g.vertex_count()},
          {"vertices", std::vector<Vertex>(g.vertices().begin(), g.vertices().end())},
          {"edges", g.edge_list()}};
}

json to_json(const ExperimentConfig& cfg) {
  json j = {{"s", cfg.s}, {"n", cfg.n}, {"trials", cfg.trials}, {"seed", cfg.seed}};
  if (cfg.alpha) j["alpha"] = to_json(*cfg.alpha);
  if (cfg.p) j["p"] = *cfg.p;
  return j;
}

json to_json(const ProbabilityReport& r) {
  return {{"config", to_json(r.config)},
          {"p", r.p},
          {"successes", r.successes},
          {"estimates", {r.estimate}},
          {"intervals", {{r.interval.low, r.interval.high}}},
          {"seed", r.config.seed},
          {"seconds", r.seconds}};
}

json to_json(const PoissonReport& r) {
  json joint = json::array();
  for (const auto& [key, count] : r.joint) joint.push_back({{"counts", key}, {"trials", count}});
  json autos = json::array();
  for (const auto& a : r.automorphisms) autos.push_back(to_json(a));
  return {{"config", to_json(r.config)},
          {"p", r.p},
          {"automorphisms", autos},
          {"lambdas", r.lambdas},
          {"histogram", r.marginals},
          {"joint", joint},
          {"tv_distance", r.tv_distance},
          {"correlation", r.correlation},
          {"seed", r.config.seed},
          {"seconds", r.seconds}};
}

json to_json(const ext::PoissonParameter& p) {
  return {{"a", to_json(p.a)},
          {"a1", to_json(p.a1)},
          {"a2", to_json(p.a2)},
          {"scale", to_json(p.scale())},
          {"exponent", to_json(p.exponent())},
          {"lambda", p.lambda()}};
}

json to_json(const UncoveredReport& r) {
  return {{"config", to_json(r.config)},     {"p", r.p},
          {"parameter", to_json(r.parameter)}, {"lambda", r.lambda},
          {"histogram", r.histogram},          {"tv_distance", r.tv_distance},
          {"seed", r.config.seed},             {"seconds", r.seconds}};
}

json to_json(const ProbeReport& r) {
  json alphas = json::array();
  for (const auto& a : r.alphas) alphas.push_back(to_json(a));
  std::vector<bool> flagged(r.flagged.begin(), r.flagged.end());
  return {{"alphas", alphas},       {"ns", r.ns},     {"estimates", r.estimates},
          {"flagged", flagged},     {"trials", r.trials}, {"seed", r.seed},
          {"seconds", r.seconds}};
}

json to_json(const ext::CyclicPattern& p) {
  json j = {{"kind", to_string(p.kind)}, {"k", p.k},           {"l", p.l},
            {"start", p.start},         {"junctions", p.junctions}, {"reused", p.reused},
            {"added", p.added},         {"path", p.path},     {"closing", p.closing}};
  j["target"] = p.target ? json(*p.target) : json(nullptr);
  return j;
}

json to_json(const SpectrumBound& b) {
  return {{"kind", to_string(b.kind)},
          {"params", {{"s", b.s}, {"k", b.k}}},
          {"relation", b.relation},
          {"quantity", b.quantity},
          {"value_num", to_json(numerator_of(b.value))},
          {"value_den", to_json(denominator_of(b.value))},
          {"needs_large_k", b.needs_large_k}};
}

json to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"passed", c.passed ? json(*c.passed) : json(nullptr)}, {"note", c.note}});
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("expected {num, den}", 0);
  auto part = [](const json& v) {
    return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<std::int64_t>());
  };
  return make_rational(part(j["num"]), part(j["den"]));
}

}  // namespace hyperlab::cli
