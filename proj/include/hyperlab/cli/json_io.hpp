#pragma once

#include <json.hpp>

#include "hyperlab/bounds/bounds.hpp"
#include "hyperlab/constructions/constructions.hpp"
#include "hyperlab/extlab/counters.hpp"
#include "hyperlab/extlab/cyclic.hpp"
#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/randmodel/experiments.hpp"

namespace hyperlab::cli {

using nlohmann::json;

/// A number when it fits in 64 bits, a decimal string otherwise.
json to_json(const BigInt& z);
/// {"num": ..., "den": ...}.
json to_json(const Rational& q);
json to_json(const Hypergraph& g);
json to_json(const ExperimentConfig& cfg);
json to_json(const ProbabilityReport& r);
json to_json(const PoissonReport& r);
json to_json(const UncoveredReport& r);
json to_json(const ProbeReport& r);
json to_json(const ext::PoissonParameter& p);
json to_json(const ext::CyclicPattern& p);
json to_json(const SpectrumBound& b);
json to_json(const std::vector<Check>& checks);

/// Inverse of to_json(Rational); also accepts "p/q" strings.
Rational rational_from_json(const json& j);

}  // namespace hyperlab::cli
