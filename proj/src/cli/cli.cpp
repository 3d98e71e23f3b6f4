#include "hyperlab/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "hyperlab/bounds/bounds.hpp"
#include "hyperlab/cli/json_io.hpp"
#include "hyperlab/constructions/constructions.hpp"
#include "hyperlab/efgame/game.hpp"
#include "hyperlab/extlab/counters.hpp"
#include "hyperlab/extlab/cyclic.hpp"
#include "hyperlab/extlab/maximality.hpp"
#include "hyperlab/extlab/pairs.hpp"
#include "hyperlab/folang/evaluator.hpp"
#include "hyperlab/folang/formula.hpp"
#include "hyperlab/hypercore/density.hpp"
#include "hyperlab/hypercore/distance.hpp"
#include "hyperlab/hypercore/errors.hpp"
#include "hyperlab/hypercore/isomorphism.hpp"
#include "hyperlab/hypercore/shg.hpp"
#include "hyperlab/randmodel/experiments.hpp"

namespace hyperlab::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::uint64_t default_seed() {
  const char* text = std::getenv(kSeedVariable);
  if (!text || !*text) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != std::string(text).size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kSeedVariable) + " is not an unsigned integer");
  }
}

std::map<std::string, std::string> split_pairs(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == part.size())
        throw UsageError("expected key=value, got '" + part + "'");
      out[part.substr(0, eq)] = part.substr(eq + 1);
    }
  }
  return out;
}

Vertex parse_vertex(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("'" + text + "' is not a vertex label");
  }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) out.push_back(parse_rational(item));
  return out;
}

// Shared random-model options.
struct ModelOptions {
  int s = 3;
  std::int64_t n = 0;
  std::string alpha;
  double p = -1.0;
  std::int64_t trials = 100;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;

  void attach(CLI::App* sub, bool with_trials = true) {
    sub->add_option("--s", s, "Edge size")->capture_default_str();
    sub->add_option("--n", n, "Vertex count")->required();
    auto* a = sub->add_option("--alpha", alpha, "p = n^-alpha, as p/q");
    auto* q = sub->add_option("--p", p, "Explicit edge probability");
    a->excludes(q);
    if (with_trials) sub->add_option("--trials", trials, "Number of trials")->capture_default_str();
    sub->add_option("--seed", seed, "Master seed (default from " + std::string(kSeedVariable) + ")");
    sub->add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();
  }

  ExperimentConfig config(bool need_probability = true) const {
    ExperimentConfig cfg;
    cfg.s = s;
    cfg.n = n;
    cfg.trials = trials;
    cfg.seed = seed ? *seed : default_seed();
    cfg.threads = threads;
    if (!alpha.empty()) cfg.alpha = parse_rational(alpha);
    if (p >= 0.0) cfg.p = p;
    if (need_probability && !cfg.alpha && !cfg.p) throw UsageError("one of --alpha and --p is required");
    return cfg;
  }
};

json with_header(const std::string& command, json body) {
  json out = {{"schema", 1}, {"command", command}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random hypergraph and first-order logic toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Limits limits;
  ef::GameLimits game_limits;
  app.add_option("--enumeration-cap", limits.enumeration_vertices, "Largest vertex set for subset enumeration")
      ->capture_default_str();
  app.add_option("--search-cap", limits.search_vertices, "Largest hypergraph for automorphism search")
      ->capture_default_str();
  app.add_option("--game-vertex-cap", game_limits.max_vertices, "Largest structure in the Ehrenfeucht game")
      ->capture_default_str();
  app.add_option("--game-round-cap", game_limits.max_rounds, "Most rounds in the Ehrenfeucht game")
      ->capture_default_str();

  // Each subcommand fills `report` (JSON) or `text` (CSV).
  std::map<CLI::App*, std::function<json()>> actions;
  std::string text;
  bool raw_text = false;

  {
    auto* sub = app.add_subcommand("density", "Density and maximum density of a hypergraph");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, ".shg file")->required();
    actions[sub] = [=, &limits] {
      const Hypergraph g = read_shg(*file);
      const Rational d = density(g);
      const auto best = max_density(g, limits);
      return with_header("density", {{"num", to_json(numerator_of(d))},
                                     {"den", to_json(denominator_of(d))},
                                     {"vertices", g.vertex_count()},
                                     {"edges", g.edge_count()},
                                     {"max_density", to_json(best.value)},
                                     {"witness", to_json(best.witness)}});
    };
  }
  {
    auto* sub = app.add_subcommand("balance", "Strict balance of a hypergraph or a pair");
    auto file = std::make_shared<std::string>();
    auto inner = std::make_shared<std::string>();
    sub->add_option("file", *file, ".shg file (the outer hypergraph for a pair)")->required();
    sub->add_option("--inner", *inner, "Inner hypergraph, making a pair");
    actions[sub] = [=, &limits] {
      const Hypergraph g = read_shg(*file);
      if (inner->empty())
        return with_header("balance", {{"strictly_balanced", is_strictly_balanced(g, limits)},
                                       {"density", to_json(density(g))}});
      const RootedPair pair(g, read_shg(*inner));
      return with_header("balance", {{"strictly_balanced", is_strictly_balanced(pair, limits)},
                                     {"density", to_json(pair.density())}});
    };
  }
  {
    auto* sub = app.add_subcommand("classify-pair", "Safe, rigid or neutral classification of a pair");
    auto outer = std::make_shared<std::string>();
    auto inner = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    sub->add_option("--outer", *outer, "G")->required();
    sub->add_option("--inner", *inner, "H")->required();
    sub->add_option("--alpha", *alpha, "alpha as p/q")->required();
    actions[sub] = [=, &limits] {
      const RootedPair pair(read_shg(*outer), read_shg(*inner));
      const Rational a = parse_rational(*alpha);
      return with_header("classify-pair", {{"alpha", to_json(a)},
                                           {"class", ext::to_string(ext::classify_pair(pair, a, limits))},
                                           {"f_alpha", to_json(ext::f_alpha(pair, a))}});
    };
  }
  {
    auto* sub = app.add_subcommand("copies", "Copies of a motif in a host");
    auto motif = std::make_shared<std::string>();
    auto host = std::make_shared<std::string>();
    auto cover = std::make_shared<std::string>();
    sub->add_option("--motif", *motif, "Motif H")->required();
    sub->add_option("--host", *host, "Host hypergraph")->required();
    sub->add_option("--cover", *cover, "Also count copies of H not inside a copy of this G");
    actions[sub] = [=, &limits] {
      const Hypergraph m = read_shg(*motif);
      const Hypergraph h = read_shg(*host);
      json body = {{"copies", to_json(count_copies(m, h, limits))}};
      if (!cover->empty()) body["uncovered"] = to_json(ext::count_uncovered_copies(m, read_shg(*cover), h, limits));
      return with_header("copies", body);
    };
  }
  {
    auto* sub = app.add_subcommand("distance", "Distance between two vertices");
    auto file = std::make_shared<std::string>();
    auto x = std::make_shared<Vertex>(0);
    auto y = std::make_shared<Vertex>(0);
    sub->add_option("file", *file, ".shg file")->required();
    sub->add_option("--x", *x, "First vertex")->required();
    sub->add_option("--y", *y, "Second vertex")->required();
    actions[sub] = [=] {
      const auto d = distance(read_shg(*file), *x, *y);
      return with_header("distance", {{"distance", d ? json(*d) : json(nullptr)}});
    };
  }
  {
    auto* sub = app.add_subcommand("parse", "Parse and pretty-print a formula");
    auto formula = std::make_shared<std::string>();
    auto arity = std::make_shared<int>(0);
    sub->add_option("formula", *formula, "Formula text")->required();
    sub->add_option("--arity", *arity, "Required arity of N atoms, 0 for any");
    actions[sub] = [=] {
      const auto f = fo::parse(*formula, *arity);
      const auto free = fo::free_variables(f);
      return with_header("parse", {{"formula", fo::print(f)},
                                   {"depth", fo::quantifier_depth(f)},
                                   {"free", std::vector<std::string>(free.begin(), free.end())},
                                   {"size", fo::size(f)}});
    };
  }
  {
    auto* sub = app.add_subcommand("depth", "Quantifier depth of a formula");
    auto formula = std::make_shared<std::string>();
    sub->add_option("formula", *formula, "Formula text")->required();
    actions[sub] = [=] { return with_header("depth", {{"depth", fo::quantifier_depth(fo::parse(*formula))}}); };
  }
  {
    auto* sub = app.add_subcommand("eval", "Evaluate a formula on a hypergraph");
    auto formula = std::make_shared<std::string>();
    auto graph = std::make_shared<std::string>();
    auto assign = std::make_shared<std::vector<std::string>>();
    sub->add_option("--formula", *formula, "Formula text")->required();
    sub->add_option("--graph", *graph, ".shg file")->required();
    sub->add_option("--assign", *assign, "Free variable values, var=vertex");
    actions[sub] = [=] {
      const Hypergraph g = read_shg(*graph);
      fo::Assignment a;
      for (const auto& [var, value] : split_pairs(*assign)) a[var] = parse_vertex(value);
      return with_header("eval", {{"value", fo::evaluate(fo::parse(*formula, g.arity()), g, a)}});
    };
  }
  {
    auto* sub = app.add_subcommand("game", "Solve the k-round Ehrenfeucht game");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto rounds = std::make_shared<int>(1);
    sub->add_option("--left", *left, "Left .shg file")->required();
    sub->add_option("--right", *right, "Right .shg file")->required();
    sub->add_option("--rounds", *rounds, "Number of rounds")->required();
    actions[sub] = [=, &game_limits] {
      const Hypergraph l = read_shg(*left);
      const Hypergraph r = read_shg(*right);
      ef::Game game(l, r, *rounds, game_limits);
      json body = {{"rules", ef::kRules}, {"rounds", *rounds}};
      const bool dup = game.duplicator_wins();
      body["winner"] = dup ? "duplicator" : "spoiler";
      if (dup) {
        body["formula"] = nullptr;
      } else {
        const auto f = game.distinguishing_formula();
        if (!f) throw VerificationError("Spoiler wins but no formula was extracted");
        const bool verified = fo::quantifier_depth(*f) <= *rounds && fo::evaluate(*f, l) && !fo::evaluate(*f, r);
        if (!verified) throw VerificationError("extracted formula does not separate the structures");
        body["formula"] = fo::print(*f);
        body["formula_depth"] = fo::quantifier_depth(*f);
        body["verified"] = verified;
      }
      body["states_explored"] = game.states_explored();
      return with_header("game", body);
    };
  }
  {
    auto* sub = app.add_subcommand("extension", "Strict extension and (K, T)-maximality checks");
    auto cand = std::make_shared<std::string>();
    auto cand_inner = std::make_shared<std::string>();
    auto templ = std::make_shared<std::string>();
    auto templ_inner = std::make_shared<std::string>();
    auto map = std::make_shared<std::vector<std::string>>();
    auto non_strict = std::make_shared<bool>(false);
    auto host = std::make_shared<std::string>();
    sub->add_option("--candidate", *cand, "Candidate outer hypergraph")->required();
    sub->add_option("--candidate-inner", *cand_inner, "Candidate inner hypergraph")->required();
    sub->add_option("--template", *templ, "Template outer hypergraph (K)")->required();
    sub->add_option("--template-inner", *templ_inner, "Template inner hypergraph (T)")->required();
    sub->add_option("--map", *map, "Correspondence template=candidate, comma separated");
    sub->add_flag("--non-strict", *non_strict, "Only require template edges to be present");
    sub->add_option("--host", *host, "Host for the (K, T)-maximality check of the candidate pair");
    actions[sub] = [=, &limits] {
      const RootedPair c(read_shg(*cand), read_shg(*cand_inner));
      const RootedPair t(read_shg(*templ), read_shg(*templ_inner));
      json body;
      if (!map->empty()) {
        ext::Correspondence corr;
        for (const auto& [from, to] : split_pairs(*map)) corr[parse_vertex(from)] = parse_vertex(to);
        body["strict"] = !*non_strict;
        body["extension"] = ext::is_extension(c, t, corr, !*non_strict);
      }
      if (!host->empty()) {
        const auto v = ext::find_kt_violation(c, t, read_shg(*host), limits);
        body["kt_maximal"] = !v.has_value();
        body["violation"] = v ? json{{"base", v->base}, {"added", v->added}} : json(nullptr);
      }
      if (body.is_null()) throw UsageError("give --map, --host or both");
      return with_header("extension", body);
    };
  }
  {
    auto* sub = app.add_subcommand("cyclic", "Match a pair against the cyclic extension patterns");
    auto outer = std::make_shared<std::string>();
    auto inner = std::make_shared<std::string>();
    auto m = std::make_shared<int>(2);
    auto host = std::make_shared<std::string>();
    sub->add_option("--outer", *outer, "G")->required();
    sub->add_option("--inner", *inner, "H")->required();
    sub->add_option("--m", *m, "Path bound m")->required();
    sub->add_option("--host", *host, "Also test cyclic maximality of (G, H) in this host");
    actions[sub] = [=, &limits] {
      const RootedPair pair(read_shg(*outer), read_shg(*inner));
      const auto p = ext::match_cyclic_extension(pair, *m, limits);
      json body = {{"m", *m},
                   {"bound", to_json(ext::cyclic_density_bound(pair.outer().arity(), *m))},
                   {"pattern", p ? to_json(*p) : json(nullptr)}};
      if (!host->empty()) body["cyclically_maximal"] = ext::is_cyclically_maximal(pair, read_shg(*host), *m, limits);
      return with_header("cyclic", body);
    };
  }
  {
    auto* sub = app.add_subcommand("decompose", "Chain of cyclic m-extensions from one vertex");
    auto file = std::make_shared<std::string>();
    auto m = std::make_shared<int>(2);
    auto root = std::make_shared<std::optional<Vertex>>();
    sub->add_option("file", *file, ".shg file")->required();
    sub->add_option("--m", *m, "Path bound m")->required();
    sub->add_option("--root", *root, "Starting vertex (default: try all)");
    actions[sub] = [=, &limits] {
      const Hypergraph g = read_shg(*file);
      std::optional<std::vector<Hypergraph>> chain;
      std::optional<Vertex> used;
      if (*root) {
        used = **root;
        chain = ext::find_m_decomposition(g, *m, **root, limits);
      } else {
        for (Vertex v : g.vertices())
          if ((chain = ext::find_m_decomposition(g, *m, v, limits))) {
            used = v;
            break;
          }
      }
      json steps = json::array();
      if (chain)
        for (const auto& h : *chain) steps.push_back(to_json(h));
      return with_header("decompose", {{"m", *m},
                                       {"root", used ? json(*used) : json(nullptr)},
                                       {"chain", chain ? steps : json(nullptr)},
                                       {"in_class", ext::in_cyclic_class(g, *m, limits)}});
    };
  }
  {
    auto* sub = app.add_subcommand("sample", "Draw one G^s(n, p)");
    auto opts = std::make_shared<ModelOptions>();
    auto trial = std::make_shared<std::int64_t>(0);
    auto out_file = std::make_shared<std::string>();
    opts->attach(sub, false);
    sub->add_option("--trial", *trial, "Trial index")->capture_default_str();
    sub->add_option("--out", *out_file, "Also write the sample as .shg");
    actions[sub] = [=] {
      const ExperimentConfig cfg = opts->config();
      const Hypergraph g = sample(cfg, *trial);
      if (!out_file->empty()) write_shg(*out_file, g);
      return with_header("sample", {{"config", to_json(cfg)},
                                    {"p", cfg.probability()},
                                    {"trial", *trial},
                                    {"edges", g.edge_count()},
                                    {"shg", to_shg(g)}});
    };
  }
  {
    auto* sub = app.add_subcommand("scan", "Containment probability of a motif over an alpha grid");
    auto opts = std::make_shared<ModelOptions>();
    auto motif = std::make_shared<std::string>();
    auto alphas = std::make_shared<std::vector<std::string>>();
    auto csv = std::make_shared<bool>(false);
    opts->attach(sub);
    sub->add_option("--motif", *motif, "Motif .shg file")->required();
    sub->add_option("--alphas", *alphas, "alpha values as p/q")->required();
    sub->add_flag("--csv", *csv, "Emit CSV rows instead of JSON");
    actions[sub] = [=, &raw_text, &text] {
      const Hypergraph m = read_shg(*motif);
      ExperimentConfig base = opts->config(false);
      base.p.reset();
      json rows = json::array();
      std::ostringstream csv_out;
      csv_out << "alpha,n,trials,successes,estimate,low,high\n";
      for (const auto& a : parse_rationals(*alphas)) {
        ExperimentConfig cfg = base;
        cfg.alpha = a;
        const auto r = estimate_probability(cfg, [&](const Hypergraph& g) { return contains_copy(m, g); });
        rows.push_back(to_json(r));
        csv_out << to_string(a) << ',' << cfg.n << ',' << cfg.trials << ',' << r.successes << ',' << r.estimate
                << ',' << r.interval.low << ',' << r.interval.high << '\n';
      }
      if (*csv) {
        raw_text = true;
        text = csv_out.str();
      }
      return with_header("scan", {{"rows", rows}});
    };
  }
  {
    auto* sub = app.add_subcommand("poisson", "Copy-count distribution of balanced motifs");
    auto opts = std::make_shared<ModelOptions>();
    auto motifs = std::make_shared<std::vector<std::string>>();
    opts->attach(sub);
    sub->add_option("--motif", *motifs, "Motif .shg files")->required();
    actions[sub] = [=, &limits] {
      std::vector<Hypergraph> ms;
      for (const auto& f : *motifs) ms.push_back(read_shg(f));
      return with_header("poisson", to_json(poisson_fit(opts->config(false), ms, limits)));
    };
  }
  {
    auto* sub = app.add_subcommand("uncovered", "Distribution of copies of H not covered by a copy of G");
    auto opts = std::make_shared<ModelOptions>();
    auto outer = std::make_shared<std::string>();
    auto inner = std::make_shared<std::string>();
    opts->attach(sub);
    sub->add_option("--outer", *outer, "G")->required();
    sub->add_option("--inner", *inner, "H")->required();
    actions[sub] = [=, &limits] {
      const RootedPair pair(read_shg(*outer), read_shg(*inner));
      return with_header("uncovered", to_json(uncovered_copies_experiment(pair, opts->config(false), limits)));
    };
  }
  {
    auto* sub = app.add_subcommand("probe", "Estimate a property over an (alpha, n) grid");
    auto opts = std::make_shared<ModelOptions>();
    auto motif = std::make_shared<std::string>();
    auto formula = std::make_shared<std::string>();
    auto alphas = std::make_shared<std::vector<std::string>>();
    auto ns = std::make_shared<std::vector<std::int64_t>>();
    auto csv = std::make_shared<bool>(false);
    sub->add_option("--s", opts->s, "Edge size")->capture_default_str();
    sub->add_option("--trials", opts->trials, "Trials per cell")->capture_default_str();
    sub->add_option("--seed", opts->seed, "Master seed");
    sub->add_option("--threads", opts->threads, "Worker threads")->capture_default_str();
    auto* mo = sub->add_option("--motif", *motif, "Property: contains this motif");
    auto* fo_opt = sub->add_option("--formula", *formula, "Property: this closed formula holds");
    mo->excludes(fo_opt);
    sub->add_option("--alphas", *alphas, "alpha values as p/q")->required();
    sub->add_option("--ns", *ns, "Vertex counts")->required();
    sub->add_flag("--csv", *csv, "Emit CSV rows instead of JSON");
    actions[sub] = [=, &raw_text, &text] {
      Predicate pred;
      if (!motif->empty()) {
        auto m = std::make_shared<Hypergraph>(read_shg(*motif));
        pred = [m](const Hypergraph& g) { return contains_copy(*m, g); };
      } else if (!formula->empty()) {
        const auto f = fo::parse(*formula, opts->s);
        if (!fo::free_variables(f).empty()) throw UsageError("the property must be a closed formula");
        auto ev = std::make_shared<fo::Evaluator>(f);
        pred = [ev](const Hypergraph& g) { return ev->evaluate(g); };
      } else {
        throw UsageError("give --motif or --formula");
      }
      const std::uint64_t seed = opts->seed ? *opts->seed : default_seed();
      const auto r = spectrum_probe(opts->s, pred, parse_rationals(*alphas), *ns, opts->trials, seed, opts->threads);
      if (*csv) {
        std::ostringstream o;
        o << "alpha,n,trials,estimate,flagged\n";
        for (std::size_t i = 0; i < r.alphas.size(); ++i)
          for (std::size_t j = 0; j < r.ns.size(); ++j)
            o << to_string(r.alphas[i]) << ',' << r.ns[j] << ',' << r.trials << ',' << r.estimates[i][j] << ','
              << (r.flagged[i] ? 1 : 0) << '\n';
        raw_text = true;
        text = o.str();
      }
      return with_header("probe", to_json(r));
    };
  }
  {
    auto* sub = app.add_subcommand("bounds", "Exact spectrum bounds");
    auto s = std::make_shared<int>(3);
    auto k = std::make_shared<int>(4);
    auto table = std::make_shared<bool>(false);
    auto candidates = std::make_shared<bool>(false);
    auto consistency = std::make_shared<bool>(false);
    auto qk = std::make_shared<std::string>();
    auto b_max = std::make_shared<int>(16);
    sub->add_option("--s", *s, "Edge size")->required();
    sub->add_option("--k", *k, "Quantifier depth")->required();
    sub->add_flag("--table", *table, "All bound rows (default)");
    sub->add_flag("--max-candidates", *candidates, "The two candidates for max S_k");
    sub->add_flag("--consistency", *consistency, "Cross-check the obeying and violating sets");
    sub->add_option("--qk", *qk, "Test membership of alpha (p/q) in the exceptional set");
    sub->add_option("--b-max", *b_max, "Largest denominator for the fractional set")->capture_default_str();
    actions[sub] = [=] {
      json body = {{"params", {{"s", *s}, {"k", *k}}}};
      const bool any = *candidates || *consistency || !qk->empty();
      if (*table || !any) {
        json rows = json::array();
        for (const auto& row : bound_table(*s, *k)) rows.push_back(to_json(row));
        body["rows"] = rows;
      }
      if (*candidates) {
        const auto [c1, c2] = max_spectrum_candidates(*s, *k);
        body["max_candidates"] = {to_json(c1), to_json(c2)};
      }
      if (!qk->empty()) {
        const Rational a = parse_rational(*qk);
        body["qk"] = {{"alpha", to_json(a)}, {"member", in_exceptional_set(*s, *k, a)}};
      }
      if (*consistency) {
        const auto r = check_consistency(*s, *k, *b_max);
        json between = json::array();
        for (const auto& q : r.between_candidates) between.push_back(to_json(q));
        body["consistency"] = {{"b_max", *b_max},
                               {"sets_disjoint", r.sets_disjoint},
                               {"violating_max_is_first_candidate", r.violating_max_is_first_candidate},
                               {"obeying_min_above_second_candidate", r.obeying_min_above_second_candidate},
                               {"earlier_inside_integer_set", r.earlier_inside_integer_set},
                               {"limit_bounds_ordered", r.limit_bounds_ordered},
                               {"between_candidates", between},
                               {"ok", r.ok()}};
      }
      return with_header("bounds", body);
    };
  }
  {
    auto* sub = app.add_subcommand("construct", "Build and verify the witness hypergraphs");
    sub->require_subcommand(1);
    auto* lp = sub->add_subcommand("limit-point", "Pair (G, H) of paths between two vertices");
    auto s = std::make_shared<int>(3);
    auto l = std::make_shared<int>(1);
    auto m = std::make_shared<int>(2);
    auto out_file = std::make_shared<std::string>();
    lp->add_option("--s", *s, "Edge size")->required();
    lp->add_option("--l", *l, "Paths have length 2^l")->required();
    lp->add_option("--m", *m, "H has 2m paths")->required();
    lp->add_option("--out", *out_file, "Write G and H as <out>.outer.shg and <out>.inner.shg");
    actions[lp] = [=, &limits] {
      const auto c = limit_point_pair(*s, *l, *m, limits);
      if (!out_file->empty()) {
        write_shg(*out_file + ".outer.shg", c.pair.outer());
        write_shg(*out_file + ".inner.shg", c.pair.inner());
      }
      return with_header("construct limit-point", {{"alpha", to_json(c.alpha)},
                                                   {"middles", c.middles},
                                                   {"z", c.z},
                                                   {"outer_shg", to_shg(c.pair.outer())},
                                                   {"inner_shg", to_shg(c.pair.inner())},
                                                   {"verification", to_json(c.checks)}});
    };
    auto* wt = sub->add_subcommand("witness", "Two loose cycles joined through one vertex");
    auto ws = std::make_shared<int>(3);
    auto wk = std::make_shared<int>(4);
    auto a1 = std::make_shared<int>(0);
    auto a2 = std::make_shared<int>(0);
    auto wout = std::make_shared<std::string>();
    wt->add_option("--s", *ws, "Edge size")->required();
    wt->add_option("--k", *wk, "Quantifier depth")->required();
    wt->add_option("--a1", *a1, "First path offset (k >= s+2)");
    wt->add_option("--a2", *a2, "Second path offset (k >= s+2)");
    wt->add_option("--out", *wout, "Write H as .shg");
    actions[wt] = [=, &limits] {
      const auto c = spectrum_witnesses(*ws, *wk, *a1, *a2, limits);
      if (!wout->empty()) write_shg(*wout, c.h);
      return with_header("construct witness", {{"alpha", to_json(c.alpha)},
                                               {"a", c.a},
                                               {"x", c.x},
                                               {"shg", to_shg(c.h)},
                                               {"verification", to_json(c.checks)}});
    };
  }

  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << json{{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(kExitUsage, "usage", e.what());
  }

  try {
    for (auto& [sub, action] : actions) {
      if (!sub->parsed()) continue;
      const json report = action();
      if (raw_text) out << text;
      else out << report.dump(2) << '\n';
      return kExitOk;
    }
    return fail(kExitUsage, "usage", "no subcommand given");
  } catch (const UsageError& e) {
    return fail(kExitUsage, "usage", e.what());
  } catch (const CapacityError& e) {
    return fail(kExitCapacity, "capacity", e.what());
  } catch (const VerificationError& e) {
    return fail(kExitVerification, "verification", e.what());
  } catch (const ParseError& e) {
    return fail(kExitFailure, "parse", e.what());
  } catch (const std::exception& e) {
    return fail(kExitFailure, "error", e.what());
  }
}

}  // namespace hyperlab::cli
