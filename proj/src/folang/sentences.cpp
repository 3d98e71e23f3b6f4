#include "hyperlab/folang/sentences.hpp"

#include <string>
#include <vector>

#include "hyperlab/folang/builders.hpp"
#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::fo {

namespace {

// Distance-exactly-h-from-both: dist(x, z) = i and dist(z, y) = j.
Formula via(int i, int j, int s, const std::string& x, const std::string& y, const std::string& z,
            FreshNames& names) {
  return dist_via(i, j, s, x, y, z, names);
}

Formula r1(int s, int h, const std::string& a, const std::string& u1, const std::string& u2, FreshNames& names) {
  const std::string x = names.next();
  std::vector<Formula> options;
  for (int i = 1; i <= h - 1; ++i) {
    Formula path = via(i, h - i, s, u1, a, x, names);
    Formula back = dist_exact(i, s, u2, x, names);
    options.push_back(land({path, back}));
  }
  // The empty disjunction (h = 1) is rendered as a contradiction on x.
  if (options.empty()) return exists(x, neq(x, x));
  return exists(x, lor(std::move(options)));
}

Formula r2(int s, int h, const std::string& a, const std::string& u1, const std::string& u2, FreshNames& names) {
  const std::string x1 = names.next();
  const std::string x2 = names.next();
  std::vector<std::string> rest;
  for (int j = 3; j <= s - 1; ++j) rest.push_back(names.next());
  std::vector<std::string> args{a, x1, x2};
  args.insert(args.end(), rest.begin(), rest.end());
  Formula first = dist_exact(h - 1, s, u1, x1, names);
  Formula second = dist_exact(h - 1, s, u2, x2, names);
  return exists(std::vector<std::string>{x1, x2}, land({first, second, exists(rest, atom(args))}));
}

}  // namespace

LimitPointSentence build_limit_point_sentence(int s, int k) {
  if (s < 3) throw DomainError("arity must be at least 3");
  if (k < s + 5) throw DomainError("depth must be at least s + 5, got k = " + std::to_string(k));
  const int l = k - s - 4;
  if (l > 20) throw CapacityError("distance exponent too large");
  const int full = 1 << l;
  const int h = full / 2;
  FreshNames names("v", {"a", "b", "c", "u", "u1", "u2", "z1", "z2"});

  LimitPointSentence out{l, atom({"a"}), atom({"a"}), atom({"a"}), atom({"a"}), atom({"a"}), atom({"a"}),
                         atom({"a"})};
  out.r1_a = r1(s, h, "a", "u1", "u2", names);
  out.r2_a = r2(s, h, "a", "u1", "u2", names);
  out.r1_b = r1(s, h, "b", "u1", "u2", names);
  out.r2_b = r2(s, h, "b", "u1", "u2", names);

  Formula ab = dist_exact(full, s, "a", "b", names);
  Formula mid1 = via(h, h, s, "a", "b", "u1", names);
  Formula mid2 = via(h, h, s, "a", "b", "u2", names);
  Formula pair = exists(std::vector<std::string>{"u1", "u2"},
                        land({neq("u1", "u2"), mid1, mid2, lor({out.r1_a, out.r2_a, out.r1_b, out.r2_b})}));
  out.q1 = land({ab, lnot(pair)});

  std::vector<Formula> far;
  for (const char* z : {"z1", "z2"})
    for (const char* end : {"a", "b"}) far.push_back(lnot(dist_at_most(full, s, end, z, names)));
  Formula middle = via(h, h, s, "a", "b", "u", names);
  Formula reach1 = dist_exact(full, s, "u", "z1", names);
  Formula reach2 = dist_exact(full, s, "u", "z2", names);
  Formula cover = forall("u", implies(land({middle, neq("u", "c")}), lor({reach1, reach2})));
  std::vector<Formula> guard{neq("z1", "z2")};
  guard.insert(guard.end(), far.begin(), far.end());
  guard.push_back(cover);
  out.q2 = lnot(exists(std::vector<std::string>{"c", "z1", "z2"}, land(std::move(guard))));

  out.sentence = exists(std::vector<std::string>{"a", "b"}, land({out.q1, out.q2}));
  return out;
}

namespace {

// Exists y_1..y_m N(fixed..., y...) & y_i != avoid_j for all i, j.
Formula edge_avoiding(const std::vector<std::string>& fixed, int s, const std::vector<std::string>& avoid,
                      FreshNames& names) {
  std::vector<std::string> ys;
  for (int i = static_cast<int>(fixed.size()); i < s; ++i) ys.push_back(names.next());
  std::vector<std::string> args = fixed;
  args.insert(args.end(), ys.begin(), ys.end());
  std::vector<Formula> parts{atom(args)};
  for (const auto& y : ys)
    for (const auto& a : avoid) parts.push_back(neq(y, a));
  return exists(ys, land(std::move(parts)));
}

Formula no_common_edge(const std::vector<std::string>& fixed, int s, FreshNames& names) {
  return lnot(edge_avoiding(fixed, s, {}, names));
}

// Chain x1 -a-> x2 -2^(k-s-1)-> ... -4-> x_{k-s}, then `close` on (x1, x_{k-s}).
template <class Close>
Formula chain(int s, int k, int first, const std::string& x1, FreshNames& names, Close&& close) {
  std::vector<std::string> xs{x1, names.next()};
  std::vector<int> steps{first};
  for (int e = k - s - 1; e >= 2; --e) {
    xs.push_back(names.next());
    steps.push_back(1 << e);
  }
  Formula body = close(xs.back());
  for (std::size_t i = steps.size(); i-- > 0;) {
    Formula d = dist_exact(steps[i], s, xs[i], xs[i + 1], names);
    body = exists(xs[i + 1], land({d, body}));
  }
  return body;
}

}  // namespace

WitnessSentence build_witness_sentence(int s, int k, int a1, int a2) {
  if (s < 3) throw DomainError("arity must be at least 3");
  if (k < s + 1) throw DomainError("depth must be at least s + 1, got k = " + std::to_string(k));
  const std::string x1 = "x1";
  FreshNames names("v", {x1});
  WitnessSentence out{atom({x1}), atom({x1}), atom({x1})};
  if (k == s + 1) {
    const std::string x2 = names.next(), x3 = names.next();
    Formula triple = edge_avoiding({x1, x2, x3}, s, {}, names);
    Formula other = edge_avoiding({x1, x2}, s, {x3}, names);
    out.q1 = exists(std::vector<std::string>{x2, x3}, land({triple, other}));
    const std::string w2 = names.next(), w3 = names.next();
    Formula t12 = edge_avoiding({x1, w2}, s, {}, names);
    Formula t13 = edge_avoiding({x1, w3}, s, {}, names);
    Formula t23 = edge_avoiding({w2, w3}, s, {}, names);
    Formula t123 = edge_avoiding({x1, w2, w3}, s, {}, names);
    out.q2 = exists(std::vector<std::string>{w2, w3}, land({t12, t13, t23, lnot(t123)}));
  } else {
    const int top = 1 << (k - s);
    if (a1 < 1 || a2 < 1 || a1 > top || a2 > top)
      throw DomainError("path offsets must lie in 1.." + std::to_string(top));
    if (a1 + a2 - 3 < 1 || a1 + a2 - 3 > 2 * top - 3)
      throw DomainError("a1 + a2 - 3 must lie in 1.." + std::to_string(2 * top - 3));
    out.q1 = chain(s, k, a1, x1, names, [&](const std::string& end) {
      const std::string p = names.next(), q = names.next();
      Formula both = edge_avoiding({end, p, q}, s, {x1}, names);
      Formula one = edge_avoiding({end, p}, s, {x1, q}, names);
      return land({neq(end, x1), exists(std::vector<std::string>{p, q}, land({neq(p, x1), neq(q, x1), both, one}))});
    });
    out.q2 = chain(s, k, a2, x1, names, [&](const std::string& end) {
      const std::string p = names.next(), q = names.next();
      Formula e1 = edge_avoiding({end, p}, s, {x1}, names);
      Formula e2 = edge_avoiding({end, q}, s, {x1}, names);
      Formula e3 = edge_avoiding({p, q}, s, {x1}, names);
      Formula none = no_common_edge({end, p, q}, s, names);
      return land({neq(end, x1),
                   exists(std::vector<std::string>{p, q}, land({neq(p, x1), neq(q, x1), e1, e2, e3, none}))});
    });
  }
  out.sentence = exists(x1, land({out.q1, out.q2}));
  return out;
}

}  // namespace hyperlab::fo
