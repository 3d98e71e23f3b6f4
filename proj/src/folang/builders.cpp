#include "hyperlab/folang/builders.hpp"

#include <string>
#include <vector>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::fo {

FreshNames::FreshNames(std::string prefix, std::set<std::string> reserved)
    : prefix_(std::move(prefix)), reserved_(std::move(reserved)) {}

std::string FreshNames::next() {
  while (true) {
    std::string name = prefix_ + std::to_string(++counter_);
    if (!reserved_.count(name)) {
      reserved_.insert(name);
      return name;
    }
  }
}

namespace {

void check_s(int s) {
  if (s < 3) throw DomainError("arity must be at least 3");
}

}  // namespace

Formula dist_at_most(int i, int s, const std::string& x, const std::string& y, FreshNames& names) {
  check_s(s);
  if (i < 1) throw DomainError("distance bound must be at least 1, got " + std::to_string(i));
  if (i == 1) {
    std::vector<std::string> rest;
    for (int j = 3; j <= s; ++j) rest.push_back(names.next());
    std::vector<std::string> args{x, y};
    args.insert(args.end(), rest.begin(), rest.end());
    return lor({eq(x, y), exists(rest, atom(args))});
  }
  const std::string mid = names.next();
  Formula left = dist_at_most(i / 2, s, x, mid, names);
  Formula right = dist_at_most((i + 1) / 2, s, mid, y, names);
  return exists(mid, land({left, right}));
}

Formula dist_exact(int i, int s, const std::string& x, const std::string& y, FreshNames& names) {
  check_s(s);
  if (i < 0) throw DomainError("distance must be non-negative, got " + std::to_string(i));
  if (i == 0) return eq(x, y);
  if (i == 1) return land({dist_at_most(1, s, x, y, names), neq(x, y)});
  Formula within = dist_at_most(i, s, x, y, names);
  Formula closer = dist_at_most(i - 1, s, x, y, names);
  return land({within, lnot(closer)});
}

Formula dist_via(int i, int j, int s, const std::string& x, const std::string& y, const std::string& z,
                 FreshNames& names) {
  Formula first = dist_exact(i, s, x, z, names);
  Formula second = dist_exact(j, s, z, y, names);
  return land({first, second});
}

namespace {

FreshNames default_names() { return FreshNames("v", {"x", "y", "z"}); }

}  // namespace

Formula dist_at_most(int i, int s) {
  auto names = default_names();
  return dist_at_most(i, s, "x", "y", names);
}

Formula dist_exact(int i, int s) {
  auto names = default_names();
  return dist_exact(i, s, "x", "y", names);
}

Formula dist_via(int i, int j, int s) {
  auto names = default_names();
  return dist_via(i, j, s, "x", "y", "z", names);
}

}  // namespace hyperlab::fo
