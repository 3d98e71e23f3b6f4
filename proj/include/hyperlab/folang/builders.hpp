#pragma once

#include <set>
#include <string>

#include "hyperlab/folang/formula.hpp"

namespace hyperlab::fo {

/// Deterministic fresh variable names `<prefix>1`, `<prefix>2`, ... skipping
/// reserved names.
class FreshNames {
 public:
  explicit FreshNames(std::string prefix = "v", std::set<std::string> reserved = {});
  std::string next();
  void reserve(const std::string& name) { reserved_.insert(name); }

 private:
  std::string prefix_;
  std::set<std::string> reserved_;
  long counter_ = 0;
};

/// "dist(x, y) <= i" for s-uniform hypergraphs (i >= 1).
Formula dist_at_most(int i, int s, const std::string& x, const std::string& y, FreshNames& names);
/// "dist(x, y) = i" (i >= 1); i = 0 gives x = y.
Formula dist_exact(int i, int s, const std::string& x, const std::string& y, FreshNames& names);
/// dist_exact(i)(x, z) & dist_exact(j)(z, y).
Formula dist_via(int i, int j, int s, const std::string& x, const std::string& y, const std::string& z,
                 FreshNames& names);

/// Convenience forms with free variables x and y (and z).
Formula dist_at_most(int i, int s);
Formula dist_exact(int i, int s);
Formula dist_via(int i, int j, int s);

}  // namespace hyperlab::fo
