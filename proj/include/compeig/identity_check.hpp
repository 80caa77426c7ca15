#pragma once

#include <string>

namespace compeig {

/// Outcome of evaluating both sides of a tensor or trace identity.
struct IdentityCheckResult {
  std::string name;
  double max_abs_dev = 0.0;
  double max_rel_dev = 0.0;  // absolute deviation over the identity's scale
  double tol = 0.0;
  bool pass = false;
};

inline IdentityCheckResult make_check(std::string name, double abs_dev,
                                      double scale, double tol) {
  IdentityCheckResult r;
  r.name = std::move(name);
  r.max_abs_dev = abs_dev;
  r.max_rel_dev = abs_dev / (scale > 0.0 ? scale : 1.0);
  r.tol = tol;
  r.pass = r.max_rel_dev <= tol;
  return r;
}

}  // namespace compeig
