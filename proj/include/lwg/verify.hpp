#pragma once

#include "lwg/lie_algebra.hpp"

#include <cstdint>
#include <random>

namespace lwg {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample, if any

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Seeded generator of small random rationals and subspaces.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi);
  Rational rational(long bound);
  Vec vec(std::size_t n, long bound);
  /// Random subalgebra: a standard subalgebra conjugated by random group words.
  Subspace subalgebra(const LieAlgebra& g);
  Subspace subspace(std::size_t n, std::size_t k);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Random (E, X) instances on rank <= 2 algebras: exact limit invariants and
/// agreement with the flow oracle.
CheckResult verify_limit_suite(std::uint64_t seed, std::size_t instances);

}  // namespace lwg
