#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "appell/families.hpp"
#include "appell/rat.hpp"

namespace appell::verify {

/// Seeded generator of small rationals: numerators in [-99, 99],
/// denominators in [1, 20].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rat next();
  Rat next_nonzero();
  /// Strictly inside (-1, 1).
  Rat next_open_unit();
  std::vector<Rat> take(std::size_t count);
  std::vector<Rat> take_open_unit(std::size_t count);

 private:
  long uniform(long lo, long hi);

  std::mt19937_64 engine_;
};

enum class Status { Pass, Fail, NotApplicable };

const char* to_string(Status status);

struct CheckResult {
  std::string identity;  ///< short name, e.g. "translation"
  std::string anchor;    ///< the formula being checked
  std::string subject;   ///< family label or "kernel"
  Status status = Status::Pass;
  std::string detail;    ///< sample counts on success, counterexample on failure
};

struct Options {
  std::size_t m_max = 16;
  std::uint64_t seed = 42;
  /// Empty means default_families().
  std::vector<FamilySpec> families;
  std::size_t pair_samples = 50;
  std::size_t point_samples = 20;
  /// Kernel identities (nilpotency, Pascal group law, ...) run when true.
  bool include_kernel = true;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t count(Status status) const;
  const CheckResult* first_failure() const;
};

/// Every named family; Laguerre with alpha = 1/2, generalized Euler with
/// gamma-bar = 1/3.
std::vector<FamilySpec> default_families();

/// Runs the kernel identities followed by every per-family identity, in a
/// fixed order. Exceptions raised inside a check are recorded as failures.
Report run(const Options& options);

std::vector<CheckResult> kernel_checks(std::size_t m_max, RationalSampler& sampler,
                                       const Options& options);
std::vector<CheckResult> family_checks(const FamilySpec& spec, std::size_t m_max,
                                       RationalSampler& sampler, const Options& options);

std::string format_report(const Report& report);

}  // namespace appell::verify
