#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quartic {

enum class Verdict { Pass, Warn, Fail };

std::string verdict_name(Verdict v);

/// One checked property: what was expected, what was computed, and the verdict.
struct Finding {
  std::string suite;
  std::string name;
  Verdict verdict;
  std::string expected;
  std::string computed;
};

struct VerifyOptions {
  long precision_bits = 128;
  long samples = 10000;
  std::uint64_t seed = 0x5eed2024;
  long I_max = 135;
  long coeff_bound = 20;
  long height_bound = 100;
};

/// forms, reduction, enumeration, solver, resolvent, pade, bounds.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws InvalidInput for an unknown name.
std::vector<Finding> run_suite(const std::string& name, const VerifyOptions& options = {});

bool any_failure(const std::vector<Finding>& findings);

}  // namespace quartic
