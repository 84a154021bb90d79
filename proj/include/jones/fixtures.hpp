#pragma once

#include <string>
#include <vector>

#include "jones/engine.hpp"

namespace jones {

// A reference value: closure of `braid` has Jones polynomial `expected`.
struct Fixture {
  std::string name;
  std::string braid;
  std::string expected;
};

const std::vector<Fixture>& fixtures();

struct FixtureResult {
  const Fixture* fixture = nullptr;
  std::string engine;  // engine value as text
  std::string oracle;  // empty when the braid is beyond the oracle caps
  bool passed = false;
};

std::vector<FixtureResult> run_fixtures(MemoTable& memo);

}  // namespace jones
