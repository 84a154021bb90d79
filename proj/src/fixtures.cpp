#include "jones/fixtures.hpp"

#include "jones/bracket.hpp"
#include "jones/errors.hpp"

namespace jones {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> list = {
      {"two-component unlink", "B2: x1^0", "-s - s^-1"},
      {"unknot x1", "B2: x1", "1"},
      {"unknot x1^-1", "B2: x1^-1", "1"},
      {"Hopf link", "B2: x1^2", "-s^5 - s"},
      {"trefoil", "B2: x1^3", "-s^8 + s^6 + s^2"},
      {"Delta(0)", "B3:", "s^2 + 2 + s^-2"},
      {"Delta(1)", "B3: x1", "-s - s^-1"},
      {"Delta(2)", "B3: x1 x2", "1"},
      {"Delta(3)", "B3: x1 x2 x1", "-s^5 - s"},
      {"Delta(4)", "B3: x1 x2 x1 x2", "-s^8 + s^6 + s^2"},
      {"Delta(5)", "B3: x1 x2 x1 x2 x1", "-s^11 + s^9 - s^7 - s^3"},
      {"Delta(6)", "B3: x1 x2 x1 x2 x1 x2", "2s^12 + s^8 + s^4"},
      {"Delta(9)", "B3: x1 x2 x1 x2 x1 x2 x1 x2 x1", "-s^11 - s^7"},
      {"(3,1,3,1)", "B3: x1^3 x2 x1^3 x2", "-s^16 + s^10 + s^6"},
      {"(4,1,3,1)", "B3: x1^4 x2 x1^3 x2", "-s^11 - s^7"},
      {"(1,1,2,1)", "B3: x1 x2 x1^2 x2", "-s^11 + s^9 - s^7 - s^3"},
  };
  return list;
}

std::vector<FixtureResult> run_fixtures(MemoTable& memo) {
  std::vector<FixtureResult> out;
  for (const auto& f : fixtures()) {
    FixtureResult r;
    r.fixture = &f;
    const BraidWord w = parse_braid(f.braid);
    const LaurentPoly expected = LaurentPoly::parse(f.expected);
    const LaurentPoly engine = jones(w, memo);
    r.engine = engine.to_string();
    r.passed = engine == expected;
    try {
      const LaurentPoly oracle = jones_via_bracket(w);
      r.oracle = oracle.to_string();
      r.passed = r.passed && oracle == expected;
    } catch (const CapExceeded&) {
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace jones
