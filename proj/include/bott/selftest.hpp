#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bott {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first counterexample when failed
};

/// Desk-scale run of the invariant suite: ring relations and closed
/// forms, move soundness, conjugation invariance, twist vs complexity,
/// one-twist equivalence laws, recognition roundtrips and the serial vs
/// parallel kernels. Randomized checks draw from a generator seeded by
/// `seed`.
std::vector<PropertyResult> run_selftest(std::uint64_t seed);

}  // namespace bott
