#ifndef ORDMMS_FIXTURES_HPP
#define ORDMMS_FIXTURES_HPP

#include <string>
#include <vector>

#include "ordmms/core.hpp"

namespace ordmms {

/// Named benchmark instances. Epsilon-style values are integerized at
/// scale 1000 (1 - eps -> 999, eps -> 1) so every invariant holds exactly.
///   example-3.2: n=4, ten goods, five worth 999 and five worth 1
///   example-4.7: n=6, ell=2, twenty-six goods in thirteen two-good bundles
///   appendix-B : n=20, thirty goods worth 999 and one worth 30
///   example-5.1: the 3x6 threshold-computation table
Instance fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace ordmms

#endif
