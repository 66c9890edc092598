#pragma once

#include "cmplane/alexander.hpp"

#include <string>
#include <vector>

namespace cmplane {

/// The 2p cusps (u^2 = v^p) of (x^p + y^p)^2 + (y^2 + z^2)^p, p odd:
/// (x : y : 1) with y = +-i and x = -y zeta_p^k, over Q(zeta_{4p}).
CurveConfiguration c_p2_configuration(long p);

struct FixtureResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Worked examples with known answers, run by `cmplane --fixtures`.
std::vector<FixtureResult> run_worked_examples();

} // namespace cmplane
