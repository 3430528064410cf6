#pragma once

#include "qhodge/verify.hpp"

namespace qhodge {

/// The whole pipeline at q = 1 against the classical N = 3 statements.
SuiteReport classical_suite();

}  // namespace qhodge
