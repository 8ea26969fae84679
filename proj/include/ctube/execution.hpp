#pragma once

namespace ctube {

// Selects the OpenMP kernel or the serial reference loop. Both produce
// identical, deterministically ordered results.
enum class Execution { serial, parallel };

}  // namespace ctube
