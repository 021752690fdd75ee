#pragma once

#include <stdexcept>

namespace treesplit {

/// A rejection or chain budget ran out before producing a result. Kept
/// distinct from invalid-argument errors so callers (and the CLI exit code)
/// can tell configuration mistakes from exhausted sampling budgets.
struct budget_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace treesplit
