#pragma once

#include <stdexcept>
#include <string>

namespace narayana {

// A caller broke an operation's stated hypothesis.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A derivation step that the underlying theorems guarantee did not check out.
// Seeing this means either a bug or a genuine counterexample; it is never
// swallowed silently.
struct falsified_step : std::logic_error {
    using std::logic_error::logic_error;
};

// sqrt_cf was asked for the continued fraction of a perfect square.
struct degenerate_surd : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace narayana
