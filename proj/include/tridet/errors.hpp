#pragma once

// Error taxonomy shared across the library. Everything that can fail for a
// mathematical reason (as opposed to a violated precondition) derives from
// MathError, so callers can map "math failure" to one exit path without
// enumerating the cases.

#include <stdexcept>
#include <string>

namespace tridet {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unpivoted LDL^T hit a vanishing leading principal minor. The index is
// 1-based: minor `index` is the first one that vanishes.
struct ZeroPivot : MathError {
    int index;
    explicit ZeroPivot(int k)
        : MathError("zero pivot: leading principal minor " + std::to_string(k) +
                    " vanishes"),
          index(k) {}
};

// A signed remainder sequence lost more than one degree in a single division
// step (or a remainder vanished early). The index is the subscript k of the
// dividend p_k in the failing division.
struct DegreeBreakdown : MathError {
    int index;
    explicit DegreeBreakdown(int k)
        : MathError("degree breakdown at remainder-sequence step " +
                    std::to_string(k)),
          index(k) {}
};

struct NotSquarefree : MathError {
    NotSquarefree() : MathError("polynomial is not squarefree") {}
};

struct RetryExhausted : MathError {
    using MathError::MathError;
};

}  // namespace tridet
