#pragma once

#include <stdexcept>
#include <string>

namespace flatmod {

// Two families so the CLI can map them to distinct exit codes:
// input problems (exit 2) vs analysis failures (exit 3).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
    using InputError::InputError;
};
struct DimensionMismatch : InputError {
    using InputError::InputError;
};
struct CatalogNotFound : InputError {
    using InputError::InputError;
};

struct RankMismatch : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct NotCocompact : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct OrderExceeded : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct PrimeSearchFailed : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct NotNormalizing : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct NotInNormalizer : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct NotSPD : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct NotAField : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct NotQuaternion : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct ZeroDivisorFound : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct OddQuaternionMultiplicity : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct LemmaViolation : AnalysisError {
    using AnalysisError::AnalysisError;
};
// Contract breakage inside the pipeline itself; always a bug, never user input.
struct InternalInconsistency : AnalysisError {
    using AnalysisError::AnalysisError;
};

}  // namespace flatmod
