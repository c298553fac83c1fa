#pragma once

#include <stdexcept>
#include <string>

namespace gamma2 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point appears in both components of a two-component configuration.
struct DisjointnessViolation : Error {
    using Error::Error;
};

/// A point appears twice within one component.
struct DuplicatePoint : Error {
    using Error::Error;
};

/// An exhaustive-subset operation was asked to enumerate more points than the
/// configured hard cap allows (2^n blowup guard).
struct CapExceeded : Error {
    using Error::Error;
};

struct InvalidRateParams : Error {
    using Error::Error;
};

struct InvalidAlpha : Error {
    using Error::Error;
};

/// A hierarchy time step made some component norm grow by more than 10x.
struct StepSizeRejected : Error {
    using Error::Error;
};

struct PopulationCapExceeded : Error {
    using Error::Error;
};

/// A sampled rate exceeded its declared thinning bound; the bound in the
/// simulation config is wrong.
struct ThinningBoundViolated : Error {
    using Error::Error;
};

} // namespace gamma2
