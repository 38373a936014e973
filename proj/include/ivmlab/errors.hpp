#pragma once

#include <stdexcept>
#include <string>

namespace ivmlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a strategy constructor or an operation received ill-formed parameters
struct BadParams : Error {
    using Error::Error;
};

// a betting rule tried to stake more than its current capital (no-debt rule)
struct StakeExceedsCapital : Error {
    using Error::Error;
};

// a finite bit source could not produce the requested number of bits
struct SourceExhausted : Error {
    using Error::Error;
};

// a partition interval is too short to host the construction
struct InfeasibleInterval : Error {
    using Error::Error;
};

// a player's capital exceeded its declared per-interval bound (cap too small)
struct BoundViolation : Error {
    using Error::Error;
};

// an operation that requires a sqrt-trimmed strategy got an untrimmed one
struct NotTrimmed : Error {
    using Error::Error;
};

} // namespace ivmlab
