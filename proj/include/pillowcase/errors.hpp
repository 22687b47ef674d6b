#pragma once

#include <stdexcept>
#include <string>

namespace pillowcase {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// quaternion layer
struct NotPureUnit : Error {
    using Error::Error;
};

// perturbation layer
struct PerturbationTooLarge : Error {
    using Error::Error;
};
struct UnsupportedPerturbationFunction : Error {
    using Error::Error;
};

// intersection layer
struct NonTransverse : Error {
    using Error::Error;
};

// arithmetic layers
struct NotCoprime : Error {
    using Error::Error;
};
struct OracleMismatch : Error {
    using Error::Error;
};
struct InternalInconsistency : Error {
    using Error::Error;
};
struct BranchAmbiguity : Error {
    using Error::Error;
};
struct OutOfDomain : Error {
    using Error::Error;
};
struct IntegerOverflow : Error {
    using Error::Error;
};

}  // namespace pillowcase
