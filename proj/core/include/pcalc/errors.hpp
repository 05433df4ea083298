#pragma once

#include <stdexcept>
#include <string>

namespace pcalc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDistributive : Error {
    using Error::Error;
};
struct NotAPairwiseCover : Error {
    using Error::Error;
};
struct CostCapExceeded : Error {
    using Error::Error;
};
struct PosetUnsupported : Error {
    using Error::Error;
};
struct PreconditionFailed : Error {
    using Error::Error;
};
struct NotComparable : Error {
    using Error::Error;
};
struct NotAnInterval : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct NoSplitting : Error {
    using Error::Error;
};

} // namespace pcalc
