#pragma once

#include <stdexcept>
#include <string>

namespace covelm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};
struct NumericalFailure : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct VersionError : Error {
    using Error::Error;
};
struct LayoutMismatch : Error {
    using Error::Error;
};
struct DegenerateCurve : Error {
    using Error::Error;
};

}  // namespace covelm
