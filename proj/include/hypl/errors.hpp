#pragma once

#include <stdexcept>

namespace hypl {

/// Base type for every numeric or domain failure raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series_core
struct ZeroConstantTerm : Error { using Error::Error; };
struct InnerConstantNonzero : Error { using Error::Error; };
struct NotUnitConstantTerm : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct OutsideDisk : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };

// hyperbola classes
struct BadS : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct AngleOutOfRange : Error { using Error::Error; };
struct BranchCut : Error { using Error::Error; };

// functionals
struct OrderExceeded : Error { using Error::Error; };

// extremal search
struct XOutOfRange : Error { using Error::Error; };
struct ParamOutOfDisk : Error { using Error::Error; };
struct ConfigInvalid : Error { using Error::Error; };

} // namespace hypl
