#pragma once
// Exception types shared by the library.

#include <stdexcept>
#include <string>

namespace wild {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct InvalidRelations : Error {
    using Error::Error;
};

struct InvalidGraph : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw DimensionError(msg);
}

}  // namespace wild
