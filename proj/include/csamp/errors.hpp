#pragma once

#include <stdexcept>
#include <string>

namespace csamp {

/// Raised when a request exceeds the sizes this toolkit is built for
/// (explicit permutation tables, enumeration-scale checks, exact
/// combinatorics). Distinct from std::invalid_argument so callers can map
/// it to a dedicated exit status.
class ScaleError : public std::runtime_error {
public:
    explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace csamp
