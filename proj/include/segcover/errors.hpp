#pragma once

#include <stdexcept>

namespace segcover {

// Thrown by the loaders when input text is malformed; the message carries
// the offending location (line/column or JSON path).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace segcover
