#pragma once

#include <stdexcept>

namespace dpflmd {

// Violation of the query/response protocol between server and clients.
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dataset file could not be read or parsed.
struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dpflmd
