#pragma once

#include <stdexcept>
#include <string>

namespace mcsep {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    OutOfRange,
    Io,
    Checkpoint,
    Invariant,
};

/// Exception carrying a category so the C boundary can map it to a status code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mcsep
