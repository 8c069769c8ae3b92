#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modq {

enum class ErrorKind {
    MalformedEdge,
    LoopRejected,
    MalformedInput,
    IncompatibleClustering,
    Format,
    UndefinedQuality,
    UndefinedSimilarity,
    FamilyParameter,
    InstanceTooLarge,
    WitnessNotFound,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code for an error class. 0 is success and 1 is reserved for
/// command-line usage errors.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace modq
