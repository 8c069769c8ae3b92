#include "modq/errors.hpp"

namespace modq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedEdge: return "malformed-edge";
        case ErrorKind::LoopRejected: return "loop-rejected";
        case ErrorKind::MalformedInput: return "malformed-input";
        case ErrorKind::IncompatibleClustering: return "incompatible-clustering";
        case ErrorKind::Format: return "format";
        case ErrorKind::UndefinedQuality: return "undefined-quality";
        case ErrorKind::UndefinedSimilarity: return "undefined-similarity";
        case ErrorKind::FamilyParameter: return "family-parameter";
        case ErrorKind::InstanceTooLarge: return "instance-too-large";
        case ErrorKind::WitnessNotFound: return "witness-not-found";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Format:
        case ErrorKind::MalformedEdge:
        case ErrorKind::LoopRejected:
            return 2;
        case ErrorKind::MalformedInput:
        case ErrorKind::IncompatibleClustering:
        case ErrorKind::FamilyParameter:
            return 3;
        case ErrorKind::InstanceTooLarge:
        case ErrorKind::WitnessNotFound:
            return 4;
        case ErrorKind::UndefinedQuality:
        case ErrorKind::UndefinedSimilarity:
            return 5;
        case ErrorKind::Io:
            return 6;
    }
    return 1;
}

void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace modq
