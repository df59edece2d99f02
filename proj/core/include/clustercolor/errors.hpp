#pragma once

#include <stdexcept>
#include <string>

namespace clustercolor {

enum class ErrorCode {
    InvalidInput,
    AsymmetricRotation,
    LoopOrMultiEdge,
    Disconnected,
    GenusPositive,
    EmptySelection,
    NotConnectedSet,
    VerticesNotOnFace,
    EdgeExists,
    NoSuchEdge,
    HypothesisViolation,
    NotNearTriangulated,
    AttachmentShapeViolation,
    PrescribedEdgeNotOuter,
    InteriorDisconnected,
    NonUniqueNeighborInX0,
    InternalInvariantViolation,
    PartialColoring,
    InvalidColor,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a structured error code plus a human-readable message.
class GraphError : public std::runtime_error {
public:
    GraphError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
        case ErrorCode::LoopOrMultiEdge: return "LoopOrMultiEdge";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::GenusPositive: return "GenusPositive";
        case ErrorCode::EmptySelection: return "EmptySelection";
        case ErrorCode::NotConnectedSet: return "NotConnectedSet";
        case ErrorCode::VerticesNotOnFace: return "VerticesNotOnFace";
        case ErrorCode::EdgeExists: return "EdgeExists";
        case ErrorCode::NoSuchEdge: return "NoSuchEdge";
        case ErrorCode::HypothesisViolation: return "HypothesisViolation";
        case ErrorCode::NotNearTriangulated: return "NotNearTriangulated";
        case ErrorCode::AttachmentShapeViolation: return "AttachmentShapeViolation";
        case ErrorCode::PrescribedEdgeNotOuter: return "PrescribedEdgeNotOuter";
        case ErrorCode::InteriorDisconnected: return "InteriorDisconnected";
        case ErrorCode::NonUniqueNeighborInX0: return "NonUniqueNeighborInX0";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::PartialColoring: return "PartialColoring";
        case ErrorCode::InvalidColor: return "InvalidColor";
    }
    return "UnknownError";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw GraphError(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace clustercolor
