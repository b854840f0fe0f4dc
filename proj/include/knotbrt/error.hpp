#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotbrt {

enum class ErrorKind {
  Syntax,
  Label,
  Orientation,
  Planarity,
  Index,
  InvalidState,
  InvalidEdgeOrder,
  InvalidRibbonGraph,
  UnknownEdge,
  LoopContraction,
  DisconnectedDiagram,
  DisconnectedGraph,
  NegativeDeltaExponent,
  TooManyCrossings,
  BaseCaseTooLarge,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> crossing = std::nullopt)
      : std::runtime_error(message), kind_(kind), crossing_(crossing) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Index of the offending crossing, for parse and validation errors.
  std::optional<std::size_t> crossing() const noexcept { return crossing_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> crossing_;
};

}  // namespace knotbrt
