#pragma once

#include <stdexcept>
#include <string>

namespace treeset {

// Every predicate over a truncated language fails loudly instead of
// answering past the horizon.
class HorizonExceeded : public std::runtime_error {
 public:
  explicit HorizonExceeded(const std::string& what) : std::runtime_error(what) {}
};

class EmptyWordInCode : public std::runtime_error {
 public:
  EmptyWordInCode() : std::runtime_error("empty word is not allowed in a code") {}
};

class TooManyBlocks : public std::runtime_error {
 public:
  explicit TooManyBlocks(const std::string& what) : std::runtime_error(what) {}
};

class NotProlongable : public std::runtime_error {
 public:
  explicit NotProlongable(const std::string& what) : std::runtime_error(what) {}
};

class StabilizationFailed : public std::runtime_error {
 public:
  explicit StabilizationFailed(const std::string& what)
      : std::runtime_error(what) {}
};

class NoOccurrence : public std::runtime_error {
 public:
  explicit NoOccurrence(const std::string& what) : std::runtime_error(what) {}
};

class PeriodicSet : public std::runtime_error {
 public:
  explicit PeriodicSet(const std::string& what) : std::runtime_error(what) {}
};

class ConjugacyViolated : public std::runtime_error {
 public:
  explicit ConjugacyViolated(const std::string& what)
      : std::runtime_error(what) {}
};

class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph() : std::runtime_error("graph is not connected") {}
};

class NoSpecialVertex : public std::runtime_error {
 public:
  NoSpecialVertex() : std::runtime_error("graph has no special vertex") {}
};

class NotFolded : public std::runtime_error {
 public:
  NotFolded() : std::runtime_error("operation requires a folded graph") {}
};

}  // namespace treeset
