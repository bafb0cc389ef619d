#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphsym {

// Malformed graph6 input; `offset` is the byte position of the offending character.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A configured cap (automorphism count, vertex count, ...) was exceeded.
// Always loud, never a silent wrong answer.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search exhausted its node budget before producing an exact answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructive labeling could not be built or failed its certification.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace graphsym
