#ifndef EDEN_ERRORS_HPP
#define EDEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eden {

// Exit-code contract: 0 ok, 2 invalid input, 3 capacity, 4 inconclusive,
// 5 internal invariant breach.
struct EdenError : std::runtime_error {
    explicit EdenError(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const { return 5; }
};

struct InvalidInputError : EdenError {
    explicit InvalidInputError(const std::string& msg) : EdenError(msg) {}
    int exit_code() const override { return 2; }
};

struct CapacityError : EdenError {
    explicit CapacityError(const std::string& msg) : EdenError(msg) {}
    int exit_code() const override { return 3; }
};

// A certification that cannot conclude within its soundness bound.
// Distinct from a negative answer.
struct InconclusiveError : EdenError {
    explicit InconclusiveError(const std::string& msg) : EdenError(msg) {}
    int exit_code() const override { return 4; }
};

struct InternalError : EdenError {
    explicit InternalError(const std::string& msg) : EdenError(msg) {}
    int exit_code() const override { return 5; }
};

} // namespace eden

#endif
