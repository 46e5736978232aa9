#pragma once

#include <stdexcept>
#include <string>

namespace bcbessel {

// Base of every library error. name() is the stable identifier reported by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define BCBESSEL_DEFINE_ERROR(Type)                                        \
    class Type : public Error {                                            \
    public:                                                                \
        explicit Type(const std::string& what) : Error(#Type, what) {}     \
    };

BCBESSEL_DEFINE_ERROR(ZeroDivisorError)
BCBESSEL_DEFINE_ERROR(BranchError)
BCBESSEL_DEFINE_ERROR(DomainError)
BCBESSEL_DEFINE_ERROR(NonIntegerError)
BCBESSEL_DEFINE_ERROR(PreconditionError)
BCBESSEL_DEFINE_ERROR(NonConvergence)
BCBESSEL_DEFINE_ERROR(StripError)
BCBESSEL_DEFINE_ERROR(TruncationError)

#undef BCBESSEL_DEFINE_ERROR

// Raised at gamma poles; components() is a bit mask (1 = e1, 2 = e2, 3 = both,
// 0 for a plain complex argument).
class PoleError : public Error {
public:
    PoleError(const std::string& what, int components = 0)
        : Error("PoleError", what), components_(components) {}
    int components() const noexcept { return components_; }

private:
    int components_;
};

}  // namespace bcbessel
