#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgt {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedSpec : public Error {
public:
    using Error::Error;
};

// Raised when materializing a group would exceed the element cap.
// `projected` is the exact order when known, otherwise a lower bound.
class OrderExceedsCap : public Error {
public:
    OrderExceedsCap(std::uint64_t projected_, std::uint64_t cap_)
        : Error("group order " + std::to_string(projected_) + " exceeds cap " +
                std::to_string(cap_)),
          projected(projected_), cap(cap_) {}
    std::uint64_t projected;
    std::uint64_t cap;
};

class NotNormal : public Error {
public:
    using Error::Error;
};

class NotAPGroup : public Error {
public:
    using Error::Error;
};

// Hall subgroup search exhausted its budget.  Either the subgroup does not
// exist (possible in non-solvable groups) or the search was unlucky; callers
// can distinguish via is_solvable().
class HallNotFound : public Error {
public:
    using Error::Error;
};

class NoNormalComplement : public Error {
public:
    using Error::Error;
};

class NotRealizable : public Error {
public:
    using Error::Error;
};

class InvalidPlan : public Error {
public:
    using Error::Error;
};

class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

class OrientationConflict : public Error {
public:
    using Error::Error;
};

class ConjugateSearchExhausted : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

// A redundant internal cross-check disagreed with the primary computation.
// This always indicates a defect, never bad input.
class InternalCheckFailed : public Error {
public:
    using Error::Error;
};

} // namespace cgt
