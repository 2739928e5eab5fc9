// errors.hh -- exception types shared by every sct module

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sct {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad domain, duplicate points, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An index is outside the range it is defined on.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// A word contains a letter the automaton does not have.
class InvalidLetter : public Error {
public:
    using Error::Error;
};

/// Two automata do not share an alphabet.
class IncomparableAlphabets : public Error {
public:
    using Error::Error;
};

/// A document could not be read; the message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A construction would exceed its configured size budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string subject, std::uint64_t required, std::uint64_t budget)
        : Error(subject + ": requires " + std::to_string(required) + ", budget is " + std::to_string(budget)),
          subject_(std::move(subject)), required_(required), budget_(budget) {}

    const std::string& subject() const noexcept { return subject_; }
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

    /// The same failure, with `prefix` prepended to the subject.
    BudgetExceeded with_context(const std::string& prefix) const {
        return BudgetExceeded(prefix + subject_, required_, budget_);
    }

private:
    std::string subject_;
    std::uint64_t required_;
    std::uint64_t budget_;
};

} // namespace sct
