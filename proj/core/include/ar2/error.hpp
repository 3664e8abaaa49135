#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ar2 {

// Invalid parameters (non-finite values, sigma <= 0) are reported with
// std::invalid_argument. The types below cover the remaining failure modes.

/// A computation was requested outside its mathematical domain, e.g. an
/// MA(inf) quantity for a non-stationary model.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact integer result does not fit in the widest available integer type.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// The truncated MA representation is too short to meet an accuracy gate.
class TruncationError : public DomainError {
public:
    TruncationError(const std::string& what, std::size_t required_order)
        : DomainError(what), required_order_(required_order) {}

    [[nodiscard]] std::size_t required_order() const noexcept { return required_order_; }

private:
    std::size_t required_order_;
};

}  // namespace ar2
