#pragma once

#include <stdexcept>
#include <string>

namespace galekit {

/// Invalid input or violated precondition.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Instance is legal but exceeds the configured exact-computation limits.
/// Callers get a refusal instead of a silently inexact answer.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace galekit
