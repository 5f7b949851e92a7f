// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rssb {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or input data. The CLI maps this to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a mathematical function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Reflection point coincides with (or passes through) a transceiver node.
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

/// Not enough samples for the requested operation (e.g. shorter than one DFT window).
class InsufficientDataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Filter template cannot be met at the requested order.
class InfeasibleFilterError : public Error {
 public:
  InfeasibleFilterError(const std::string& what, double achieved_atten_db)
      : Error(what), achieved_atten_db_(achieved_atten_db) {}
  double achieved_attenuation_db() const noexcept { return achieved_atten_db_; }

 private:
  double achieved_atten_db_;
};

}  // namespace rssb
