// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <stdexcept>
#include <string>

namespace frey {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us something outside the operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A well-formed request that the computation could not finish honestly.
class ComputationError : public Error {
 public:
  using Error::Error;
};

// Trial division ran out before the cofactor could be certified.
class BudgetExceeded : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class SingularModel : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NonMinimalModel : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class Unclassifiable : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace frey
