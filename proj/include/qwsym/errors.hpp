// Copyright 2026 The qwsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qwsym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group element encoding does not match the group (arity or range).
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live on the same group do not.
class GroupMismatchError : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for this group kind (e.g. enumeration of
/// an infinite group).
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

/// A parameter violates the preconditions of a symmetry family or other
/// construction (non-unit phase, non-diagonal operator, bad character, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The Cayley graph is separating; the homogeneity results do not apply.
class SeparatingGroupError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A matrix that must be unitary is not.
class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

/// A generator permutation does not induce an S-preserving automorphism.
class NotAutomorphismError : public Error {
 public:
  using Error::Error;
};

/// psi = k*pi for a line coin: the symmetric chiralities are not unique.
class DegenerateCoinError : public Error {
 public:
  using Error::Error;
};

/// A numerical invariant (norm conservation, decomposition accuracy) failed.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON / command-line specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwsym
