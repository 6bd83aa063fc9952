/*
 * Copyright 2026 The squeezechain authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace squeezechain {

/// Base class for all squeezechain errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied parameter or precondition violation (CLI exit code 2).
class InvalidParameterError : public Error {
  public:
    using Error::Error;
};

/// Zero-energy Bogoliubov mode; the caller must apply the theta = 0 convention.
class DegenerateModeError : public Error {
  public:
    using Error::Error;
};

class SeparationOutOfRangeError : public InvalidParameterError {
  public:
    using InvalidParameterError::InvalidParameterError;
};

/// A Pfaffian-with-prefactor kept a large imaginary residue; indicates a
/// convention bug upstream, never expected in production.
class ImaginaryResidueError : public Error {
  public:
    using Error::Error;
};

class NegativeDiscriminantError : public Error {
  public:
    using Error::Error;
};

class NegativeVarianceError : public Error {
  public:
    using Error::Error;
};

/// Averaging window reaches into the first finite-size revival.
class WindowTooLongError : public InvalidParameterError {
  public:
    using InvalidParameterError::InvalidParameterError;
};

class NoRevivalFoundError : public Error {
  public:
    using Error::Error;
};

/// Fock-space oracle asked for a chain too large to enumerate.
class SizeTooLargeError : public InvalidParameterError {
  public:
    using InvalidParameterError::InvalidParameterError;
};

/// Recursive Pfaffian expansion asked for a matrix beyond its cutoff.
class DimensionTooLargeError : public InvalidParameterError {
  public:
    using InvalidParameterError::InvalidParameterError;
};

}  // namespace squeezechain
