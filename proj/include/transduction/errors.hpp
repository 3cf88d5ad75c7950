/**
 * Copyright 2026 The transduction-lab Authors
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

namespace transduction {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix shape does not match what an operation requires (odd order, mismatched spans).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Ladder/quadrature convention violated, e.g. a broken doubled structure.
class ConventionError : public Error {
public:
    using Error::Error;
};

/// Parameters on or beyond the instability boundary.
class StabilityError : public Error {
public:
    using Error::Error;
};

/// A covariance block violates V + i*Omega >= 0.
class PhysicalityError : public Error {
public:
    using Error::Error;
};

/// Parameters outside the regime where a construction is defined.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// The resolvent is numerically singular.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double condition_number)
        : Error(what), condition_number_(condition_number) {}

    double condition_number() const noexcept { return condition_number_; }

private:
    double condition_number_;
};

/// Invalid sweep configuration (unknown parameter, malformed axis, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace transduction
