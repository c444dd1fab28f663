// Copyright 2026 The qsvm Authors
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

#ifndef QSVM_ERROR_HPP
#define QSVM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qsvm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller handed in something the contract forbids: out-of-range qubit,
/// non-unitary matrix, malformed configuration.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Dataset or file content could not be ingested.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A numeric procedure hit a degenerate case: singular system, zero-norm
/// vector, readout with no usable amplitude.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsvm

#endif  // QSVM_ERROR_HPP
