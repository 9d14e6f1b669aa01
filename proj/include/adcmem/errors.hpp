// Copyright 2026 The adcmem Authors
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

namespace adcmem {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its physical range (angle, probability, coherence).
class domain_error : public error {
 public:
  using error::error;
};

/// A dimension, qubit count or grid size is out of the supported range.
class size_error : public error {
 public:
  using error::error;
};

/// Caller broke a precondition (dimension mismatch, non-Hermitian input, ...).
class contract_error : public error {
 public:
  using error::error;
};

/// An iterative numeric routine failed to converge or overflowed.
class numeric_error : public error {
 public:
  using error::error;
};

/// A self-consistency check on a result failed. Indicates a bug.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace adcmem
