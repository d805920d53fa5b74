// Copyright 2026 The qmean authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qmean {

/// Base class for all qmean errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Qubit counts, shot counts or parameters outside the supported range.
class SizeError : public Error {
  public:
    using Error::Error;
};

/// Invalid qubit indices, register geometry or gate/register mismatches.
class LayoutError : public Error {
  public:
    using Error::Error;
};

/// Input vectors that cannot be normalized (zero rows, non-unit inputs).
class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// Probability arrays that are not a distribution.
class DistributionError : public Error {
  public:
    using Error::Error;
};

/// Malformed or invalid experiment documents.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace qmean
