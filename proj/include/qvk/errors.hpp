// Copyright 2026 The qvk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qvk {

/// Base class for all qvk errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QVK_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(what) {}     \
  }

// linear algebra kernel
QVK_DEFINE_ERROR(NotHermitian);
QVK_DEFINE_ERROR(NoConvergence);
QVK_DEFINE_ERROR(DimensionMismatch);

// state verification
QVK_DEFINE_ERROR(TargetNotFixed);
QVK_DEFINE_ERROR(ZeroGap);

// identification sets
QVK_DEFINE_ERROR(NotConnectedSpanning);

// canonical form
QVK_DEFINE_ERROR(NotUnitary);
QVK_DEFINE_ERROR(InfeasibleSpectrum);

// product-state geometry
QVK_DEFINE_ERROR(RangeUnsupported);
QVK_DEFINE_ERROR(DegenerateSeed);
QVK_DEFINE_ERROR(InsufficientSamples);
QVK_DEFINE_ERROR(ProductUnitary);

// EFMIS synthesis
QVK_DEFINE_ERROR(InSE);
QVK_DEFINE_ERROR(ValidationFailed);
QVK_DEFINE_ERROR(CasePreconditionViolated);

// gate protocols
QVK_DEFINE_ERROR(NotCPTP);
QVK_DEFINE_ERROR(SynthesisFailed);

#undef QVK_DEFINE_ERROR

}  // namespace qvk
