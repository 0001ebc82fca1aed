// Copyright 2026 The stabgeo Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabgeo {

// Base class for every error raised by the library. The CLI maps ParseError
// to exit code 2 and everything else derived from here to exit code 3.
class StabgeoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public StabgeoError {
   public:
    using StabgeoError::StabgeoError;
};

class IndexError : public StabgeoError {
   public:
    using StabgeoError::StabgeoError;
};

class MalformedPhaseError : public StabgeoError {
   public:
    using StabgeoError::StabgeoError;
};

class ZeroCofactorError : public StabgeoError {
   public:
    using StabgeoError::StabgeoError;
};

class NonCanonicalError : public StabgeoError {
   public:
    using StabgeoError::StabgeoError;
};

class SizeError : public StabgeoError {
   public:
    using StabgeoError::StabgeoError;
};

class NotStabilizerBivector : public StabgeoError {
   public:
    using StabgeoError::StabgeoError;
};

class ParallelStatesError : public NotStabilizerBivector {
   public:
    using NotStabilizerBivector::NotStabilizerBivector;
};

class ParseError : public StabgeoError {
   public:
    ParseError(const std::string &msg, size_t line)
        : StabgeoError(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    size_t line() const { return line_; }

   private:
    size_t line_;
};

}  // namespace stabgeo
