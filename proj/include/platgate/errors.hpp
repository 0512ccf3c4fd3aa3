// Copyright 2026 The platgate Authors
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

#ifndef PLATGATE_ERRORS_HPP
#define PLATGATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace platgate {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad level/rank, unparsable word, unknown label.
class InvalidInput : public Error {
   public:
    using Error::Error;
};

/// A quantum integer or A - 1/A vanishes at the requested (k, N).
class DegenerateParams : public Error {
   public:
    using Error::Error;
};

/// A quantum integer that must sit under a real square root is negative.
class NegativeRadicand : public Error {
   public:
    using Error::Error;
};

/// Principal square roots produced matrices that are not involutive or unitary.
class BranchInconsistency : public Error {
   public:
    using Error::Error;
};

class MalformedSequence : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

class InvalidLabel : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

/// Gate evaluation requires every cable to return to its starting position.
class NonIdentityPermutation : public Error {
   public:
    using Error::Error;
};

}  // namespace platgate

#endif  // PLATGATE_ERRORS_HPP
