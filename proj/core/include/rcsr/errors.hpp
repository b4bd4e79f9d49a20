// SPDX-License-Identifier: Apache-2.0
//
// rcsr-toolkit: modulated metasurfaces for wideband radar cross section reduction
// Copyright (C) 2026 rcsr-toolkit contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RCSR_ERRORS_HPP
#define RCSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcsr {

// Invalid inputs or configuration. The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Numerical failure at runtime (singular impedance, bracket without sign
// change, non-finite intermediate). CLI exit code 3.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string &msg) : std::runtime_error(msg) {}
};

// File system and format errors. CLI exit code 4.
class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace rcsr

#endif
