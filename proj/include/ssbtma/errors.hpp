// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The ssbtma Authors
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
// ------------------------------------------------------------------------

#ifndef SSBTMA_ERRORS_HPP
#define SSBTMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssbtma
{
    /// Input failed a range or consistency check (bad duty cycle, N = 0, unknown config key, ...).
    class ValidationError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Request outside the mathematical domain of an operation (q not in the index set, z <= 0, ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    /// Filesystem problems: unreadable config, unwritable output directory.
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
