/*
   Copyright 2026 The tamekey authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TAMEKEY_ERRORS_HPP
#define TAMEKEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tamekey {

/// Base class for all diagnosable failures of the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A series had to be known beyond its truncation and no refiner could
/// supply more terms (or the refinement cap was hit).  `bound` is the
/// exponent up to which the series is known ("the answer is >= bound").
struct precision_exhausted : error {
    std::string bound;
    explicit precision_exhausted(const std::string& what, std::string bound_repr = "")
        : error(what), bound(std::move(bound_repr)) {}
};

/// Ramification divisible by the residue characteristic.
struct wild_ramification : error {
    using error::error;
};

/// Factorization (or a derived task) exceeded the configured degree bound.
struct degree_bound_exceeded : error {
    using error::error;
};

/// The coefficient tower does not support a requested operation
/// (e.g. conjugation over a non-normal tower).
struct unsupported_tower : error {
    using error::error;
};

/// Malformed scenario / literal input.
struct parse_error : error {
    int line = 0, col = 0;
    parse_error(const std::string& what, int l, int c)
        : error(what + " (line " + std::to_string(l) + ", col " + std::to_string(c) + ")"),
          line(l), col(c) {}
};

/// Input violates an operation precondition.
struct input_error : error {
    using error::error;
};

/// An internal consistency assertion failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

} // namespace tamekey

#endif
