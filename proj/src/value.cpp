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

#include "tamekey/value.hpp"

namespace tamekey {

std::optional<Int> ValueSet::torsion_witness(const Value& gamma) const {
    if (gamma.is_infinity()) throw input_error("torsion test requires a finite value");
    switch (kind_) {
        case Kind::frac_z: {
            if (gamma.first() != 0) return std::nullopt;
            // least n with n*q in (1/e)Z: denominator of q*e in lowest terms
            return denominator(gamma.second() * e1_);
        }
        case Kind::all_q:
            if (gamma.first() != 0) return std::nullopt;
            return Int(1);
        case Kind::rank2_zero_cross: {
            if (gamma.first() != 0) return std::nullopt;
            if (e2_ == 0) return Int(1);
            return denominator(gamma.second() * e2_);
        }
        case Kind::rank2_lattice:
            return lcm(denominator(gamma.first() * e1_), denominator(gamma.second() * e2_));
    }
    return std::nullopt;
}

TorsionResult is_torsion_over(const Value& gamma, const ValueSet& ref) {
    auto w = ref.torsion_witness(gamma);
    if (!w) return {false, 0};
    return {true, *w};
}

std::string ValueSet::str() const {
    switch (kind_) {
        case Kind::frac_z:
            return e1_ == 1 ? "Z" : "(1/" + to_string(e1_) + ")Z";
        case Kind::all_q:
            return "Q";
        case Kind::rank2_zero_cross:
            return e2_ == 0 ? "{0}xQ" : "{0}x(1/" + to_string(e2_) + ")Z";
        case Kind::rank2_lattice:
            return "(1/" + to_string(e1_) + ")Z x (1/" + to_string(e2_) + ")Z";
    }
    return "?";
}

} // namespace tamekey
