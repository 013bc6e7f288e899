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

#ifndef TAMEKEY_LINALG_HPP
#define TAMEKEY_LINALG_HPP

#include <vector>

#include "tamekey/field.hpp"

namespace tamekey {

/// Incremental row-echelon basis over a Field, tracking for each inserted
/// vector its expression in terms of earlier insertions.  Used for minimal
/// polynomials (first linear dependency among powers) and for subfield /
/// coefficient-line membership tests.
class GaussianBasis {
public:
    GaussianBasis(Field k, long dim) : k_(std::move(k)), dim_(dim) {}

    struct InsertResult {
        bool dependent = false;
        /// When dependent: v = sum combo[i] * inserted[i] over previous insertions.
        std::vector<FieldElement> combo;
    };

    InsertResult insert(std::vector<FieldElement> v);
    bool contains(std::vector<FieldElement> v) const;
    long rank() const { return long(rows_.size()); }
    long dim() const { return dim_; }
    const Field& field() const { return k_; }

private:
    Field k_;
    long dim_;
    std::vector<std::vector<FieldElement>> rows_;   // echelon rows
    std::vector<std::vector<FieldElement>> exprs_;  // row = sum expr[i]*inserted[i]
    std::vector<long> pivots_;
    long inserted_count_ = 0;
};

} // namespace tamekey

#endif
