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

#include "tamekey/linalg.hpp"

namespace tamekey {

GaussianBasis::InsertResult GaussianBasis::insert(std::vector<FieldElement> v) {
    if (long(v.size()) != dim_) throw internal_error("GaussianBasis: dimension mismatch");
    // expression of v in terms of inserted vectors: starts as e_{inserted_count_}
    std::vector<FieldElement> expr(inserted_count_ + 1, FieldElement(k_, 0));
    expr[inserted_count_] = FieldElement(k_, 1);
    for (size_t r = 0; r < rows_.size(); ++r) {
        long p = pivots_[r];
        if (v[p].is_zero()) continue;
        FieldElement f = v[p];
        for (long j = 0; j < dim_; ++j) v[j] = v[j] - f * rows_[r][j];
        for (size_t j = 0; j < exprs_[r].size(); ++j)
            expr[j] = expr[j] - f * exprs_[r][j];
    }
    long pivot = -1;
    for (long j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) { pivot = j; break; }
    ++inserted_count_;
    if (pivot < 0) {
        InsertResult res;
        res.dependent = true;
        // v = -sum_{i<last} expr[i]*inserted[i] relative to expr[last]=1
        res.combo.assign(expr.begin(), expr.end() - 1);
        for (auto& c : res.combo) c = -c;
        return res;
    }
    FieldElement inv = v[pivot].inverse();
    for (auto& x : v) x = x * inv;
    for (auto& x : expr) x = x * inv;
    rows_.push_back(std::move(v));
    exprs_.push_back(std::move(expr));
    pivots_.push_back(pivot);
    return {};
}

bool GaussianBasis::contains(std::vector<FieldElement> v) const {
    if (long(v.size()) != dim_) throw internal_error("GaussianBasis: dimension mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        long p = pivots_[r];
        if (v[p].is_zero()) continue;
        FieldElement f = v[p];
        for (long j = 0; j < dim_; ++j) v[j] = v[j] - f * rows_[r][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace tamekey
