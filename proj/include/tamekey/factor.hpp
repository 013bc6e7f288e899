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

#ifndef TAMEKEY_FACTOR_HPP
#define TAMEKEY_FACTOR_HPP

#include <optional>
#include <vector>

#include "tamekey/field.hpp"
#include "tamekey/rng.hpp"

namespace tamekey {

struct FactorPair {
    UPoly factor;       // monic irreducible
    long multiplicity;
};

struct FactorOptions {
    long rational_degree_cap = 16; // loud rejection above this over Q
    std::uint64_t seed = 0x74616d656b6579ULL;
};

/// Full factorization into monic irreducibles times the leading unit.
/// Finite fields: squarefree decomposition + distinct-degree + equal-degree
/// splitting.  Rationals: squarefree + modular factorization + Hensel
/// lifting, capped by `rational_degree_cap`.  Simple-extension towers in
/// characteristic zero: norm-based reduction to the base.
std::vector<FactorPair> factor_univariate(const UPoly& f,
                                          const FactorOptions& opts = {});

bool is_irreducible(const UPoly& f, const FactorOptions& opts = {});

/// Squarefree decomposition f = prod f_i^{m_i} (f_i squarefree, pairwise
/// coprime); valid in characteristic 0 and over finite fields.
std::vector<FactorPair> squarefree_decomposition(const UPoly& f);

/// All roots of f lying in its coefficient field, canonically sorted.
std::vector<FieldElement> roots_in_field(const UPoly& f, const FactorOptions& opts = {});

/// Some r with r^n = c, or nullopt; when several exist the canonical choice
/// is the one with lexicographically least coefficient vector.
std::optional<FieldElement> nth_root_in_field(const FieldElement& c, long n,
                                              const FactorOptions& opts = {});

struct AdjoinResult {
    Field field;        // the extension (or k itself on degree-1 collapse)
    FieldElement root;  // a root of m inside `field`
};

/// k[y]/(m) with the canonical chain embedding of k; m must be monic
/// irreducible over k (verified here via factor_univariate).
AdjoinResult adjoin_root(const Field& k, const UPoly& m, const std::string& gen_name,
                         const FactorOptions& opts = {});

/// Smallest chain extension of k containing a primitive n-th root of unity,
/// together with that root.  Wild orders (char | n) are rejected.
AdjoinResult adjoin_root_of_unity(const Field& k, long n, const FactorOptions& opts = {});

/// The n-th cyclotomic polynomial with coefficients in k (via Z).
UPoly cyclotomic_polynomial(long n, const Field& k);

/// Minimal polynomial of alpha over a chain subfield, by linear algebra on
/// its powers.
UPoly minimal_polynomial_over(const FieldElement& alpha, const Field& sub);

/// A field automorphism of a tower chain fixing a designated subfield.
/// Finite fields use Frobenius powers; characteristic-zero chains store
/// explicit generator images (requires a normal tower).
class FieldAut {
public:
    static FieldAut identity(const Field& k);
    static FieldAut frobenius_power(const Field& k, const Int& q_power);
    static FieldAut from_images(const Field& k, const Field& fixed,
                                std::vector<FieldElement> images_deep_first);

    FieldElement apply(const FieldElement& x) const;
    bool is_identity() const { return ident_; }
    const Field& domain() const { return domain_; }

private:
    Field domain_;
    Field fixed_;
    bool ident_ = false;
    Int frob_ = 0;                          // x -> x^frob when nonzero
    std::vector<FieldElement> images_;      // generator images, deepest level first
};

/// The full automorphism group of k over `fixed` (both on one chain).
/// Throws unsupported_tower when the chain is not normal over `fixed`
/// (the group would be smaller than the degree).
std::vector<FieldAut> automorphism_group(const Field& k, const Field& fixed,
                                         const FactorOptions& opts = {});

} // namespace tamekey

#endif
