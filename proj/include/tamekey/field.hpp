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

#ifndef TAMEKEY_FIELD_HPP
#define TAMEKEY_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "tamekey/errors.hpp"
#include "tamekey/rational.hpp"

namespace tamekey {

class FieldElement;
struct FieldNode;

/// An exact computable coefficient/residue field: the rationals, a prime
/// field, or a chain of simple extensions over one of those.  Fields are
/// immutable once built and referenced by shared pointer; extension
/// towers are never flattened, the chain records every step.
using Field = std::shared_ptr<const FieldNode>;

struct FieldNode {
    enum class Kind { rationals, prime, extension };

    Kind kind = Kind::rationals;
    Int p = 0;                            // characteristic
    Field base;                           // null at depth 0
    std::vector<FieldElement> modulus;    // monic, over base; size deg+1
    std::string gen_name;
    long cyclotomic_order = 0;            // generator is a primitive root of unity
    int depth = 0;

    long ext_degree() const { return modulus.empty() ? 1 : long(modulus.size()) - 1; }
};

Field rationals();
Field prime_field(const Int& p);

/// Raw extension constructor; callers must ensure `modulus` is monic and
/// irreducible over `base` (adjoin_root in factor.hpp is the checked path).
Field make_extension_unchecked(const Field& base, std::vector<FieldElement> modulus,
                               std::string gen_name, long cyclotomic_order = 0);

inline const Int& characteristic(const Field& k) { return k->p; }
inline bool is_finite_field(const Field& k) { return k->p != 0; }

/// [k : bottom] where bottom is the prime field / Q at the chain's root.
long absolute_degree(const Field& k);

/// [k : sub]; throws unless `sub` is on k's base chain.
long degree_over(const Field& k, const Field& sub);

/// True when `sub` appears on k's base chain (or equals k).
bool is_subchain(const Field& sub, const Field& k);

/// The deeper of two same-chain fields; throws on unrelated chains.
Field common_field(const Field& a, const Field& b);

std::string field_str(const Field& k);

/// An element of a Field in canonical reduced form: a rational at depth
/// zero, otherwise the coefficient vector over the base modulo the
/// tower's modulus.  Equality is representation equality.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field k, const Rat& value);              // constant at any depth
    FieldElement(Field k, long value) : FieldElement(std::move(k), Rat(value)) {}
    /// Element of an extension from its coefficient vector over the base.
    static FieldElement from_vector(Field k, std::vector<FieldElement> coeffs);
    /// The extension generator (the class of X modulo the modulus).
    static FieldElement generator(const Field& k);

    const Field& owner() const { return owner_; }
    bool valid() const { return owner_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    FieldElement pow(const Int& n) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Deterministic total order on canonical representations (used for
    /// canonical root selection and stable reports).
    friend bool canonical_less(const FieldElement& a, const FieldElement& b);

    /// Lift into a deeper field on the same chain.
    FieldElement coerce(const Field& target) const;

    /// True when the element lies in `sub` (a chain ancestor); if so the
    /// representative in `sub` can be taken with project().
    bool lies_in(const Field& sub) const;
    FieldElement project(const Field& sub) const;

    /// Rational payload; element must lie in Q / the prime field.
    Rat rational_value() const;

    /// Coefficient vector over the direct base (padded to modulus degree).
    std::vector<FieldElement> vector_over_base() const;

    /// Flatten to a vector over `sub` along the chain; length = [owner : sub].
    std::vector<FieldElement> flatten(const Field& sub) const;

    std::string str() const;

private:
    friend struct FieldOps;
    Field owner_;
    Rat rat_;                          // depth 0 payload
    std::vector<FieldElement> vec_;    // extension payload, size < deg(modulus)
    void normalize();
};

/// Dense univariate polynomial over a Field; the zero polynomial has
/// degree -1.  Used for moduli, residue characteristic polynomials and
/// factorization.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Field k) : k_(std::move(k)) {}
    UPoly(Field k, std::vector<FieldElement> coeffs);

    static UPoly zero(const Field& k) { return UPoly(k); }
    static UPoly one(const Field& k);
    static UPoly x(const Field& k);
    static UPoly constant(const FieldElement& c);
    /// c0 + c1 X + ... from rational constants.
    static UPoly from_rats(const Field& k, const std::vector<Rat>& cs);

    const Field& field() const { return k_; }
    long degree() const { return long(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of X^i (zero beyond the degree).
    FieldElement operator[](long i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    const FieldElement& leading() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const FieldElement& s) const;
    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Euclidean division; the divisor's leading coefficient is inverted.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    UPoly mod(const UPoly& m) const;
    UPoly monic() const;
    UPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    UPoly coerce(const Field& target) const;

    /// Monic gcd via the Euclidean algorithm.
    static UPoly gcd(UPoly a, UPoly b);
    /// g = gcd(a,b) = u*a + v*b.
    static UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& u, UPoly& v);
    /// (this^n) mod m by repeated squaring.
    UPoly pow_mod(const Int& n, const UPoly& m) const;

    std::string str(const std::string& var = "X") const;

private:
    Field k_;
    std::vector<FieldElement> c_;
    void normalize();
};

/// Number of elements of a finite field.
Int field_cardinality(const Field& k);

} // namespace tamekey

#endif
