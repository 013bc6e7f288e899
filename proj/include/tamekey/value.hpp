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

#ifndef TAMEKEY_VALUE_HPP
#define TAMEKEY_VALUE_HPP

#include <optional>
#include <string>

#include "tamekey/errors.hpp"
#include "tamekey/rational.hpp"

namespace tamekey {

/// An element of the ordered abelian group where all valuations live:
/// a rational (rank 1), a lexicographic pair with the first coordinate
/// dominant (rank 2), or the formal infinity.
///
/// Rank-1 values embed into rank 2 as (0, q); infinity absorbs addition
/// and exceeds every finite value.
class Value {
public:
    enum class Kind { rank1, rank2, infinity };

    Value() : kind_(Kind::rank1), a_(0), b_(0) {}
    static Value rat(const Rat& q) { return Value(Kind::rank1, Rat(0), q); }
    static Value rank2(const Rat& a, const Rat& b) { return Value(Kind::rank2, a, b); }
    static Value infinity() { return Value(Kind::infinity, Rat(0), Rat(0)); }

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::infinity; }
    bool is_finite() const { return kind_ != Kind::infinity; }
    bool is_rank1() const { return kind_ == Kind::rank1; }

    /// The rational payload of a rank-1 value.
    const Rat& as_rat() const {
        if (kind_ != Kind::rank1) throw input_error("not a rank-1 value");
        return b_;
    }

    /// Both coordinates, valid for rank-1 (first = 0) and rank-2 values.
    const Rat& first() const { return a_; }
    const Rat& second() const { return b_; }

    friend Value operator+(const Value& x, const Value& y) {
        if (x.is_infinity() || y.is_infinity()) return infinity();
        Kind k = (x.kind_ == Kind::rank2 || y.kind_ == Kind::rank2) ? Kind::rank2 : Kind::rank1;
        return Value(k, x.a_ + y.a_, x.b_ + y.b_);
    }

    friend Value operator-(const Value& x) {
        if (x.is_infinity()) throw input_error("cannot negate infinity");
        return Value(x.kind_, -x.a_, -x.b_);
    }

    friend Value operator-(const Value& x, const Value& y) { return x + (-y); }

    friend Value operator*(long n, const Value& x) {
        if (x.is_infinity()) return infinity();
        return Value(x.kind_, n * x.a_, n * x.b_);
    }

    // Total order: infinity on top, otherwise lexicographic with the
    // first coordinate dominant (rank-1 embeds as first = 0).
    friend bool operator<(const Value& x, const Value& y) {
        if (x.is_infinity()) return false;
        if (y.is_infinity()) return true;
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }
    friend bool operator==(const Value& x, const Value& y) {
        if (x.is_infinity() || y.is_infinity()) return x.kind_ == y.kind_;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Value& x, const Value& y) { return !(x == y); }
    friend bool operator>(const Value& x, const Value& y) { return y < x; }
    friend bool operator<=(const Value& x, const Value& y) { return !(y < x); }
    friend bool operator>=(const Value& x, const Value& y) { return !(x < y); }

    std::string str() const {
        switch (kind_) {
            case Kind::infinity: return "inf";
            case Kind::rank1: return to_string(b_);
            default: return "(" + to_string(a_) + ", " + to_string(b_) + ")";
        }
    }

private:
    Value(Kind k, Rat a, Rat b) : kind_(k), a_(std::move(a)), b_(std::move(b)) {}
    Kind kind_;
    Rat a_, b_; // rank1 stores (0, q)
};

inline int compare(const Value& x, const Value& y) {
    if (x < y) return -1;
    if (y < x) return 1;
    return 0;
}

inline const Value& min_value(const Value& x, const Value& y) { return (y < x) ? y : x; }
inline const Value& max_value(const Value& x, const Value& y) { return (x < y) ? y : x; }

/// A described subgroup of the value universe, with a decidable
/// membership predicate: (1/e)Z, all of Q, or a rank-2 lattice
/// {0} x G (first coordinate zero) resp. (1/e1)Z x (1/e2)Z.
class ValueSet {
public:
    enum class Kind { frac_z, all_q, rank2_zero_cross, rank2_lattice };

    /// (1/e) Z inside the rationals.
    static ValueSet frac_z(const Int& e) {
        ValueSet s;
        s.kind_ = Kind::frac_z;
        s.e1_ = e;
        return s;
    }
    static ValueSet integers() { return frac_z(1); }
    static ValueSet rationals() {
        ValueSet s;
        s.kind_ = Kind::all_q;
        return s;
    }
    /// {0} x G with G = (1/e)Z, or all of {0} x Q for e = 0.
    static ValueSet zero_cross(const Int& e) {
        ValueSet s;
        s.kind_ = Kind::rank2_zero_cross;
        s.e2_ = e;
        return s;
    }
    static ValueSet rank2_lattice(const Int& e1, const Int& e2) {
        ValueSet s;
        s.kind_ = Kind::rank2_lattice;
        s.e1_ = e1;
        s.e2_ = e2;
        return s;
    }

    Kind kind() const { return kind_; }

    bool contains(const Value& v) const {
        if (v.is_infinity()) return false;
        switch (kind_) {
            case Kind::frac_z:
                return v.first() == 0 && is_integer(v.second() * e1_);
            case Kind::all_q:
                return v.first() == 0;
            case Kind::rank2_zero_cross:
                if (v.first() != 0) return false;
                return e2_ == 0 || is_integer(v.second() * e2_);
            case Kind::rank2_lattice:
                return is_integer(v.first() * e1_) && is_integer(v.second() * e2_);
        }
        return false;
    }

    /// Least n >= 1 with n*gamma in the set, if one exists.
    std::optional<Int> torsion_witness(const Value& gamma) const;

    std::string str() const;

private:
    Kind kind_ = Kind::frac_z;
    Int e1_ = 1, e2_ = 1;
};

/// True (with the least witness n) when n*gamma lies in `ref` for some
/// n >= 1; false for values escaping the reference subgroup.
struct TorsionResult {
    bool torsion = false;
    Int witness = 0;
};

TorsionResult is_torsion_over(const Value& gamma, const ValueSet& ref);

} // namespace tamekey

#endif
