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

#include "tamekey/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace tamekey {

// ---------------------------------------------------------------------------
// Field construction

Field rationals() {
    static Field q = std::make_shared<FieldNode>();
    return q;
}

Field prime_field(const Int& p) {
    static std::map<std::string, Field> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = to_string(p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw input_error("prime field modulus " + key + " is not prime");
    auto node = std::make_shared<FieldNode>();
    node->kind = FieldNode::Kind::prime;
    node->p = p;
    cache[key] = node;
    return node;
}

Field make_extension_unchecked(const Field& base, std::vector<FieldElement> modulus,
                               std::string gen_name, long cyclotomic_order) {
    if (modulus.size() < 2) throw input_error("extension modulus must have degree >= 1");
    if (!modulus.back().is_one()) throw input_error("extension modulus must be monic");
    auto node = std::make_shared<FieldNode>();
    node->kind = FieldNode::Kind::extension;
    node->p = base->p;
    node->base = base;
    node->modulus = std::move(modulus);
    node->gen_name = std::move(gen_name);
    node->cyclotomic_order = cyclotomic_order;
    node->depth = base->depth + 1;
    return node;
}

long absolute_degree(const Field& k) {
    long d = 1;
    for (Field f = k; f && f->kind == FieldNode::Kind::extension; f = f->base)
        d *= f->ext_degree();
    return d;
}

bool is_subchain(const Field& sub, const Field& k) {
    for (Field f = k; f; f = f->base)
        if (f.get() == sub.get()) return true;
    return false;
}

long degree_over(const Field& k, const Field& sub) {
    long d = 1;
    for (Field f = k; f; f = f->base) {
        if (f.get() == sub.get()) return d;
        if (f->kind != FieldNode::Kind::extension)
            break;
        d *= f->ext_degree();
    }
    throw input_error("degree_over: fields are not on one chain");
}

Field common_field(const Field& a, const Field& b) {
    if (is_subchain(b, a)) return a;
    if (is_subchain(a, b)) return b;
    throw unsupported_tower("elements live on unrelated tower chains");
}

std::string field_str(const Field& k) {
    switch (k->kind) {
        case FieldNode::Kind::rationals: return "Q";
        case FieldNode::Kind::prime: return "F_" + to_string(k->p);
        case FieldNode::Kind::extension: {
            std::string m;
            {
                UPoly mp(k->base, k->modulus);
                m = mp.str(k->gen_name);
            }
            return field_str(k->base) + "(" + k->gen_name + " | " + m + " = 0)";
        }
    }
    return "?";
}

Int field_cardinality(const Field& k) {
    if (k->p == 0) throw input_error("cardinality of an infinite field");
    Int c;
    mpz_pow_ui(c.get_mpz_t(), k->p.get_mpz_t(), absolute_degree(k));
    return c;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

Rat reduce_mod_p(const Rat& v, const Int& p) {
    Int d = den(v) % p;
    if (d == 0) throw input_error("denominator divisible by the characteristic");
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
        throw internal_error("no modular inverse");
    Int n = (num(v) % p) * dinv % p;
    if (n < 0) n += p;
    return Rat(n);
}

} // namespace

FieldElement::FieldElement(Field k, const Rat& value) : owner_(std::move(k)) {
    if (!owner_) throw input_error("null field");
    if (owner_->kind == FieldNode::Kind::extension) {
        FieldElement c(owner_->base, value);
        if (!c.is_zero()) vec_.push_back(std::move(c));
    } else if (owner_->kind == FieldNode::Kind::prime) {
        rat_ = reduce_mod_p(value, owner_->p);
    } else {
        rat_ = value;
    }
}

FieldElement FieldElement::from_vector(Field k, std::vector<FieldElement> coeffs) {
    if (k->kind != FieldNode::Kind::extension)
        throw input_error("from_vector requires an extension field");
    FieldElement e;
    e.owner_ = std::move(k);
    long degm = e.owner_->ext_degree();
    if (long(coeffs.size()) > degm)
        throw input_error("coefficient vector longer than the extension degree");
    for (auto& c : coeffs) e.vec_.push_back(c.coerce(e.owner_->base));
    e.normalize();
    return e;
}

FieldElement FieldElement::generator(const Field& k) {
    if (k->kind != FieldNode::Kind::extension)
        throw input_error("only extension fields have a generator");
    std::vector<FieldElement> v = {FieldElement(k->base, 0), FieldElement(k->base, 1)};
    return from_vector(k, std::move(v));
}

void FieldElement::normalize() {
    while (!vec_.empty() && vec_.back().is_zero()) vec_.pop_back();
}

bool FieldElement::is_zero() const {
    if (!owner_) throw input_error("uninitialized field element");
    if (owner_->kind == FieldNode::Kind::extension) return vec_.empty();
    return rat_ == 0;
}

bool FieldElement::is_one() const {
    if (owner_->kind == FieldNode::Kind::extension)
        return vec_.size() == 1 && vec_[0].is_one();
    return rat_ == 1;
}

FieldElement FieldElement::coerce(const Field& target) const {
    if (owner_.get() == target.get()) return *this;
    if (is_subchain(owner_, target)) {
        FieldElement e = *this;
        // wrap through each intermediate level as a constant
        std::vector<Field> levels;
        for (Field f = target; f.get() != owner_.get(); f = f->base) levels.push_back(f);
        for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
            FieldElement w;
            w.owner_ = *it;
            if (!e.is_zero()) w.vec_.push_back(std::move(e));
            e = std::move(w);
        }
        return e;
    }
    if (is_subchain(target, owner_)) return project(target);
    throw unsupported_tower("cannot coerce between unrelated tower chains");
}

bool FieldElement::lies_in(const Field& sub) const {
    if (owner_.get() == sub.get()) return true;
    if (is_subchain(owner_, sub)) return true;
    if (!is_subchain(sub, owner_)) return false;
    const FieldElement* cur = this;
    Field level = owner_;
    while (level.get() != sub.get()) {
        if (cur->vec_.size() > 1) return false;
        if (cur->vec_.empty()) return true; // zero lies everywhere on the chain
        cur = &cur->vec_[0];
        level = level->base;
    }
    return true;
}

FieldElement FieldElement::project(const Field& sub) const {
    if (owner_.get() == sub.get()) return *this;
    if (is_subchain(owner_, sub)) return coerce(sub);
    if (!lies_in(sub)) throw input_error("element does not lie in the requested subfield");
    FieldElement cur = *this;
    while (cur.owner_.get() != sub.get()) {
        if (cur.vec_.empty())
            cur = FieldElement(cur.owner_->base, 0);
        else
            cur = cur.vec_[0];
    }
    return cur;
}

Rat FieldElement::rational_value() const {
    const FieldElement* cur = this;
    while (cur->owner_->kind == FieldNode::Kind::extension) {
        if (cur->vec_.size() > 1)
            throw input_error("element is not a bottom-field constant");
        if (cur->vec_.empty()) return Rat(0);
        cur = &cur->vec_[0];
    }
    return cur->rat_;
}

std::vector<FieldElement> FieldElement::vector_over_base() const {
    if (owner_->kind != FieldNode::Kind::extension)
        throw input_error("vector_over_base requires an extension element");
    std::vector<FieldElement> v = vec_;
    FieldElement z(owner_->base, 0);
    v.resize(owner_->ext_degree(), z);
    return v;
}

std::vector<FieldElement> FieldElement::flatten(const Field& sub) const {
    if (owner_.get() == sub.get()) return {*this};
    if (!is_subchain(sub, owner_)) throw input_error("flatten: not a chain subfield");
    std::vector<FieldElement> out;
    for (const auto& c : vector_over_base()) {
        auto part = c.flatten(sub);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    if (owner_->kind == FieldNode::Kind::extension) {
        for (auto& c : r.vec_) c = -c;
    } else if (owner_->kind == FieldNode::Kind::prime) {
        if (r.rat_ != 0) r.rat_ = Rat(owner_->p - num(r.rat_));
    } else {
        r.rat_ = -r.rat_;
    }
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    Field k = common_field(a.owner(), b.owner());
    FieldElement x = a.coerce(k), y = b.coerce(k);
    if (k->kind == FieldNode::Kind::extension) {
        if (x.vec_.size() < y.vec_.size()) std::swap(x.vec_, y.vec_);
        for (size_t i = 0; i < y.vec_.size(); ++i) x.vec_[i] = x.vec_[i] + y.vec_[i];
        x.normalize();
        return x;
    }
    FieldElement r = x;
    r.rat_ = x.rat_ + y.rat_;
    if (k->kind == FieldNode::Kind::prime) r.rat_ = reduce_mod_p(r.rat_, k->p);
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

namespace {

// reduce a raw coefficient vector modulo the (monic) tower modulus
void reduce_vec(std::vector<FieldElement>& v, const Field& k) {
    const auto& m = k->modulus;
    long degm = k->ext_degree();
    for (long i = long(v.size()) - 1; i >= degm; --i) {
        FieldElement lead = v[i];
        if (lead.is_zero()) continue;
        for (long j = 0; j < degm; ++j)
            v[i - degm + j] = v[i - degm + j] - lead * m[j];
        v[i] = FieldElement(k->base, 0);
    }
    v.resize(std::min<size_t>(v.size(), degm));
}

} // namespace

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    Field k = common_field(a.owner(), b.owner());
    FieldElement x = a.coerce(k), y = b.coerce(k);
    if (k->kind != FieldNode::Kind::extension) {
        FieldElement r = x;
        r.rat_ = x.rat_ * y.rat_;
        if (k->kind == FieldNode::Kind::prime) r.rat_ = reduce_mod_p(r.rat_, k->p);
        return r;
    }
    if (x.vec_.empty() || y.vec_.empty()) return FieldElement(k, 0);
    std::vector<FieldElement> prod(x.vec_.size() + y.vec_.size() - 1, FieldElement(k->base, 0));
    for (size_t i = 0; i < x.vec_.size(); ++i)
        for (size_t j = 0; j < y.vec_.size(); ++j)
            prod[i + j] = prod[i + j] + x.vec_[i] * y.vec_[j];
    reduce_vec(prod, k);
    FieldElement r;
    r.owner_ = k;
    r.vec_ = std::move(prod);
    r.normalize();
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    if (owner_->kind != FieldNode::Kind::extension) {
        FieldElement r = *this;
        if (owner_->kind == FieldNode::Kind::prime)
            r.rat_ = reduce_mod_p(Rat(Int(1), num(rat_)), owner_->p);
        else
            r.rat_ = 1 / rat_;
        return r;
    }
    UPoly elem(owner_->base, vec_);
    UPoly m(owner_->base, owner_->modulus);
    UPoly u, v;
    UPoly g = UPoly::ext_gcd(elem, m, u, v);
    if (g.degree() != 0)
        throw internal_error("non-invertible element: reducible tower modulus?");
    UPoly inv = u.scaled(g[0].inverse()).mod(m);
    return FieldElement::from_vector(owner_, inv.coeffs());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::pow(const Int& n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement base = *this;
    FieldElement acc(owner_, 1);
    Int e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    Field k = common_field(a.owner(), b.owner());
    FieldElement x = a.coerce(k), y = b.coerce(k);
    if (k->kind != FieldNode::Kind::extension) return x.rat_ == y.rat_;
    if (x.vec_.size() != y.vec_.size()) return false;
    for (size_t i = 0; i < x.vec_.size(); ++i)
        if (!(x.vec_[i] == y.vec_[i])) return false;
    return true;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
    Field k = common_field(a.owner(), b.owner());
    FieldElement x = a.coerce(k), y = b.coerce(k);
    if (k->kind != FieldNode::Kind::extension) return x.rat_ < y.rat_;
    long degm = k->ext_degree();
    FieldElement z(k->base, 0);
    for (long i = 0; i < degm; ++i) {
        const FieldElement& xi = i < long(x.vec_.size()) ? x.vec_[i] : z;
        const FieldElement& yi = i < long(y.vec_.size()) ? y.vec_[i] : z;
        if (!(xi == yi)) return canonical_less(xi, yi);
    }
    return false;
}

std::string FieldElement::str() const {
    if (owner_->kind != FieldNode::Kind::extension) return to_string(rat_);
    if (vec_.empty()) return "0";
    UPoly p(owner_->base, vec_);
    return p.str(owner_->gen_name);
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(Field k, std::vector<FieldElement> coeffs) : k_(std::move(k)) {
    c_.reserve(coeffs.size());
    for (auto& c : coeffs) c_.push_back(c.coerce(k_));
    normalize();
}

void UPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::one(const Field& k) { return UPoly(k, {FieldElement(k, 1)}); }

UPoly UPoly::x(const Field& k) {
    return UPoly(k, {FieldElement(k, 0), FieldElement(k, 1)});
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(c.owner(), {c}); }

UPoly UPoly::from_rats(const Field& k, const std::vector<Rat>& cs) {
    std::vector<FieldElement> v;
    v.reserve(cs.size());
    for (const auto& q : cs) v.emplace_back(k, q);
    return UPoly(k, std::move(v));
}

FieldElement UPoly::operator[](long i) const {
    if (i < 0 || i > degree()) return FieldElement(k_, 0);
    return c_[i];
}

const FieldElement& UPoly::leading() const {
    if (c_.empty()) throw input_error("zero polynomial has no leading coefficient");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    Field k = common_field(a.k_, b.k_);
    UPoly r = a.coerce(k);
    UPoly bb = b.coerce(k);
    if (r.c_.size() < bb.c_.size()) std::swap(r.c_, bb.c_);
    for (size_t i = 0; i < bb.c_.size(); ++i) r.c_[i] = r.c_[i] + bb.c_[i];
    r.normalize();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    Field k = common_field(a.k_, b.k_);
    if (a.is_zero() || b.is_zero()) return UPoly::zero(k);
    UPoly x = a.coerce(k), y = b.coerce(k);
    std::vector<FieldElement> prod(x.c_.size() + y.c_.size() - 1, FieldElement(k, 0));
    for (size_t i = 0; i < x.c_.size(); ++i)
        for (size_t j = 0; j < y.c_.size(); ++j)
            prod[i + j] = prod[i + j] + x.c_[i] * y.c_[j];
    UPoly r(k);
    r.c_ = std::move(prod);
    r.normalize();
    return r;
}

UPoly UPoly::scaled(const FieldElement& s) const {
    UPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.normalize();
    return r;
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return false;
    for (long i = 0; i <= a.degree(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    Field k = common_field(a.k_, b.k_);
    UPoly x = a.coerce(k), y = b.coerce(k);
    q = UPoly::zero(k);
    r = x;
    FieldElement linv = y.leading().inverse();
    long db = y.degree();
    if (r.degree() >= db) q.c_.assign(r.degree() - db + 1, FieldElement(k, 0));
    while (r.degree() >= db) {
        long shift = r.degree() - db;
        FieldElement f = r.leading() * linv;
        q.c_[shift] = f;
        for (long i = 0; i <= db; ++i)
            r.c_[shift + i] = r.c_[shift + i] - f * y.c_[i];
        r.normalize();
    }
    q.normalize();
}

UPoly UPoly::mod(const UPoly& m) const {
    UPoly q, r;
    divmod(*this, m, q, r);
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UPoly UPoly::derivative() const {
    if (degree() < 1) return UPoly::zero(k_);
    std::vector<FieldElement> d;
    d.reserve(degree());
    for (long i = 1; i <= degree(); ++i) d.push_back(c_[i] * FieldElement(k_, i));
    return UPoly(k_, std::move(d));
}

FieldElement UPoly::eval(const FieldElement& x) const {
    Field k = common_field(k_, x.owner());
    FieldElement acc(k, 0);
    for (long i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::coerce(const Field& target) const {
    if (target.get() == k_.get()) return *this;
    UPoly r(target);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c.coerce(target));
    r.normalize();
    return r;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    Field k = common_field(a.k_, b.k_);
    a = a.coerce(k);
    b = b.coerce(k);
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UPoly UPoly::ext_gcd(const UPoly& a, const UPoly& b, UPoly& u, UPoly& v) {
    Field k = common_field(a.k_, b.k_);
    UPoly r0 = a.coerce(k), r1 = b.coerce(k);
    UPoly s0 = UPoly::one(k), s1 = UPoly::zero(k);
    UPoly t0 = UPoly::zero(k), t1 = UPoly::one(k);
    while (!r1.is_zero()) {
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly s = s0 - q * s1;
        UPoly t = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    u = s0;
    v = t0;
    return r0;
}

UPoly UPoly::pow_mod(const Int& n, const UPoly& m) const {
    UPoly base = this->mod(m);
    UPoly acc = UPoly::one(k_);
    Int e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = (acc * base).mod(m);
        e >>= 1;
        if (e > 0) base = (base * base).mod(m);
    }
    return acc;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].str();
        bool needs_parens = cs.find_first_of("+*^") != std::string::npos ||
                            cs.find('-', 1) != std::string::npos;
        if (i == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (!c_[i].is_one()) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace tamekey
