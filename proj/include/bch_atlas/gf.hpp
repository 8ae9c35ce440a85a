#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bch_atlas/arith.hpp"

namespace bch_atlas {

// Field elements are passed around as integer codes: the coefficient list over
// the immediate base field evaluated in base |base|. Because a base-field
// element is a constant polynomial, its code is unchanged when it is viewed
// inside an extension, so GF(p) < GF(q) < GF(q^m) share one code space.
using Code = std::uint64_t;

struct PrimePower {
    u64 p = 0;
    unsigned e = 0;
    u64 q = 0;
};

// Throws NotPrime unless q = p^e with p prime.
PrimePower prime_power(u64 q);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static FieldPtr prime(u64 p);
    // modulus: monic, lowest degree first, irreducible over base.
    static FieldPtr extension(FieldPtr base, std::vector<Code> modulus);

    u64 characteristic() const { return p_; }
    u64 size() const { return size_; }
    unsigned degree() const { return degree_; }
    unsigned absolute_degree() const { return abs_degree_; }
    bool is_prime_field() const { return !base_; }
    const FieldPtr& base() const { return base_; }
    const std::vector<Code>& modulus() const { return modulus_; }

    // Structural equality: same characteristic and the same modulus chain.
    bool same_as(const Field& other) const;
    // True when sub is this field or sits below it in the tower.
    bool contains(const Field& sub) const;

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code div(Code a, Code b) const;
    Code pow(Code a, u128 e) const;

    std::vector<Code> coefficients(Code a) const;
    Code from_coefficients(std::span<const Code> c) const;

    u64 order(Code a) const;
    // Smallest code of multiplicative order size-1.
    Code primitive_element() const { return primitive_; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    Field() = default;

private:
    Code slow_mul(Code a, Code b) const;
    void finish();

    u64 p_ = 0;
    u64 size_ = 0;
    unsigned degree_ = 1;
    unsigned abs_degree_ = 1;
    FieldPtr base_;
    std::vector<Code> modulus_;
    std::vector<std::pair<u64, unsigned>> group_factors_;
    Code primitive_ = 0;
    // log/antilog tables for small fields, built once in finish()
    std::vector<std::uint32_t> exp_, log_;
};

// Element bound to its field. Arithmetic across different fields throws MixedFields.
class FieldElement {
public:
    FieldElement(FieldPtr field, Code code);
    static FieldElement from_coefficients(FieldPtr field, std::span<const Code> coeffs);

    Code code() const { return code_; }
    const FieldPtr& field() const { return field_; }
    std::vector<Code> coefficients() const { return field_->coefficients(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(u128 e) const;
    bool operator==(const FieldElement& o) const;

private:
    void check(const FieldElement& o) const;
    FieldPtr field_;
    Code code_;
};

// Polynomial over a field, lowest degree first, trimmed so the leading
// coefficient is nonzero. The zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(FieldPtr field, std::vector<Code> coeffs = {});
    static Poly monomial(FieldPtr field, Code c, std::size_t deg);
    static Poly x_pow_minus_one(FieldPtr field, u64 n);

    const FieldPtr& field() const { return field_; }
    const std::vector<Code>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Code coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Code leading() const { return c_.empty() ? 0 : c_.back(); }
    bool operator==(const Poly& o) const;

private:
    FieldPtr field_;
    std::vector<Code> c_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Code c);
Poly poly_monic(const Poly& a);
PolyDivision poly_divmod(const Poly& f, const Poly& g);
Poly poly_mod(const Poly& f, const Poly& g);
// d | f
bool poly_divides(const Poly& d, const Poly& f);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);
Code poly_eval(const Poly& f, Code x);
// Evaluate at a point of an extension that contains the coefficient field.
Code poly_eval_in(const Poly& f, const Field& ext, Code x);

// Irreducibility over the coefficient field: no factor of degree <= deg/2 and
// x^(Q^deg) = x mod f.
bool is_irreducible(const Poly& f);

// GF(p) < GF(q) < GF(q^m), moduli and alpha picked by smallest integer code.
struct FieldTower {
    PrimePower base;
    unsigned m = 1;
    FieldPtr prime_field;
    FieldPtr sub;  // GF(q)
    FieldPtr top;  // GF(q^m)
    std::vector<Code> mid_modulus;  // over GF(p); empty when e = 1
    std::vector<Code> top_modulus;  // over GF(q); empty when m = 1
    Code alpha = 1;

    u64 group_order() const { return top->size() - 1; }
    // (q^m-1)/n, LengthMismatch when n does not divide q^m-1.
    u64 beta_exponent(u64 n) const;
    Code beta(u64 n) const;
};

// Throws NotPrime, or DegreeOverflow once p^(e m) passes 2^63.
FieldTower build_tower(u64 p, unsigned e, unsigned m);
FieldTower build_tower_for(u64 q, unsigned m);

// First monic irreducible of the given degree over base, scanning integer codes upward.
std::vector<Code> first_irreducible(const FieldPtr& base, unsigned degree);

// prod over the q-cyclotomic coset of i mod n of (x - beta^j), over GF(q).
Poly minimal_polynomial(const FieldTower& tower, u64 n, u64 i);

}  // namespace bch_atlas
