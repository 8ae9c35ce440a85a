#include "bch_atlas/gf.hpp"

#include <numeric>

#include "bch_atlas/error.hpp"

namespace bch_atlas {

namespace {

constexpr u64 kTableLimit = u64{1} << 21;
constexpr u64 kSizeCap = u64{1} << 63;

}  // namespace

PrimePower prime_power(u64 q) {
    if (q < 2) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
    auto f = factorize(q);
    if (f.size() != 1) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
    return {f[0].first, f[0].second, q};
}

// ---------------------------------------------------------------- Field

FieldPtr Field::prime(u64 p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p > kSizeCap) throw Error(ErrorKind::DegreeOverflow, "prime exceeds 2^63");
    auto f = std::make_shared<Field>();
    f->p_ = p;
    f->size_ = p;
    f->finish();
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Code> modulus) {
    if (!base) throw Error(ErrorKind::InvalidArgument, "extension needs a base field");
    if (modulus.size() < 2 || modulus.back() != 1) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree >= 1");
    }
    const unsigned d = static_cast<unsigned>(modulus.size() - 1);
    u128 size = 1;
    for (unsigned i = 0; i < d; ++i) {
        size *= base->size();
        if (size > kSizeCap) throw Error(ErrorKind::DegreeOverflow, "field size exceeds 2^63");
    }
    Poly mp(base, modulus);
    if (!is_irreducible(mp)) throw Error(ErrorKind::InvalidArgument, "modulus is reducible");
    auto f = std::make_shared<Field>();
    f->p_ = base->characteristic();
    f->size_ = static_cast<u64>(size);
    f->degree_ = d;
    f->abs_degree_ = base->absolute_degree() * d;
    f->modulus_ = std::move(modulus);
    f->base_ = std::move(base);
    f->finish();
    return f;
}

void Field::finish() {
    group_factors_ = factorize(size_ - 1);
    for (Code c = 1; c < size_; ++c) {
        if (order(c) == size_ - 1) {
            primitive_ = c;
            break;
        }
    }
    if (size_ <= kTableLimit) {
        const u64 n = size_ - 1;
        std::vector<std::uint32_t> ex(2 * n + 1), lg(size_, 0);
        Code x = 1;
        for (u64 i = 0; i < n; ++i) {
            ex[i] = static_cast<std::uint32_t>(x);
            lg[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, primitive_);
        }
        for (u64 i = n; i <= 2 * n; ++i) ex[i] = ex[i - n];
        exp_ = std::move(ex);
        log_ = std::move(lg);
    }
}

bool Field::same_as(const Field& other) const {
    if (this == &other) return true;
    if (p_ != other.p_ || size_ != other.size_ || modulus_ != other.modulus_) return false;
    if (!base_ || !other.base_) return !base_ && !other.base_;
    return base_->same_as(*other.base_);
}

bool Field::contains(const Field& sub) const {
    for (const Field* f = this; f; f = f->base_.get()) {
        if (f->same_as(sub)) return true;
    }
    return false;
}

Code Field::add(Code a, Code b) const {
    if (p_ == 2) return a ^ b;
    if (!base_) {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    // digit-wise over the absolute base-p expansion
    Code r = 0, place = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

Code Field::neg(Code a) const {
    if (p_ == 2) return a;
    if (!base_) return a == 0 ? 0 : p_ - a;
    Code r = 0, place = 1;
    while (a) {
        r += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Code Field::slow_mul(Code a, Code b) const {
    if (!base_) return mulmod(a, b, p_);
    const Field& B = *base_;
    const unsigned d = degree_;
    auto ca = coefficients(a), cb = coefficients(b);
    std::vector<Code> prod(2 * d - 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        if (!ca[i]) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (!cb[j]) continue;
            prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
        }
    }
    for (unsigned i = 2 * d - 2; i >= d; --i) {
        Code c = prod[i];
        if (!c) continue;
        for (unsigned j = 0; j < d; ++j) {
            prod[i - d + j] = B.sub(prod[i - d + j], B.mul(c, modulus_[j]));
        }
        prod[i] = 0;
    }
    prod.resize(d);
    return from_coefficients(prod);
}

Code Field::mul(Code a, Code b) const {
    if (!a || !b) return 0;
    if (!exp_.empty()) return exp_[static_cast<u64>(log_[a]) + log_[b]];
    return slow_mul(a, b);
}

Code Field::inv(Code a) const {
    if (!a) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return exp_[(size_ - 1) - log_[a]];
    if (!base_) return powmod(a, p_ - 2, p_);
    return pow(a, size_ - 2);
}

Code Field::div(Code a, Code b) const { return mul(a, inv(b)); }

Code Field::pow(Code a, u128 e) const {
    if (!a) return e == 0 ? 1 : 0;
    const u64 n = size_ - 1;
    u64 r = static_cast<u64>(e % n);
    if (!exp_.empty()) return exp_[mulmod(log_[a], r, n)];
    Code acc = 1, b = a;
    while (r) {
        if (r & 1) acc = mul(acc, b);
        b = mul(b, b);
        r >>= 1;
    }
    return acc;
}

std::vector<Code> Field::coefficients(Code a) const {
    if (!base_) return {a};
    std::vector<Code> c(degree_);
    const u64 Q = base_->size();
    for (unsigned i = 0; i < degree_; ++i) {
        c[i] = a % Q;
        a /= Q;
    }
    return c;
}

Code Field::from_coefficients(std::span<const Code> c) const {
    if (!base_) {
        if (c.size() != 1 || c[0] >= p_) throw Error(ErrorKind::InvalidArgument, "bad prime-field coefficient");
        return c[0];
    }
    if (c.size() != degree_) throw Error(ErrorKind::InvalidArgument, "coefficient count must equal the degree");
    const u64 Q = base_->size();
    Code r = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= Q) throw Error(ErrorKind::InvalidArgument, "coefficient outside the base field");
        r = r * Q + c[i];
    }
    return r;
}

u64 Field::order(Code a) const {
    if (!a) throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative order");
    u64 ord = size_ - 1;
    for (auto [p, k] : group_factors_) {
        for (unsigned i = 0; i < k; ++i) {
            if (pow(a, ord / p) == 1) ord /= p;
            else break;
        }
    }
    return ord;
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_->size()) throw Error(ErrorKind::InvalidArgument, "code outside the field");
}

FieldElement FieldElement::from_coefficients(FieldPtr field, std::span<const Code> coeffs) {
    Code c = field->from_coefficients(coeffs);
    return FieldElement(std::move(field), c);
}

void FieldElement::check(const FieldElement& o) const {
    if (!field_->same_as(*o.field_)) throw Error(ErrorKind::MixedFields, "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check(o);
    return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check(o);
    return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check(o);
    return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check(o);
    return {field_, field_->div(code_, o.code_)};
}
FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(u128 e) const { return {field_, field_->pow(code_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
    return field_->same_as(*o.field_) && code_ == o.code_;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Code c : c_) {
        if (c >= field_->size()) throw Error(ErrorKind::InvalidArgument, "coefficient outside the field");
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(FieldPtr field, Code c, std::size_t deg) {
    std::vector<Code> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(FieldPtr field, u64 n) {
    std::vector<Code> v(n + 1, 0);
    v[n] = 1;
    v[0] = field->neg(1);
    if (n == 0) v[0] = 0;
    return Poly(std::move(field), std::move(v));
}

bool Poly::operator==(const Poly& o) const { return field_->same_as(*o.field_) && c_ == o.c_; }

namespace {

void same_field(const Poly& a, const Poly& b) {
    if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::MixedFields, "polynomials over different fields");
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
    same_field(a, b);
    const Field& F = *a.field();
    std::vector<Code> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(a.field(), std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    same_field(a, b);
    const Field& F = *a.field();
    std::vector<Code> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field(), std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    const Field& F = *a.field();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Code> r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j]) r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
        }
    }
    return Poly(a.field(), std::move(r));
}

Poly poly_scale(const Poly& a, Code c) {
    const Field& F = *a.field();
    std::vector<Code> r(a.coeffs());
    for (auto& v : r) v = F.mul(v, c);
    return Poly(a.field(), std::move(r));
}

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.field()->inv(a.leading()));
}

PolyDivision poly_divmod(const Poly& f, const Poly& g) {
    same_field(f, g);
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& F = *f.field();
    std::vector<Code> r(f.coeffs());
    const auto& d = g.coeffs();
    const std::size_t dg = d.size() - 1;
    if (r.size() < d.size()) return {Poly(f.field()), f};
    std::vector<Code> quo(r.size() - dg, 0);
    const Code lead_inv = F.inv(d.back());
    for (std::size_t i = r.size(); i-- > dg;) {
        if (!r[i]) continue;
        Code c = F.mul(r[i], lead_inv);
        quo[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) {
            if (d[j]) r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, d[j]));
        }
    }
    r.resize(dg);
    return {Poly(f.field(), std::move(quo)), Poly(f.field(), std::move(r))};
}

Poly poly_mod(const Poly& f, const Poly& g) { return poly_divmod(f, g).remainder; }

bool poly_divides(const Poly& d, const Poly& f) { return poly_mod(f, d).is_zero(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
    same_field(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    Poly g = poly_gcd(a, b);
    return poly_monic(poly_mul(poly_divmod(a, g).quotient, b));
}

Code poly_eval(const Poly& f, Code x) {
    const Field& F = *f.field();
    if (x >= F.size()) throw Error(ErrorKind::MixedFields, "evaluation point outside the coefficient field");
    Code acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs()[i]);
    return acc;
}

Code poly_eval_in(const Poly& f, const Field& ext, Code x) {
    if (!ext.contains(*f.field())) throw Error(ErrorKind::MixedFields, "field does not contain the coefficients");
    if (x >= ext.size()) throw Error(ErrorKind::InvalidArgument, "point outside the field");
    Code acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), f.coeffs()[i]);
    return acc;
}

namespace {

Poly powmod_poly(const Poly& base, u64 e, const Poly& mod) {
    Poly result(base.field(), {1});
    Poly b = poly_mod(base, mod);
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, b), mod);
        e >>= 1;
        if (e) b = poly_mod(poly_mul(b, b), mod);
    }
    return result;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    const long d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const u64 Q = f.field()->size();
    const Poly x(f.field(), {0, 1});
    Poly h = x;
    for (long k = 1; k <= d; ++k) {
        h = powmod_poly(h, Q, f);
        if (2 * k <= d) {
            Poly g = poly_gcd(f, poly_sub(h, x));
            if (g.degree() > 0) return false;
        }
    }
    return h == x;
}

std::vector<Code> first_irreducible(const FieldPtr& base, unsigned degree) {
    if (degree == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
    const u64 Q = base->size();
    u128 count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        count *= Q;
        if (count > kSizeCap) throw Error(ErrorKind::DegreeOverflow, "search space exceeds 2^63");
    }
    std::vector<Code> c(degree + 1, 0);
    c[degree] = 1;
    for (u64 x = 0; x < static_cast<u64>(count); ++x) {
        u64 t = x;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = t % Q;
            t /= Q;
        }
        if (degree > 1 && c[0] == 0) continue;  // divisible by x
        if (is_irreducible(Poly(base, c))) return c;
    }
    throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

// ---------------------------------------------------------------- tower

u64 FieldTower::beta_exponent(u64 n) const {
    const u64 N = group_order();
    if (n == 0 || N % n != 0) {
        throw Error(ErrorKind::LengthMismatch,
                    "n = " + std::to_string(n) + " does not divide q^m - 1 = " + std::to_string(N));
    }
    return N / n;
}

Code FieldTower::beta(u64 n) const { return top->pow(alpha, beta_exponent(n)); }

FieldTower build_tower(u64 p, unsigned e, unsigned m) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0 || m == 0) throw Error(ErrorKind::InvalidArgument, "e and m must be positive");
    u128 size = 1;
    for (unsigned i = 0; i < e * m; ++i) {
        size *= p;
        if (size > kSizeCap) throw Error(ErrorKind::DegreeOverflow, "p^(e m) exceeds 2^63");
    }
    FieldTower t;
    t.base = {p, e, upow(p, e)};
    t.m = m;
    t.prime_field = Field::prime(p);
    if (e > 1) {
        t.mid_modulus = first_irreducible(t.prime_field, e);
        t.sub = Field::extension(t.prime_field, t.mid_modulus);
    } else {
        t.sub = t.prime_field;
    }
    if (m > 1) {
        t.top_modulus = first_irreducible(t.sub, m);
        t.top = Field::extension(t.sub, t.top_modulus);
    } else {
        t.top = t.sub;
    }
    t.alpha = t.top->primitive_element();
    return t;
}

FieldTower build_tower_for(u64 q, unsigned m) {
    PrimePower pp = prime_power(q);
    return build_tower(pp.p, pp.e, m);
}

Poly minimal_polynomial(const FieldTower& tower, u64 n, u64 i) {
    const u64 q = tower.base.q;
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    if (std::gcd(n, q) != 1) throw Error(ErrorKind::NotCoprime, "gcd(n, q) != 1");
    const Code beta = tower.beta(n);
    if (i >= n) throw Error(ErrorKind::ResidueOutOfRange, std::to_string(i) + " >= n");
    const Field& F = *tower.top;
    std::vector<Code> prod{1};
    u64 j = i;
    do {
        const Code root = F.pow(beta, j);
        std::vector<Code> next(prod.size() + 1, 0);
        for (std::size_t k = 0; k < prod.size(); ++k) {
            next[k + 1] = F.add(next[k + 1], prod[k]);
            next[k] = F.sub(next[k], F.mul(root, prod[k]));
        }
        prod = std::move(next);
        j = mulmod(j, q, n);
    } while (j != i);
    for (Code c : prod) {
        if (c >= q) throw Error(ErrorKind::InvalidArgument, "conjugate product left the subfield");
    }
    return Poly(tower.sub, std::move(prod));
}

}  // namespace bch_atlas
