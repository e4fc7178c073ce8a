#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pgrank {

enum class SquareClass { square, nonsquare };

/// GF(p^k) for odd prime p, elements addressed by index in [0, q).
/// The index encodes the polynomial-basis coefficients as base-p digits with
/// the constant term least significant: a = c0 + c1*p + ... + c_{k-1}*p^{k-1}.
/// Enumeration order, "smallest element" and point ordering downstream all
/// refer to this index order.
class Field {
public:
    static constexpr std::uint64_t max_order = 1u << 20;

    /// Modulus is the first monic irreducible of degree k when candidates are
    /// scanned by coefficient tuple (c0, ..., c_{k-1}), constant term first,
    /// ascending. For k = 1 the modulus is x.
    Field(std::uint32_t p, std::uint32_t k);

    /// Factors q as p^k; rejects even and non-prime-power q.
    static Field from_order(std::uint64_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }

    /// Length k+1, constant term first, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Inner-loop variants: operands must already be valid element indices.
    std::uint32_t mul_unchecked(std::uint32_t a, std::uint32_t b) const {
        if (tables_) return mul_table_[std::size_t(a) * q_ + b];
        if (k_ == 1) return std::uint32_t(std::uint64_t(a) * b % p_);
        return mul_generic(a, b);
    }
    std::uint32_t add_unchecked(std::uint32_t a, std::uint32_t b) const {
        if (tables_) return add_table_[std::size_t(a) * q_ + b];
        if (k_ == 1) {
            const std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_generic(a, b);
    }

    /// Euler's criterion; rejects zero (zero is its own class, callers branch
    /// on it first).
    bool is_square(std::uint32_t a) const;

    /// square -> 1; nonsquare -> the first non-square in enumeration order.
    std::uint32_t alpha(SquareClass cls) const;

    /// Smallest element of multiplicative order q-1.
    std::uint32_t primitive() const { return primitive_; }

    std::uint32_t half() const { return half_; }

    std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
    /// Accepts up to k coefficients, each in [0, p); missing high ones are 0.
    std::uint32_t from_coeffs(std::span<const std::uint32_t> c) const;

    std::string element_string(std::uint32_t a) const;

    bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

private:
    void check_element(std::uint32_t a) const;
    std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t add_generic(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t primitive_ = 0;
    std::uint32_t half_ = 0;
    std::uint32_t first_nonsquare_ = 0;
    std::vector<std::uint32_t> add_table_;  // q*q when tables are on
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint8_t> square_table_;  // nonzero squareness cache
    bool tables_ = false;
};

/// Convenience value type for tests and small computations; checks that both
/// operands come from the same field.
class Element {
public:
    Element(std::shared_ptr<const Field> f, std::uint32_t v) : f_(std::move(f)), v_(v) {}
    std::uint32_t value() const { return v_; }
    const Field& field() const { return *f_; }

    Element operator+(const Element& o) const { return wrap(f_->add(v_, same(o))); }
    Element operator-(const Element& o) const { return wrap(f_->sub(v_, same(o))); }
    Element operator*(const Element& o) const { return wrap(f_->mul(v_, same(o))); }
    Element operator-() const { return wrap(f_->neg(v_)); }
    Element inverse() const { return wrap(f_->inv(v_)); }
    Element pow(std::uint64_t e) const { return wrap(f_->pow(v_, e)); }
    bool operator==(const Element& o) const { return v_ == same(o); }

private:
    Element wrap(std::uint32_t v) const { return Element(f_, v); }
    std::uint32_t same(const Element& o) const;

    std::shared_ptr<const Field> f_;
    std::uint32_t v_;
};

std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t k);
std::shared_ptr<const Field> make_field_q(std::uint64_t q);

}  // namespace pgrank
