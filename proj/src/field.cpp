#include "field.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgrank {

namespace {

using poly = std::vector<std::uint32_t>;  // coefficients, constant term first

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return std::uint32_t(r);
}

void poly_trim(poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic of degree k: x^k = -(f[0] + f[1]x + ... + f[k-1]x^{k-1}).
void poly_reduce(poly& a, const poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (a.size() > k) {
        for (std::size_t d = a.size() - 1; d >= k; --d) {
            const std::uint64_t c = a[d];
            if (c) {
                a[d] = 0;
                for (std::size_t j = 0; j < k; ++j)
                    a[d - k + j] = std::uint32_t((a[d - k + j] + (p - f[j]) * c) % p);
            }
        }
        a.resize(k);
    }
    poly_trim(a);
}

poly poly_mulmod(const poly& a, const poly& b, const poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = std::uint32_t((r[i + j] + ai * b[j]) % p);
    }
    poly_reduce(r, f, p);
    return r;
}

// x^(p^j) mod f by square-and-multiply on the integer exponent (small here).
poly poly_xpow(std::uint64_t e, const poly& f, std::uint32_t p) {
    poly result{1};
    poly base{0, 1};
    poly_reduce(base, f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

poly poly_mod(poly a, const poly& m, std::uint32_t p) {
    poly_trim(a);
    if (m.empty()) throw std::logic_error("poly_mod: zero modulus");
    const std::uint32_t lead_inv = mod_pow(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        if (c)
            for (std::size_t j = 0; j < m.size(); ++j)
                a[shift + j] = std::uint32_t((a[shift + j] + (p - m[j] % p) * c) % p);
        a.pop_back();
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

poly poly_gcd(poly a, poly b, std::uint32_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Rabin's test: f (monic, degree k) is irreducible iff x^(p^k) = x mod f and
// gcd(x^(p^(k/r)) - x, f) = 1 for every prime r dividing k.
bool is_irreducible(const poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 0) return false;
    poly x{0, 1};
    poly_reduce(x, f, p);
    const auto xpow_minus_x = [&](std::size_t deg) {
        std::uint64_t e = 1;
        for (std::size_t i = 0; i < deg; ++i) e *= p;
        poly g = poly_xpow(e, f, p);
        g.resize(std::max(g.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = (g[i] + p - x[i]) % p;
        poly_trim(g);
        return g;
    };
    if (!xpow_minus_x(k).empty()) return false;
    for (const auto r : prime_factors(k))
        if (poly_gcd(f, xpow_minus_x(k / r), p).size() != 1) return false;
    return true;
}

constexpr std::uint32_t table_limit = 1024;
constexpr std::uint32_t square_cache_limit = 1u << 16;

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("Field: p must be an odd prime, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("Field: k must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > max_order)
            throw std::length_error("Field: p^k exceeds the size bound " +
                                    std::to_string(max_order));
    }
    q_ = std::uint32_t(q);

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        // Scan coefficient tuples (c0, ..., c_{k-1}) ascending, c0 first.
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < k_; ++i) total *= p_;
        for (std::uint64_t t = 0; t < total; ++t) {
            poly f(k_ + 1, 0);
            f[k_] = 1;
            std::uint64_t rest = t;
            for (std::uint32_t i = 0; i < k_; ++i) {
                std::uint64_t place = 1;
                for (std::uint32_t j = 0; j < k_ - 1 - i; ++j) place *= p_;
                f[i] = std::uint32_t(rest / place);
                rest %= place;
            }
            if (is_irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("Field: no irreducible modulus found");
    }

    tables_ = q_ <= table_limit;
    if (tables_) {
        add_table_.resize(std::size_t(q_) * q_);
        mul_table_.resize(std::size_t(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b <= a; ++b) {
                const std::uint32_t s = add_generic(a, b);
                const std::uint32_t m = mul_generic(a, b);
                add_table_[std::size_t(a) * q_ + b] = s;
                add_table_[std::size_t(b) * q_ + a] = s;
                mul_table_[std::size_t(a) * q_ + b] = m;
                mul_table_[std::size_t(b) * q_ + a] = m;
            }
    }

    if (q_ <= square_cache_limit) {
        square_table_.assign(q_, 0);
        for (std::uint32_t a = 1; a < q_; ++a) square_table_[mul(a, a)] = 1;
    }

    for (std::uint32_t a = 1; a < q_; ++a)
        if (!is_square(a)) {
            first_nonsquare_ = a;
            break;
        }

    const auto factors = prime_factors(q_ - 1);
    for (std::uint32_t a = 2; a < q_; ++a) {
        bool generator = true;
        for (const auto f : factors)
            if (pow(a, (q_ - 1) / f) == 1) {
                generator = false;
                break;
            }
        if (generator) {
            primitive_ = a;
            break;
        }
    }
    if (primitive_ == 0) throw std::logic_error("Field: no primitive element found");

    half_ = inv(2);
}

Field Field::from_order(std::uint64_t q) {
    if (q < 3) throw std::invalid_argument("Field: order must be at least 3");
    if (q % 2 == 0) throw std::invalid_argument("Field: order must be odd, got " + std::to_string(q));
    if (q > max_order)
        throw std::length_error("Field: order exceeds the size bound " + std::to_string(max_order));
    for (std::uint64_t p = 3; p * p <= q; p += 2) {
        if (q % p) continue;
        std::uint64_t rest = q;
        std::uint32_t k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest != 1)
            throw std::invalid_argument("Field: " + std::to_string(q) + " is not a prime power");
        return Field(std::uint32_t(p), k);
    }
    return Field(std::uint32_t(q), 1);  // q itself is prime
}

std::string Field::modulus_string() const {
    std::string s;
    for (std::size_t d = modulus_.size(); d-- > 0;) {
        const std::uint32_t c = modulus_[d];
        if (!c) continue;
        if (!s.empty()) s += " + ";
        if (d == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += d == 1 ? "x" : "x^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

void Field::check_element(std::uint32_t a) const {
    if (a >= q_)
        throw std::invalid_argument("Field: element index " + std::to_string(a) +
                                    " outside GF(" + std::to_string(q_) + ")");
}

std::uint32_t Field::add_generic(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

std::uint32_t Field::mul_generic(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return std::uint32_t(std::uint64_t(a) * b % p_);
    poly pa = coeffs(a), pb = coeffs(b);
    poly_trim(pa);
    poly_trim(pb);
    const poly r = poly_mulmod(pa, pb, modulus_, p_);
    std::uint32_t v = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i < r.size()) v += r[i] * place;
        place *= p_;
    }
    return v;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (tables_) return add_table_[std::size_t(a) * q_ + b];
    return add_generic(a, b);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::neg(std::uint32_t a) const {
    check_element(a);
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t r = 0, place = 1, x = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * place;
        x /= p_;
        place *= p_;
    }
    return r;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (tables_) return mul_table_[std::size_t(a) * q_ + b];
    return mul_generic(a, b);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("Field: zero has no inverse");
    return pow(a, q_ - 2);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    check_element(a);
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool Field::is_square(std::uint32_t a) const {
    check_element(a);
    if (a == 0)
        throw std::invalid_argument("Field: zero is neither square nor non-square");
    if (!square_table_.empty()) return square_table_[a] != 0;
    return pow(a, (q_ - 1) / 2) == 1;
}

std::uint32_t Field::alpha(SquareClass cls) const {
    return cls == SquareClass::square ? 1 : first_nonsquare_;
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t a) const {
    check_element(a);
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

std::uint32_t Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > k_)
        throw std::invalid_argument("Field: coefficient tuple longer than the field degree");
    std::uint32_t v = 0, place = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_)
            throw std::invalid_argument("Field: coefficient " + std::to_string(c[i]) +
                                        " not reduced modulo " + std::to_string(p_));
        v += c[i] * place;
        place *= p_;
    }
    return v;
}

std::string Field::element_string(std::uint32_t a) const {
    check_element(a);
    return std::to_string(a);
}

std::uint32_t Element::same(const Element& o) const {
    if (!(*f_ == *o.f_))
        throw std::invalid_argument("Element: operands belong to different fields");
    return o.v_;
}

std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t k) {
    return std::make_shared<const Field>(p, k);
}

std::shared_ptr<const Field> make_field_q(std::uint64_t q) {
    return std::make_shared<const Field>(Field::from_order(q));
}

}  // namespace pgrank
