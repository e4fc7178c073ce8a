#include "quadratic_space.hpp"

#include <stdexcept>

namespace pgrank {

const char* point_class_name(PointClass c) {
    switch (c) {
        case PointClass::isotropic: return "isotropic";
        case PointClass::square: return "square";
        case PointClass::nonsquare: return "nonsquare";
    }
    return "?";
}

namespace {

// Determinant of a small matrix over the field, by elimination.
std::uint32_t field_determinant(const Field& f, std::vector<std::uint32_t> m, unsigned dim) {
    std::uint32_t det = 1;
    for (unsigned c = 0; c < dim; ++c) {
        unsigned pivot = c;
        while (pivot < dim && m[pivot * dim + c] == 0) ++pivot;
        if (pivot == dim) return 0;
        if (pivot != c) {
            for (unsigned j = 0; j < dim; ++j) std::swap(m[pivot * dim + j], m[c * dim + j]);
            det = f.neg(det);
        }
        const std::uint32_t pv = m[c * dim + c];
        det = f.mul(det, pv);
        const std::uint32_t pv_inv = f.inv(pv);
        for (unsigned r = c + 1; r < dim; ++r) {
            const std::uint32_t factor = f.mul(m[r * dim + c], pv_inv);
            if (!factor) continue;
            for (unsigned j = c; j < dim; ++j)
                m[r * dim + j] = f.sub(m[r * dim + j], f.mul(factor, m[c * dim + j]));
        }
    }
    return det;
}

}  // namespace

QuadraticSpace::QuadraticSpace(std::shared_ptr<const Field> field, unsigned n,
                               std::uint32_t alpha, FormKind kind)
    : field_(std::move(field)), n_(n), alpha_(alpha), kind_(kind) {
    if (!field_) throw std::invalid_argument("QuadraticSpace: null field");
    if (n_ < 1) throw std::invalid_argument("QuadraticSpace: projective dimension must be >= 1");
    if (alpha_ == 0 || alpha_ >= field_->q())
        throw std::invalid_argument("QuadraticSpace: alpha must be a nonzero field element");
    if (kind_ == FormKind::conic && n_ != 2)
        throw std::invalid_argument("QuadraticSpace: the conic form requires n = 2");

    const Field& f = *field_;
    const unsigned w = width();
    gram_.assign(std::size_t(w) * w, 0);
    if (kind_ == FormKind::diagonal) {
        diag_.resize(w);
        for (unsigned i = 0; i < w; ++i) {
            std::uint32_t c = (i % 2 == 0) ? 1 : f.neg(1);
            if (i == n_) c = f.mul(c, alpha_);
            diag_[i] = c;
            gram_[std::size_t(i) * w + i] = c;
        }
    } else {
        // <X,Y> = alpha x1 y1 - (x0 y2 + x2 y0) / 2
        const std::uint32_t mh = f.neg(f.half());
        gram_[0 * 3 + 2] = mh;
        gram_[2 * 3 + 0] = mh;
        gram_[1 * 3 + 1] = alpha_;
    }
    if (field_determinant(f, gram_, w) == 0)
        throw std::invalid_argument("QuadraticSpace: degenerate form");
}

const std::vector<std::uint32_t>& QuadraticSpace::diag_coeffs() const {
    if (kind_ != FormKind::diagonal)
        throw std::invalid_argument("QuadraticSpace: conic form has no diagonal coefficients");
    return diag_;
}

void QuadraticSpace::check_vector(std::span<const std::uint32_t> v) const {
    if (v.size() != width())
        throw std::invalid_argument("QuadraticSpace: vector length " + std::to_string(v.size()) +
                                    ", expected " + std::to_string(width()));
    for (const auto c : v)
        if (c >= field_->q())
            throw std::invalid_argument("QuadraticSpace: coordinate " + std::to_string(c) +
                                        " outside GF(" + std::to_string(field_->q()) + ")");
}

std::uint32_t QuadraticSpace::evaluate_form(std::span<const std::uint32_t> v) const {
    check_vector(v);
    const Field& f = *field_;
    if (kind_ == FormKind::conic)
        return f.sub(f.mul(alpha_, f.mul(v[1], v[1])), f.mul(v[0], v[2]));
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < width(); ++i)
        acc = f.add_unchecked(acc, f.mul_unchecked(diag_[i], f.mul_unchecked(v[i], v[i])));
    return acc;
}

std::uint32_t QuadraticSpace::bilinear(std::span<const std::uint32_t> x,
                                       std::span<const std::uint32_t> y) const {
    check_vector(x);
    check_vector(y);
    const Field& f = *field_;
    const unsigned w = width();
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < w; ++i) {
        if (!x[i]) continue;
        std::uint32_t row = 0;
        for (unsigned j = 0; j < w; ++j)
            row = f.add_unchecked(row, f.mul_unchecked(gram_[std::size_t(i) * w + j], y[j]));
        acc = f.add_unchecked(acc, f.mul_unchecked(x[i], row));
    }
    return acc;
}

std::uint32_t QuadraticSpace::bilinear_polarized(std::span<const std::uint32_t> x,
                                                 std::span<const std::uint32_t> y) const {
    check_vector(x);
    check_vector(y);
    const Field& f = *field_;
    std::vector<std::uint32_t> sum(width());
    for (unsigned i = 0; i < width(); ++i) sum[i] = f.add(x[i], y[i]);
    const std::uint32_t num =
        f.sub(f.sub(evaluate_form(sum), evaluate_form(x)), evaluate_form(y));
    return f.mul(num, f.half());
}

PointClass QuadraticSpace::classify_value(std::uint32_t v) const {
    if (v == 0) return PointClass::isotropic;
    return field_->is_square(v) ? PointClass::square : PointClass::nonsquare;
}

PointClass QuadraticSpace::classify(std::span<const std::uint32_t> pt) const {
    return classify_value(evaluate_form(pt));
}

bool QuadraticSpace::perp_contains(std::span<const std::uint32_t> p,
                                   std::span<const std::uint32_t> r) const {
    return bilinear(p, r) == 0;
}

std::uint64_t PointTable::point_count(std::uint64_t q, unsigned n) {
    std::uint64_t total = 0, power = 1;
    for (unsigned i = 0; i <= n; ++i) {
        total += power;
        if (power > (std::uint64_t(1) << 62) / q)
            throw std::length_error("PointTable: point count overflows");
        power *= q;
    }
    return total;
}

PointTable::PointTable(const QuadraticSpace& space, std::uint64_t max_points)
    : width_(space.width()) {
    const Field& f = space.field();
    const std::uint64_t q = f.q();
    const unsigned n = space.n();
    const std::uint64_t total = point_count(q, n);
    if (total > max_points)
        throw std::length_error("PointTable: PG(" + std::to_string(n) + "," + std::to_string(q) +
                                ") has " + std::to_string(total) +
                                " points, above the bound " + std::to_string(max_points));

    size_ = total;
    coords_.reserve(total * width_);
    classes_.reserve(total);

    // Lexicographic order: points with more leading zeros sort first; after
    // the leading 1, remaining coordinates run through all tuples ascending.
    std::vector<std::uint32_t> v(width_, 0);
    for (unsigned lead = n + 1; lead-- > 0;) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        while (true) {
            coords_.insert(coords_.end(), v.begin(), v.end());
            classes_.push_back(space.classify(v));
            unsigned pos = n;
            for (; pos > lead; --pos) {
                if (v[pos] + 1 < q) {
                    ++v[pos];
                    break;
                }
                v[pos] = 0;
            }
            if (pos == lead) break;
        }
    }

    for (std::uint64_t i = 0; i < size_; ++i) {
        by_class_[static_cast<std::size_t>(classes_[i])].push_back(std::uint32_t(i));
        if (classes_[i] != PointClass::isotropic) aniso_.push_back(std::uint32_t(i));
    }
    counts_.isotropic = by_class_[0].size();
    counts_.square = by_class_[1].size();
    counts_.nonsquare = by_class_[2].size();
}

std::uint64_t expected_isotropic_count(std::uint64_t q, unsigned n, bool alpha_square) {
    std::uint64_t series = 0, power = 1;
    for (unsigned i = 0; i < n; ++i) {
        series += power;
        power *= q;
    }
    if (n % 2 == 0) return series;
    std::uint64_t half_power = 1;
    for (unsigned i = 0; i < (n - 1) / 2; ++i) half_power *= q;
    return alpha_square ? series + half_power : series - half_power;
}

}  // namespace pgrank
