#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"

namespace pgrank {

enum class FormKind { diagonal, conic };

enum class PointClass : std::uint8_t { isotropic = 0, square = 1, nonsquare = 2 };

const char* point_class_name(PointClass c);

/// Nondegenerate quadratic form on the (n+1)-dimensional vector space over
/// GF(q), together with its polar form. Two shapes:
///   diagonal: Q(X) = x0^2 - x1^2 + x2^2 - ... + (-1)^n alpha xn^2,
///   conic (n = 2 only): Q'(X) = alpha x1^2 - x0 x2.
class QuadraticSpace {
public:
    QuadraticSpace(std::shared_ptr<const Field> field, unsigned n, std::uint32_t alpha,
                   FormKind kind);

    unsigned n() const { return n_; }
    unsigned width() const { return n_ + 1; }
    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    FormKind kind() const { return kind_; }
    std::uint32_t alpha() const { return alpha_; }
    bool alpha_is_square() const { return field_->is_square(alpha_); }

    /// Diagonal Gram entries (1, -1, 1, ..., (-1)^n alpha); diagonal form only.
    const std::vector<std::uint32_t>& diag_coeffs() const;

    /// Row-major (n+1) x (n+1) matrix of the polar form: <X,Y> = X G Y^T.
    const std::vector<std::uint32_t>& gram() const { return gram_; }

    std::uint32_t evaluate_form(std::span<const std::uint32_t> v) const;
    std::uint32_t bilinear(std::span<const std::uint32_t> x,
                           std::span<const std::uint32_t> y) const;
    /// Same value via (Q(X+Y) - Q(X) - Q(Y)) / 2; used to cross-check gram().
    std::uint32_t bilinear_polarized(std::span<const std::uint32_t> x,
                                     std::span<const std::uint32_t> y) const;

    PointClass classify_value(std::uint32_t v) const;
    PointClass classify(std::span<const std::uint32_t> pt) const;
    bool perp_contains(std::span<const std::uint32_t> p, std::span<const std::uint32_t> r) const;

private:
    void check_vector(std::span<const std::uint32_t> v) const;

    std::shared_ptr<const Field> field_;
    unsigned n_;
    std::uint32_t alpha_;
    FormKind kind_;
    std::vector<std::uint32_t> diag_;
    std::vector<std::uint32_t> gram_;
};

struct ClassCounts {
    std::uint64_t isotropic = 0;
    std::uint64_t square = 0;
    std::uint64_t nonsquare = 0;
    std::uint64_t total() const { return isotropic + square + nonsquare; }
    std::uint64_t anisotropic() const { return square + nonsquare; }
};

inline constexpr std::uint64_t default_point_limit = 2'000'000;

/// All (q^{n+1}-1)/(q-1) normalized points of PG(n,q), in lexicographic
/// coordinate order (element index order per coordinate), with the isotropy
/// class of each point under the space's form.
class PointTable {
public:
    PointTable(const QuadraticSpace& space, std::uint64_t max_points = default_point_limit);

    std::uint64_t size() const { return size_; }
    unsigned width() const { return width_; }

    std::span<const std::uint32_t> point(std::uint64_t i) const {
        return {coords_.data() + i * width_, width_};
    }
    PointClass point_class(std::uint64_t i) const { return classes_[i]; }

    const ClassCounts& counts() const { return counts_; }

    /// Global point indices of one class, in global order.
    const std::vector<std::uint32_t>& class_indices(PointClass c) const {
        return by_class_[static_cast<std::size_t>(c)];
    }
    /// Square and nonsquare points merged, still in global order.
    const std::vector<std::uint32_t>& anisotropic_indices() const { return aniso_; }

    static std::uint64_t point_count(std::uint64_t q, unsigned n);

private:
    unsigned width_;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> coords_;
    std::vector<PointClass> classes_;
    std::array<std::vector<std::uint32_t>, 3> by_class_;
    std::vector<std::uint32_t> aniso_;
    ClassCounts counts_;
};

/// Closed form for the isotropic-point count of the diagonal form: n odd
/// gives q^{n-1}+...+q+1 +- q^{(n-1)/2} by the square class of alpha; n even
/// gives q^{n-1}+...+q+1 regardless.
std::uint64_t expected_isotropic_count(std::uint64_t q, unsigned n, bool alpha_square);

}  // namespace pgrank
