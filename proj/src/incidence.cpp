#include "incidence.hpp"

#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace pgrank {

const char* block_name(Block b) {
    switch (b) {
        case Block::full: return "full";
        case Block::A11: return "A11";
        case Block::A12: return "A12";
        case Block::A21: return "A21";
        case Block::A22: return "A22";
        case Block::B11: return "B11";
        case Block::B12: return "B12";
        case Block::B13: return "B13";
        case Block::B21: return "B21";
        case Block::B22: return "B22";
        case Block::B23: return "B23";
        case Block::B31: return "B31";
        case Block::B32: return "B32";
        case Block::B33: return "B33";
    }
    return "?";
}

std::optional<Block> block_from_name(std::string_view name) {
    for (const Block b : all_blocks)
        if (name == block_name(b)) return b;
    return std::nullopt;
}

BitMatrix full_matrix(const QuadraticSpace& space, const PointTable& table,
                      std::uint64_t max_points) {
    const std::uint64_t n_points = table.size();
    if (n_points > max_points)
        throw std::length_error("full_matrix: " + std::to_string(n_points) +
                                " points exceed the matrix bound " + std::to_string(max_points));
    const Field& f = space.field();
    const unsigned w = table.width();
    const auto& gram = space.gram();

    // Transform every point once: v_j = G p_j, so <p_i, p_j> = p_i . v_j.
    std::vector<std::uint32_t> transformed(n_points * w);
    parallel_for(n_points, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const auto pj = table.point(j);
            for (unsigned r = 0; r < w; ++r) {
                std::uint32_t acc = 0;
                for (unsigned c = 0; c < w; ++c)
                    acc = f.add_unchecked(acc,
                                          f.mul_unchecked(gram[std::size_t(r) * w + c], pj[c]));
                transformed[j * w + r] = acc;
            }
        }
    });

    BitMatrix m(n_points, n_points);
    parallel_for(n_points, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto pi = table.point(i);
            auto row = m.row(i);
            for (std::size_t j = 0; j < n_points; ++j) {
                const std::uint32_t* vj = transformed.data() + j * w;
                std::uint32_t acc = 0;
                for (unsigned c = 0; c < w; ++c)
                    acc = f.add_unchecked(acc, f.mul_unchecked(pi[c], vj[c]));
                if (acc == 0)
                    row[j / BitMatrix::word_bits] |= BitMatrix::word(1)
                                                     << (j % BitMatrix::word_bits);
            }
        }
    });
    return m;
}

namespace {

const std::vector<std::uint32_t>& axis_indices(const PointTable& table, Block b, bool rows) {
    switch (b) {
        case Block::full: throw std::invalid_argument("axis_indices: full matrix has no axis split");
        case Block::A11: return table.anisotropic_indices();
        case Block::A12:
            return rows ? table.anisotropic_indices()
                        : table.class_indices(PointClass::isotropic);
        case Block::A21:
            return rows ? table.class_indices(PointClass::isotropic)
                        : table.anisotropic_indices();
        case Block::A22: return table.class_indices(PointClass::isotropic);
        default: break;
    }
    static constexpr PointClass order[3] = {PointClass::square, PointClass::nonsquare,
                                            PointClass::isotropic};
    const int idx = static_cast<int>(b) - static_cast<int>(Block::B11);
    return table.class_indices(order[rows ? idx / 3 : idx % 3]);
}

}  // namespace

std::vector<std::uint32_t> block_row_indices(const PointTable& table, Block b) {
    return axis_indices(table, b, true);
}

std::vector<std::uint32_t> block_col_indices(const PointTable& table, Block b) {
    return axis_indices(table, b, false);
}

BitMatrix block_matrix(const BitMatrix& full, const PointTable& table, Block b) {
    if (b == Block::full) return full;
    if (full.rows() != table.size() || full.cols() != table.size())
        throw std::invalid_argument("block_matrix: matrix and point table disagree");
    return full.submatrix(axis_indices(table, b, true), axis_indices(table, b, false));
}

const char* line_type_name(LineType t) {
    switch (t) {
        case LineType::tangent: return "tangent";
        case LineType::secant: return "secant";
        case LineType::passant: return "passant";
    }
    return "?";
}

LineProfile line_profile(const QuadraticSpace& space, const PointTable& table,
                         const BitMatrix& full) {
    if (space.n() != 2)
        throw std::invalid_argument("line_profile: only defined for planes (n = 2)");
    if (full.rows() != table.size() || full.cols() != table.size())
        throw std::invalid_argument("line_profile: matrix and point table disagree");
    const std::uint64_t n_points = table.size();

    // Type every line (= every row) by its isotropic-point count.
    std::vector<LineType> line_type(n_points);
    std::array<std::array<std::uint64_t, 3>, 3> on_line{};
    std::array<bool, 3> seen_type{};
    for (std::uint64_t i = 0; i < n_points; ++i) {
        std::array<std::uint64_t, 3> counts{};
        for (std::uint64_t j = 0; j < n_points; ++j)
            if (full.get(i, j)) ++counts[static_cast<std::size_t>(table.point_class(j))];
        LineType t;
        switch (counts[static_cast<std::size_t>(PointClass::isotropic)]) {
            case 1: t = LineType::tangent; break;
            case 2: t = LineType::secant; break;
            case 0: t = LineType::passant; break;
            default:
                throw std::runtime_error("line_profile: a line carries more than two isotropic points");
        }
        line_type[i] = t;
        const auto ti = static_cast<std::size_t>(t);
        if (!seen_type[ti]) {
            on_line[ti] = counts;
            seen_type[ti] = true;
        } else if (on_line[ti] != counts) {
            throw std::runtime_error(std::string("line_profile: ") + line_type_name(t) +
                                     " lines carry unequal point counts");
        }
    }

    // The polarity must send each point class to a single line type.
    LineProfile profile;
    profile.points_on_line = on_line;
    std::array<bool, 3> pole_seen{};
    for (std::uint64_t i = 0; i < n_points; ++i) {
        const auto c = static_cast<std::size_t>(table.point_class(i));
        if (!pole_seen[c]) {
            profile.pole_line_type[c] = line_type[i];
            pole_seen[c] = true;
        } else if (profile.pole_line_type[c] != line_type[i]) {
            throw std::runtime_error("line_profile: poles of one class map to several line types");
        }
    }
    if (profile.pole_line_type[0] == profile.pole_line_type[1] ||
        profile.pole_line_type[0] == profile.pole_line_type[2] ||
        profile.pole_line_type[1] == profile.pole_line_type[2])
        throw std::runtime_error("line_profile: pole classes do not map one-to-one onto line types");

    // Dual census: lines of each type through points of each class. The
    // matrix is symmetric, so run over rows again with the line types fixed.
    std::array<std::array<std::uint64_t, 3>, 3> through{};
    std::array<bool, 3> seen_class{};
    for (std::uint64_t j = 0; j < n_points; ++j) {
        std::array<std::uint64_t, 3> counts{};
        for (std::uint64_t i = 0; i < n_points; ++i)
            if (full.get(i, j)) ++counts[static_cast<std::size_t>(line_type[i])];
        const auto c = static_cast<std::size_t>(table.point_class(j));
        if (!seen_class[c]) {
            through[c] = counts;
            seen_class[c] = true;
        } else if (through[c] != counts) {
            throw std::runtime_error(std::string("line_profile: ") +
                                     point_class_name(table.point_class(j)) +
                                     " points lie on unequal line counts");
        }
    }
    profile.lines_through_point = through;
    return profile;
}

}  // namespace pgrank
