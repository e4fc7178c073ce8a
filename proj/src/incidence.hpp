#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bitmatrix.hpp"
#include "quadratic_space.hpp"

namespace pgrank {

/// Selectors for the full point-hyperplane matrix and its two partitions:
/// A-blocks split by anisotropic/isotropic, B-blocks by square/nonsquare/
/// isotropic. Within every class points keep their global order, so the
/// anisotropic axis of the A-blocks interleaves squares and nonsquares.
enum class Block {
    full,
    A11, A12, A21, A22,
    B11, B12, B13, B21, B22, B23, B31, B32, B33,
};

const char* block_name(Block b);
std::optional<Block> block_from_name(std::string_view name);
inline constexpr std::array<Block, 14> all_blocks = {
    Block::full,
    Block::A11, Block::A12, Block::A21, Block::A22,
    Block::B11, Block::B12, Block::B13,
    Block::B21, Block::B22, Block::B23,
    Block::B31, Block::B32, Block::B33,
};

inline constexpr std::uint64_t default_matrix_limit = 100'000;

/// N x N matrix with entry(i,j) = 1 iff <P_i, P_j> = 0, i.e. P_j lies on the
/// hyperplane polar to P_i. The form is symmetric, so this is also P_i on the
/// hyperplane of P_j and the matrix equals its transpose.
BitMatrix full_matrix(const QuadraticSpace& space, const PointTable& table,
                      std::uint64_t max_points = default_matrix_limit);

/// Global point indices labelling the rows (hyperplane side) of a block.
std::vector<std::uint32_t> block_row_indices(const PointTable& table, Block b);
/// Global point indices labelling the columns (point side) of a block.
std::vector<std::uint32_t> block_col_indices(const PointTable& table, Block b);

BitMatrix block_matrix(const BitMatrix& full, const PointTable& table, Block b);

enum class LineType : std::uint8_t { tangent = 0, secant = 1, passant = 2 };
const char* line_type_name(LineType t);

/// PG(2,q) census: how many points of each class lie on each type of line,
/// and how many lines of each type pass through each class of point. Lines
/// are the polars of points; the type of a line is read off its count of
/// isotropic points (1 tangent, 2 secant, 0 passant). Construction fails if
/// lines of one type disagree, if points of one class disagree, or if the
/// pole classes do not map one-to-one onto line types.
struct LineProfile {
    // [line type][point class] and [point class][line type]
    std::array<std::array<std::uint64_t, 3>, 3> points_on_line{};
    std::array<std::array<std::uint64_t, 3>, 3> lines_through_point{};
    // pole class -> type of its polar line
    std::array<LineType, 3> pole_line_type{};
};

LineProfile line_profile(const QuadraticSpace& space, const PointTable& table,
                         const BitMatrix& full);

}  // namespace pgrank
