#include "gf2txt.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace pgrank {

namespace {

// Parses a decimal count, rejecting signs, leading zeros aside, and overflow.
bool parse_count(const std::string& tok, std::size_t& out) {
    if (tok.empty()) return false;
    std::size_t v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        const std::size_t d = std::size_t(ch - '0');
        if (v > (std::numeric_limits<std::size_t>::max() - d) / 10) return false;
        v = v * 10 + d;
    }
    out = v;
    return true;
}

}  // namespace

void write_gf2txt(const BitMatrix& m, std::ostream& out) {
    out << "gf2 " << m.rows() << ' ' << m.cols() << '\n';
    std::string line(m.cols(), '0');
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c)
            line[c] = ((row[c / BitMatrix::word_bits] >> (c % BitMatrix::word_bits)) & 1u)
                          ? '1'
                          : '0';
        out << line << '\n';
    }
}

std::string to_gf2txt(const BitMatrix& m) {
    std::ostringstream os;
    write_gf2txt(m, os);
    return os.str();
}

BitMatrix read_gf2txt(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw Gf2txtError("gf2txt: missing header");
    std::istringstream hs(header);
    std::string magic, rows_tok, cols_tok, extra;
    if (!(hs >> magic >> rows_tok >> cols_tok) || (hs >> extra) || magic != "gf2")
        throw Gf2txtError("gf2txt: malformed header: " + header);
    std::size_t rows, cols;
    if (!parse_count(rows_tok, rows) || !parse_count(cols_tok, cols))
        throw Gf2txtError("gf2txt: malformed header: " + header);
    if (header != "gf2 " + rows_tok + " " + cols_tok)
        throw Gf2txtError("gf2txt: malformed header: " + header);

    BitMatrix m(rows, cols);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line))
            throw Gf2txtError("gf2txt: expected " + std::to_string(rows) + " rows, got " +
                              std::to_string(r));
        if (line.size() != cols)
            throw Gf2txtError("gf2txt: row " + std::to_string(r) + " has length " +
                              std::to_string(line.size()) + ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] == '1')
                m.set(r, c, true);
            else if (line[c] != '0')
                throw Gf2txtError("gf2txt: illegal character in row " + std::to_string(r));
        }
    }
    if (in.peek() != std::char_traits<char>::eof())
        throw Gf2txtError("gf2txt: trailing data after last row");
    return m;
}

BitMatrix from_gf2txt(const std::string& text) {
    std::istringstream is(text);
    return read_gf2txt(is);
}

void save_gf2txt(const BitMatrix& m, const std::string& path) {
    const std::filesystem::path target(path);
    const auto tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::ios_base::failure("gf2txt: cannot open " + tmp.string() + " for writing");
        write_gf2txt(m, out);
        out.flush();
        if (!out) throw std::ios_base::failure("gf2txt: write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::ios_base::failure("gf2txt: rename to " + path + " failed: " + ec.message());
    }
}

BitMatrix load_gf2txt(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("gf2txt: cannot open " + path);
    return read_gf2txt(in);
}

}  // namespace pgrank
