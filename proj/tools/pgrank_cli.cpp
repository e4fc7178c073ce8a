#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pgrank.h>

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(pgr_status s) {
    if (s != PGR_OK) throw CliError(pgr_last_error());
}

using field_ptr = std::unique_ptr<pgr_field, void (*)(pgr_field*)>;
using space_ptr = std::unique_ptr<pgr_space, void (*)(pgr_space*)>;
using matrix_ptr = std::unique_ptr<pgr_matrix, void (*)(pgr_matrix*)>;
using report_ptr = std::unique_ptr<pgr_report, void (*)(pgr_report*)>;
using c_string = std::unique_ptr<char, void (*)(char*)>;

std::uint64_t parse_uint(const std::string& tok) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
        throw CliError("expected an unsigned integer, got '" + tok + "'");
    return v;
}

struct SpaceOpts {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    std::string alpha = "square";
    std::string form = "diagonal";
    std::uint64_t max_points = 0;
};

void add_field_options(CLI::App* cmd, SpaceOpts& o) {
    auto* qopt = cmd->add_option("-q,--order", o.q, "field order, an odd prime power");
    auto* popt = cmd->add_option("-p,--characteristic", o.p, "field characteristic, an odd prime");
    cmd->add_option("-k,--degree", o.k, "extension degree, used with -p")->default_val(1);
    qopt->excludes(popt);
    popt->excludes(qopt);
}

void add_form_options(CLI::App* cmd, SpaceOpts& o) {
    cmd->add_option("--alpha", o.alpha,
                    "square, nonsquare, an element index, or a comma-separated "
                    "coefficient tuple")
        ->default_val("square");
    cmd->add_option("--form", o.form, "diagonal or conic")->default_val("diagonal");
    cmd->add_option("--max-points", o.max_points, "override the point and matrix size bounds");
}

field_ptr open_field(const SpaceOpts& o) {
    pgr_field* f = nullptr;
    if (o.q)
        check(pgr_field_create_q(o.q, &f));
    else if (o.p)
        check(pgr_field_create(o.p, o.k, &f));
    else
        throw CliError("field order missing: give -q, or -p with optional -k");
    return {f, pgr_field_destroy};
}

std::uint32_t resolve_alpha(const pgr_field* f, const std::string& spec) {
    std::uint32_t a = 0;
    if (spec == "square") {
        check(pgr_field_alpha(f, PGR_CLASS_SQUARE, &a));
        return a;
    }
    if (spec == "nonsquare") {
        check(pgr_field_alpha(f, PGR_CLASS_NONSQUARE, &a));
        return a;
    }
    if (spec.find(',') != std::string::npos) {
        std::vector<std::uint32_t> coeffs;
        std::istringstream is(spec);
        std::string tok;
        while (std::getline(is, tok, ',')) coeffs.push_back(std::uint32_t(parse_uint(tok)));
        check(pgr_field_element_from_coeffs(f, coeffs.data(), coeffs.size(), &a));
        return a;
    }
    return std::uint32_t(parse_uint(spec));
}

pgr_form parse_form(const std::string& name) {
    if (name == "diagonal") return PGR_FORM_DIAGONAL;
    if (name == "conic") return PGR_FORM_CONIC;
    throw CliError("unknown form '" + name + "', expected diagonal or conic");
}

struct BlockName {
    const char* name;
    pgr_block block;
};

constexpr BlockName block_names[] = {
    {"full", PGR_BLOCK_FULL}, {"A11", PGR_BLOCK_A11}, {"A12", PGR_BLOCK_A12},
    {"A21", PGR_BLOCK_A21},   {"A22", PGR_BLOCK_A22}, {"B11", PGR_BLOCK_B11},
    {"B12", PGR_BLOCK_B12},   {"B13", PGR_BLOCK_B13}, {"B21", PGR_BLOCK_B21},
    {"B22", PGR_BLOCK_B22},   {"B23", PGR_BLOCK_B23}, {"B31", PGR_BLOCK_B31},
    {"B32", PGR_BLOCK_B32},   {"B33", PGR_BLOCK_B33},
};

// Case-insensitive; returns the canonical spelling through `canon`.
pgr_block parse_block(const std::string& name, std::string& canon) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    for (const auto& bn : block_names) {
        std::string cand = bn.name;
        std::string cand_lower = cand;
        std::transform(cand_lower.begin(), cand_lower.end(), cand_lower.begin(),
                       [](unsigned char c) { return char(std::tolower(c)); });
        if (lower == cand_lower) {
            canon = cand;
            return bn.block;
        }
    }
    throw CliError("unknown block '" + name + "'");
}

space_ptr open_space(const SpaceOpts& o) {
    const auto f = open_field(o);
    const std::uint32_t alpha = resolve_alpha(f.get(), o.alpha);
    pgr_space* s = nullptr;
    check(pgr_space_create(f.get(), o.n, alpha, parse_form(o.form), o.max_points, &s));
    return {s, pgr_space_destroy};
}

matrix_ptr space_matrix(const pgr_space* s, pgr_block b, std::uint64_t max_points) {
    pgr_matrix* m = nullptr;
    check(pgr_space_matrix(s, b, max_points, &m));
    return {m, pgr_matrix_destroy};
}

// Empty path means stdout; otherwise write a temp file and rename into place.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CliError("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw CliError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw CliError("rename to " + path + " failed: " + ec.message());
    }
}

constexpr const char* class_names[] = {"isotropic", "square", "nonsquare"};

struct PointsOpts {
    SpaceOpts space;
    std::string format = "text";
    std::string out;
};

int run_points(const PointsOpts& o) {
    const auto s = open_space(o.space);
    std::uint64_t count = 0;
    check(pgr_space_point_count(s.get(), &count));
    const std::size_t width = o.space.n + 1;
    std::vector<std::uint32_t> coords(width);
    std::ostringstream os;
    const bool csv = o.format == "csv";
    if (o.format != "text" && !csv)
        throw CliError("unknown format '" + o.format + "', expected text or csv");
    if (csv) {
        for (std::size_t i = 0; i < width; ++i) os << 'x' << i << ',';
        os << "class\n";
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        pgr_point_class cls;
        check(pgr_space_point(s.get(), i, coords.data(), coords.size(), &cls));
        for (std::size_t j = 0; j < width; ++j) os << coords[j] << (csv ? ',' : ' ');
        if (!csv) os << ' ';
        os << class_names[cls] << '\n';
    }
    write_output(o.out, os.str());
    return 0;
}

struct MatrixOpts {
    SpaceOpts space;
    std::string block = "full";
    std::string out;
};

int run_matrix(const MatrixOpts& o) {
    const auto s = open_space(o.space);
    std::string canon;
    const pgr_block b = parse_block(o.block, canon);
    const auto m = space_matrix(s.get(), b, o.space.max_points);
    if (o.out.empty()) {
        char* text = nullptr;
        check(pgr_matrix_to_gf2txt(m.get(), &text));
        const c_string holder(text, pgr_string_free);
        std::cout << text;
    } else {
        check(pgr_matrix_save(m.get(), o.out.c_str()));
    }
    return 0;
}

struct RankOpts {
    SpaceOpts space;
    std::string block = "full";
    std::vector<std::uint32_t> qs;
    std::string out;
};

int run_rank(const RankOpts& o) {
    std::string canon;
    const pgr_block b = parse_block(o.block, canon);
    std::ostringstream os;
    if (o.qs.empty()) {
        const auto s = open_space(o.space);
        const auto m = space_matrix(s.get(), b, o.space.max_points);
        std::uint64_t rank = 0;
        check(pgr_matrix_rank(m.get(), &rank));
        os << rank << '\n';
    } else {
        os << "q,rank_" << canon << '\n';
        for (const std::uint32_t q : o.qs) {
            SpaceOpts so = o.space;
            so.q = q;
            so.p = 0;
            const auto s = open_space(so);
            const auto m = space_matrix(s.get(), b, so.max_points);
            std::uint64_t rank = 0;
            check(pgr_matrix_rank(m.get(), &rank));
            os << q << ',' << rank << '\n';
        }
    }
    write_output(o.out, os.str());
    return 0;
}

struct VerifyOpts {
    std::string suite = "all";
    std::vector<std::uint32_t> qs;
    std::uint32_t qmax = 0;
    std::uint32_t nmax = 3;
    bool strict = false;
    std::string format = "json";
    bool no_meta = false;
    std::string out;
    std::uint64_t max_points = 0;
};

int run_verify(const VerifyOpts& o) {
    if (o.format != "json" && o.format != "text")
        throw CliError("unknown format '" + o.format + "', expected json or text");
    std::vector<std::uint32_t> qs = o.qs;
    if (o.qmax) {
        if (o.qmax < 3) throw CliError("--qmax must be at least 3");
        qs.clear();
        for (std::uint32_t q = 3; q <= o.qmax; q += 2) {
            pgr_field* f = nullptr;
            if (pgr_field_create_q(q, &f) == PGR_OK) {
                qs.push_back(q);
                pgr_field_destroy(f);
            }
        }
    }
    pgr_report* raw = nullptr;
    check(pgr_verify(o.suite.c_str(), qs.empty() ? nullptr : qs.data(), qs.size(), o.nmax,
                     o.strict ? 1 : 0, o.max_points, &raw));
    const report_ptr rep(raw, pgr_report_destroy);
    char* text = nullptr;
    if (o.format == "json")
        check(pgr_report_to_json(rep.get(), o.no_meta ? 0 : 1, &text));
    else
        check(pgr_report_to_text(rep.get(), &text));
    const c_string holder(text, pgr_string_free);
    std::string body(text);
    if (body.empty() || body.back() != '\n') body += '\n';
    write_output(o.out, body);
    std::uint64_t pass = 0, fail = 0, recorded = 0;
    check(pgr_report_counts(rep.get(), &pass, &fail, &recorded));
    return fail > 0 ? 1 : 0;
}

struct BenchOpts {
    std::uint64_t size = 4096;
    std::uint64_t seed = 1;
    std::uint32_t reps = 3;
};

int run_bench(const BenchOpts& o) {
    double seconds = 0.0;
    std::uint64_t rank = 0;
    check(pgr_bench_rank(o.size, o.seed, o.reps, &seconds, &rank));
    std::ostringstream os;
    os << "size=" << o.size << " seed=" << o.seed << " reps=" << o.reps << " rank=" << rank
       << " seconds=" << std::fixed << std::setprecision(6) << seconds << '\n';
    std::cout << os.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incidence ranks of quadratic spaces over PG(n,q)"};
    app.set_version_flag("--version", pgr_version());
    app.require_subcommand(1);

    PointsOpts po;
    auto* points = app.add_subcommand("points", "dump the classified point table");
    points->add_option("-n,--dimension", po.space.n, "projective dimension")->required();
    add_field_options(points, po.space);
    add_form_options(points, po.space);
    points->add_option("--format", po.format, "text or csv")->default_val("text");
    points->add_option("-o,--output", po.out, "output path (default stdout)");

    MatrixOpts mo;
    auto* matrix = app.add_subcommand("matrix", "export an incidence block as gf2txt");
    matrix->add_option("-n,--dimension", mo.space.n, "projective dimension")->required();
    add_field_options(matrix, mo.space);
    add_form_options(matrix, mo.space);
    matrix->add_option("--block", mo.block, "full, A11..A22 or B11..B33")->default_val("full");
    matrix->add_option("-o,--output", mo.out, "output path (default stdout)");

    RankOpts ro;
    auto* rank = app.add_subcommand("rank", "print the GF(2) rank of an incidence block");
    rank->add_option("-n,--dimension", ro.space.n, "projective dimension")->required();
    add_field_options(rank, ro.space);
    add_form_options(rank, ro.space);
    rank->add_option("--block", ro.block, "full, A11..A22 or B11..B33")->default_val("full");
    rank->add_option("--qs", ro.qs, "sweep these field orders and emit CSV")->delimiter(',');
    rank->add_option("-o,--output", ro.out, "output path (default stdout)");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", vo.suite, "all, proven or conjecture")->default_val("all");
    auto* vqs = verify->add_option("--qs", vo.qs, "field orders to check")->delimiter(',');
    verify->add_option("--qmax", vo.qmax, "check all odd prime powers up to this bound")
        ->excludes(vqs);
    verify->add_option("--nmax", vo.nmax, "largest projective dimension")->default_val(3);
    verify->add_flag("--strict", vo.strict, "treat conjecture mismatches as failures");
    verify->add_option("--format", vo.format, "json or text")->default_val("json");
    verify->add_flag("--no-meta", vo.no_meta, "omit the metadata object for byte-stable output");
    verify->add_option("-o,--output", vo.out, "output path (default stdout)");
    verify->add_option("--max-points", vo.max_points, "override the matrix size bound");

    BenchOpts bo;
    auto* bench = app.add_subcommand("bench", "time the rank kernel on a random matrix");
    bench->add_option("--size", bo.size, "matrix dimension")->default_val(4096);
    bench->add_option("--seed", bo.seed, "generator seed")->default_val(1);
    bench->add_option("--reps", bo.reps, "repetitions, best time wins")->default_val(3);

    int rc = 0;
    points->callback([&] { rc = run_points(po); });
    matrix->callback([&] { rc = run_matrix(mo); });
    rank->callback([&] { rc = run_rank(ro); });
    verify->callback([&] { rc = run_verify(vo); });
    bench->callback([&] { rc = run_bench(bo); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return rc;
}
