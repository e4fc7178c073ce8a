#include "pgrank.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ios>
#include <limits>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitmatrix.hpp"
#include "field.hpp"
#include "gf2txt.hpp"
#include "incidence.hpp"
#include "quadratic_space.hpp"
#include "verifier.hpp"
#include "version.hpp"

struct pgr_field {
    std::shared_ptr<const pgrank::Field> f;
};

struct pgr_space {
    std::unique_ptr<pgrank::QuadraticSpace> space;
    std::unique_ptr<pgrank::PointTable> table;
};

struct pgr_matrix {
    pgrank::BitMatrix m;
};

struct pgr_report {
    pgrank::VerificationReport r;
};

namespace {

thread_local std::string g_last_error;

pgr_status fail_with(pgr_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

pgr_status arg_error(const char* msg) { return fail_with(PGR_ERR_ARG, msg); }

template <typename Fn>
pgr_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const pgrank::Gf2txtError& e) {
        return fail_with(PGR_ERR_FORMAT, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail_with(PGR_ERR_IO, e.what());
    } catch (const std::length_error& e) {
        return fail_with(PGR_ERR_LIMIT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail_with(PGR_ERR_ARG, e.what());
    } catch (const std::domain_error& e) {
        return fail_with(PGR_ERR_ARG, e.what());
    } catch (const std::out_of_range& e) {
        return fail_with(PGR_ERR_ARG, e.what());
    } catch (const std::bad_alloc&) {
        return fail_with(PGR_ERR_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail_with(PGR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail_with(PGR_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// pgr_block mirrors pgrank::Block value for value.
bool to_block(pgr_block b, pgrank::Block& out) {
    if (b < PGR_BLOCK_FULL || b > PGR_BLOCK_B33) return false;
    out = static_cast<pgrank::Block>(static_cast<int>(b));
    return true;
}

}  // namespace

extern "C" {

const char* pgr_version(void) { return pgrank::version_string; }

const char* pgr_last_error(void) { return g_last_error.c_str(); }

void pgr_string_free(char* s) { std::free(s); }

/* ---- fields ---------------------------------------------------------- */

pgr_status pgr_field_create(uint32_t p, uint32_t k, pgr_field** out) {
    if (!out) return arg_error("pgr_field_create: null output");
    return guarded([&] {
        *out = new pgr_field{pgrank::make_field(p, k)};
        return PGR_OK;
    });
}

pgr_status pgr_field_create_q(uint64_t q, pgr_field** out) {
    if (!out) return arg_error("pgr_field_create_q: null output");
    return guarded([&] {
        *out = new pgr_field{pgrank::make_field_q(q)};
        return PGR_OK;
    });
}

void pgr_field_destroy(pgr_field* f) { delete f; }

pgr_status pgr_field_order(const pgr_field* f, uint32_t* q) {
    if (!f || !q) return arg_error("pgr_field_order: null argument");
    *q = f->f->q();
    return PGR_OK;
}

pgr_status pgr_field_characteristic(const pgr_field* f, uint32_t* p) {
    if (!f || !p) return arg_error("pgr_field_characteristic: null argument");
    *p = f->f->p();
    return PGR_OK;
}

pgr_status pgr_field_degree(const pgr_field* f, uint32_t* k) {
    if (!f || !k) return arg_error("pgr_field_degree: null argument");
    *k = f->f->k();
    return PGR_OK;
}

pgr_status pgr_field_modulus(const pgr_field* f, char** out) {
    if (!f || !out) return arg_error("pgr_field_modulus: null argument");
    return guarded([&] {
        *out = dup_string(f->f->modulus_string());
        return PGR_OK;
    });
}

pgr_status pgr_field_add(const pgr_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_add: null argument");
    return guarded([&] {
        *out = f->f->add(a, b);
        return PGR_OK;
    });
}

pgr_status pgr_field_sub(const pgr_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_sub: null argument");
    return guarded([&] {
        *out = f->f->sub(a, b);
        return PGR_OK;
    });
}

pgr_status pgr_field_mul(const pgr_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_mul: null argument");
    return guarded([&] {
        *out = f->f->mul(a, b);
        return PGR_OK;
    });
}

pgr_status pgr_field_neg(const pgr_field* f, uint32_t a, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_neg: null argument");
    return guarded([&] {
        *out = f->f->neg(a);
        return PGR_OK;
    });
}

pgr_status pgr_field_inv(const pgr_field* f, uint32_t a, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_inv: null argument");
    return guarded([&] {
        *out = f->f->inv(a);
        return PGR_OK;
    });
}

pgr_status pgr_field_pow(const pgr_field* f, uint32_t a, uint64_t e, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_pow: null argument");
    return guarded([&] {
        *out = f->f->pow(a, e);
        return PGR_OK;
    });
}

pgr_status pgr_field_is_square(const pgr_field* f, uint32_t a, int* out) {
    if (!f || !out) return arg_error("pgr_field_is_square: null argument");
    return guarded([&] {
        *out = f->f->is_square(a) ? 1 : 0;
        return PGR_OK;
    });
}

pgr_status pgr_field_alpha(const pgr_field* f, pgr_square_class cls, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_alpha: null argument");
    if (cls != PGR_CLASS_SQUARE && cls != PGR_CLASS_NONSQUARE)
        return arg_error("pgr_field_alpha: bad class");
    return guarded([&] {
        *out = f->f->alpha(cls == PGR_CLASS_SQUARE ? pgrank::SquareClass::square
                                                   : pgrank::SquareClass::nonsquare);
        return PGR_OK;
    });
}

pgr_status pgr_field_primitive(const pgr_field* f, uint32_t* out) {
    if (!f || !out) return arg_error("pgr_field_primitive: null argument");
    *out = f->f->primitive();
    return PGR_OK;
}

pgr_status pgr_field_element_from_coeffs(const pgr_field* f, const uint32_t* coeffs, size_t len,
                                         uint32_t* out) {
    if (!f || !out || (len > 0 && !coeffs))
        return arg_error("pgr_field_element_from_coeffs: null argument");
    return guarded([&] {
        *out = f->f->from_coeffs({coeffs, len});
        return PGR_OK;
    });
}

/* ---- spaces ----------------------------------------------------------- */

pgr_status pgr_space_create(const pgr_field* f, uint32_t n, uint32_t alpha, pgr_form form,
                            uint64_t max_points, pgr_space** out) {
    if (!f || !out) return arg_error("pgr_space_create: null argument");
    if (form != PGR_FORM_DIAGONAL && form != PGR_FORM_CONIC)
        return arg_error("pgr_space_create: bad form");
    return guarded([&] {
        const auto kind =
            form == PGR_FORM_DIAGONAL ? pgrank::FormKind::diagonal : pgrank::FormKind::conic;
        auto s = std::make_unique<pgr_space>();
        s->space = std::make_unique<pgrank::QuadraticSpace>(f->f, n, alpha, kind);
        s->table = std::make_unique<pgrank::PointTable>(
            *s->space, max_points ? max_points : pgrank::default_point_limit);
        *out = s.release();
        return PGR_OK;
    });
}

void pgr_space_destroy(pgr_space* s) { delete s; }

pgr_status pgr_space_point_count(const pgr_space* s, uint64_t* out) {
    if (!s || !out) return arg_error("pgr_space_point_count: null argument");
    *out = s->table->size();
    return PGR_OK;
}

pgr_status pgr_space_class_counts(const pgr_space* s, uint64_t counts[3]) {
    if (!s || !counts) return arg_error("pgr_space_class_counts: null argument");
    const auto& c = s->table->counts();
    counts[0] = c.isotropic;
    counts[1] = c.square;
    counts[2] = c.nonsquare;
    return PGR_OK;
}

pgr_status pgr_space_point(const pgr_space* s, uint64_t i, uint32_t* coords, size_t coords_len,
                           pgr_point_class* cls) {
    if (!s || !coords) return arg_error("pgr_space_point: null argument");
    if (i >= s->table->size()) return arg_error("pgr_space_point: index out of range");
    if (coords_len < s->table->width()) return arg_error("pgr_space_point: buffer too small");
    const auto p = s->table->point(i);
    std::memcpy(coords, p.data(), p.size() * sizeof(uint32_t));
    if (cls) *cls = static_cast<pgr_point_class>(s->table->point_class(i));
    return PGR_OK;
}

pgr_status pgr_space_form_value(const pgr_space* s, const uint32_t* coords, size_t len,
                                uint32_t* out) {
    if (!s || !coords || !out) return arg_error("pgr_space_form_value: null argument");
    return guarded([&] {
        *out = s->space->evaluate_form({coords, len});
        return PGR_OK;
    });
}

pgr_status pgr_space_bilinear(const pgr_space* s, const uint32_t* x, const uint32_t* y, size_t len,
                              uint32_t* out) {
    if (!s || !x || !y || !out) return arg_error("pgr_space_bilinear: null argument");
    return guarded([&] {
        *out = s->space->bilinear({x, len}, {y, len});
        return PGR_OK;
    });
}

pgr_status pgr_space_matrix(const pgr_space* s, pgr_block block, uint64_t max_points,
                            pgr_matrix** out) {
    if (!s || !out) return arg_error("pgr_space_matrix: null argument");
    pgrank::Block blk;
    if (!to_block(block, blk)) return arg_error("pgr_space_matrix: bad block");
    return guarded([&] {
        auto full = pgrank::full_matrix(*s->space, *s->table,
                                        max_points ? max_points : pgrank::default_matrix_limit);
        if (blk == pgrank::Block::full)
            *out = new pgr_matrix{std::move(full)};
        else
            *out = new pgr_matrix{pgrank::block_matrix(full, *s->table, blk)};
        return PGR_OK;
    });
}

/* ---- matrices ---------------------------------------------------------- */

pgr_status pgr_matrix_identity(uint64_t n, pgr_matrix** out) {
    if (!out) return arg_error("pgr_matrix_identity: null output");
    return guarded([&] {
        *out = new pgr_matrix{pgrank::BitMatrix::identity(n)};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_ones(uint64_t rows, uint64_t cols, pgr_matrix** out) {
    if (!out) return arg_error("pgr_matrix_ones: null output");
    return guarded([&] {
        *out = new pgr_matrix{pgrank::BitMatrix::ones(rows, cols)};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_zero(uint64_t rows, uint64_t cols, pgr_matrix** out) {
    if (!out) return arg_error("pgr_matrix_zero: null output");
    return guarded([&] {
        *out = new pgr_matrix{pgrank::BitMatrix::zero(rows, cols)};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_random(uint64_t rows, uint64_t cols, uint64_t seed, pgr_matrix** out) {
    if (!out) return arg_error("pgr_matrix_random: null output");
    return guarded([&] {
        *out = new pgr_matrix{pgrank::BitMatrix::random(rows, cols, seed)};
        return PGR_OK;
    });
}

void pgr_matrix_destroy(pgr_matrix* m) { delete m; }

pgr_status pgr_matrix_rows(const pgr_matrix* m, uint64_t* out) {
    if (!m || !out) return arg_error("pgr_matrix_rows: null argument");
    *out = m->m.rows();
    return PGR_OK;
}

pgr_status pgr_matrix_cols(const pgr_matrix* m, uint64_t* out) {
    if (!m || !out) return arg_error("pgr_matrix_cols: null argument");
    *out = m->m.cols();
    return PGR_OK;
}

pgr_status pgr_matrix_get(const pgr_matrix* m, uint64_t r, uint64_t c, int* out) {
    if (!m || !out) return arg_error("pgr_matrix_get: null argument");
    return guarded([&] {
        *out = m->m.get(r, c) ? 1 : 0;
        return PGR_OK;
    });
}

pgr_status pgr_matrix_rank(const pgr_matrix* m, uint64_t* out) {
    if (!m || !out) return arg_error("pgr_matrix_rank: null argument");
    return guarded([&] {
        *out = m->m.rank();
        return PGR_OK;
    });
}

pgr_status pgr_matrix_multiply(const pgr_matrix* a, const pgr_matrix* b, pgr_matrix** out) {
    if (!a || !b || !out) return arg_error("pgr_matrix_multiply: null argument");
    return guarded([&] {
        *out = new pgr_matrix{pgrank::multiply(a->m, b->m)};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_add(const pgr_matrix* a, const pgr_matrix* b, pgr_matrix** out) {
    if (!a || !b || !out) return arg_error("pgr_matrix_add: null argument");
    return guarded([&] {
        *out = new pgr_matrix{a->m + b->m};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_power(const pgr_matrix* m, uint64_t e, pgr_matrix** out) {
    if (!m || !out) return arg_error("pgr_matrix_power: null argument");
    return guarded([&] {
        *out = new pgr_matrix{m->m.pow(e)};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_transpose(const pgr_matrix* m, pgr_matrix** out) {
    if (!m || !out) return arg_error("pgr_matrix_transpose: null argument");
    return guarded([&] {
        *out = new pgr_matrix{m->m.transposed()};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_equal(const pgr_matrix* a, const pgr_matrix* b, int* out) {
    if (!a || !b || !out) return arg_error("pgr_matrix_equal: null argument");
    *out = (a->m == b->m) ? 1 : 0;
    return PGR_OK;
}

pgr_status pgr_matrix_to_gf2txt(const pgr_matrix* m, char** out) {
    if (!m || !out) return arg_error("pgr_matrix_to_gf2txt: null argument");
    return guarded([&] {
        *out = dup_string(pgrank::to_gf2txt(m->m));
        return PGR_OK;
    });
}

pgr_status pgr_matrix_from_gf2txt(const char* text, pgr_matrix** out) {
    if (!text || !out) return arg_error("pgr_matrix_from_gf2txt: null argument");
    return guarded([&] {
        *out = new pgr_matrix{pgrank::from_gf2txt(text)};
        return PGR_OK;
    });
}

pgr_status pgr_matrix_save(const pgr_matrix* m, const char* path) {
    if (!m || !path) return arg_error("pgr_matrix_save: null argument");
    return guarded([&] {
        pgrank::save_gf2txt(m->m, path);
        return PGR_OK;
    });
}

pgr_status pgr_matrix_load(const char* path, pgr_matrix** out) {
    if (!path || !out) return arg_error("pgr_matrix_load: null argument");
    return guarded([&] {
        *out = new pgr_matrix{pgrank::load_gf2txt(path)};
        return PGR_OK;
    });
}

/* ---- verification ------------------------------------------------------ */

pgr_status pgr_verify(const char* suite, const uint32_t* qs, size_t qs_len, uint32_t nmax,
                      int strict, uint64_t max_points, pgr_report** out) {
    if (!suite || !out) return arg_error("pgr_verify: null argument");
    if (qs_len > 0 && !qs) return arg_error("pgr_verify: null qs with nonzero length");
    return guarded([&] {
        pgrank::SuiteConfig cfg;
        cfg.suite = suite;
        if (qs_len > 0) cfg.qs.assign(qs, qs + qs_len);
        cfg.nmax = nmax;
        cfg.strict = strict != 0;
        if (max_points) cfg.max_points = max_points;
        *out = new pgr_report{pgrank::run_suite(cfg)};
        return PGR_OK;
    });
}

void pgr_report_destroy(pgr_report* r) { delete r; }

pgr_status pgr_report_counts(const pgr_report* r, uint64_t* pass, uint64_t* fail,
                             uint64_t* recorded) {
    if (!r || !pass || !fail || !recorded) return arg_error("pgr_report_counts: null argument");
    *pass = r->r.pass;
    *fail = r->r.fail;
    *recorded = r->r.recorded;
    return PGR_OK;
}

pgr_status pgr_report_to_json(const pgr_report* r, int include_meta, char** out) {
    if (!r || !out) return arg_error("pgr_report_to_json: null argument");
    return guarded([&] {
        *out = dup_string(pgrank::report_to_json(r->r, include_meta != 0));
        return PGR_OK;
    });
}

pgr_status pgr_report_to_text(const pgr_report* r, char** out) {
    if (!r || !out) return arg_error("pgr_report_to_text: null argument");
    return guarded([&] {
        *out = dup_string(pgrank::report_to_text(r->r));
        return PGR_OK;
    });
}

/* ---- benchmark ----------------------------------------------------------- */

pgr_status pgr_bench_rank(uint64_t size, uint64_t seed, uint32_t reps, double* seconds,
                          uint64_t* rank) {
    if (!seconds || !rank) return arg_error("pgr_bench_rank: null output");
    if (size == 0) return arg_error("pgr_bench_rank: size must be positive");
    if (reps == 0) return arg_error("pgr_bench_rank: reps must be positive");
    return guarded([&] {
        const auto m = pgrank::BitMatrix::random(size, size, seed);
        double best = std::numeric_limits<double>::infinity();
        std::size_t rk = 0;
        for (uint32_t i = 0; i < reps; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            rk = m.rank();
            const auto t1 = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        }
        *seconds = best;
        *rank = rk;
        return PGR_OK;
    });
}

}  // extern "C"
