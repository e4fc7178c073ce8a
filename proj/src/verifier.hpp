#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"
#include "incidence.hpp"
#include "quadratic_space.hpp"

namespace pgrank {

enum class CheckStatus { pass, fail, recorded };
const char* check_status_name(CheckStatus s);

/// One expected-vs-computed comparison. Proven claims carry pass/fail;
/// conjectured values are "recorded": the computed value is reported against
/// the conjectured one without asserting it (strict suites promote recorded
/// mismatches to failures).
struct CheckResult {
    std::string name;
    unsigned n = 0;
    std::uint32_t q = 0;
    std::string alpha;  // "square", "nonsquare", an explicit index, or "all"
    std::string form;   // "diagonal", "conic", or "both"
    std::string expected;
    std::string computed;
    bool numeric = false;  // expected/computed are integers
    CheckStatus status = CheckStatus::pass;
    bool matched = true;  // expected == computed
    std::string claim;    // tag naming the formula or identity under test
};

struct SuiteConfig {
    std::string suite = "all";  // all | proven | conjecture
    std::vector<std::uint32_t> qs = {3, 5, 7, 9, 11, 13};
    unsigned nmax = 3;
    bool strict = false;
    std::uint64_t max_points = default_matrix_limit;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t recorded = 0;
    std::string version;
    std::uint64_t runtime_ms = 0;
    std::string generated;  // UTC timestamp, ISO 8601

    void tally();
};

/// Full-matrix 2-rank against the closed form: q^n+...+q+1 for odd n,
/// q^n+...+q for even n.
CheckResult check_full_rank(unsigned n, std::uint32_t q, SquareClass alpha,
                            std::uint64_t max_points = default_matrix_limit);

/// Isotropic-point count against the closed form (see
/// expected_isotropic_count).
CheckResult check_isotropic_count(unsigned n, std::uint32_t q, SquareClass alpha,
                                  std::uint64_t max_points = default_matrix_limit);

/// PG(1,q): the polarity is a class-preserving involution, A11 and A22 are
/// full rank, and a nonsquare alpha leaves no isotropic points (A11 is the
/// whole matrix).
CheckResult check_pg1(std::uint32_t q, SquareClass alpha);

/// PG(2,q), conic form, alpha = 1: A11 = q^2-1, A12 = A21 = q, A22 = q+1.
CheckResult check_pg2_two_block(std::uint32_t q);

/// PG(2,q), conic form, alpha = 1: the nine class-block ranks, with the two
/// branches by q mod 4.
CheckResult check_pg2_nine_block(std::uint32_t q);

/// PG(2,q) point/line census against the tangent/secant/passant tables.
CheckResult check_line_tables(std::uint32_t q);

/// (A11)^4 = J - I and (A11)^5 = A11 as exact GF(2) matrix identities.
CheckResult check_matrix_identity(std::uint32_t q);

/// All q-1 conic scalars give the same block-rank vector. Scaling the form
/// by a nonsquare swaps which anisotropic class is called square, so ranks
/// for nonsquare alpha are compared after swapping the two anisotropic
/// labels; the underlying incidence bits never move.
CheckResult check_alpha_independence(std::uint32_t q);

/// Diagonal and conic forms of PG(2,q) give identical block-rank vectors for
/// matching alpha. Recorded, not asserted.
CheckResult check_form_equivalence(std::uint32_t q);

/// Conjectured block ranks for n >= 3 under the diagonal form: A11 full
/// (n odd) or one under full (n even), A22 always full, A12 per the
/// conjectured series. For odd n and square alpha the source formula is
/// ambiguous, so both readings are evaluated: the literal two-term
/// q^{n-1}+q^{n-3} and the series q^{n-1}+q^{n-3}+...+1. rank(A21)=rank(A12)
/// is provable and reported as pass/fail.
std::vector<CheckResult> check_conjecture(unsigned n, std::uint32_t q, SquareClass alpha,
                                          std::uint64_t max_points = default_matrix_limit);

/// Runs the selected suite over the config ranges in deterministic order.
VerificationReport run_suite(const SuiteConfig& cfg);

/// {"checks":[{"name","params":{"n","q","alpha","form"},"expected",
/// "computed","status","paper_ref"}],"summary":{"pass","fail","recorded"}}
/// plus a "meta" object unless suppressed. Compact, no trailing newline.
std::string report_to_json(const VerificationReport& r, bool include_meta);

/// Aligned table, one check per line; recorded mismatches are marked.
std::string report_to_text(const VerificationReport& r);

}  // namespace pgrank
