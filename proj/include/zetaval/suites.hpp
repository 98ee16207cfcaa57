#ifndef ZETAVAL_SUITES_HPP
#define ZETAVAL_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zetaval/rational.hpp"
#include "zetaval/report.hpp"

namespace zetaval {

/// Knobs shared by the verification suites. Unset fields take per-suite
/// defaults.
struct SuiteParams {
    std::optional<std::size_t> n_max;
    std::vector<std::uint64_t> primes;
    std::vector<Rational> a_set;
    unsigned jobs = 1;
};

/// Names accepted by run_suite, in display order.
std::span<const std::string_view> suite_names();

/// Throws DomainError for an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteParams& params);

/// Offsets {1, 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, 1/7}.
std::vector<Rational> default_offset_grid();

VerificationReport suite_hurwitz_integral(const SuiteParams& params);
VerificationReport suite_proof_identities(const SuiteParams& params);
VerificationReport suite_sums_oracle(const SuiteParams& params);
VerificationReport suite_lfunction_routes(const SuiteParams& params);
VerificationReport suite_chi4(const SuiteParams& params);
VerificationReport suite_parity_integral(const SuiteParams& params);
VerificationReport suite_prop_a1(const SuiteParams& params);
VerificationReport suite_euler_props(const SuiteParams& params);
VerificationReport suite_bernoulli_props(const SuiteParams& params);

} // namespace zetaval

#endif
