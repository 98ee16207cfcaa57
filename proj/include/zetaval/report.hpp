#ifndef ZETAVAL_REPORT_HPP
#define ZETAVAL_REPORT_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "zetaval/ring.hpp"

namespace zetaval {

/// One checked identity instance.
struct CheckRecord {
    std::string identity;
    std::string parameters;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

/// Pass/fail record of an identity suite. Failures are recorded, never thrown.
class VerificationReport {
public:
    explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

    const std::string& suite() const noexcept { return suite_; }

    /// Records lhs == rhs for any scalar with a text rendering.
    template <class L, class R>
    bool check(std::string identity, std::string parameters, const L& lhs, const R& rhs)
    {
        const bool eq = lhs == rhs;
        records_.push_back({std::move(identity), std::move(parameters), render(lhs), render(rhs), eq});
        return eq;
    }

    /// Records a boolean property; lhs/rhs carry whatever detail is useful.
    bool check_true(std::string identity, std::string parameters, bool ok, std::string detail = {});

    void merge(const VerificationReport& other);

    const std::vector<CheckRecord>& records() const noexcept { return records_; }
    std::size_t checks() const noexcept { return records_.size(); }
    std::size_t failures() const;
    bool passed() const { return failures() == 0; }

    /// `suite: N checks, F failures` followed by one line per failure.
    void print_summary(std::ostream& os) const;

private:
    static std::string render(const std::string& s) { return s; }
    static std::string render(long v) { return std::to_string(v); }
    static std::string render(const Rational& r) { return r.to_string(); }
    static std::string render(const CyclotomicElement& c) { return c.to_string(); }
    template <class P>
    static std::string render(const P& p) requires requires { p.to_string(); }
    {
        return p.to_string();
    }

    std::string suite_;
    std::vector<CheckRecord> records_;
};

} // namespace zetaval

#endif
