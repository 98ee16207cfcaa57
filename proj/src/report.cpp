#include "zetaval/report.hpp"

#include <algorithm>
#include <ostream>

namespace zetaval {

bool VerificationReport::check_true(std::string identity, std::string parameters, bool ok, std::string detail)
{
    records_.push_back({std::move(identity), std::move(parameters), std::move(detail), ok ? "holds" : "fails", ok});
    return ok;
}

void VerificationReport::merge(const VerificationReport& other)
{
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return !r.equal; }));
}

void VerificationReport::print_summary(std::ostream& os) const
{
    os << suite_ << ": " << checks() << " checks, " << failures() << " failures\n";
    for (const auto& r : records_) {
        if (!r.equal) {
            os << "  FAIL " << r.identity << " [" << r.parameters << "]: lhs = " << r.lhs << ", rhs = " << r.rhs
               << "\n";
        }
    }
}

} // namespace zetaval
