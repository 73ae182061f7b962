#pragma once

#include <optional>
#include <string>
#include <vector>

namespace combilab {

/// Upper bounds for a verification sweep. Unset fields take the identity's
/// default grid.
struct VerifyGrid {
    std::optional<int> max_n;
    std::optional<int> max_k;
    std::optional<int> max_p;
    std::optional<int> max_m;
    std::optional<int> max_ground;  // bound on 2n + m for inset enumeration
};

struct VerifyFailure {
    std::string params;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string identity;
    std::string grid;
    long long cases = 0;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> notes;
    double seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Names accepted by run_verify, in a fixed order.
const std::vector<std::string>& identity_names();

/// Runs one identity sweep. Throws DomainError for an unknown name.
VerifyReport run_verify(const std::string& identity, const VerifyGrid& grid = {});

/// Deterministic text rendering; timing is not included.
std::string format_report(const VerifyReport& report);

}  // namespace combilab
