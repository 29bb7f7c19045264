#pragma once

#include <string>
#include <string_view>

namespace combi {

enum class CheckStatus { pass, fail, skipped_capacity };

std::string_view status_name(CheckStatus s);

/// Outcome of one identity at one n. On failure lhs and rhs hold the
/// canonical text of the two disagreeing sides.
struct VerifyReport {
    std::string id;
    int n = 0;
    CheckStatus status = CheckStatus::pass;
    std::string lhs;
    std::string rhs;
    std::string detail;
    double runtime_ms = 0.0;

    bool passed() const { return status == CheckStatus::pass; }
};

}  // namespace combi
