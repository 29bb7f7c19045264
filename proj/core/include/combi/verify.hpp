#pragma once

#include "combi/families.hpp"
#include "combi/report.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace combi::verify {

/// Inputs shared by every check: the recurrence coefficients (possibly
/// mutated) that the recurrence routes use.
struct Context {
    families::Recurrences recurrences;
};

struct IdentityCheck {
    std::string id;
    std::string description;
    std::string statement;
    std::vector<std::string> routes;
    int min_n = 0;
    int default_max_n = 0;
    int capacity = 0;
};

/// Every registered identity, in a fixed order.
const std::vector<IdentityCheck>& registry();
/// nullptr for an unknown id.
const IdentityCheck* find_check(std::string_view id);

/// Evaluates every route of one identity at n and compares them exactly.
/// Throws UsageError for an unknown id and std::out_of_range below min_n;
/// n above the capacity yields a skipped_capacity report.
VerifyReport run_check(std::string_view id, int n, const Context& ctx = {});

/// Runs id over min_n..max_n.
std::vector<VerifyReport> run_range(std::string_view id, int max_n, const Context& ctx = {});

/// Maps an id, or "*" for every id, to a maximum n.
using Overrides = std::map<std::string, int, std::less<>>;

/// Runs every check from its min_n to its default maximum, adjusted by the
/// overrides: an id entry replaces that maximum, "*" caps every id without one.
std::vector<VerifyReport> run_all(const Overrides& max_n_overrides = {}, const Context& ctx = {});

bool all_passed(const std::vector<VerifyReport>& reports);

}  // namespace combi::verify
