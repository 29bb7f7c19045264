#pragma once

#include "combi/algebra/number.hpp"
#include "combi/objects/decorated.hpp"
#include "combi/objects/inversion.hpp"
#include "combi/objects/matching.hpp"
#include "combi/objects/permutation.hpp"
#include "combi/objects/stirling.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace combi::objects {

using CombObject = std::variant<Permutation, SignedPermutation, PerfectMatching, StirlingWord, CycleStirling,
                                DecoratedPermutation, InversionSequence>;

enum class ObjectClass { permutation, signed_permutation, matching, stirling, stirling2, decorated, inversion };

/// CLI names: permutation, signed, matching, stirling, stirling2, decorated, invseq.
std::string_view class_name(ObjectClass c);
std::optional<ObjectClass> parse_class(std::string_view name);
ObjectClass class_of(const CombObject& obj);

/// Size of the class at n; bounds are required for inversion sequences.
Integer expected_count(ObjectClass c, int n, const std::optional<std::vector<int>>& bounds = std::nullopt);

/// Streams every object of the class exactly once in a fixed order.
/// Throws std::out_of_range for n < 1 and UsageError when an inversion
/// sequence class lacks a bound sequence of length n.
void generate(ObjectClass c, int n, const std::optional<std::vector<int>>& bounds,
              const std::function<void(const CombObject&)>& visit);

bool validate(const CombObject& obj);
std::string encode(const CombObject& obj);
CombObject parse_object(ObjectClass c, std::string_view text);

}  // namespace combi::objects
