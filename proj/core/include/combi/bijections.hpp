#pragma once

#include "combi/algebra/poly.hpp"
#include "combi/objects/decorated.hpp"
#include "combi/objects/matching.hpp"
#include "combi/objects/permutation.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace combi::bijections {

using objects::DecoratedPermutation;
using objects::PerfectMatching;
using objects::SignedPermutation;

/// (first, second, index_set): first matches [2k], second matches [2(n-k)],
/// index_set is a k-subset of [n].
struct MatchingTriple {
    PerfectMatching first;
    PerfectMatching second;
    std::set<int> index_set;

    int k() const { return static_cast<int>(index_set.size()); }
    int n() const { return first.size() + second.size(); }
    friend bool operator==(const MatchingTriple&, const MatchingTriple&) = default;
};

bool validate(const MatchingTriple& t);

/// "[(1,3)(2,4)] [(1,2)] {1,3}" with "[]" and "{}" for empty parts.
std::string encode(const MatchingTriple& t);
MatchingTriple parse_triple(std::string_view text);

/// Throws std::invalid_argument when w is not a valid decorated permutation.
MatchingTriple phi_map(const DecoratedPermutation& w);
/// Throws std::invalid_argument when pi is not a valid signed permutation.
MatchingTriple psi_map(const SignedPermutation& pi);

enum class MapId { phi, psi };

inline constexpr int kMaxBijectionN = 8;

struct BijectionReport {
    int n = 0;
    long long domain_size = 0;
    bool injective = true;
    bool image_complete = true;
    bool weight_preserving = true;
    /// Encoded (object, image) witnessing the first failure.
    std::optional<std::pair<std::string, std::string>> counterexample;
    /// Entry k: sum of the domain weight over objects with k = hat or bar.
    std::vector<algebra::ZPoly> weight_by_k;

    bool ok() const { return injective && image_complete && weight_preserving; }
};

/// Expected size of the image for a fixed k: C(n,k) (2k-1)!! (2n-2k-1)!!.
Integer image_size(int n, int k);

/// Applies the map to the whole domain at n. Throws CapacityError beyond
/// kMaxBijectionN and std::out_of_range for n < 1.
BijectionReport verify_bijection(MapId map, int n);

}  // namespace combi::bijections
