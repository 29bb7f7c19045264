#include "combi/objects/object.hpp"

#include "combi/errors.hpp"

#include <array>
#include <stdexcept>

namespace combi::objects {

namespace {

struct ClassName {
    ObjectClass cls;
    std::string_view name;
};

constexpr std::array<ClassName, 7> kClassNames = {{
    {ObjectClass::permutation, "permutation"},
    {ObjectClass::signed_permutation, "signed"},
    {ObjectClass::matching, "matching"},
    {ObjectClass::stirling, "stirling"},
    {ObjectClass::stirling2, "stirling2"},
    {ObjectClass::decorated, "decorated"},
    {ObjectClass::inversion, "invseq"},
}};

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view class_name(ObjectClass c) {
    for (const auto& entry : kClassNames)
        if (entry.cls == c) return entry.name;
    return "unknown";
}

std::optional<ObjectClass> parse_class(std::string_view name) {
    for (const auto& entry : kClassNames)
        if (entry.name == name) return entry.cls;
    return std::nullopt;
}

ObjectClass class_of(const CombObject& obj) {
    return std::visit(Overloaded{
                          [](const Permutation&) { return ObjectClass::permutation; },
                          [](const SignedPermutation&) { return ObjectClass::signed_permutation; },
                          [](const PerfectMatching&) { return ObjectClass::matching; },
                          [](const StirlingWord&) { return ObjectClass::stirling; },
                          [](const CycleStirling&) { return ObjectClass::stirling2; },
                          [](const DecoratedPermutation&) { return ObjectClass::decorated; },
                          [](const InversionSequence&) { return ObjectClass::inversion; },
                      },
                      obj);
}

Integer expected_count(ObjectClass c, int n, const std::optional<std::vector<int>>& bounds) {
    const auto un = static_cast<unsigned>(n);
    switch (c) {
        case ObjectClass::permutation: return factorial(un);
        case ObjectClass::signed_permutation:
        case ObjectClass::decorated: return factorial(un) * (Integer(1) << un);
        case ObjectClass::matching:
        case ObjectClass::stirling:
        case ObjectClass::stirling2: return odd_double_factorial(un);
        case ObjectClass::inversion: {
            if (!bounds) throw UsageError("inversion sequences need a bound sequence");
            Integer total = 1;
            for (int b : *bounds) total *= b;
            return total;
        }
    }
    throw std::logic_error("unhandled object class");
}

void generate(ObjectClass c, int n, const std::optional<std::vector<int>>& bounds,
              const std::function<void(const CombObject&)>& visit) {
    if (n < 1) throw std::out_of_range("generate(): n must be at least 1, got " + std::to_string(n));
    if (c == ObjectClass::inversion) {
        if (!bounds) throw UsageError("generate(): inversion sequences need a bound sequence s");
        if (static_cast<int>(bounds->size()) != n)
            throw UsageError("generate(): bound sequence length " + std::to_string(bounds->size()) +
                             " differs from n = " + std::to_string(n));
    }
    CombObject slot;
    auto emit = [&](const auto& obj) {
        slot = obj;
        visit(slot);
    };
    switch (c) {
        case ObjectClass::permutation: for_each_permutation(n, emit); break;
        case ObjectClass::signed_permutation: for_each_signed_permutation(n, emit); break;
        case ObjectClass::matching: for_each_matching(n, emit); break;
        case ObjectClass::stirling: for_each_stirling_word(n, emit); break;
        case ObjectClass::stirling2: for_each_cycle_stirling(n, emit); break;
        case ObjectClass::decorated: for_each_decorated(n, emit); break;
        case ObjectClass::inversion: for_each_inversion_sequence(*bounds, emit); break;
    }
}

bool validate(const CombObject& obj) {
    return std::visit([](const auto& o) { return validate(o); }, obj);
}

std::string encode(const CombObject& obj) {
    return std::visit([](const auto& o) { return encode(o); }, obj);
}

CombObject parse_object(ObjectClass c, std::string_view text) {
    switch (c) {
        case ObjectClass::permutation: return parse_permutation(text);
        case ObjectClass::signed_permutation: return parse_signed_permutation(text);
        case ObjectClass::matching: return parse_matching(text);
        case ObjectClass::stirling: return parse_stirling_word(text);
        case ObjectClass::stirling2: return parse_cycle_stirling(text);
        case ObjectClass::decorated: return parse_decorated(text);
        case ObjectClass::inversion: return parse_inversion_sequence(text);
    }
    throw std::logic_error("unhandled object class");
}

}  // namespace combi::objects
