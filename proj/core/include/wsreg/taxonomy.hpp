#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace wsreg {

/// Level-1 criterion: how a service behaves towards its caller.
///  - Collective: operations consume input and produce no output
///    (e.g. reporting endpoints that only acknowledge delivery).
///  - Notifying: operations take no input and only publish data
///    (e.g. weather or exchange-rate feeds).
///  - Interactive: operations both receive input and produce output
///    (e.g. card verification, ticket booking).
enum class BehaviorCategory : std::uint8_t { Collective = 0, Notifying = 1, Interactive = 2 };

/// Level-2 criterion: whether using the service costs money at all.
enum class CostTier : std::uint8_t { Free = 0, Commercial = 1 };

/// Level-3 criterion, valid only under its parent tier:
///   Free       -> Unlimited | Limited
///   Commercial -> Subscription | PayPerUse
enum class CostMode : std::uint8_t { Unlimited = 0, Limited = 1, Subscription = 2, PayPerUse = 3 };

/// The four selectable cost leaves (tier x mode), in directory row order.
enum class CostLeaf : std::uint8_t { FreeLimited = 0, FreeUnlimited = 1, PayPerUse = 2, Subscribe = 3 };

constexpr std::size_t kBehaviorCount = 3;
constexpr std::size_t kCostLeafCount = 4;

/// A complete non-functional classification of one service.
struct Classification {
    BehaviorCategory behavior;
    CostTier tier;
    CostMode mode;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// True iff `mode` is allowed under `tier`.
bool tier_mode_valid(CostTier tier, CostMode mode);

/// True iff the tier/mode pair is coherent.
bool is_valid(const Classification& c);

/// The 6-digit classification code: two decimal digits per taxonomy level.
/// "00" in a level is a wildcard; wildcards appear in queries only, never in
/// stored records. The wire and storage form is the raw 6-character string.
class ClassificationId {
public:
    /// All-wildcard id ("000000"): matches-anything placeholder, not storable.
    ClassificationId() = default;

    /// Validates shape and code table; throws ValidationError on anything
    /// that is not 6 decimal digits with each level a known code or "00".
    static ClassificationId parse(std::string_view digits);

    std::string str() const { return std::string(digits_.begin(), digits_.end()); }
    std::string_view view() const { return std::string_view(digits_.data(), digits_.size()); }

    std::string_view level1() const { return view().substr(0, 2); }
    std::string_view level2() const { return view().substr(2, 2); }
    std::string_view level3() const { return view().substr(4, 2); }

    /// Numeric value of a level code, 0 for wildcard.
    int level1_code() const { return code_at(0); }
    int level2_code() const { return code_at(2); }
    int level3_code() const { return code_at(4); }

    bool has_wildcard() const {
        return level1_code() == 0 || level2_code() == 0 || level3_code() == 0;
    }

    auto operator<=>(const ClassificationId&) const = default;

private:
    int code_at(std::size_t pos) const {
        return (digits_[pos] - '0') * 10 + (digits_[pos + 1] - '0');
    }

    std::array<char, 6> digits_{'0', '0', '0', '0', '0', '0'};
};

/// Encodes a classification as its 6-digit id. Code table:
///   level 1: Collective=01 Notifying=02 Interactive=03
///   level 2: Free=01 Commercial=02
///   level 3 under Free: Unlimited=01 Limited=02
///   level 3 under Commercial: Subscription=01 PayPerUse=02
/// Throws ValidationError when the tier/mode pair is invalid.
ClassificationId encode(const Classification& c);

/// Inverse of encode(). Throws ValidationError when any level is a wildcard.
Classification decode(const ClassificationId& id);

/// parse + decode in one step, for raw 6-digit strings.
Classification decode(std::string_view digits);

/// Tier/mode pair behind a cost leaf, and back.
std::pair<CostTier, CostMode> tier_mode(CostLeaf leaf);
CostLeaf cost_leaf(CostTier tier, CostMode mode);
CostLeaf cost_leaf(const Classification& c);

/// One selectable category: a behavior or a cost leaf.
using Category = std::variant<BehaviorCategory, CostLeaf>;

/// The 7 selectable categories, in directory row order:
/// Collective, Notifying, Interactive, FreeLimited, FreeUnlimited,
/// PayPerUse, Subscribe.
std::span<const Category> category_universe();

/// All 12 valid classifications (3 behaviors x 4 cost leaves), in
/// (behavior, cost leaf) universe order.
std::span<const Classification> classification_universe();

std::string_view label(BehaviorCategory b);
std::string_view label(CostTier t);
std::string_view label(CostMode m);
std::string_view label(CostLeaf l);
std::string_view label(const Category& c);

/// Label parsers. Matching is case-insensitive and ignores non-alphanumeric
/// characters, so "pay-per-use" and "PayPerUse" are the same category.
/// Each throws ValidationError on an unknown label.
BehaviorCategory behavior_from_label(std::string_view s);
CostTier tier_from_label(std::string_view s);
CostMode mode_from_label(std::string_view s);
CostLeaf cost_leaf_from_label(std::string_view s);
Category category_from_label(std::string_view s);

} // namespace wsreg
