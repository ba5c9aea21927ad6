#include "wsreg/taxonomy.hpp"

#include "wsreg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace wsreg {

namespace {

constexpr std::array<Category, 7> kUniverse = {
    Category{BehaviorCategory::Collective},  Category{BehaviorCategory::Notifying},
    Category{BehaviorCategory::Interactive}, Category{CostLeaf::FreeLimited},
    Category{CostLeaf::FreeUnlimited},       Category{CostLeaf::PayPerUse},
    Category{CostLeaf::Subscribe},
};

std::array<Classification, 12> make_classification_universe() {
    std::array<Classification, 12> all{};
    std::size_t i = 0;
    for (auto b : {BehaviorCategory::Collective, BehaviorCategory::Notifying,
                   BehaviorCategory::Interactive}) {
        for (auto l : {CostLeaf::FreeLimited, CostLeaf::FreeUnlimited, CostLeaf::PayPerUse,
                       CostLeaf::Subscribe}) {
            auto [tier, mode] = tier_mode(l);
            all[i++] = Classification{b, tier, mode};
        }
    }
    return all;
}

const std::array<Classification, 12> kClassificationUniverse = make_classification_universe();

std::string fold_label(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

void put_code(std::array<char, 6>& d, std::size_t pos, int code) {
    d[pos] = static_cast<char>('0' + code / 10);
    d[pos + 1] = static_cast<char>('0' + code % 10);
}

} // namespace

bool tier_mode_valid(CostTier tier, CostMode mode) {
    switch (mode) {
    case CostMode::Unlimited:
    case CostMode::Limited:
        return tier == CostTier::Free;
    case CostMode::Subscription:
    case CostMode::PayPerUse:
        return tier == CostTier::Commercial;
    }
    return false;
}

bool is_valid(const Classification& c) { return tier_mode_valid(c.tier, c.mode); }

ClassificationId ClassificationId::parse(std::string_view digits) {
    if (digits.size() != 6) {
        throw ValidationError("taxonomy: classification id must be exactly 6 characters, got \"" +
                              std::string(digits) + "\"");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw ValidationError("taxonomy: classification id must be decimal digits, got \"" +
                                  std::string(digits) + "\"");
        }
    }
    ClassificationId id;
    std::copy(digits.begin(), digits.end(), id.digits_.begin());
    if (id.level1_code() > 3) {
        throw ValidationError("taxonomy: unknown behavior code \"" + std::string(id.level1()) +
                              "\"");
    }
    if (id.level2_code() > 2) {
        throw ValidationError("taxonomy: unknown cost tier code \"" + std::string(id.level2()) +
                              "\"");
    }
    if (id.level3_code() > 2) {
        throw ValidationError("taxonomy: unknown cost mode code \"" + std::string(id.level3()) +
                              "\"");
    }
    return id;
}

ClassificationId encode(const Classification& c) {
    if (!is_valid(c)) {
        throw ValidationError(std::string("taxonomy: cost mode ") + std::string(label(c.mode)) +
                              " is not valid under tier " + std::string(label(c.tier)));
    }
    std::array<char, 6> d{};
    put_code(d, 0, static_cast<int>(c.behavior) + 1);
    put_code(d, 2, static_cast<int>(c.tier) + 1);
    // Within a tier the two modes are numbered in declaration order.
    int mode_code = 0;
    switch (c.mode) {
    case CostMode::Unlimited: mode_code = 1; break;
    case CostMode::Limited: mode_code = 2; break;
    case CostMode::Subscription: mode_code = 1; break;
    case CostMode::PayPerUse: mode_code = 2; break;
    }
    put_code(d, 4, mode_code);
    return ClassificationId::parse(std::string_view(d.data(), d.size()));
}

Classification decode(const ClassificationId& id) {
    if (id.has_wildcard()) {
        throw ValidationError("taxonomy: cannot decode wildcard id \"" + id.str() + "\"");
    }
    Classification c{};
    c.behavior = static_cast<BehaviorCategory>(id.level1_code() - 1);
    c.tier = static_cast<CostTier>(id.level2_code() - 1);
    if (c.tier == CostTier::Free) {
        c.mode = id.level3_code() == 1 ? CostMode::Unlimited : CostMode::Limited;
    } else {
        c.mode = id.level3_code() == 1 ? CostMode::Subscription : CostMode::PayPerUse;
    }
    return c;
}

Classification decode(std::string_view digits) { return decode(ClassificationId::parse(digits)); }

std::pair<CostTier, CostMode> tier_mode(CostLeaf leaf) {
    switch (leaf) {
    case CostLeaf::FreeLimited: return {CostTier::Free, CostMode::Limited};
    case CostLeaf::FreeUnlimited: return {CostTier::Free, CostMode::Unlimited};
    case CostLeaf::PayPerUse: return {CostTier::Commercial, CostMode::PayPerUse};
    case CostLeaf::Subscribe: return {CostTier::Commercial, CostMode::Subscription};
    }
    throw ValidationError("taxonomy: bad cost leaf");
}

CostLeaf cost_leaf(CostTier tier, CostMode mode) {
    if (!tier_mode_valid(tier, mode)) {
        throw ValidationError(std::string("taxonomy: cost mode ") + std::string(label(mode)) +
                              " is not valid under tier " + std::string(label(tier)));
    }
    if (tier == CostTier::Free) {
        return mode == CostMode::Unlimited ? CostLeaf::FreeUnlimited : CostLeaf::FreeLimited;
    }
    return mode == CostMode::Subscription ? CostLeaf::Subscribe : CostLeaf::PayPerUse;
}

CostLeaf cost_leaf(const Classification& c) { return cost_leaf(c.tier, c.mode); }

std::span<const Category> category_universe() { return kUniverse; }

std::span<const Classification> classification_universe() { return kClassificationUniverse; }

std::string_view label(BehaviorCategory b) {
    switch (b) {
    case BehaviorCategory::Collective: return "Collective";
    case BehaviorCategory::Notifying: return "Notifying";
    case BehaviorCategory::Interactive: return "Interactive";
    }
    return "?";
}

std::string_view label(CostTier t) {
    return t == CostTier::Free ? std::string_view("Free") : std::string_view("Commercial");
}

std::string_view label(CostMode m) {
    switch (m) {
    case CostMode::Unlimited: return "Unlimited";
    case CostMode::Limited: return "Limited";
    case CostMode::Subscription: return "Subscription";
    case CostMode::PayPerUse: return "PayPerUse";
    }
    return "?";
}

std::string_view label(CostLeaf l) {
    switch (l) {
    case CostLeaf::FreeLimited: return "FreeLimited";
    case CostLeaf::FreeUnlimited: return "FreeUnlimited";
    case CostLeaf::PayPerUse: return "PayPerUse";
    case CostLeaf::Subscribe: return "Subscribe";
    }
    return "?";
}

std::string_view label(const Category& c) {
    if (const auto* b = std::get_if<BehaviorCategory>(&c)) {
        return label(*b);
    }
    return label(std::get<CostLeaf>(c));
}

BehaviorCategory behavior_from_label(std::string_view s) {
    const std::string f = fold_label(s);
    if (f == "collective") return BehaviorCategory::Collective;
    if (f == "notifying") return BehaviorCategory::Notifying;
    if (f == "interactive") return BehaviorCategory::Interactive;
    throw ValidationError("taxonomy: unknown behavior category \"" + std::string(s) + "\"");
}

CostTier tier_from_label(std::string_view s) {
    const std::string f = fold_label(s);
    if (f == "free") return CostTier::Free;
    if (f == "commercial") return CostTier::Commercial;
    throw ValidationError("taxonomy: unknown cost tier \"" + std::string(s) + "\"");
}

CostMode mode_from_label(std::string_view s) {
    const std::string f = fold_label(s);
    if (f == "unlimited") return CostMode::Unlimited;
    if (f == "limited") return CostMode::Limited;
    if (f == "subscription" || f == "subscribe") return CostMode::Subscription;
    if (f == "payperuse") return CostMode::PayPerUse;
    throw ValidationError("taxonomy: unknown cost mode \"" + std::string(s) + "\"");
}

CostLeaf cost_leaf_from_label(std::string_view s) {
    const std::string f = fold_label(s);
    if (f == "freelimited") return CostLeaf::FreeLimited;
    if (f == "freeunlimited") return CostLeaf::FreeUnlimited;
    if (f == "payperuse") return CostLeaf::PayPerUse;
    if (f == "subscribe" || f == "subscription") return CostLeaf::Subscribe;
    throw ValidationError("taxonomy: unknown cost category \"" + std::string(s) + "\"");
}

Category category_from_label(std::string_view s) {
    const std::string f = fold_label(s);
    if (f == "collective" || f == "notifying" || f == "interactive") {
        return Category{behavior_from_label(s)};
    }
    if (f == "freelimited" || f == "freeunlimited" || f == "payperuse" || f == "subscribe" ||
        f == "subscription") {
        return Category{cost_leaf_from_label(s)};
    }
    throw ValidationError("taxonomy: unknown category \"" + std::string(s) + "\"");
}

} // namespace wsreg
