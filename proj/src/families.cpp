#include "powerderiv/families.hpp"

#include <array>
#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>

namespace powerderiv {

namespace {

constexpr std::array<FamilyTraits, 4> kTraits{{
    // u^2+v^2 = 1 for the trigonometric pair; u^2-v^2 = 1 for sinh;
    // v^2-u^2 = 1 for cosh.
    {Family::Sin, "sin", "cos", SequenceTag::F, {-1, 1}, {-1, 1}},
    {Family::Cos, "cos", "sin", SequenceTag::G, {-1, 1}, {-1, 1}},
    {Family::Sinh, "sinh", "cosh", SequenceTag::F, {1, 1}, {1, -1}},
    {Family::Cosh, "cosh", "sinh", SequenceTag::H, {1, -1}, {1, 1}},
}};

struct RecurrenceParams {
    int sign;   // the {1, -1, 1} selector
    int qbeta;  // u^2 - 1 or u^2 + 1
};

RecurrenceParams recurrence_params(SequenceTag tag) {
    switch (tag) {
        case SequenceTag::F: return {1, -1};
        case SequenceTag::G: return {-1, -1};
        case SequenceTag::H: return {1, 1};
    }
    return {1, -1};
}

UPoly recurrence_step(SequenceTag tag, unsigned k, const UPoly& prev) {
    const auto [sign, qbeta] = recurrence_params(tag);
    NPoly n_minus_k{Int(-static_cast<long long>(k)), Int(1)};
    UPoly quad = UPoly::monomial(NPoly(Int(1)), 2) + UPoly(NPoly(Int(qbeta)));
    UPoly step = UPoly::variable() * (n_minus_k * prev) + quad * prev.derivative();
    return sign < 0 ? -step : step;
}

/// Memoized ascending sequence. Deque storage keeps published references
/// valid while the sequence grows; reads are shared, extension is serialized.
class SequenceCache {
public:
    using Maker = std::function<UPoly(unsigned k, const std::deque<UPoly>& lower)>;

    explicit SequenceCache(Maker make) : make_(std::move(make)) {}

    const UPoly& get(unsigned k) {
        {
            std::shared_lock lock(mutex_);
            if (k < entries_.size()) return entries_[k];
        }
        std::unique_lock lock(mutex_);
        while (entries_.size() <= k)
            entries_.push_back(make_(static_cast<unsigned>(entries_.size()), entries_));
        return entries_[k];
    }

    void corrupt(unsigned k) {
        std::unique_lock lock(mutex_);
        if (k < entries_.size()) entries_[k] = entries_[k] + UPoly(NPoly(Int(1)));
    }

private:
    Maker make_;
    std::shared_mutex mutex_;
    std::deque<UPoly> entries_;
};

SequenceCache& cache_for(SequenceTag tag) {
    static SequenceCache f_cache([](unsigned k, const std::deque<UPoly>& lower) {
        return k == 0 ? UPoly{NPoly(Int(1))} : recurrence_step(SequenceTag::F, k - 1, lower[k - 1]);
    });
    static SequenceCache h_cache([](unsigned k, const std::deque<UPoly>& lower) {
        return k == 0 ? UPoly{NPoly(Int(1))} : recurrence_step(SequenceTag::H, k - 1, lower[k - 1]);
    });
    // g_k is served through the proven sign identity g_k = (-1)^k f_k;
    // its own recurrence stays reachable via intermediate_poly_direct.
    static SequenceCache g_cache([](unsigned k, const std::deque<UPoly>&) {
        const UPoly& f = cache_for(SequenceTag::F).get(k);
        return k % 2 == 0 ? f : -f;
    });
    switch (tag) {
        case SequenceTag::G: return g_cache;
        case SequenceTag::H: return h_cache;
        case SequenceTag::F: break;
    }
    return f_cache;
}

}  // namespace

const FamilyTraits& traits(Family family) { return kTraits[static_cast<std::size_t>(family)]; }

SequenceTag sequence_for(Family family) { return traits(family).tag; }

const char* family_name(Family family) { return traits(family).base_name; }

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& t : kTraits)
        if (name == t.base_name) return t.family;
    return std::nullopt;
}

const char* form_name(bool final_form) { return final_form ? "final" : "intermediate"; }

const UPoly& intermediate_poly(SequenceTag tag, unsigned k) { return cache_for(tag).get(k); }

UPoly intermediate_poly_direct(SequenceTag tag, unsigned k) {
    UPoly p{NPoly(Int(1))};
    for (unsigned i = 0; i < k; ++i) p = recurrence_step(tag, i, p);
    return p;
}

UPoly final_poly(Family family, unsigned k) {
    const FamilyTraits& t = traits(family);
    const UPoly& inter = intermediate_poly(t.tag, k);
    if (k % 2 == 0) return inter.substitute_even(t.substitution);
    return inter.div_by_var().substitute_even(t.substitution);
}

void corrupt_cached_intermediate(SequenceTag tag, unsigned k) {
    intermediate_poly(tag, k);  // make sure the entry exists
    cache_for(tag).corrupt(k);
}

}  // namespace powerderiv
