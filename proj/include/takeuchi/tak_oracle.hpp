#pragma once

#include "takeuchi/sequences.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>

namespace takeuchi {

struct TakState {
    std::int64_t x = 0, y = 0, z = 0;
    friend bool operator==(const TakState&, const TakState&) = default;
};

struct TakStateHash {
    std::size_t operator()(const TakState& s) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : {s.x, s.y, s.z}) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Value of t(x,y,z) and the number of else-clause invocations T(x,y,z) made by
/// plain (unmemoized) recursive evaluation.
struct TakResult {
    std::int64_t value = 0;
    BigInt count;
};

/// Evaluates Takeuchi's function with an explicit work stack.
///
/// With memoization on, each distinct state is expanded once and its count is
/// reused, which leaves the count identical to the unmemoized evaluation.
/// The budget caps distinct memo entries (memoized) or expanded calls (not
/// memoized); exceeding it raises ResourceError.
class TakOracle {
public:
    static constexpr std::size_t kDefaultBudget = 10'000'000;

    explicit TakOracle(std::size_t budget = kDefaultBudget, bool memoize = true)
        : budget_(budget), memoize_(memoize)
    {
    }

    TakResult evaluate(const TakState& s);
    std::int64_t value(std::int64_t x, std::int64_t y, std::int64_t z) { return evaluate({x, y, z}).value; }
    BigInt count(std::int64_t x, std::int64_t y, std::int64_t z) { return evaluate({x, y, z}).count; }

    std::size_t memo_size() const { return memo_.size(); }
    /// Work units spent so far: memo entries, or expanded calls without memo.
    std::size_t work() const { return memoize_ ? memo_.size() : expanded_; }

private:
    std::size_t budget_;
    bool memoize_;
    std::size_t expanded_ = 0;
    std::unordered_map<TakState, TakResult, TakStateHash> memo_;
};

std::int64_t tak_value(std::int64_t x, std::int64_t y, std::int64_t z);
BigInt tak_count(std::int64_t x, std::int64_t y, std::int64_t z);

/// T(n, 0, n+1) for n = 0..N; stops early when the budget runs out.
struct OracleTable {
    IntegerTable table;
    /// First n that could not be computed within the budget.
    std::optional<std::size_t> cutoff;
};

OracleTable oracle_table(std::size_t n_max, std::size_t budget = TakOracle::kDefaultBudget);

} // namespace takeuchi
