#include "takeuchi/tak_oracle.hpp"

#include "takeuchi/errors.hpp"

#include <vector>

namespace takeuchi {

namespace {

struct Frame {
    TakState state;
    int stage = 0; // number of subcalls already returned
    std::int64_t sub[3] = {0, 0, 0};
    BigInt count = 1; // this else-clause invocation
};

} // namespace

TakResult TakOracle::evaluate(const TakState& root)
{
    std::vector<Frame> stack;
    TakResult ret; // result of the most recently finished call
    bool have_ret = false;

    auto begin = [&](const TakState& s) {
        // Resolves trivially finished calls immediately; pushes the rest.
        if (s.x <= s.y) {
            ret = {s.y, 0};
            have_ret = true;
            return;
        }
        if (memoize_) {
            if (auto it = memo_.find(s); it != memo_.end()) {
                ret = it->second;
                have_ret = true;
                return;
            }
        }
        if (++expanded_ > budget_ && !memoize_)
            throw ResourceError("tak oracle: call budget of " + std::to_string(budget_) + " exceeded");
        stack.push_back(Frame{s});
        have_ret = false;
    };

    begin(root);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (have_ret) {
            f.count += ret.count;
            if (f.stage < 3) f.sub[f.stage] = ret.value;
            ++f.stage;
            have_ret = false;
            if (f.stage == 4) {
                TakResult done{ret.value, std::move(f.count)};
                TakState s = f.state;
                stack.pop_back();
                if (memoize_) {
                    if (memo_.size() >= budget_)
                        throw ResourceError("tak oracle: memo budget of " + std::to_string(budget_) + " entries exceeded");
                    memo_.emplace(s, done);
                }
                ret = std::move(done);
                have_ret = true;
                continue;
            }
        }
        const TakState s = f.state;
        switch (f.stage) {
        case 0: begin({s.x - 1, s.y, s.z}); break;
        case 1: begin({s.y - 1, s.z, s.x}); break;
        case 2: begin({s.z - 1, s.x, s.y}); break;
        default: begin({f.sub[0], f.sub[1], f.sub[2]}); break;
        }
    }
    return ret;
}

std::int64_t tak_value(std::int64_t x, std::int64_t y, std::int64_t z) { return TakOracle().value(x, y, z); }

BigInt tak_count(std::int64_t x, std::int64_t y, std::int64_t z) { return TakOracle().count(x, y, z); }

OracleTable oracle_table(std::size_t n_max, std::size_t budget)
{
    OracleTable out{{"takeuchi", {}}, std::nullopt};
    TakOracle oracle(budget);
    for (std::size_t n = 0; n <= n_max; ++n) {
        try {
            const auto ln = static_cast<std::int64_t>(n);
            out.table.values.push_back(oracle.count(ln, 0, ln + 1));
        } catch (const ResourceError&) {
            out.cutoff = n;
            break;
        }
    }
    return out;
}

} // namespace takeuchi
