#pragma once

#include <cstdint>
#include <limits>
#include <optional>

namespace tourn {

// Search budgets count nodes, not wall-clock time, so results do not depend
// on the machine.
inline constexpr std::uint64_t default_node_budget = 50'000'000;
inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();

enum class Outcome {
    found,      // a witness exists and is returned
    none,       // the search space was exhausted without a witness
    exhausted,  // the node budget ran out before a decision
};

class NodeCounter {
public:
    explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}

    // False once the budget is spent.
    bool tick()
    {
        if (used_ >= limit_) {
            out_ = true;
            return false;
        }
        ++used_;
        return true;
    }

    bool out() const { return out_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t remaining() const { return limit_ - used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    bool out_ = false;
};

template <class T>
struct Search {
    Outcome outcome = Outcome::none;
    std::optional<T> value;
    std::uint64_t nodes = 0;

    bool found() const { return outcome == Outcome::found; }
    bool exhausted() const { return outcome == Outcome::exhausted; }
};

} // namespace tourn
