#include "tourn/nae.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tourn {

namespace {

class NaeSolver {
public:
    NaeSolver(const NaeProblem& p, std::uint64_t budget)
        : p_(p), value_(static_cast<std::size_t>(p.variables), -1),
          occurs_(static_cast<std::size_t>(p.variables)), counter_(budget)
    {
        for (std::size_t c = 0; c < p.clauses.size(); ++c)
            for (int v : p.clauses[c]) {
                if (v < 0 || v >= p.variables)
                    throw std::invalid_argument("NAE clause variable out of range");
                occurs_[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
            }
        order_.resize(static_cast<std::size_t>(p.variables));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return occurs_[static_cast<std::size_t>(a)].size() > occurs_[static_cast<std::size_t>(b)].size();
        });
    }

    Search<std::vector<int>> run()
    {
        Search<std::vector<int>> result;
        const bool ok = solve(0, true);
        result.nodes = counter_.used();
        if (ok) {
            for (int& v : value_)
                if (v < 0)
                    v = 0;
            result.outcome = Outcome::found;
            result.value = value_;
        }
        else {
            result.outcome = counter_.out() ? Outcome::exhausted : Outcome::none;
        }
        return result;
    }

private:
    // Assigns and propagates; on conflict returns false. Every assignment is
    // pushed to trail_ so the caller can undo it.
    bool assign(int var, int val)
    {
        std::vector<std::pair<int, int>> queue{{var, val}};
        while (!queue.empty()) {
            auto [v, x] = queue.back();
            queue.pop_back();
            int& cur = value_[static_cast<std::size_t>(v)];
            if (cur >= 0) {
                if (cur != x)
                    return false;
                continue;
            }
            cur = x;
            trail_.push_back(v);
            for (int c : occurs_[static_cast<std::size_t>(v)]) {
                const auto& cl = p_.clauses[static_cast<std::size_t>(c)];
                int zeros = 0;
                int ones = 0;
                int free_var = -1;
                for (int u : cl) {
                    const int uv = value_[static_cast<std::size_t>(u)];
                    if (uv == 0)
                        ++zeros;
                    else if (uv == 1)
                        ++ones;
                    else
                        free_var = u;
                }
                if (zeros == 3 || ones == 3)
                    return false;
                if (free_var >= 0 && zeros + ones == 2 && (zeros == 2 || ones == 2))
                    queue.push_back({free_var, zeros == 2 ? 1 : 0});
            }
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            value_[static_cast<std::size_t>(trail_.back())] = -1;
            trail_.pop_back();
        }
    }

    bool solve(std::size_t from, bool first)
    {
        if (!counter_.tick())
            return false;
        while (from < order_.size() && value_[static_cast<std::size_t>(order_[from])] >= 0)
            ++from;
        if (from == order_.size())
            return true;
        const int var = order_[from];
        for (int val = 0; val < (first ? 1 : 2); ++val) {
            const std::size_t mark = trail_.size();
            if (assign(var, val) && solve(from + 1, false))
                return true;
            undo(mark);
            if (counter_.out())
                return false;
        }
        return false;
    }

    const NaeProblem& p_;
    std::vector<int> value_;
    std::vector<std::vector<int>> occurs_;
    std::vector<int> order_;
    std::vector<int> trail_;
    NodeCounter counter_;
};

} // namespace

Search<std::vector<int>> solve_nae(const NaeProblem& problem, std::uint64_t budget)
{
    NaeSolver solver(problem, budget);
    return solver.run();
}

bool satisfies_nae(const NaeProblem& problem, const std::vector<int>& values)
{
    if (static_cast<int>(values.size()) != problem.variables)
        return false;
    for (const auto& c : problem.clauses) {
        const int a = values[static_cast<std::size_t>(c[0])];
        if (a == values[static_cast<std::size_t>(c[1])] && a == values[static_cast<std::size_t>(c[2])])
            return false;
    }
    return true;
}

} // namespace tourn
