#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

namespace zsum {

/// Thrown when a computation would exceed the configured candidate budget.
/// Budgets are hard caps: exceeding one is an error, never a silent truncation.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

enum class OutputFormat { Table, Json, Csv };

/// Resource envelope shared by all drivers. All computations are
/// deterministic; there is no seed.
struct RunConfig {
    static constexpr std::int64_t kMinBudget = 10'000;

    std::int64_t budget_candidates = 100'000'000;
    int workers = 0;  // 0 = use available hardware parallelism
    OutputFormat output_format = OutputFormat::Table;
    bool automorphism_pruning = false;

    void validate() const {
        if (budget_candidates < kMinBudget)
            throw std::invalid_argument("budget_candidates must be at least " +
                                        std::to_string(kMinBudget));
        if (workers < 0)
            throw std::invalid_argument("workers must be >= 1 (or 0 for auto)");
    }

    int effective_workers() const {
        if (workers > 0) return workers;
        unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? static_cast<int>(hc) : 1;
    }
};

}  // namespace zsum
