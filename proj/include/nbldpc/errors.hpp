#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbldpc {

// Error taxonomy mirrors the CLI exit-code table (see tools/).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A peeling update produced an empty symbol set. Cannot happen for genuine
// BEC inputs; signals a corrupted matrix/pattern pair.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DominanceViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search ran out of node budget. Carries everything found so far plus an
// opaque token that enumerate_stopping_sets() accepts to resume.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& msg,
                   std::vector<std::vector<int32_t>> partial_sets,
                   std::string token)
        : std::runtime_error(msg),
          partial(std::move(partial_sets)),
          resume_token(std::move(token)) {}

    std::vector<std::vector<int32_t>> partial;
    std::string resume_token;
};

} // namespace nbldpc
