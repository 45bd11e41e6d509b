#pragma once

#include "symderiv/cache.hpp"
#include "symderiv/homology.hpp"
#include "symderiv/report.hpp"

#include <optional>
#include <stdexcept>

namespace symderiv {

/// Invalid parameters; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Tier { Fast, Full };

struct CommandContext {
    Cache* cache = nullptr;
    unsigned threads = 1;
    Tier tier = Tier::Fast;
};

struct DimsParams {
    std::optional<int> genus;
    std::optional<int> plain;
    int min_degree = 1;
    int max_degree = 3;
};

Report cmd_dims(const DimsParams& p, const CommandContext& ctx);
/// Weight >= 3 on a_g requires allow_heavy.
Report cmd_abelianize(const AlgebraHandle& alg, int weight, bool allow_heavy, const CommandContext& ctx);
Report cmd_verify_paper(const CommandContext& ctx);
Report cmd_polygon(int k_min, int k_max, FactorKind kind, const CommandContext& ctx);
Report cmd_conjecture(int n, const CommandContext& ctx);
Report cmd_decompose(int genus, const CommandContext& ctx);

/// Exit code contract: 0 when every pass/fail check passes, 1 otherwise.
int exit_code(const Report& r);

} // namespace symderiv
