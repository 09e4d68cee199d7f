#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/stopping_time.hpp"

namespace collatz {

// Compressed sequence encoding: each odd term > 1 collapses with its 3x+1 and
// the one guaranteed halving after it into a single symbol; every additional
// consecutive halving gets its own symbol. Rendered '-' and '0' respectively.
enum class CodeSymbol : unsigned char { odd_group, extra_div };

struct CodeWord {
    std::vector<CodeSymbol> symbols;

    std::size_t length() const { return symbols.size(); }
    std::uint64_t odd_groups() const;  // U
    std::uint64_t extra_divs() const;  // D - U
    std::string render() const;
};

class StepBudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

// Walks the sequence from n, emitting one symbol per odd group or extra
// division. Rejects n = 0; throws StepBudgetExhausted past step_budget
// symbols (suspected divergence, never expected).
CodeWord encode(const Natural& n, std::uint64_t step_budget = kDefaultStepBudget);

// L_code = L_seq - N_odd, from any stopping-time report.
std::uint64_t code_length_law(const StopReport& report);

// Replays a code word from n (odd_group: 3x+1 then halve; extra_div: halve);
// true iff every symbol matches the term's parity and the walk ends at 1.
bool replay_reaches_one(const Natural& n, const CodeWord& word);

}  // namespace collatz
