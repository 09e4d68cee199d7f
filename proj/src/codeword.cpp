#include "collatz/codeword.hpp"

#include <algorithm>
#include <stdexcept>

namespace collatz {

std::uint64_t CodeWord::odd_groups() const {
    return static_cast<std::uint64_t>(
        std::count(symbols.begin(), symbols.end(), CodeSymbol::odd_group));
}

std::uint64_t CodeWord::extra_divs() const {
    return static_cast<std::uint64_t>(
        std::count(symbols.begin(), symbols.end(), CodeSymbol::extra_div));
}

std::string CodeWord::render() const {
    std::string out;
    out.reserve(symbols.size());
    for (const CodeSymbol s : symbols) {
        out.push_back(s == CodeSymbol::odd_group ? '-' : '0');
    }
    return out;
}

CodeWord encode(const Natural& n, std::uint64_t step_budget) {
    if (n.is_zero()) throw std::invalid_argument("encode requires n >= 1");
    CodeWord word;
    Natural cur = n;
    while (!cur.is_one()) {
        if (word.symbols.size() >= step_budget) {
            throw StepBudgetExhausted("encode: step budget exhausted");
        }
        if (cur.is_odd()) {
            // 3x+1 always lands even, so the group absorbs one halving.
            cur.triple_add1();
            cur.shift_right(1);
            word.symbols.push_back(CodeSymbol::odd_group);
        } else {
            cur.shift_right(1);
            word.symbols.push_back(CodeSymbol::extra_div);
        }
    }
    return word;
}

std::uint64_t code_length_law(const StopReport& report) {
    return report.stopping_time - report.odd_count;
}

bool replay_reaches_one(const Natural& n, const CodeWord& word) {
    if (n.is_zero()) return false;
    Natural cur = n;
    for (const CodeSymbol s : word.symbols) {
        if (cur.is_one()) return false;  // trailing symbols past the end
        if (s == CodeSymbol::odd_group) {
            if (!cur.is_odd()) return false;
            cur.triple_add1();
            cur.shift_right(1);
        } else {
            if (!cur.is_even()) return false;
            cur.shift_right(1);
        }
    }
    return cur.is_one();
}

}  // namespace collatz
