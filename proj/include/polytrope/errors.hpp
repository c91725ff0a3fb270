#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace polytrope {

// Some directed cycle of the weight matrix has negative total weight.
// `cycle` lists the vertices (1-based) of one witness cycle, first == last.
class NegativeCycleError : public std::runtime_error {
public:
    std::vector<int> cycle;
    explicit NegativeCycleError(std::vector<int> cyc)
        : std::runtime_error(describe(cyc)), cycle(std::move(cyc)) {}

private:
    static std::string describe(const std::vector<int>& cyc) {
        std::string s = "negative cycle:";
        for (int v : cyc) s += " " + std::to_string(v);
        return s;
    }
};

// Input is not a Kleene star where one is required.
class NotKleeneError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixed variable sets, unknown variable, malformed matrix, bad vector length.
class DomainError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration box exceeds the configured cap.
class ResourceCapError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A checked invariant failed; signals a bug or an invalid input that slipped
// past the preconditions, never an expected condition for Kleene stars.
class InternalConsistencyError : public std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace polytrope
