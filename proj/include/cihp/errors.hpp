#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cihp {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(msg), line(line) {}
    int line;  // 1-based input line, 0 when not applicable
};

/// An edge that is neither a regular nor a cyclic interval on the ground.
struct EdgeShapeError : ParseError {
    using ParseError::ParseError;
};

struct EmptyGroundError : ParseError {
    using ParseError::ParseError;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSource : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPermutation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MismatchedHypergraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Candidate pseudo-join/meet turned out cyclic; carries the offending
/// cycle as edge indices. Expected only on inputs failing the structural
/// characterization.
struct PseudoJoinCyclic : std::runtime_error {
    PseudoJoinCyclic(const std::string& msg, std::vector<int> cycle)
        : std::runtime_error(msg), cycle(std::move(cycle)) {}
    std::vector<int> cycle;
};

struct PseudoMeetCyclic : std::runtime_error {
    PseudoMeetCyclic(const std::string& msg, std::vector<int> cycle)
        : std::runtime_error(msg), cycle(std::move(cycle)) {}
    std::vector<int> cycle;
};

}  // namespace cihp
