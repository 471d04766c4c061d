#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gasplab/errors.hpp"

namespace gasplab {

using IntSet = std::vector<int>; // sorted, distinct, non-negative

// All n that can be written as r - s_1 - ... - s_l with r in R, s_i in S_i, and every
// intermediate value non-negative.
struct PssInstance {
    IntSet targets;
    std::vector<IntSet> sources;
};

class PssSolver {
public:
    explicit PssSolver(PssInstance inst);

    auto solutions() const -> const IntSet & { return solutions_; }
    auto contains(int n) const -> bool;
    // r followed by s_1..s_l; the lexicographically smallest choice of s_1, s_2, ...
    auto witness(int n) const -> std::vector<int>;

private:
    PssInstance inst_;
    int width_ = 0;
    std::vector<std::vector<char>> table_;
    IntSet solutions_;
};

auto solve_pss(const PssInstance & inst) -> IntSet;

// Vertex labels λ(v) and undirected edges. A forest is accepted; each component is rooted at
// its first vertex.
struct LabeledTree {
    std::vector<IntSet> labels;
    std::vector<std::pair<int, int>> edges;
};

struct TssResult {
    bool feasible = false;
    std::vector<int> edge_values; // parallel to LabeledTree::edges
};

// Throws StructureError if the edges contain a cycle.
auto solve_tss(const LabeledTree & tree) -> TssResult;

// Does α satisfy Σ_{e∋v} α(e) ∈ λ(v) at every vertex?
auto check_tss(const LabeledTree & tree, const std::vector<int> & edge_values) -> bool;

using IntVector = std::vector<int>;

// Sets of d-dimensional vectors; solutions are the sums with one vector per set that stay
// within the per-component caps.
struct VectorFamily {
    int dimension = 0;
    IntVector caps;
    std::vector<std::vector<IntVector>> sets;
};

class MpssSolver {
public:
    explicit MpssSolver(VectorFamily family);

    // True when some set was empty, which makes every query fail.
    auto has_empty_set() const -> bool { return empty_set_; }
    auto solutions() const -> std::vector<IntVector>;
    auto contains(const IntVector & v) const -> bool;
    // Index of the chosen vector in each set, lexicographically smallest by vector value.
    auto witness(const IntVector & v) const -> std::vector<int>;
    auto table_size() const -> std::size_t { return cells_; }

private:
    auto encode(const IntVector & v) const -> std::optional<std::size_t>;
    auto decode(std::size_t code) const -> IntVector;

    VectorFamily family_;
    bool empty_set_ = false;
    std::size_t cells_ = 1;
    std::vector<std::size_t> radix_;
    std::vector<std::vector<int>> order_; // per set, indices sorted by vector value
    std::vector<std::vector<char>> levels_;
};

// Brute force over every combination, for cross-checking.
auto brute_pss(const PssInstance & inst) -> IntSet;
auto brute_tss(const LabeledTree & tree, std::uint64_t budget = 50'000'000) -> TssResult;
auto brute_mpss(const VectorFamily & family, std::uint64_t budget = 50'000'000) -> std::vector<IntVector>;

using WideVector = std::vector<std::int64_t>;

// Depth-first search for one vector per set summing exactly to `target`. Exhaustive; prunes
// only on partial sums that can no longer reach the target. Values must be non-negative.
auto brute_mpss_find(const std::vector<std::vector<WideVector>> & sets, const WideVector & target,
                     std::uint64_t budget = 4'000'000'000) -> std::optional<std::vector<int>>;

} // namespace gasplab
