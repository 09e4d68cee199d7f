#pragma once

#include <iosfwd>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

// Node of the inverse tree: 2m is always a child; (m-1)/3 is a child exactly
// at branch points. Child order is fixed, doubling child first.
struct TreeNode {
    Natural value;
    std::vector<TreeNode> children;
};

// Preimages of m under one forward step, within the tree rooted at 1.
// [2m], plus [(m-1)/3] when m = 6k + 10; excluding 1 as a child of 4 keeps
// the tree acyclic at the root.
std::vector<Natural> children(const Natural& m);

// True iff m = 6k + 10 for some k >= 0 (equivalently m >= 10, m = 4 mod 6).
bool is_branch_point(const Natural& m);

// True iff m is an odd multiple of 3; such subtrees never branch.
bool is_sterile_root(const Natural& m);

// Breadth-first materialization of every descendant with value <= max_value.
// Rejects max_value < root.
TreeNode generate(const Natural& root, const Natural& max_value);

// digraph with one edge per parent -> child pair.
void write_dot(const TreeNode& root, std::ostream& out);

// Columns: node, parent (empty for the root), is_branch_point, is_sterile_root.
void write_csv(const TreeNode& root, std::ostream& out);

}  // namespace collatz
