#include "collatz/tree.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace collatz {

namespace {

struct FlatNode {
    Natural value;
    std::size_t parent;  // index into the BFS order; root points at itself
};

template <typename Visit>
void walk_edges(const TreeNode& root, Visit visit) {
    // Iterative depth-first walk; sterile chains can be thousands deep.
    std::vector<const TreeNode*> stack{&root};
    while (!stack.empty()) {
        const TreeNode* node = stack.back();
        stack.pop_back();
        for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
            visit(*node, *it);
            stack.push_back(&*it);
        }
    }
}

}  // namespace

std::vector<Natural> children(const Natural& m) {
    std::vector<Natural> out;
    Natural doubled = m;
    doubled.shift_left(1);
    out.push_back(std::move(doubled));
    if (is_branch_point(m)) {
        Natural odd_child = m;
        odd_child -= 1;
        odd_child.divmod_u64(3);  // exact: m = 4 mod 6
        out.push_back(std::move(odd_child));
    }
    return out;
}

bool is_branch_point(const Natural& m) {
    return m >= Natural(10) && m.mod_u64(6) == 4;
}

bool is_sterile_root(const Natural& m) {
    return m.is_odd() && m.mod_u64(3) == 0;
}

TreeNode generate(const Natural& root, const Natural& max_value) {
    if (root.is_zero()) throw std::invalid_argument("generate requires root >= 1");
    if (max_value < root) throw std::invalid_argument("generate requires max_value >= root");

    std::vector<FlatNode> order;
    order.push_back({root, 0});
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Natural value = order[i].value;  // copy: push_back may reallocate
        for (Natural& child : children(value)) {
            if (child <= max_value) {
                order.push_back({std::move(child), i});
            }
        }
    }

    // Children in the BFS order always sit after their parent, so building
    // back-to-front completes every subtree before it is attached.
    std::vector<TreeNode> built(order.size());
    for (std::size_t i = order.size(); i > 0; --i) {
        const std::size_t idx = i - 1;
        built[idx].value = std::move(order[idx].value);
        if (idx != 0) {
            auto& siblings = built[order[idx].parent].children;
            // BFS enqueued the doubling child first; reversed attachment
            // prepends to keep that order.
            siblings.insert(siblings.begin(), std::move(built[idx]));
        }
    }
    return std::move(built[0]);
}

void write_dot(const TreeNode& root, std::ostream& out) {
    out << "digraph collatz_tree {\n";
    out << "  \"" << root.value.to_decimal() << "\";\n";
    walk_edges(root, [&out](const TreeNode& parent, const TreeNode& child) {
        out << "  \"" << parent.value.to_decimal() << "\" -> \"" << child.value.to_decimal()
            << "\";\n";
    });
    out << "}\n";
}

void write_csv(const TreeNode& root, std::ostream& out) {
    out << "node,parent,is_branch_point,is_sterile_root\n";
    const auto row = [&out](const TreeNode& node, const Natural* parent) {
        out << node.value.to_decimal() << ',' << (parent ? parent->to_decimal() : std::string())
            << ',' << (is_branch_point(node.value) ? 1 : 0) << ','
            << (is_sterile_root(node.value) ? 1 : 0) << '\n';
    };
    row(root, nullptr);
    walk_edges(root, [&row](const TreeNode& parent, const TreeNode& child) {
        row(child, &parent.value);
    });
    out << std::flush;
}

}  // namespace collatz
