#ifndef MUXPATH_TREE_HPP
#define MUXPATH_TREE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace muxpath {

/// Path of 1-based child indices; the empty path addresses the root.
using NodeAddress = std::vector<int>;

/// Renders "/" for the root, "/2/1" for node 2·1.
std::string address_to_string(const NodeAddress& addr);

/// The four structural propositions reserved for binary encodings.
inline constexpr const char* kIsFirstChild = "ifc";
inline constexpr const char* kIsRightSibling = "irs";
inline constexpr const char* kHasFirstChild = "hfc";
inline constexpr const char* kHasRightSibling = "hrs";

bool is_reserved_prop(const std::string& name);

/// Sorted, duplicate-free set of proposition names attached to one node.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> items);

  void insert(const std::string& name);
  void erase(const std::string& name);
  bool contains(const std::string& name) const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<std::string>& items() const { return items_; }

  bool operator==(const LabelSet& other) const = default;

 private:
  std::vector<std::string> items_;
};

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Finite unranked tree with labeled nodes and ordered children.
///
/// Nodes are stored in an index pool; id 0 is always the root. Addresses are
/// derived on demand so deep trees stay linear in memory.
class SiblingTree {
 public:
  SiblingTree();  // single unlabeled root

  int root() const { return 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const LabelSet& labels(int id) const { return nodes_[id].labels; }
  LabelSet& labels(int id) { return nodes_[id].labels; }
  int parent(int id) const { return nodes_[id].parent; }
  const std::vector<int>& children(int id) const { return nodes_[id].children; }

  /// Appends a child after the current last child of `parent_id`.
  int add_child(int parent_id);

  NodeAddress address(int id) const;
  /// Returns the node id for `addr`, or -1 if no such node exists.
  int find(const NodeAddress& addr) const;

  /// Ids in depth-first order (root first, children in sibling order); this
  /// coincides with lexicographic address order.
  std::vector<int> preorder() const;

  bool operator==(const SiblingTree& other) const;

 private:
  struct Node {
    LabelSet labels;
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes_;
};

/// Binary tree with indices in {1,2}; labels may include the reserved flags.
class BinaryTree {
 public:
  BinaryTree();  // single unlabeled root

  int root() const { return 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const LabelSet& labels(int id) const { return nodes_[id].labels; }
  LabelSet& labels(int id) { return nodes_[id].labels; }
  int parent(int id) const { return nodes_[id].parent; }
  /// Child in direction 1 or 2, or -1 when absent.
  int child(int id, int direction) const {
    return nodes_[id].child[direction - 1];
  }
  int add_child(int parent_id, int direction);

  NodeAddress address(int id) const;
  int find(const NodeAddress& addr) const;
  std::vector<int> preorder() const;

  bool operator==(const BinaryTree& other) const;

 private:
  struct Node {
    LabelSet labels;
    int parent = -1;
    int child[2] = {-1, -1};
  };
  std::vector<Node> nodes_;
};

/// Outcome of the structural-flag consistency check on a binary tree.
struct WellFormedReport {
  bool ok = true;
  NodeAddress violation;  // meaningful when !ok
  std::string reason;
};

/// Parses the parenthesized tree grammar:
///   node := '(' label* child* ')'
/// Whitespace separated; '#' starts a line comment. Reserved structural
/// proposition names are rejected as labels.
SiblingTree parse_tree(const std::string& text);

/// Canonical rendering; labels in lexicographic order, children in order.
/// parse_tree(render_tree(t)) == t.
std::string render_tree(const SiblingTree& t);

/// Binary encoding: first child maps to direction 1, next sibling to
/// direction 2, with the ifc/irs/hfc/hrs flags set exactly where the
/// first-child / right-sibling relations hold.
BinaryTree encode_binary(const SiblingTree& t);

/// Inverse of encode_binary on its image. Subtrees hanging below a node that
/// lacks the matching hfc/hrs flag are dropped; the right chain of the root
/// is likewise ignored. Throws std::invalid_argument when the input is not
/// well formed.
SiblingTree decode_binary(const BinaryTree& b);

/// Checks the two structural conditions: flagged children carry the matching
/// ifc/irs flag (and not the opposite one), and the root carries none of
/// ifc, irs, hrs.
WellFormedReport well_formed_check(const BinaryTree& b);

}  // namespace muxpath

#endif  // MUXPATH_TREE_HPP
