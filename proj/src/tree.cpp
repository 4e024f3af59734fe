#include "muxpath/tree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace muxpath {

std::string address_to_string(const NodeAddress& addr) {
  if (addr.empty()) return "/";
  std::string out;
  for (int i : addr) {
    out += '/';
    out += std::to_string(i);
  }
  return out;
}

bool is_reserved_prop(const std::string& name) {
  return name == kIsFirstChild || name == kIsRightSibling ||
         name == kHasFirstChild || name == kHasRightSibling;
}

LabelSet::LabelSet(std::vector<std::string> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void LabelSet::insert(const std::string& name) {
  auto it = std::lower_bound(items_.begin(), items_.end(), name);
  if (it == items_.end() || *it != name) items_.insert(it, name);
}

void LabelSet::erase(const std::string& name) {
  auto it = std::lower_bound(items_.begin(), items_.end(), name);
  if (it != items_.end() && *it == name) items_.erase(it);
}

bool LabelSet::contains(const std::string& name) const {
  return std::binary_search(items_.begin(), items_.end(), name);
}

SiblingTree::SiblingTree() : nodes_(1) {}

int SiblingTree::add_child(int parent_id) {
  int id = size();
  nodes_.emplace_back();
  nodes_.back().parent = parent_id;
  nodes_[parent_id].children.push_back(id);
  return id;
}

NodeAddress SiblingTree::address(int id) const {
  NodeAddress addr;
  while (id != 0) {
    int p = nodes_[id].parent;
    const auto& sibs = nodes_[p].children;
    int index = static_cast<int>(
        std::find(sibs.begin(), sibs.end(), id) - sibs.begin());
    addr.push_back(index + 1);
    id = p;
  }
  std::reverse(addr.begin(), addr.end());
  return addr;
}

int SiblingTree::find(const NodeAddress& addr) const {
  int id = 0;
  for (int i : addr) {
    const auto& kids = nodes_[id].children;
    if (i < 1 || i > static_cast<int>(kids.size())) return -1;
    id = kids[i - 1];
  }
  return id;
}

std::vector<int> SiblingTree::preorder() const {
  std::vector<int> order;
  order.reserve(nodes_.size());
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const auto& kids = nodes_[id].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

bool SiblingTree::operator==(const SiblingTree& other) const {
  if (size() != other.size()) return false;
  // Pool ids follow insertion order, which may differ; compare structurally.
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (labels(a) != other.labels(b)) return false;
    const auto& ka = children(a);
    const auto& kb = other.children(b);
    if (ka.size() != kb.size()) return false;
    for (std::size_t i = 0; i < ka.size(); ++i) stack.push_back({ka[i], kb[i]});
  }
  return true;
}

BinaryTree::BinaryTree() : nodes_(1) {}

int BinaryTree::add_child(int parent_id, int direction) {
  if (nodes_[parent_id].child[direction - 1] != -1)
    throw std::logic_error("binary tree child already present");
  int id = size();
  nodes_.emplace_back();
  nodes_.back().parent = parent_id;
  nodes_[parent_id].child[direction - 1] = id;
  return id;
}

NodeAddress BinaryTree::address(int id) const {
  NodeAddress addr;
  while (id != 0) {
    int p = nodes_[id].parent;
    addr.push_back(nodes_[p].child[0] == id ? 1 : 2);
    id = p;
  }
  std::reverse(addr.begin(), addr.end());
  return addr;
}

int BinaryTree::find(const NodeAddress& addr) const {
  int id = 0;
  for (int i : addr) {
    if (i < 1 || i > 2) return -1;
    id = nodes_[id].child[i - 1];
    if (id == -1) return -1;
  }
  return id;
}

std::vector<int> BinaryTree::preorder() const {
  std::vector<int> order;
  order.reserve(nodes_.size());
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    if (nodes_[id].child[1] != -1) stack.push_back(nodes_[id].child[1]);
    if (nodes_[id].child[0] != -1) stack.push_back(nodes_[id].child[0]);
  }
  return order;
}

bool BinaryTree::operator==(const BinaryTree& other) const {
  if (size() != other.size()) return false;
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (labels(a) != other.labels(b)) return false;
    for (int d = 1; d <= 2; ++d) {
      int ca = child(a, d);
      int cb = other.child(b, d);
      if ((ca == -1) != (cb == -1)) return false;
      if (ca != -1) stack.push_back({ca, cb});
    }
  }
  return true;
}

namespace {

class TreeLexer {
 public:
  explicit TreeLexer(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(line_, col_, std::string("expected '") + c + "'");
    advance();
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      advance();
    }
    if (start == pos_) throw ParseError(line_, col_, "expected identifier");
    return text_.substr(start, pos_ - start);
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void parse_node(TreeLexer& lex, SiblingTree& t, int id) {
  lex.expect('(');
  while (true) {
    char c = lex.peek();
    if (c == ')') break;
    if (c == '(') break;
    int line = lex.line(), col = lex.col();
    std::string name = lex.identifier();
    if (is_reserved_prop(name))
      throw ParseError(line, col,
                       "'" + name + "' is a reserved structural proposition");
    t.labels(id).insert(name);
  }
  while (lex.peek() == '(') {
    int child = t.add_child(id);
    parse_node(lex, t, child);
  }
  lex.expect(')');
}

void render_node(const SiblingTree& t, int id, std::string& out) {
  out += '(';
  bool first = true;
  for (const auto& label : t.labels(id).items()) {
    if (!first) out += ' ';
    out += label;
    first = false;
  }
  for (int child : t.children(id)) {
    if (!first) out += ' ';
    render_node(t, child, out);
    first = false;
  }
  out += ')';
}

}  // namespace

SiblingTree parse_tree(const std::string& text) {
  TreeLexer lex(text);
  SiblingTree t;
  parse_node(lex, t, t.root());
  if (!lex.eof())
    throw ParseError(lex.line(), lex.col(), "trailing input after tree");
  return t;
}

std::string render_tree(const SiblingTree& t) {
  std::string out;
  render_node(t, t.root(), out);
  return out;
}

BinaryTree encode_binary(const SiblingTree& t) {
  BinaryTree b;
  // bid[sid] = binary node carrying sibling node sid.
  std::vector<int> bid(t.size(), -1);
  bid[t.root()] = b.root();
  for (int sid : t.preorder()) {
    int self = bid[sid];
    for (const auto& label : t.labels(sid).items()) b.labels(self).insert(label);
    const auto& kids = t.children(sid);
    if (!kids.empty()) {
      b.labels(self).insert(kHasFirstChild);
      int prev = b.add_child(self, 1);
      b.labels(prev).insert(kIsFirstChild);
      bid[kids[0]] = prev;
      for (std::size_t i = 1; i < kids.size(); ++i) {
        b.labels(prev).insert(kHasRightSibling);
        int next = b.add_child(prev, 2);
        b.labels(next).insert(kIsRightSibling);
        bid[kids[i]] = next;
        prev = next;
      }
    }
  }
  return b;
}

SiblingTree decode_binary(const BinaryTree& b) {
  auto report = well_formed_check(b);
  if (!report.ok)
    throw std::invalid_argument("binary tree is not well formed at " +
                                address_to_string(report.violation) + ": " +
                                report.reason);
  SiblingTree t;
  // Stack of (binary id, sibling parent id); -1 sibling parent marks the root.
  std::vector<std::pair<int, int>> stack = {{b.root(), -1}};
  while (!stack.empty()) {
    auto [bid, sparent] = stack.back();
    stack.pop_back();
    int sid = sparent == -1 ? t.root() : t.add_child(sparent);
    for (const auto& label : b.labels(bid).items())
      if (!is_reserved_prop(label)) t.labels(sid).insert(label);
    // Collect the sibling children: the 1-child and then its 2-chain, each
    // step licensed by the matching flag.
    std::vector<int> sibs;
    if (b.labels(bid).contains(kHasFirstChild) && b.child(bid, 1) != -1) {
      int c = b.child(bid, 1);
      sibs.push_back(c);
      while (b.labels(c).contains(kHasRightSibling) && b.child(c, 2) != -1) {
        c = b.child(c, 2);
        sibs.push_back(c);
      }
    }
    for (auto it = sibs.rbegin(); it != sibs.rend(); ++it)
      stack.push_back({*it, sid});
  }
  return t;
}

WellFormedReport well_formed_check(const BinaryTree& b) {
  auto fail = [&](int id, const std::string& reason) {
    WellFormedReport r;
    r.ok = false;
    r.violation = b.address(id);
    r.reason = reason;
    return r;
  };
  const auto& root_labels = b.labels(b.root());
  if (root_labels.contains(kIsFirstChild))
    return fail(b.root(), "root labeled ifc");
  if (root_labels.contains(kIsRightSibling))
    return fail(b.root(), "root labeled irs");
  if (root_labels.contains(kHasRightSibling))
    return fail(b.root(), "root labeled hrs");
  for (int id : b.preorder()) {
    if (b.labels(id).contains(kHasFirstChild)) {
      int c = b.child(id, 1);
      if (c != -1) {
        if (!b.labels(c).contains(kIsFirstChild))
          return fail(c, "1-child of hfc node lacks ifc");
        if (b.labels(c).contains(kIsRightSibling))
          return fail(c, "1-child of hfc node labeled irs");
      }
    }
    if (b.labels(id).contains(kHasRightSibling)) {
      int c = b.child(id, 2);
      if (c != -1) {
        if (!b.labels(c).contains(kIsRightSibling))
          return fail(c, "2-child of hrs node lacks irs");
        if (b.labels(c).contains(kIsFirstChild))
          return fail(c, "2-child of hrs node labeled ifc");
      }
    }
  }
  return {};
}

}  // namespace muxpath
