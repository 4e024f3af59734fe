#include "muxpath/query_ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace muxpath {

Axis inverse_axis(Axis a) {
  switch (a) {
    case Axis::FChild: return Axis::FChildInv;
    case Axis::Right: return Axis::RightInv;
    case Axis::FChildInv: return Axis::FChild;
    case Axis::RightInv: return Axis::Right;
    case Axis::Child: return Axis::ChildInv;
    case Axis::ChildInv: return Axis::Child;
  }
  throw std::logic_error("bad axis");
}

bool is_inverse_axis(Axis a) {
  return a == Axis::FChildInv || a == Axis::RightInv || a == Axis::ChildInv;
}

std::string axis_to_string(Axis a) {
  switch (a) {
    case Axis::FChild: return "fchild";
    case Axis::Right: return "right";
    case Axis::FChildInv: return "fchild^-";
    case Axis::RightInv: return "right^-";
    case Axis::Child: return "child";
    case Axis::ChildInv: return "child^-";
  }
  throw std::logic_error("bad axis");
}

namespace {
NodeExprPtr make_node(NodeExpr e) {
  return std::make_shared<const NodeExpr>(std::move(e));
}
PathExprPtr make_path(PathExpr p) {
  return std::make_shared<const PathExpr>(std::move(p));
}
}  // namespace

NodeExprPtr mk_true() {
  static const NodeExprPtr t = make_node({NodeExpr::Kind::True, {}, {}, {}, {}});
  return t;
}
NodeExprPtr mk_false() {
  static const NodeExprPtr f =
      make_node({NodeExpr::Kind::False, {}, {}, {}, {}});
  return f;
}
NodeExprPtr mk_prop(std::string name) {
  return make_node({NodeExpr::Kind::Prop, std::move(name), {}, {}, {}});
}
NodeExprPtr mk_var(std::string name) {
  return make_node({NodeExpr::Kind::Var, std::move(name), {}, {}, {}});
}
NodeExprPtr mk_not(NodeExprPtr e) {
  return make_node({NodeExpr::Kind::Not, {}, std::move(e), {}, {}});
}
NodeExprPtr mk_and(NodeExprPtr l, NodeExprPtr r) {
  return make_node({NodeExpr::Kind::And, {}, std::move(l), std::move(r), {}});
}
NodeExprPtr mk_or(NodeExprPtr l, NodeExprPtr r) {
  return make_node({NodeExpr::Kind::Or, {}, std::move(l), std::move(r), {}});
}
NodeExprPtr mk_implies(NodeExprPtr l, NodeExprPtr r) {
  return make_node(
      {NodeExpr::Kind::Implies, {}, std::move(l), std::move(r), {}});
}
NodeExprPtr mk_diamond(PathExprPtr p, NodeExprPtr body) {
  return make_node(
      {NodeExpr::Kind::Diamond, {}, std::move(body), {}, std::move(p)});
}
NodeExprPtr mk_box(PathExprPtr p, NodeExprPtr body) {
  return make_node(
      {NodeExpr::Kind::Box, {}, std::move(body), {}, std::move(p)});
}

PathExprPtr mk_axis(Axis a) {
  return make_path({PathExpr::Kind::Ax, a, {}, {}, {}});
}
PathExprPtr mk_test(NodeExprPtr e) {
  return make_path({PathExpr::Kind::Test, Axis::FChild, std::move(e), {}, {}});
}
PathExprPtr mk_seq(PathExprPtr l, PathExprPtr r) {
  return make_path(
      {PathExpr::Kind::Seq, Axis::FChild, {}, std::move(l), std::move(r)});
}
PathExprPtr mk_path_union(PathExprPtr l, PathExprPtr r) {
  return make_path(
      {PathExpr::Kind::Union, Axis::FChild, {}, std::move(l), std::move(r)});
}
PathExprPtr mk_star(PathExprPtr p) {
  return make_path({PathExpr::Kind::Star, Axis::FChild, {}, std::move(p), {}});
}
PathExprPtr mk_path_inverse(PathExprPtr p) {
  return make_path(
      {PathExpr::Kind::Inverse, Axis::FChild, {}, std::move(p), {}});
}

NodeExprPtr mk_and_all(const std::vector<NodeExprPtr>& parts) {
  if (parts.empty()) return mk_true();
  NodeExprPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = mk_and(acc, parts[i]);
  return acc;
}

NodeExprPtr mk_or_all(const std::vector<NodeExprPtr>& parts) {
  if (parts.empty()) return mk_false();
  NodeExprPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = mk_or(acc, parts[i]);
  return acc;
}

int MuXPathQuery::block_of(const std::string& var) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (const auto& [head, body] : blocks[i].equations)
      if (head == var) return static_cast<int>(i);
  return -1;
}

const NodeExprPtr* MuXPathQuery::body_of(const std::string& var) const {
  for (const auto& block : blocks)
    for (const auto& [head, body] : block.equations)
      if (head == var) return &body;
  return nullptr;
}

namespace {

NodeExprPtr nnf_pos(const NodeExprPtr& e);
NodeExprPtr nnf_neg(const NodeExprPtr& e);

NodeExprPtr nnf_pos(const NodeExprPtr& e) {
  switch (e->kind) {
    case NodeExpr::Kind::True:
    case NodeExpr::Kind::False:
    case NodeExpr::Kind::Prop:
    case NodeExpr::Kind::Var:
      return e;
    case NodeExpr::Kind::Not:
      return nnf_neg(e->lhs);
    case NodeExpr::Kind::And:
      return mk_and(nnf_pos(e->lhs), nnf_pos(e->rhs));
    case NodeExpr::Kind::Or:
      return mk_or(nnf_pos(e->lhs), nnf_pos(e->rhs));
    case NodeExpr::Kind::Implies:
      return mk_or(nnf_neg(e->lhs), nnf_pos(e->rhs));
    case NodeExpr::Kind::Diamond:
      return mk_diamond(e->path, nnf_pos(e->lhs));
    case NodeExpr::Kind::Box:
      return mk_box(e->path, nnf_pos(e->lhs));
  }
  throw std::logic_error("bad node expr");
}

NodeExprPtr nnf_neg(const NodeExprPtr& e) {
  switch (e->kind) {
    case NodeExpr::Kind::True:
      return mk_false();
    case NodeExpr::Kind::False:
      return mk_true();
    case NodeExpr::Kind::Prop:
    case NodeExpr::Kind::Var:
      return mk_not(e);
    case NodeExpr::Kind::Not:
      return nnf_pos(e->lhs);
    case NodeExpr::Kind::And:
      return mk_or(nnf_neg(e->lhs), nnf_neg(e->rhs));
    case NodeExpr::Kind::Or:
      return mk_and(nnf_neg(e->lhs), nnf_neg(e->rhs));
    case NodeExpr::Kind::Implies:
      return mk_and(nnf_pos(e->lhs), nnf_neg(e->rhs));
    case NodeExpr::Kind::Diamond:
      return mk_box(e->path, nnf_neg(e->lhs));
    case NodeExpr::Kind::Box:
      return mk_diamond(e->path, nnf_neg(e->lhs));
  }
  throw std::logic_error("bad node expr");
}

}  // namespace

NodeExprPtr nnf(const NodeExprPtr& e) { return nnf_pos(e); }

std::string expr_key(const NodeExprPtr& e) {
  switch (e->kind) {
    case NodeExpr::Kind::True: return "T";
    case NodeExpr::Kind::False: return "F";
    case NodeExpr::Kind::Prop: return "p:" + e->name + ";";
    case NodeExpr::Kind::Var: return "v:" + e->name + ";";
    case NodeExpr::Kind::Not: return "!(" + expr_key(e->lhs) + ")";
    case NodeExpr::Kind::And:
      return "&(" + expr_key(e->lhs) + "," + expr_key(e->rhs) + ")";
    case NodeExpr::Kind::Or:
      return "|(" + expr_key(e->lhs) + "," + expr_key(e->rhs) + ")";
    case NodeExpr::Kind::Implies:
      return ">(" + expr_key(e->lhs) + "," + expr_key(e->rhs) + ")";
    case NodeExpr::Kind::Diamond:
      return "<" + path_key(e->path) + ">(" + expr_key(e->lhs) + ")";
    case NodeExpr::Kind::Box:
      return "[" + path_key(e->path) + "](" + expr_key(e->lhs) + ")";
  }
  throw std::logic_error("bad node expr");
}

std::string path_key(const PathExprPtr& p) {
  switch (p->kind) {
    case PathExpr::Kind::Ax: return axis_to_string(p->axis);
    case PathExpr::Kind::Test: return "?(" + expr_key(p->test) + ")";
    case PathExpr::Kind::Seq:
      return ";(" + path_key(p->lhs) + "," + path_key(p->rhs) + ")";
    case PathExpr::Kind::Union:
      return "u(" + path_key(p->lhs) + "," + path_key(p->rhs) + ")";
    case PathExpr::Kind::Star: return "*(" + path_key(p->lhs) + ")";
    case PathExpr::Kind::Inverse: return "-(" + path_key(p->lhs) + ")";
  }
  throw std::logic_error("bad path expr");
}

bool expr_equal(const NodeExprPtr& a, const NodeExprPtr& b) {
  if (a == b) return true;
  return expr_key(a) == expr_key(b);
}

namespace {

// Surface precedence levels: -> (1) | (2) & (3) ! (4) atoms (5).
void render_expr_prec(const NodeExprPtr& e, int parent_level, std::string& out);

void render_path_prec(const PathExprPtr& p, int parent_level, std::string& out) {
  // Path precedence: union (1) seq (2) postfix */^- (3) atoms (4).
  switch (p->kind) {
    case PathExpr::Kind::Ax:
      out += axis_to_string(p->axis);
      return;
    case PathExpr::Kind::Test:
      out += "?(";
      render_expr_prec(p->test, 0, out);
      out += ')';
      return;
    case PathExpr::Kind::Seq: {
      bool paren = parent_level > 2;
      if (paren) out += '(';
      render_path_prec(p->lhs, 2, out);
      out += '/';
      render_path_prec(p->rhs, 2, out);
      if (paren) out += ')';
      return;
    }
    case PathExpr::Kind::Union: {
      bool paren = parent_level > 1;
      if (paren) out += '(';
      render_path_prec(p->lhs, 1, out);
      out += '|';
      render_path_prec(p->rhs, 1, out);
      if (paren) out += ')';
      return;
    }
    case PathExpr::Kind::Star:
      render_path_prec(p->lhs, 3, out);
      out += '*';
      return;
    case PathExpr::Kind::Inverse:
      if (p->lhs->kind == PathExpr::Kind::Ax) {
        out += axis_to_string(inverse_axis(p->lhs->axis));
      } else {
        render_path_prec(p->lhs, 3, out);
        out += "^-";
      }
      return;
  }
}

void render_expr_prec(const NodeExprPtr& e, int parent_level,
                      std::string& out) {
  switch (e->kind) {
    case NodeExpr::Kind::True: out += "true"; return;
    case NodeExpr::Kind::False: out += "false"; return;
    case NodeExpr::Kind::Prop: out += e->name; return;
    case NodeExpr::Kind::Var: out += '$' + e->name; return;
    case NodeExpr::Kind::Not:
      out += '!';
      render_expr_prec(e->lhs, 4, out);
      return;
    case NodeExpr::Kind::And: {
      bool paren = parent_level > 3;
      if (paren) out += '(';
      render_expr_prec(e->lhs, 3, out);
      out += " & ";
      render_expr_prec(e->rhs, 3, out);
      if (paren) out += ')';
      return;
    }
    case NodeExpr::Kind::Or: {
      bool paren = parent_level > 2;
      if (paren) out += '(';
      render_expr_prec(e->lhs, 2, out);
      out += " | ";
      render_expr_prec(e->rhs, 2, out);
      if (paren) out += ')';
      return;
    }
    case NodeExpr::Kind::Implies: {
      bool paren = parent_level > 1;
      if (paren) out += '(';
      render_expr_prec(e->lhs, 2, out);  // -> is right associative
      out += " -> ";
      render_expr_prec(e->rhs, 1, out);
      if (paren) out += ')';
      return;
    }
    case NodeExpr::Kind::Diamond:
      out += '<';
      render_path_prec(e->path, 0, out);
      out += '>';
      render_expr_prec(e->lhs, 4, out);
      return;
    case NodeExpr::Kind::Box:
      out += '[';
      render_path_prec(e->path, 0, out);
      out += ']';
      render_expr_prec(e->lhs, 4, out);
      return;
  }
}

}  // namespace

std::string render_expr(const NodeExprPtr& e) {
  std::string out;
  render_expr_prec(e, 0, out);
  return out;
}

std::string render_path(const PathExprPtr& p) {
  std::string out;
  render_path_prec(p, 0, out);
  return out;
}

std::string render_query(const MuXPathQuery& q) {
  std::string out = "$" + q.goal + " :";
  for (const auto& block : q.blocks) {
    out += block.kind == FixpointBlock::Kind::Lfp ? " lfp { " : " gfp { ";
    bool first = true;
    for (const auto& [head, body] : block.equations) {
      if (!first) out += "; ";
      out += '$' + head + " = " + render_expr(body);
      first = false;
    }
    out += " }";
  }
  return out;
}

namespace {

void collect_subexprs(const NodeExprPtr& e, std::vector<std::string>& keys);

void collect_path_subexprs(const PathExprPtr& p,
                           std::vector<std::string>& keys) {
  keys.push_back(path_key(p));
  switch (p->kind) {
    case PathExpr::Kind::Ax: break;
    case PathExpr::Kind::Test: collect_subexprs(p->test, keys); break;
    case PathExpr::Kind::Seq:
    case PathExpr::Kind::Union:
      collect_path_subexprs(p->lhs, keys);
      collect_path_subexprs(p->rhs, keys);
      break;
    case PathExpr::Kind::Star:
    case PathExpr::Kind::Inverse:
      collect_path_subexprs(p->lhs, keys);
      break;
  }
}

void collect_subexprs(const NodeExprPtr& e, std::vector<std::string>& keys) {
  keys.push_back(expr_key(e));
  switch (e->kind) {
    case NodeExpr::Kind::True:
    case NodeExpr::Kind::False:
    case NodeExpr::Kind::Prop:
    case NodeExpr::Kind::Var:
      break;
    case NodeExpr::Kind::Not:
      collect_subexprs(e->lhs, keys);
      break;
    case NodeExpr::Kind::And:
    case NodeExpr::Kind::Or:
    case NodeExpr::Kind::Implies:
      collect_subexprs(e->lhs, keys);
      collect_subexprs(e->rhs, keys);
      break;
    case NodeExpr::Kind::Diamond:
    case NodeExpr::Kind::Box:
      collect_subexprs(e->lhs, keys);
      collect_path_subexprs(e->path, keys);
      break;
  }
}

}  // namespace

int count_subexpressions(const MuXPathQuery& q) {
  std::vector<std::string> keys;
  for (const auto& block : q.blocks) {
    for (const auto& [head, body] : block.equations) {
      keys.push_back("v:" + head + ";");
      collect_subexprs(body, keys);
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return static_cast<int>(keys.size());
}

void collect_vars(const NodeExprPtr& e, std::vector<std::string>& out) {
  switch (e->kind) {
    case NodeExpr::Kind::Var:
      out.push_back(e->name);
      return;
    case NodeExpr::Kind::True:
    case NodeExpr::Kind::False:
    case NodeExpr::Kind::Prop:
      return;
    case NodeExpr::Kind::Not:
      collect_vars(e->lhs, out);
      return;
    case NodeExpr::Kind::And:
    case NodeExpr::Kind::Or:
    case NodeExpr::Kind::Implies:
      collect_vars(e->lhs, out);
      collect_vars(e->rhs, out);
      return;
    case NodeExpr::Kind::Diamond:
    case NodeExpr::Kind::Box: {
      collect_vars(e->lhs, out);
      // Tests inside the path may mention variables.
      std::vector<PathExprPtr> stack = {e->path};
      while (!stack.empty()) {
        PathExprPtr p = stack.back();
        stack.pop_back();
        switch (p->kind) {
          case PathExpr::Kind::Ax: break;
          case PathExpr::Kind::Test: collect_vars(p->test, out); break;
          case PathExpr::Kind::Seq:
          case PathExpr::Kind::Union:
            stack.push_back(p->lhs);
            stack.push_back(p->rhs);
            break;
          case PathExpr::Kind::Star:
          case PathExpr::Kind::Inverse:
            stack.push_back(p->lhs);
            break;
        }
      }
      return;
    }
  }
}

void collect_props(const NodeExprPtr& e, std::vector<std::string>& out) {
  switch (e->kind) {
    case NodeExpr::Kind::Prop:
      out.push_back(e->name);
      return;
    case NodeExpr::Kind::True:
    case NodeExpr::Kind::False:
    case NodeExpr::Kind::Var:
      return;
    case NodeExpr::Kind::Not:
      collect_props(e->lhs, out);
      return;
    case NodeExpr::Kind::And:
    case NodeExpr::Kind::Or:
    case NodeExpr::Kind::Implies:
      collect_props(e->lhs, out);
      collect_props(e->rhs, out);
      return;
    case NodeExpr::Kind::Diamond:
    case NodeExpr::Kind::Box: {
      collect_props(e->lhs, out);
      std::vector<PathExprPtr> stack = {e->path};
      while (!stack.empty()) {
        PathExprPtr p = stack.back();
        stack.pop_back();
        switch (p->kind) {
          case PathExpr::Kind::Ax: break;
          case PathExpr::Kind::Test: collect_props(p->test, out); break;
          case PathExpr::Kind::Seq:
          case PathExpr::Kind::Union:
            stack.push_back(p->lhs);
            stack.push_back(p->rhs);
            break;
          case PathExpr::Kind::Star:
          case PathExpr::Kind::Inverse:
            stack.push_back(p->lhs);
            break;
        }
      }
      return;
    }
  }
}

}  // namespace muxpath
