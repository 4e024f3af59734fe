#ifndef MUXPATH_QUERY_AST_HPP
#define MUXPATH_QUERY_AST_HPP

#include <memory>
#include <string>
#include <vector>

namespace muxpath {

/// Navigation axes. child/child_inv are surface sugar removed by lowering;
/// the automata stages only ever see the four binary axes.
enum class Axis { FChild, Right, FChildInv, RightInv, Child, ChildInv };

Axis inverse_axis(Axis a);
bool is_inverse_axis(Axis a);
std::string axis_to_string(Axis a);

struct NodeExpr;
struct PathExpr;
using NodeExprPtr = std::shared_ptr<const NodeExpr>;
using PathExprPtr = std::shared_ptr<const PathExpr>;

struct NodeExpr {
  enum class Kind {
    True,
    False,
    Prop,
    Var,
    Not,
    And,
    Or,
    Implies,
    Diamond,
    Box
  };
  Kind kind;
  std::string name;     // Prop / Var
  NodeExprPtr lhs, rhs; // Not: lhs; And/Or/Implies: both; Diamond/Box: lhs = body
  PathExprPtr path;     // Diamond / Box
};

struct PathExpr {
  enum class Kind { Ax, Test, Seq, Union, Star, Inverse };
  Kind kind;
  Axis axis = Axis::FChild;  // Ax
  NodeExprPtr test;          // Test
  PathExprPtr lhs, rhs;      // Seq/Union both; Star/Inverse: lhs
};

// Construction helpers (structure-sharing smart constructors; And/Or/Seq/...
// do not fold constants -- folding variants live where they are needed).
NodeExprPtr mk_true();
NodeExprPtr mk_false();
NodeExprPtr mk_prop(std::string name);
NodeExprPtr mk_var(std::string name);
NodeExprPtr mk_not(NodeExprPtr e);
NodeExprPtr mk_and(NodeExprPtr l, NodeExprPtr r);
NodeExprPtr mk_or(NodeExprPtr l, NodeExprPtr r);
NodeExprPtr mk_implies(NodeExprPtr l, NodeExprPtr r);
NodeExprPtr mk_diamond(PathExprPtr p, NodeExprPtr body);
NodeExprPtr mk_box(PathExprPtr p, NodeExprPtr body);

PathExprPtr mk_axis(Axis a);
PathExprPtr mk_test(NodeExprPtr e);
PathExprPtr mk_seq(PathExprPtr l, PathExprPtr r);
PathExprPtr mk_path_union(PathExprPtr l, PathExprPtr r);
PathExprPtr mk_star(PathExprPtr p);
PathExprPtr mk_path_inverse(PathExprPtr p);

/// Conjunction/disjunction over a list; empty list yields true/false.
NodeExprPtr mk_and_all(const std::vector<NodeExprPtr>& parts);
NodeExprPtr mk_or_all(const std::vector<NodeExprPtr>& parts);

struct FixpointBlock {
  enum class Kind { Lfp, Gfp };
  Kind kind;
  std::vector<std::pair<std::string, NodeExprPtr>> equations;
};

/// A query: goal variable plus fixpoint blocks. In a NormalizedQuery the
/// blocks are listed in dependency order (earlier blocks never reference
/// later ones).
struct MuXPathQuery {
  std::string goal;
  std::vector<FixpointBlock> blocks;

  /// Index of the block defining `var`, or -1.
  int block_of(const std::string& var) const;
  const NodeExprPtr* body_of(const std::string& var) const;
};

/// Negation normal form: Implies eliminated, negations pushed to Prop/Var
/// atoms, modalities dualized. Idempotent. Test expressions inside paths are
/// left untouched (a path is never negated as a whole).
NodeExprPtr nnf(const NodeExprPtr& e);

/// Canonical compact rendering; doubles as a structural identity key.
std::string expr_key(const NodeExprPtr& e);
std::string path_key(const PathExprPtr& p);

bool expr_equal(const NodeExprPtr& a, const NodeExprPtr& b);

/// Surface-syntax rendering that parse_query accepts back.
std::string render_expr(const NodeExprPtr& e);
std::string render_path(const PathExprPtr& p);
std::string render_query(const MuXPathQuery& q);

/// Number of distinct subexpressions (node expressions and path
/// subexpressions, tests included).
int count_subexpressions(const MuXPathQuery& q);

/// Variables occurring in `e` (free occurrences; queries have no binders
/// inside bodies).
void collect_vars(const NodeExprPtr& e, std::vector<std::string>& out);
void collect_props(const NodeExprPtr& e, std::vector<std::string>& out);

}  // namespace muxpath

#endif  // MUXPATH_QUERY_AST_HPP
