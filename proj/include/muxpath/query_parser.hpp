#ifndef MUXPATH_QUERY_PARSER_HPP
#define MUXPATH_QUERY_PARSER_HPP

#include <string>

#include "muxpath/query_ast.hpp"
#include "muxpath/tree.hpp"  // ParseError

namespace muxpath {

/// Parses the query grammar
///   query := var ':' block+
///   block := ('lfp'|'gfp') '{' eqn (';' eqn)* '}'
///   eqn   := var '=' expr
/// with '!' > '&' > '|' > '->' and postfix '*','^-' > '/' > path '|'.
/// The path atom `u` abbreviates (fchild|right)*.
///
/// Rejects duplicate equation heads and variables that are used but never
/// defined.
MuXPathQuery parse_query(const std::string& text);

/// Parses a single node expression using the same grammar (helper for
/// constraint files and tests).
NodeExprPtr parse_expr(const std::string& text);

}  // namespace muxpath

#endif  // MUXPATH_QUERY_PARSER_HPP
