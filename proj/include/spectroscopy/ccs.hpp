#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectroscopy/lts.hpp"

namespace spectroscopy::ccs {

struct expr;
using expr_ptr = std::shared_ptr<const expr>;

struct nil {};
struct prefix {
  std::string action;
  expr_ptr continuation;
};
struct choice {
  expr_ptr left;
  expr_ptr right;
};
struct name {
  std::string identifier;
};
struct expr {
  std::variant<nil, prefix, choice, name> node;
  std::size_t line = 0;
  std::size_t column = 0;
};

enum class directive_kind { compare, preorder };
struct directive {
  directive_kind kind;
  std::string left;
  std::string right;
  std::size_t line = 0;
};

struct definition {
  std::string identifier;
  expr_ptr body;
  std::size_t line = 0;
};

struct program {
  std::vector<definition> definitions;
  std::vector<directive> directives;
};

/// Definitions are separated by newlines or ';'. A line break inside parentheses or
/// after '=', '+', '.' continues the definition. '#' starts a comment.
/// Throws parse_error on syntax errors, undefined names and duplicate definitions.
[[nodiscard]] program parse(std::string_view source);

struct compiled {
  transition_system system;
  /// State of each defined name.
  std::map<std::string, state_id> states;
};

/// One state per defined name and one per syntactically distinct anonymous
/// continuation. Throws parse_error on unguarded recursion.
[[nodiscard]] compiled compile(const program& prog);

[[nodiscard]] std::string print(const expr& e);
/// Prints definitions and directives so that parse(print(p)) reproduces p.
[[nodiscard]] std::string print(const program& prog);

}  // namespace spectroscopy::ccs
