#include "spectroscopy/ccs.hpp"

#include <cctype>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

namespace spectroscopy::ccs {

namespace {

enum class tok { ident, zero, plus, dot, lparen, rparen, equals, semicolon, comma, newline, directive, end };

struct token {
  tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<token> tokenize(std::string_view src) {
  std::vector<token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto push = [&](tok k, std::string text, std::size_t c) { out.push_back({k, std::move(text), line, c}); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      push(tok::newline, "\n", col);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const auto start_col = col;
    if (ident_start(c) || c == '@') {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      col += j - i;
      i = j;
      if (word.front() == '@') {
        if (word != "@compare" && word != "@preorder")
          throw parse_error("unknown directive '" + word + "'", line, start_col);
        push(tok::directive, std::move(word), start_col);
      } else {
        push(tok::ident, std::move(word), start_col);
      }
      continue;
    }
    tok k;
    switch (c) {
      case '0': k = tok::zero; break;
      case '+': k = tok::plus; break;
      case '.': k = tok::dot; break;
      case '(': k = tok::lparen; break;
      case ')': k = tok::rparen; break;
      case '=': k = tok::equals; break;
      case ';': k = tok::semicolon; break;
      case ',': k = tok::comma; break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", line, start_col);
    }
    if (k == tok::zero && i + 1 < src.size() && ident_char(src[i + 1]))
      throw parse_error("identifiers may not start with a digit", line, start_col);
    push(k, std::string(1, c), start_col);
    ++i;
    ++col;
  }
  out.push_back({tok::end, "", line, col});
  return out;
}

class parser {
 public:
  explicit parser(std::vector<token> toks) : toks_(std::move(toks)) {}

  program run() {
    program prog;
    std::unordered_map<std::string, std::size_t> defined;
    for (;;) {
      while (at(tok::newline) || at(tok::semicolon)) ++pos_;
      if (at(tok::end)) break;
      if (at(tok::directive)) {
        prog.directives.push_back(parse_directive());
      } else {
        const auto& head = cur();
        auto def = parse_definition();
        if (defined.count(def.identifier) != 0)
          throw parse_error("duplicate definition of '" + def.identifier + "'", head.line, head.column);
        defined.emplace(def.identifier, prog.definitions.size());
        prog.definitions.push_back(std::move(def));
      }
      if (!at(tok::newline) && !at(tok::semicolon) && !at(tok::end)) fail("expected end of definition");
    }
    for (const auto& [id, line, column] : references_)
      if (defined.count(id) == 0) throw parse_error("undefined process name '" + id + "'", line, column);
    for (const auto& d : prog.directives)
      for (const auto* id : {&d.left, &d.right})
        if (defined.count(*id) == 0) throw parse_error("undefined process name '" + *id + "'", d.line, 0);
    return prog;
  }

 private:
  const token& cur() const { return toks_[pos_]; }
  bool at(tok k) const { return cur().kind == k; }
  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = cur();
    std::string found = t.kind == tok::end ? "end of input" : t.kind == tok::newline ? "line break" : "'" + t.text + "'";
    throw parse_error(what + ", found " + found, t.line, t.column);
  }
  void skip_newlines() {
    while (at(tok::newline)) ++pos_;
  }
  void skip_newlines_in_parens() {
    if (depth_ > 0) skip_newlines();
  }
  token expect(tok k, const char* what) {
    skip_newlines_in_parens();
    if (!at(k)) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  directive parse_directive() {
    auto d = toks_[pos_++];
    directive out{d.text == "@compare" ? directive_kind::compare : directive_kind::preorder, {}, {}, d.line};
    out.left = expect(tok::ident, "process name").text;
    expect(tok::comma, "','");
    out.right = expect(tok::ident, "process name").text;
    return out;
  }

  definition parse_definition() {
    auto id = expect(tok::ident, "process name");
    if (id.text == tau_label) throw parse_error("'tau' is reserved", id.line, id.column);
    expect(tok::equals, "'='");
    skip_newlines();
    return definition{id.text, parse_sum(), id.line};
  }

  expr_ptr parse_sum() {
    auto left = parse_seq();
    for (;;) {
      skip_newlines_in_parens();
      if (!at(tok::plus)) return left;
      const auto& t = toks_[pos_++];
      skip_newlines();
      auto right = parse_seq();
      left = std::make_shared<const expr>(expr{choice{left, right}, t.line, t.column});
    }
  }

  expr_ptr parse_seq() {
    skip_newlines_in_parens();
    const auto t = cur();
    if (t.kind == tok::ident && toks_[pos_ + 1].kind == tok::dot) {
      pos_ += 2;
      skip_newlines();
      if (t.text == "e" || t.text == "ε") throw parse_error("reserved action label 'e'", t.line, t.column);
      auto k = parse_seq();
      return std::make_shared<const expr>(expr{prefix{t.text, k}, t.line, t.column});
    }
    auto a = parse_atom();
    if (at(tok::dot)) fail("only an action may be prefixed");
    return a;
  }

  expr_ptr parse_atom() {
    skip_newlines_in_parens();
    const auto t = cur();
    switch (t.kind) {
      case tok::zero:
        ++pos_;
        return std::make_shared<const expr>(expr{nil{}, t.line, t.column});
      case tok::ident:
        ++pos_;
        if (t.text == tau_label) throw parse_error("'tau' used as a process name", t.line, t.column);
        references_.push_back({t.text, t.line, t.column});
        return std::make_shared<const expr>(expr{name{t.text}, t.line, t.column});
      case tok::lparen: {
        ++pos_;
        ++depth_;
        skip_newlines();
        auto e = parse_sum();
        expect(tok::rparen, "')'");
        --depth_;
        return e;
      }
      default:
        fail("expected '0', a name, an action prefix or '('");
    }
  }

  struct reference {
    std::string id;
    std::size_t line;
    std::size_t column;
  };

  std::vector<token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<reference> references_;
};

void print_into(std::string& out, const expr& e, bool in_prefix);

void print_into(std::string& out, const expr& e, bool in_prefix) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, nil>) {
          out += '0';
        } else if constexpr (std::is_same_v<T, name>) {
          out += n.identifier;
        } else if constexpr (std::is_same_v<T, prefix>) {
          out += n.action;
          out += '.';
          print_into(out, *n.continuation, true);
        } else {
          if (in_prefix) out += '(';
          print_into(out, *n.left, false);
          out += " + ";
          const bool nested = std::holds_alternative<choice>(n.right->node);
          if (nested) out += '(';
          print_into(out, *n.right, false);
          if (nested) out += ')';
          if (in_prefix) out += ')';
        }
      },
      e.node);
}

}  // namespace

program parse(std::string_view source) { return parser(tokenize(source)).run(); }

std::string print(const expr& e) {
  std::string out;
  print_into(out, e, false);
  return out;
}

std::string print(const program& prog) {
  std::string out;
  for (const auto& d : prog.definitions) out += d.identifier + " = " + print(*d.body) + "\n";
  for (const auto& d : prog.directives)
    out += std::string(d.kind == directive_kind::compare ? "@compare " : "@preorder ") + d.left + ", " + d.right + "\n";
  return out;
}

compiled compile(const program& prog) {
  std::unordered_map<std::string, const definition*> defs;
  for (const auto& d : prog.definitions) defs.emplace(d.identifier, &d);

  // Unguarded occurrences: names reachable without passing a prefix.
  std::function<void(const expr&, std::vector<std::string>&)> unguarded = [&](const expr& e, auto& acc) {
    if (const auto* n = std::get_if<name>(&e.node)) acc.push_back(n->identifier);
    if (const auto* c = std::get_if<choice>(&e.node)) {
      unguarded(*c->left, acc);
      unguarded(*c->right, acc);
    }
  };
  std::unordered_map<std::string, int> mark;  // 1 = on stack, 2 = done
  std::function<void(const definition&)> visit = [&](const definition& d) {
    mark[d.identifier] = 1;
    std::vector<std::string> next;
    unguarded(*d.body, next);
    for (const auto& n : next) {
      auto m = mark[n];
      if (m == 1) throw parse_error("unguarded recursion through '" + n + "'", d.line, 0);
      if (m == 0) visit(*defs.at(n));
    }
    mark[d.identifier] = 2;
  };
  for (const auto& d : prog.definitions)
    if (mark[d.identifier] == 0) visit(d);

  std::function<void(const expr&, std::vector<std::pair<std::string, expr_ptr>>&)> derivatives =
      [&](const expr& e, auto& acc) {
        std::visit(
            [&](const auto& n) {
              using T = std::decay_t<decltype(n)>;
              if constexpr (std::is_same_v<T, prefix>) {
                acc.emplace_back(n.action, n.continuation);
              } else if constexpr (std::is_same_v<T, choice>) {
                derivatives(*n.left, acc);
                derivatives(*n.right, acc);
              } else if constexpr (std::is_same_v<T, name>) {
                derivatives(*defs.at(n.identifier)->body, acc);
              }
            },
            e.node);
      };

  transition_system::builder b;
  compiled out;
  std::unordered_map<std::string, state_id> anonymous;
  std::deque<std::pair<state_id, const expr*>> todo;
  for (const auto& d : prog.definitions) {
    auto s = b.add_state(d.identifier);
    out.states.emplace(d.identifier, s);
    todo.emplace_back(s, d.body.get());
  }
  auto state_of = [&](const expr_ptr& k) -> state_id {
    if (const auto* n = std::get_if<name>(&k->node)) return out.states.at(n->identifier);
    auto key = print(*k);
    if (auto it = anonymous.find(key); it != anonymous.end()) return it->second;
    auto s = b.add_state(key);
    anonymous.emplace(std::move(key), s);
    todo.emplace_back(s, k.get());
    return s;
  };
  while (!todo.empty()) {
    auto [s, e] = todo.front();
    todo.pop_front();
    std::vector<std::pair<std::string, expr_ptr>> ds;
    derivatives(*e, ds);
    for (const auto& [a, k] : ds) {
      auto t = state_of(k);
      b.add_transition(s, b.action(a), t);
    }
  }
  out.system = std::move(b).build();
  return out;
}

}  // namespace spectroscopy::ccs
