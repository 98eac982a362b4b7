#include "spectroscopy/hml.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace spectroscopy::hml {

namespace {

std::vector<conjunct> canonical(std::vector<conjunct> psis) {
  std::vector<std::pair<std::string, conjunct>> keyed;
  keyed.reserve(psis.size());
  for (auto& c : psis) {
    if (!c.inner) throw std::invalid_argument("conjunct without body");
    keyed.emplace_back(render(c), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<conjunct> out;
  out.reserve(keyed.size());
  for (auto& [_, c] : keyed) out.push_back(std::move(c));
  return out;
}

void append_conjuncts(std::string& out, const std::vector<conjunct>& psis, bool first) {
  for (const auto& c : psis) {
    if (!first) out += ", ";
    out += render(c);
    first = false;
  }
}

}  // namespace

formula_ptr truth() {
  static const formula_ptr t = std::make_shared<const formula>(formula{immediate_conjunction{}});
  return t;
}

formula_ptr delayed_obs(delayed_ptr chi) {
  if (!chi) throw std::invalid_argument("null delayed formula");
  return std::make_shared<const formula>(formula{delayed_observation{std::move(chi)}});
}

formula_ptr immediate_conj(std::vector<conjunct> psis) {
  if (psis.empty()) return truth();
  return std::make_shared<const formula>(formula{immediate_conjunction{canonical(std::move(psis))}});
}

delayed_ptr delayed_truth() {
  static const delayed_ptr t = std::make_shared<const delayed>(delayed{conjunction{}});
  return t;
}

delayed_ptr observe(std::string action, formula_ptr phi) {
  if (action == tau_label) throw std::invalid_argument("observation of the silent action");
  if (!phi) throw std::invalid_argument("null formula");
  return std::make_shared<const delayed>(delayed{observation{std::move(action), std::move(phi)}});
}

delayed_ptr conj(std::vector<conjunct> psis) {
  if (psis.empty()) return delayed_truth();
  conjunction c;
  c.conjuncts = canonical(std::move(psis));
  return std::make_shared<const delayed>(delayed{std::move(c)});
}

delayed_ptr stable_conj(std::vector<conjunct> psis) {
  conjunction c;
  c.flavor = conj_flavor::stable;
  c.conjuncts = canonical(std::move(psis));
  return std::make_shared<const delayed>(delayed{std::move(c)});
}

delayed_ptr branching_conj(std::string alpha, formula_ptr phi, std::vector<conjunct> psis) {
  if (!phi) throw std::invalid_argument("null formula");
  conjunction c;
  c.flavor = conj_flavor::branching;
  c.conjuncts = canonical(std::move(psis));
  c.branch_action = std::move(alpha);
  c.branch_continuation = std::move(phi);
  return std::make_shared<const delayed>(delayed{std::move(c)});
}

std::string render(const formula& f) {
  if (const auto* d = std::get_if<delayed_observation>(&f.node)) return "<e>" + render(*d->inner);
  const auto& ic = std::get<immediate_conjunction>(f.node);
  if (ic.conjuncts.empty()) return "T";
  std::string out = "/\\{";
  append_conjuncts(out, ic.conjuncts, true);
  return out + "}";
}

std::string render(const delayed& d) {
  if (const auto* o = std::get_if<observation>(&d.node)) return "<" + o->action + ">" + render(*o->continuation);
  const auto& c = std::get<conjunction>(d.node);
  switch (c.flavor) {
    case conj_flavor::standard: {
      if (c.conjuncts.empty()) return "T";
      std::string out = "/\\{";
      append_conjuncts(out, c.conjuncts, true);
      return out + "}";
    }
    case conj_flavor::stable: {
      std::string out = "/\\{~<tau>T";
      append_conjuncts(out, c.conjuncts, false);
      return out + "}";
    }
    case conj_flavor::branching: {
      std::string out = "/\\{(" + c.branch_action + ")" + render(*c.branch_continuation);
      append_conjuncts(out, c.conjuncts, false);
      return out + "}";
    }
  }
  return {};
}

std::string render(const conjunct& c) { return (c.negated ? "~<e>" : "<e>") + render(*c.inner); }

namespace {

class parser {
 public:
  explicit parser(std::string_view text) : text_(text) {}

  formula_ptr run() {
    auto f = parse_formula();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, 1, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }
  bool peek(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string label(char close) {
    auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != close) ++pos_;
    if (pos_ == text_.size() || pos_ == start) fail("malformed action label");
    std::string out(text_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  formula_ptr parse_formula() {
    if (accept("<e>")) return delayed_obs(parse_delayed());
    if (accept("/\\{")) {
      std::vector<conjunct> psis;
      if (!accept("}")) {
        do psis.push_back(parse_conjunct());
        while (accept(","));
        expect("}");
      }
      return immediate_conj(std::move(psis));
    }
    if (accept("T")) return truth();
    fail("expected a formula");
  }

  conjunct parse_conjunct() {
    if (accept("~<e>")) return neg(parse_delayed());
    if (accept("<e>")) return pos(parse_delayed());
    fail("expected a conjunct '<e>...' or '~<e>...'");
  }

  delayed_ptr parse_delayed() {
    if (accept("/\\{")) {
      std::vector<conjunct> psis;
      bool stable = false;
      std::optional<std::pair<std::string, formula_ptr>> head;
      if (!accept("}")) {
        do {
          if (accept("~<tau>T")) {
            if (stable || head) fail("conjunction with more than one special conjunct");
            stable = true;
          } else if (accept("(")) {
            if (stable || head) fail("conjunction with more than one special conjunct");
            auto a = label(')');
            head.emplace(std::move(a), parse_formula());
          } else {
            psis.push_back(parse_conjunct());
          }
        } while (accept(","));
        expect("}");
      }
      if (stable) return stable_conj(std::move(psis));
      if (head) return branching_conj(std::move(head->first), std::move(head->second), std::move(psis));
      return conj(std::move(psis));
    }
    if (accept("T")) return delayed_truth();
    if (accept("<")) {
      auto at = pos_;
      auto a = label('>');
      if (a == "e" || a == tau_label) {
        pos_ = at;
        fail("expected a visible action");
      }
      return observe(std::move(a), parse_formula());
    }
    fail("expected a delayed formula");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

energy in_dim(dim d, energy_component v) {
  energy e;
  e[d] = v;
  return e;
}

energy flavor_cost(conj_flavor f) {
  switch (f) {
    case conj_flavor::standard:
      return energy::unit(unstable_conjunctions);
    case conj_flavor::stable:
      return energy::unit(stable_conjunctions);
    case conj_flavor::branching:
      return add(energy::unit(branching_conjunctions), energy::unit(unstable_conjunctions));
  }
  return {};
}

energy conjunction_price(const conjunction& c) {
  energy s;
  for (const auto& psi : c.conjuncts) s = sup(s, price(psi));
  if (c.flavor == conj_flavor::branching) {
    auto f = price(*c.branch_continuation);
    s = sup(s, sup(add(energy::unit(modal_depth), f), in_dim(positive_depth, f[modal_depth] + 1)));
  }
  return add(s, flavor_cost(c.flavor));
}

struct evaluator {
  const transition_system& sys;
  std::unordered_map<const void*, state_set> memo;

  action_id action(const std::string& label) const {
    auto a = sys.find_action(label);
    if (!a) throw std::invalid_argument("action not in alphabet: " + label);
    return *a;
  }

  state_set of(const formula& f) {
    if (auto it = memo.find(&f); it != memo.end()) return it->second;
    state_set out;
    if (const auto* d = std::get_if<delayed_observation>(&f.node)) {
      out = sys.weak_pre_closure(of(*d->inner));
    } else {
      out = sys.all_states();
      for (const auto& psi : std::get<immediate_conjunction>(f.node).conjuncts) out &= of(psi);
    }
    memo.emplace(&f, out);
    return out;
  }

  state_set of(const delayed& d) {
    if (auto it = memo.find(&d); it != memo.end()) return it->second;
    state_set out;
    if (const auto* o = std::get_if<observation>(&d.node)) {
      out = sys.pre(of(*o->continuation), action(o->action));
    } else {
      const auto& c = std::get<conjunction>(d.node);
      out = sys.all_states();
      if (c.flavor == conj_flavor::stable) out &= sys.stable_states();
      if (c.flavor == conj_flavor::branching) {
        auto a = action(c.branch_action);
        auto x = of(*c.branch_continuation);
        auto head = sys.pre(x, a);
        if (a == tau) head |= x;
        out &= head;
      }
      for (const auto& psi : c.conjuncts) out &= of(psi);
    }
    memo.emplace(&d, out);
    return out;
  }

  state_set of(const conjunct& c) {
    auto base = sys.weak_pre_closure(of(*c.inner));
    return c.negated ? base.complement() : base;
  }
};

}  // namespace

formula_ptr parse(std::string_view text) { return parser(text).run(); }

energy price(const formula& f) {
  if (const auto* d = std::get_if<delayed_observation>(&f.node)) return price(*d->inner);
  const auto& ic = std::get<immediate_conjunction>(f.node);
  if (ic.conjuncts.empty()) return energy::zero();
  conjunction c;
  c.conjuncts = ic.conjuncts;
  return add(energy::unit(immediate_conjunctions), conjunction_price(c));
}

energy price(const delayed& d) {
  if (const auto* o = std::get_if<observation>(&d.node))
    return add(energy::unit(modal_depth), price(*o->continuation));
  const auto& c = std::get<conjunction>(d.node);
  if (c.flavor == conj_flavor::standard && c.conjuncts.empty()) return energy::zero();
  return conjunction_price(c);
}

energy price(const conjunct& c) {
  auto f = price(*c.inner);
  if (c.negated) return sup(add(energy::unit(negations), f), in_dim(negative_depth, f[modal_depth]));
  return sup(f, in_dim(positive_depth, f[modal_depth]));
}

state_set eval(const transition_system& sys, const formula& f) {
  evaluator ev{sys, {}};
  return ev.of(f);
}

bool distinguishes(const transition_system& sys, const formula& f, state_id p, const state_set& q) {
  auto sat = eval(sys, f);
  return sat.contains(p) && !sat.intersects(q);
}

namespace {

std::size_t size_of(const delayed& d);
std::size_t size_of(const conjunct& c) { return 1 + size_of(*c.inner); }

std::size_t size_of(const formula& f) {
  if (const auto* d = std::get_if<delayed_observation>(&f.node)) return 1 + size_of(*d->inner);
  std::size_t n = 1;
  for (const auto& psi : std::get<immediate_conjunction>(f.node).conjuncts) n += size_of(psi);
  return n;
}

std::size_t size_of(const delayed& d) {
  if (const auto* o = std::get_if<observation>(&d.node)) return 1 + size_of(*o->continuation);
  const auto& c = std::get<conjunction>(d.node);
  std::size_t n = 1;
  if (c.flavor == conj_flavor::branching) n += size_of(*c.branch_continuation);
  for (const auto& psi : c.conjuncts) n += size_of(psi);
  return n;
}

}  // namespace

std::size_t tree_size(const formula& f) { return size_of(f); }

}  // namespace spectroscopy::hml
