#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectroscopy/energy.hpp"
#include "spectroscopy/lts.hpp"

namespace spectroscopy::hml {

// Three syntactic layers:
//   formula  φ ::= <e>χ | /\{ψ...}
//   delayed  χ ::= <a>φ | /\{ψ...} | /\{~<tau>T, ψ...} | /\{(α)φ, ψ...}
//   conjunct ψ ::= ~<e>χ | <e>χ
// Nodes are immutable and shared; build them through the factories below so
// that conjunct lists are deduplicated and canonically ordered.

struct formula;
struct delayed;
using formula_ptr = std::shared_ptr<const formula>;
using delayed_ptr = std::shared_ptr<const delayed>;

struct conjunct {
  bool negated = false;
  delayed_ptr inner;
};

struct delayed_observation {
  delayed_ptr inner;
};
struct immediate_conjunction {
  std::vector<conjunct> conjuncts;
};
struct formula {
  std::variant<delayed_observation, immediate_conjunction> node;
};

/// Visible action only.
struct observation {
  std::string action;
  formula_ptr continuation;
};
enum class conj_flavor { standard, stable, branching };
struct conjunction {
  conj_flavor flavor = conj_flavor::standard;
  std::vector<conjunct> conjuncts;
  /// Only for branching: the (α)φ conjunct. α may be tau.
  std::string branch_action;
  formula_ptr branch_continuation;
};
struct delayed {
  std::variant<observation, conjunction> node;
};

/// Empty immediate conjunction, written T.
[[nodiscard]] formula_ptr truth();
[[nodiscard]] formula_ptr delayed_obs(delayed_ptr chi);
[[nodiscard]] formula_ptr immediate_conj(std::vector<conjunct> psis);

/// Empty standard conjunction at the delayed layer, also written T.
[[nodiscard]] delayed_ptr delayed_truth();
[[nodiscard]] delayed_ptr observe(std::string action, formula_ptr phi);
[[nodiscard]] delayed_ptr conj(std::vector<conjunct> psis);
[[nodiscard]] delayed_ptr stable_conj(std::vector<conjunct> psis);
[[nodiscard]] delayed_ptr branching_conj(std::string alpha, formula_ptr phi, std::vector<conjunct> psis);

[[nodiscard]] inline conjunct pos(delayed_ptr chi) { return {false, std::move(chi)}; }
[[nodiscard]] inline conjunct neg(delayed_ptr chi) { return {true, std::move(chi)}; }

/// ASCII rendering: `<e>`, `<a>`, `(a)`, `/\{...}`, `~`, `T`; the stability conjunct is `~<tau>T`.
[[nodiscard]] std::string render(const formula& f);
[[nodiscard]] std::string render(const delayed& d);
[[nodiscard]] std::string render(const conjunct& c);

/// Inverse of render; throws parse_error (line 1, 1-based column).
[[nodiscard]] formula_ptr parse(std::string_view text);

/// Syntactic price in the 8 dimensions; always finite.
[[nodiscard]] energy price(const formula& f);
[[nodiscard]] energy price(const delayed& d);
/// Price of ψ in conjunct position.
[[nodiscard]] energy price(const conjunct& c);

/// Set of states satisfying f. Throws std::invalid_argument if an action label is not in the alphabet.
[[nodiscard]] state_set eval(const transition_system& sys, const formula& f);
/// p satisfies f and no state of q does.
[[nodiscard]] bool distinguishes(const transition_system& sys, const formula& f, state_id p, const state_set& q);

/// Number of nodes in the tree expansion (used for size bookkeeping in tests).
[[nodiscard]] std::size_t tree_size(const formula& f);

}  // namespace spectroscopy::hml
