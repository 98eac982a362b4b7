#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spectroscopy {

/// Energy dimensions in their fixed order.
enum dim : std::size_t {
  modal_depth = 0,
  branching_conjunctions = 1,
  unstable_conjunctions = 2,
  stable_conjunctions = 3,
  immediate_conjunctions = 4,
  positive_depth = 5,
  negative_depth = 6,
  negations = 7,
};
inline constexpr std::size_t energy_dims = 8;

using energy_component = std::uint32_t;
inline constexpr energy_component infinity = std::numeric_limits<energy_component>::max();

/// Vector in (N ∪ {∞})^8. Comparison with `leq` is componentwise; `operator<` is
/// lexicographic and only used for canonical ordering.
class energy {
 public:
  constexpr energy() : c_{} {}
  constexpr explicit energy(const std::array<energy_component, energy_dims>& c) : c_(c) {}
  constexpr energy(std::initializer_list<energy_component> c) : c_{} {
    std::size_t i = 0;
    for (auto v : c) c_[i++] = v;
  }

  static constexpr energy zero() { return energy(); }
  static constexpr energy unit(dim d) {
    energy e;
    e.c_[d] = 1;
    return e;
  }
  static constexpr energy all_infinite() {
    energy e;
    e.c_.fill(infinity);
    return e;
  }

  constexpr energy_component operator[](std::size_t i) const { return c_[i]; }
  constexpr energy_component& operator[](std::size_t i) { return c_[i]; }
  [[nodiscard]] const std::array<energy_component, energy_dims>& components() const { return c_; }
  [[nodiscard]] bool is_finite() const;

  friend constexpr bool operator==(const energy&, const energy&) = default;
  friend constexpr bool operator<(const energy& a, const energy& b) { return a.c_ < b.c_; }

 private:
  std::array<energy_component, energy_dims> c_;
};

/// Componentwise order.
[[nodiscard]] bool leq(const energy& a, const energy& b);
/// Componentwise maximum.
[[nodiscard]] energy sup(const energy& a, const energy& b);
/// Componentwise saturating sum, used for prices.
[[nodiscard]] energy add(const energy& a, const energy& b);

/// One component of an update: a relative change in {0,-1}, or a minimum
/// selection over a set of dimensions that contains the component itself.
struct update_component {
  enum class kind : std::uint8_t { relative, min_select };
  kind k = kind::relative;
  std::int8_t delta = 0;
  std::uint8_t mask = 0;
  friend bool operator==(const update_component&, const update_component&) = default;
};

class update {
 public:
  update() = default;

  static update zero() { return {}; }
  /// Subtracts one in each listed dimension.
  static update minus(std::initializer_list<dim> dims);
  /// Sets dimension `at` to the minimum over `over`; `at` must be in `over`.
  update& min_select(dim at, std::initializer_list<dim> over);
  update& decrement(dim d);

  [[nodiscard]] const update_component& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] bool is_zero() const { return *this == update{}; }
  /// Checks the well-formedness constraints on each component.
  [[nodiscard]] bool valid() const;

  friend bool operator==(const update&, const update&) = default;

 private:
  std::array<update_component, energy_dims> c_{};
};

/// Partial application; nullopt iff some relative component would go negative.
[[nodiscard]] std::optional<energy> apply(const energy& e, const update& u);
/// Least e with apply(e, u) >= target.
[[nodiscard]] energy inverse(const energy& target, const update& u);

/// Set of pairwise incomparable energies, kept in lexicographic order.
class antichain {
 public:
  antichain() = default;
  antichain(std::initializer_list<energy> es);

  /// Adds e unless it is dominated; removes elements that e dominates. Returns true if changed.
  bool insert(const energy& e);
  /// True iff some element is <= e.
  [[nodiscard]] bool dominates(const energy& e) const;

  [[nodiscard]] static antichain minima(std::span<const energy> es);

  [[nodiscard]] std::size_t size() const { return elems_.size(); }
  [[nodiscard]] bool empty() const { return elems_.empty(); }
  [[nodiscard]] auto begin() const { return elems_.begin(); }
  [[nodiscard]] auto end() const { return elems_.end(); }
  [[nodiscard]] const std::vector<energy>& elements() const { return elems_; }
  [[nodiscard]] const energy& operator[](std::size_t i) const { return elems_[i]; }

  friend bool operator==(const antichain&, const antichain&) = default;

 private:
  std::vector<energy> elems_;
};

/// `(2,0,inf,0,0,0,1,1)`.
[[nodiscard]] std::string to_string(const energy& e);
/// Accepts `inf` or `∞` for infinity; whitespace around components is ignored.
[[nodiscard]] std::optional<energy> parse_energy(std::string_view text);
/// `(min{1,7},0,0,0,0,0,0,-1)` with 1-based dimension numbers.
[[nodiscard]] std::string to_string(const update& u);
[[nodiscard]] std::string to_string(const antichain& a);

}  // namespace spectroscopy
