#include "spectroscopy/energy.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace spectroscopy {

bool energy::is_finite() const {
  return std::none_of(c_.begin(), c_.end(), [](auto v) { return v == infinity; });
}

bool leq(const energy& a, const energy& b) {
  for (std::size_t i = 0; i < energy_dims; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

energy sup(const energy& a, const energy& b) {
  energy out;
  for (std::size_t i = 0; i < energy_dims; ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

energy add(const energy& a, const energy& b) {
  energy out;
  for (std::size_t i = 0; i < energy_dims; ++i) {
    if (a[i] == infinity || b[i] == infinity || a[i] > infinity - 1 - b[i])
      out[i] = infinity;
    else
      out[i] = a[i] + b[i];
  }
  return out;
}

update update::minus(std::initializer_list<dim> dims) {
  update u;
  for (auto d : dims) u.decrement(d);
  return u;
}

update& update::min_select(dim at, std::initializer_list<dim> over) {
  update_component c;
  c.k = update_component::kind::min_select;
  for (auto d : over) c.mask = static_cast<std::uint8_t>(c.mask | (1U << d));
  assert((c.mask >> at) & 1U);
  c_[at] = c;
  return *this;
}

update& update::decrement(dim d) {
  c_[d] = update_component{update_component::kind::relative, -1, 0};
  return *this;
}

bool update::valid() const {
  for (std::size_t i = 0; i < energy_dims; ++i) {
    const auto& c = c_[i];
    if (c.k == update_component::kind::relative) {
      if (c.delta != 0 && c.delta != -1) return false;
      if (c.mask != 0) return false;
    } else if (((c.mask >> i) & 1U) == 0) {
      return false;
    }
  }
  return true;
}

std::optional<energy> apply(const energy& e, const update& u) {
  energy out;
  for (std::size_t i = 0; i < energy_dims; ++i) {
    const auto& c = u[i];
    if (c.k == update_component::kind::relative) {
      if (c.delta == 0 || e[i] == infinity) {
        out[i] = e[i];
      } else {
        if (e[i] == 0) return std::nullopt;
        out[i] = e[i] - 1;
      }
    } else {
      energy_component m = infinity;
      for (std::size_t d = 0; d < energy_dims; ++d)
        if ((c.mask >> d) & 1U) m = std::min(m, e[d]);
      out[i] = m;
    }
  }
  return out;
}

energy inverse(const energy& target, const update& u) {
  energy out;
  for (std::size_t j = 0; j < energy_dims; ++j) {
    const auto& c = u[j];
    energy_component v = 0;
    if (c.k == update_component::kind::relative)
      v = (c.delta == 0 || target[j] == infinity) ? target[j] : target[j] + 1;
    for (std::size_t k = 0; k < energy_dims; ++k) {
      const auto& ck = u[k];
      if (ck.k == update_component::kind::min_select && ((ck.mask >> j) & 1U)) v = std::max(v, target[k]);
    }
    out[j] = v;
  }
  return out;
}

antichain::antichain(std::initializer_list<energy> es) {
  for (const auto& e : es) insert(e);
}

bool antichain::insert(const energy& e) {
  if (dominates(e)) return false;
  elems_.erase(std::remove_if(elems_.begin(), elems_.end(), [&](const energy& x) { return leq(e, x); }),
               elems_.end());
  elems_.insert(std::lower_bound(elems_.begin(), elems_.end(), e), e);
  return true;
}

bool antichain::dominates(const energy& e) const {
  return std::any_of(elems_.begin(), elems_.end(), [&](const energy& x) { return leq(x, e); });
}

antichain antichain::minima(std::span<const energy> es) {
  antichain out;
  for (const auto& e : es) out.insert(e);
  return out;
}

std::string to_string(const energy& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < energy_dims; ++i) {
    if (i != 0) out += ',';
    out += e[i] == infinity ? std::string("inf") : std::to_string(e[i]);
  }
  return out + ")";
}

std::optional<energy> parse_energy(std::string_view text) {
  auto skip_ws = [&] {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  };
  skip_ws();
  if (text.empty() || text.front() != '(') return std::nullopt;
  text.remove_prefix(1);
  energy e;
  for (std::size_t i = 0; i < energy_dims; ++i) {
    skip_ws();
    if (text.substr(0, 3) == "inf") {
      e[i] = infinity;
      text.remove_prefix(3);
    } else if (text.substr(0, 3) == "∞") {
      e[i] = infinity;
      text.remove_prefix(3);
    } else {
      energy_component v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc{} || ptr == text.data() || v == infinity) return std::nullopt;
      text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
      e[i] = v;
    }
    skip_ws();
    const char want = i + 1 == energy_dims ? ')' : ',';
    if (text.empty() || text.front() != want) return std::nullopt;
    text.remove_prefix(1);
  }
  skip_ws();
  if (!text.empty()) return std::nullopt;
  return e;
}

std::string to_string(const update& u) {
  std::string out = "(";
  for (std::size_t i = 0; i < energy_dims; ++i) {
    if (i != 0) out += ',';
    const auto& c = u[i];
    if (c.k == update_component::kind::relative) {
      out += std::to_string(static_cast<int>(c.delta));
    } else {
      out += "min{";
      bool first = true;
      for (std::size_t d = 0; d < energy_dims; ++d) {
        if (((c.mask >> d) & 1U) == 0) continue;
        if (!first) out += ',';
        out += std::to_string(d + 1);
        first = false;
      }
      out += '}';
    }
  }
  return out + ")";
}

std::string to_string(const antichain& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : a) {
    if (!first) out += ", ";
    out += to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace spectroscopy
