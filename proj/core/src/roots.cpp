#include "rootbound/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootbound {

std::string to_string(Family family) {
  return family == Family::TypeA ? "A" : "C";
}

Root Root::difference(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<int> c(n, 0);
  c.at(i) += 1;
  c.at(j) -= 1;
  return Root(std::move(c));
}

Root Root::sum(std::size_t n, std::size_t i, std::size_t j, int sign) {
  std::vector<int> c(n, 0);
  c.at(i) += sign;
  c.at(j) += sign;
  return Root(std::move(c));
}

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
  std::vector<int> c(coeffs_);
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

Root Root::operator+(const Root& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("root rank mismatch");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return Root(std::move(c));
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

std::string Root::pretty() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Root negate(const Root& root) { return -root; }

bool matches_pattern(Family family, const Root& root) {
  int plus_one = 0, minus_one = 0, plus_two = 0, minus_two = 0, other = 0;
  for (int c : root.coeffs()) {
    switch (c) {
      case 0: break;
      case 1: ++plus_one; break;
      case -1: ++minus_one; break;
      case 2: ++plus_two; break;
      case -2: ++minus_two; break;
      default: ++other;
    }
  }
  if (other != 0) return false;
  const int ones = plus_one + minus_one;
  const int twos = plus_two + minus_two;
  if (family == Family::TypeA) return plus_one == 1 && minus_one == 1 && twos == 0;
  return (ones == 2 && twos == 0) || (ones == 0 && twos == 1);
}

RootSystem::RootSystem(Family family, std::size_t rank, std::vector<Root> roots)
    : family_(family), rank_(rank), roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  for (const Root& r : roots_) {
    if (r.rank() != rank_ || !matches_pattern(family_, r))
      throw std::invalid_argument("not a root of type " + to_string(family_) + ": " + r.pretty());
  }
}

bool RootSystem::contains(const Root& root) const {
  return std::binary_search(roots_.begin(), roots_.end(), root);
}

std::optional<Root> RootSystem::add_root(const Root& a, const Root& b) const {
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("add_root: argument is not a root of the system");
  Root s = a + b;
  if (contains(s)) return s;
  return std::nullopt;
}

RootSystem build_root_system(Family family, std::size_t n) {
  std::vector<Root> roots;
  if (family == Family::TypeA) {
    if (n < 2) throw std::invalid_argument("type A root system needs n >= 2");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) roots.push_back(Root::difference(n, i, j));
  } else {
    if (n < 1) throw std::invalid_argument("type C root system needs n >= 1");
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        roots.push_back(Root::sum(n, j, k, 1));
        roots.push_back(Root::sum(n, j, k, -1));
        if (j != k) {
          roots.push_back(Root::difference(n, j, k));
          roots.push_back(Root::difference(n, k, j));
        }
      }
    }
  }
  return RootSystem(family, n, std::move(roots));
}

}  // namespace rootbound

std::size_t std::hash<rootbound::Root>::operator()(const rootbound::Root& root) const noexcept {
  std::size_t h = root.rank();
  for (int c : root.coeffs()) h = h * 31 + static_cast<std::size_t>(c + 3);
  return h;
}
