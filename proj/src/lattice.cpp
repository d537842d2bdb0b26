#include "ljsep/lattice.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ljsep/csv.hpp"

namespace ljsep {

Configuration::Configuration(int n) : n_(n), words_(static_cast<std::size_t>((n - 1 + 63) / 64), 0) {
  if (n < 2) throw std::invalid_argument("Configuration: n must be >= 2");
}

Configuration Configuration::full(int n) {
  Configuration c(n);
  for (int x = 1; x < n; ++x) c.set(x, true);
  return c;
}

Configuration Configuration::from_bits(int n, std::uint64_t bits) {
  if (n - 1 > 64) throw std::invalid_argument("Configuration::from_bits: at most 64 sites");
  Configuration c(n);
  for (int x = 1; x < n; ++x) c.set(x, (bits >> (x - 1)) & 1u);
  return c;
}

void Configuration::set(int x, bool value) {
  if (occupied(x) == value) return;
  flip(x);
}

std::uint64_t Configuration::to_bits() const {
  if (n_ - 1 > 64) throw std::invalid_argument("Configuration::to_bits: at most 64 sites");
  return words_.empty() ? 0 : words_[0];
}

std::string to_string(TestClass c) {
  switch (c) {
    case TestClass::compact_support: return "compact";
    case TestClass::dirichlet: return "dirichlet";
    case TestClass::robin: return "robin";
    case TestClass::neumann: return "neumann";
    case TestClass::generic: return "generic";
  }
  return "generic";
}

TestFunction::TestFunction(std::string id, Fn value, Fn first, Fn second, TestClass cls, double robin_ratio)
    : id_(std::move(id)),
      value_(std::move(value)),
      first_(std::move(first)),
      second_(std::move(second)),
      class_(cls),
      robin_ratio_(cls == TestClass::neumann ? 0.0 : robin_ratio) {}

bool TestFunction::satisfies_class(double tol) const {
  switch (class_) {
    case TestClass::generic: return true;
    case TestClass::compact_support:
      return std::abs(value_(0.0)) < tol && std::abs(value_(1.0)) < tol && std::abs(first_(0.0)) < tol &&
             std::abs(first_(1.0)) < tol;
    case TestClass::dirichlet: return std::abs(value_(0.0)) < tol && std::abs(value_(1.0)) < tol;
    case TestClass::robin:
    case TestClass::neumann:
      return std::abs(first_(0.0) - robin_ratio_ * value_(0.0)) < tol &&
             std::abs(first_(1.0) + robin_ratio_ * value_(1.0)) < tol;
  }
  return false;
}

Eigen::VectorXd TestFunction::on_lattice(int n) const {
  Eigen::VectorXd v(n - 1);
  for (int x = 1; x < n; ++x) v[x - 1] = value_(static_cast<double>(x) / n);
  return v;
}

double empirical_pairing(const Configuration& config, const Eigen::VectorXd& lattice_values) {
  double s = 0.0;
  for (int x = 1; x < config.n(); ++x)
    if (config.occupied(x)) s += lattice_values[x - 1];
  return s / (config.n() - 1);
}

double empirical_pairing(const Configuration& config, const TestFunction& g) {
  return empirical_pairing(config, g.on_lattice(config.n()));
}

double boundary_average(const Configuration& config, Side side, double eps) {
  const int n = config.n();
  const int width = static_cast<int>(std::floor(eps * n));
  if (width < 1) throw std::invalid_argument("boundary_average: floor(eps N) must be at least 1");
  if (width > n - 1) throw std::invalid_argument("boundary_average: window exceeds the lattice");
  int occupied = 0;
  if (side == Side::left) {
    for (int x = 1; x <= width; ++x) occupied += config.occupied(x);
  } else {
    for (int x = n - width; x <= n - 1; ++x) occupied += config.occupied(x);
  }
  return static_cast<double>(occupied) / width;
}

Configuration sample_product_measure(const std::function<double(double)>& profile, int n, CounterRng& rng) {
  Configuration c(n);
  for (int x = 1; x < n; ++x) c.set(x, rng.uniform() < profile(static_cast<double>(x) / n));
  return c;
}

void write_snapshot(std::ostream& os, const Configuration& config) {
  for (int x = 1; x < config.n(); ++x) write_row(os, x, config.occupied(x) ? 1 : 0);
}

}  // namespace ljsep
