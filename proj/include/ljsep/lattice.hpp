#ifndef LJSEP_LATTICE_HPP
#define LJSEP_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ljsep/rng.hpp"

namespace ljsep {

/// Occupation variables eta in {0,1}^{Lambda_N}, Lambda_N = {1, ..., N-1},
/// stored as a bit array with a cached particle count.
class Configuration {
 public:
  explicit Configuration(int n);

  static Configuration full(int n);
  /// Bit x-1 of `bits` is eta(x). Requires N - 1 <= 64.
  static Configuration from_bits(int n, std::uint64_t bits);

  int n() const { return n_; }
  int sites() const { return n_ - 1; }

  bool occupied(int x) const { return (words_[index(x)] >> offset(x)) & 1u; }
  bool operator[](int x) const { return occupied(x); }

  void set(int x, bool value);
  /// sigma^x
  void flip(int x) {
    words_[index(x)] ^= std::uint64_t{1} << offset(x);
    count_ += occupied(x) ? 1 : -1;
  }
  /// sigma^{x,y}
  void swap(int x, int y) {
    const bool a = occupied(x);
    if (a != occupied(y)) {
      words_[index(x)] ^= std::uint64_t{1} << offset(x);
      words_[index(y)] ^= std::uint64_t{1} << offset(y);
    }
  }

  int particle_count() const { return count_; }
  std::uint64_t to_bits() const;

  bool operator==(const Configuration& other) const = default;

 private:
  static int index(int x) { return (x - 1) >> 6; }
  static int offset(int x) { return (x - 1) & 63; }

  int n_;
  std::vector<std::uint64_t> words_;
  int count_ = 0;
};

/// Boundary/class tag of a test function.
enum class TestClass { compact_support, dirichlet, robin, neumann, generic };

std::string to_string(TestClass c);

/// Time-independent test function G with its first two derivatives.
///
/// The robin class uses the homogeneous conditions G'(0) = k G(0),
/// G'(1) = -k G(1) with k = robin_ratio; neumann is the k = 0 case.
class TestFunction {
 public:
  using Fn = std::function<double(double)>;

  TestFunction(std::string id, Fn value, Fn first, Fn second, TestClass cls = TestClass::generic,
               double robin_ratio = 0.0);

  double operator()(double u) const { return value_(u); }
  double derivative(double u) const { return first_(u); }
  double second_derivative(double u) const { return second_(u); }

  const std::string& id() const { return id_; }
  TestClass test_class() const { return class_; }
  double robin_ratio() const { return robin_ratio_; }

  /// Checks the boundary values implied by the class tag.
  bool satisfies_class(double tol = 1e-10) const;

  /// G(x/N) for x = 1..N-1 (entry x-1).
  Eigen::VectorXd on_lattice(int n) const;

 private:
  std::string id_;
  Fn value_;
  Fn first_;
  Fn second_;
  TestClass class_;
  double robin_ratio_;
};

/// <pi^N, G> = (N-1)^{-1} sum_x G(x/N) eta(x).
double empirical_pairing(const Configuration& config, const TestFunction& g);

/// Same pairing against precomputed lattice values (entry x-1 holds G(x/N)).
double empirical_pairing(const Configuration& config, const Eigen::VectorXd& lattice_values);

enum class Side { left, right };

/// Mean occupation over the floor(eps N) sites closest to the chosen boundary.
/// Throws std::invalid_argument when floor(eps N) = 0.
double boundary_average(const Configuration& config, Side side, double eps);

/// Independent Bernoulli(g(x/N)) occupations.
Configuration sample_product_measure(const std::function<double(double)>& profile, int n, CounterRng& rng);

/// Rows "site,occupancy".
void write_snapshot(std::ostream& os, const Configuration& config);

}  // namespace ljsep

#endif  // LJSEP_LATTICE_HPP
