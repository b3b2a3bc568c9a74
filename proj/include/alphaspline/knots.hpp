#pragma once

// Nondecreasing knot vectors: span lookup, node multiplicities, and the
// open / periodic / uniform / symmetric taxonomy used by the basis layer.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphaspline {

/// Structural classification of a knot vector for a given degree k.
/// The end-node flags (open / periodic) need m > 2k to be meaningful and
/// report false otherwise; symmetric is degree-independent.
struct KnotTaxonomy {
  bool open = false;       ///< t_0 = ... = t_k and t_{m-k} = ... = t_m
  bool periodic = false;   ///< m > 2k and not open
  bool uniform = false;    ///< interior nodes equidistant (spacing h > 0)
  bool symmetric = false;  ///< t_{m-i} = t_0 + t_m - t_i for all i
};

/// Nondecreasing node sequence t_0 <= t_1 <= ... <= t_m with m >= 1.
///
/// Values carry exact double semantics: multiplicity counting and the
/// open-vector test compare nodes with ==, while the uniform and symmetric
/// flags use a 1e-12 relative tolerance (see classify).
class KnotVector {
 public:
  explicit KnotVector(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
      throw std::invalid_argument("knot vector needs at least two nodes");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!std::isfinite(nodes_[i]))
        throw std::invalid_argument("knot vector node " + std::to_string(i) +
                                    " is not finite");
      if (i > 0 && nodes_[i] < nodes_[i - 1])
        throw std::invalid_argument("knot vector decreases at index " +
                                    std::to_string(i));
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (i == 0 || nodes_[i] != nodes_[i - 1]) {
        breakpoints_.push_back(nodes_[i]);
        multiplicities_.push_back(1);
      } else {
        ++multiplicities_.back();
      }
    }
  }

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  double operator[](int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  /// Index of the last node (the m in t_0..t_m).
  int max_index() const noexcept { return static_cast<int>(nodes_.size()) - 1; }

  double front() const noexcept { return nodes_.front(); }
  double back() const noexcept { return nodes_.back(); }

  /// Distinct node values u_0 < u_1 < ... in ascending order.
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

  /// Multiplicity of each breakpoint; sums to m + 1.
  const std::vector<int>& multiplicities() const noexcept { return multiplicities_; }

  /// Number of nodes exactly equal to value (0 if absent).
  int multiplicity(double value) const noexcept {
    const auto lo = std::lower_bound(nodes_.begin(), nodes_.end(), value);
    const auto hi = std::upper_bound(lo, nodes_.end(), value);
    return static_cast<int>(hi - lo);
  }

  /// Index j of the nonempty span with t_j <= x < t_{j+1}.  The right end
  /// of the domain resolves to the last nonempty span, so x == t_m is the
  /// left-limit convention used throughout evaluation.  Throws
  /// std::domain_error for x outside [t_0, t_m] or a fully degenerate
  /// vector (t_0 == t_m).
  int find_span(double x) const {
    if (!(x >= front() && x <= back()))
      throw std::domain_error("evaluation point outside the knot range");
    if (front() == back())
      throw std::domain_error("knot vector has no nonempty span");
    if (x == back()) {
      int j = max_index() - 1;
      while (nodes_[static_cast<std::size_t>(j)] == back()) --j;
      return j;
    }
    // first node strictly above x, minus one: the rightmost t_j <= x,
    // which is automatically the start of a nonempty span for x < t_m
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    return static_cast<int>(it - nodes_.begin()) - 1;
  }

  /// Taxonomy for degree k (k >= 0).  Flags requiring the end-node
  /// decomposition (open, periodic, uniform) report false when m <= 2k or
  /// when the middle section t_k..t_{m-k} is degenerate.
  KnotTaxonomy classify(int degree) const {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    KnotTaxonomy tx;
    tx.symmetric = is_symmetric();
    const int m = max_index();
    const int k = degree;
    if (m <= 2 * k) return tx;
    if (!(nodes_[static_cast<std::size_t>(k)] <
          nodes_[static_cast<std::size_t>(m - k)]))
      return tx;
    bool open = true;
    for (int i = 1; i <= k && open; ++i)
      open = nodes_[static_cast<std::size_t>(i)] == nodes_[0] &&
             nodes_[static_cast<std::size_t>(m - i)] ==
                 nodes_[static_cast<std::size_t>(m)];
    tx.open = open;
    tx.periodic = !open;
    const double h = nodes_[static_cast<std::size_t>(k + 1)] -
                     nodes_[static_cast<std::size_t>(k)];
    if (h > 0.0) {
      bool uniform = true;
      const double tol = 1e-12 * std::max(1.0, std::abs(h));
      for (int i = k; i <= m - k - 1 && uniform; ++i)
        uniform = std::abs(nodes_[static_cast<std::size_t>(i + 1)] -
                           nodes_[static_cast<std::size_t>(i)] - h) <= tol;
      tx.uniform = uniform;
    }
    return tx;
  }

  /// Mirror symmetry t_{m-i} = t_0 + t_m - t_i, checked with a 1e-12
  /// tolerance relative to the knot range.
  bool is_symmetric() const noexcept {
    const double sum = front() + back();
    const double tol = 1e-12 * std::max(1.0, back() - front());
    const std::size_t count = nodes_.size();
    for (std::size_t i = 0; i < count; ++i)
      if (std::abs(nodes_[count - 1 - i] - (sum - nodes_[i])) > tol) return false;
    return true;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> breakpoints_;
  std::vector<int> multiplicities_;
};

}  // namespace alphaspline
