#ifndef ABEL_CHEBYSHEV_HPP
#define ABEL_CHEBYSHEV_HPP

#include <functional>
#include <vector>

namespace abel {

// Barycentric interpolant on Chebyshev points of the first kind mapped to
// (a, b). The nodes are strictly interior, so functions that are only
// defined on the open interval can be sampled.
class Chebyshev {
 public:
  Chebyshev() = default;
  Chebyshev(double a, double b, std::vector<double> values);

  static std::vector<double> nodes(double a, double b, int n);

  double eval(double x) const;
  double deriv(double x) const;

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& node_values() const { return values_; }
  const std::vector<double>& node_points() const { return nodes_; }

 private:
  double a_ = 0.0, b_ = 1.0;
  std::vector<double> nodes_, values_, weights_;
};

}  // namespace abel

#endif
