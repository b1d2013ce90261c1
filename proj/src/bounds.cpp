#include "orichrome/bounds.hpp"

#include <boost/rational.hpp>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "orichrome/error.hpp"

namespace orichrome {

const char* bound_kind_name(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::kGenusUpper:
      return "genus_upper";
    case BoundKind::kOrderUpper:
      return "order_upper";
    case BoundKind::kChiLower:
      return "chi_lower";
    case BoundKind::kChiUpper:
      return "chi_upper";
  }
  return "unknown";
}

BoundReport genus_upper_from_edges(long long n, long long e) {
  if (n < 1 || e < 0) throw Error(ErrorCode::kDomainError, "genus bound needs n >= 1 and e >= 0");
  const boost::rational<long long> k(e, n);
  const boost::rational<long long> value = (k - 1) * n + 1;
  BoundReport r{BoundKind::kGenusUpper, 0, n, e, boost::rational_cast<double>(value), std::nullopt};
  r.g = boost::rational_cast<long long>(value);
  return r;
}

BoundReport order_upper_from_min_degree(long long g, long long k) {
  if (g < 2 || k < 1) throw Error(ErrorCode::kDomainError, "order bound needs g >= 2 and k >= 1");
  return {BoundKind::kOrderUpper, g, 0, 0, 6.0 * static_cast<double>(g) / static_cast<double>(k), std::nullopt};
}

BoundReport order_upper_for_graph(const OrientedGraph& graph, long long g, long long k) {
  if (graph.order() == 0 || graph.min_degree() < k + 6) {
    throw Error(ErrorCode::kPreconditionViolated, "minimum degree is below k + 6 = " + std::to_string(k + 6));
  }
  BoundReport r = order_upper_from_min_degree(g, k);
  r.n = graph.order();
  r.e = static_cast<long long>(graph.size());
  return r;
}

double lambert_w0(double x) {
  if (!(x >= 0.0) || std::isinf(x)) throw Error(ErrorCode::kDomainError, "W0 needs finite x >= 0");
  if (x == 0.0) return 0.0;
  const double tolerance = 1e-12 * std::max(1.0, x);
  double y = std::log1p(x);
  for (int iter = 0; iter < 100; ++iter) {
    const double ey = std::exp(y);
    const double residual = y * ey - x;
    if (std::abs(residual) <= tolerance) return y;
    y -= residual / (ey * (y + 1.0));
  }
  throw Error(ErrorCode::kNonConvergence, "Newton iteration for W0 did not converge");
}

BoundReport chi_lower_bound(long long g) {
  if (g < 11) throw Error(ErrorCode::kDomainError, "lower bound needs g >= 11");
  const double gm1 = static_cast<double>(g - 1);
  const double ln2 = std::log(2.0);
  const double value = ln2 * gm1 / (std::log(gm1) + std::log(ln2) - ln2);
  return {BoundKind::kChiLower, g, 0, 0, value, std::nullopt};
}

int extremal_clique_order(long long g) {
  if (g < 11) throw Error(ErrorCode::kDomainError, "extremal clique order needs g >= 11");
  const auto fits = [g](long long n) {
    return (std::log2(static_cast<double>(n)) - 1.0) * static_cast<double>(n) + 1.0 <= static_cast<double>(g);
  };
  // (log2 n - 1) n + 1 increases for n >= 2, so scan upward by doubling and
  // then bisect the last step.
  long long lo = 5;
  long long hi = 10;
  while (fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return static_cast<int>(lo);
}

BoundReport chi_upper_bound(long long g) {
  if (g < 2) throw Error(ErrorCode::kDomainError, "upper bound needs g >= 2");
  const double gd = static_cast<double>(g);
  const double value = std::ldexp(1.0, 40) * gd * std::log(gd);
  const double k = static_cast<double>(144 * g - 162);
  const double intermediate = k * std::ceil(std::pow(8.0, 10) * std::log(k));
  if (intermediate > value) throw std::logic_error("intermediate exceeds 2^40 g ln g at g = " + std::to_string(g));
  return {BoundKind::kChiUpper, g, 0, 0, value, intermediate};
}

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string bounds_csv_header() { return "g,chi_lower,clique_order,chi_upper_intermediate,chi_upper"; }

std::string bounds_csv_row(long long g) {
  std::string row = std::to_string(g);
  if (g >= 11) {
    row += "," + format_real(chi_lower_bound(g).bound_value) + "," + std::to_string(extremal_clique_order(g));
  } else {
    row += ",DomainError,DomainError";
  }
  if (g >= 2) {
    const BoundReport up = chi_upper_bound(g);
    row += "," + format_real(*up.intermediate) + "," + format_real(up.bound_value);
  } else {
    row += ",DomainError,DomainError";
  }
  return row;
}

}  // namespace orichrome
