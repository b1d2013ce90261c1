#pragma once

#include <optional>
#include <string>

#include "orichrome/graph.hpp"

namespace orichrome {

enum class BoundKind { kGenusUpper, kOrderUpper, kChiLower, kChiUpper };

const char* bound_kind_name(BoundKind kind) noexcept;

struct BoundReport {
  BoundKind kind = BoundKind::kGenusUpper;
  long long g = 0;
  long long n = 0;
  long long e = 0;
  double bound_value = 0.0;
  // chi_upper only: (144g-162) * ceil(8^10 ln(144g-162)).
  std::optional<double> intermediate;
};

// e - n + 1, computed as (k-1)n + 1 with k = e/n exact.
BoundReport genus_upper_from_edges(long long n, long long e);

// Strict upper bound 6g/k on the order of a genus-g graph with minimum degree
// at least k + 6.
BoundReport order_upper_from_min_degree(long long g, long long k);
// Same, but refuses (kPreconditionViolated) unless min degree of `graph` >= k + 6.
BoundReport order_upper_for_graph(const OrientedGraph& graph, long long g, long long k);

// Principal branch of y e^y = x for x >= 0 by Newton iteration from ln(1+x).
// Throws kDomainError for x < 0 and kNonConvergence after 100 iterations.
double lambert_w0(double x);

// ln2 (g-1) / (ln(g-1) + ln ln 2 - ln 2). Throws kDomainError for g < 11.
BoundReport chi_lower_bound(long long g);

// Greatest n with g >= (log2 n - 1) n + 1. Throws kDomainError for g < 11.
int extremal_clique_order(long long g);

// 2^40 g ln g, with the intermediate product. Throws kDomainError for g < 2
// and std::logic_error if the intermediate exceeds the bound.
BoundReport chi_upper_bound(long long g);

// One CSV line "g,chi_lower,clique_order,chi_upper_intermediate,chi_upper";
// out-of-domain columns hold the marker DomainError.
std::string bounds_csv_header();
std::string bounds_csv_row(long long g);

}  // namespace orichrome
