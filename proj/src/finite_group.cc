#include <algorithm>
#include <set>

#include "univgate/engine.h"
#include "univgate/errors.h"

namespace univgate {
namespace {

using Stats = std::map<int, int>;

const Stats kBinaryTetrahedral = {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}};
const Stats kBinaryOctahedral = {{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}};
const Stats kBinaryIcosahedral = {{1, 1},  {2, 1},  {3, 20}, {4, 30},
                                  {5, 24}, {6, 20}, {10, 24}};
const Stats kTetrahedral = {{1, 1}, {2, 3}, {3, 8}};
const Stats kOctahedral = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
const Stats kIcosahedral = {{1, 1}, {2, 15}, {3, 20}, {5, 24}};

// Indices of the powers a, a², …, up to the identity.
std::set<std::size_t> cyclic_closure(const WordSet& ws, std::size_t a) {
  std::set<std::size_t> out;
  Eigen::MatrixXcd p = ws.element(a);
  for (std::size_t k = 0; k <= ws.size(); ++k) {
    auto idx = ws.find(p);
    if (!idx || !out.insert(*idx).second) break;
    p = p * ws.element(a);
  }
  return out;
}

Eigen::MatrixXcd power(const Eigen::MatrixXcd& m, int n) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) p = p * m;
  return p;
}

bool is_dicyclic(const WordSet& ws, const std::vector<int>& orders) {
  const std::size_t size = ws.size();
  if (size < 8 || size % 4 != 0) return false;
  const int n = static_cast<int>(size / 4);
  const double eps = 1e-6;
  for (std::size_t a = 0; a < size; ++a) {
    if (orders[a] != 2 * n) continue;
    const std::set<std::size_t> cyc = cyclic_closure(ws, a);
    const Eigen::MatrixXcd& am = ws.element(a);
    const Eigen::MatrixXcd a_inv = am.adjoint();
    const Eigen::MatrixXcd a_n = power(am, n);
    for (std::size_t x = 0; x < size; ++x) {
      if (cyc.count(x)) continue;
      const Eigen::MatrixXcd& xm = ws.element(x);
      if ((xm * am * xm.adjoint() - a_inv).norm() > eps) return false;
      if ((xm * xm - a_n).norm() > eps) return false;
    }
    return true;
  }
  return false;
}

bool is_dihedral(const WordSet& ws, const std::vector<int>& orders) {
  const std::size_t size = ws.size();
  if (size < 4 || size % 2 != 0) return false;
  const int n = static_cast<int>(size / 2);
  for (std::size_t a = 0; a < size; ++a) {
    if (orders[a] != n) continue;
    const std::set<std::size_t> cyc = cyclic_closure(ws, a);
    for (std::size_t x = 0; x < size; ++x) {
      if (!cyc.count(x) && orders[x] != 2) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

std::vector<int> element_orders(const WordSet& ws) {
  const int d = static_cast<int>(ws.element(0).rows());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  std::vector<int> out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    Eigen::MatrixXcd p = ws.element(i);
    int k = 1;
    while ((p - id).norm() > 1e-6) {
      if (static_cast<std::size_t>(k) > ws.size()) {
        throw Error(ErrorCode::kNumericalFailure,
                    "element order exceeds the set size");
      }
      p = p * ws.element(i);
      ++k;
    }
    out.push_back(k);
  }
  return out;
}

FiniteGroupInfo classify_finite_group(const WordSet& ws) {
  if (!ws.closed()) throw Error(ErrorCode::kNotClosed, "word set is not closed");
  FiniteGroupInfo info;
  info.order = static_cast<std::int64_t>(ws.size());
  const std::vector<int> orders = element_orders(ws);
  for (int o : orders) ++info.order_statistics[o];
  const int d = static_cast<int>(ws.element(0).rows());
  const bool su2 = ws.group() == Group::kSU && d == 2;
  const bool so3 = ws.group() == Group::kSO && d == 3;
  if (info.order == 1) {
    info.label = "trivial";
  } else if (std::find(orders.begin(), orders.end(), info.order) != orders.end()) {
    info.label = "cyclic";
  } else if (su2) {
    if (info.order_statistics == kBinaryTetrahedral) {
      info.label = "<2,3,3>";
    } else if (info.order_statistics == kBinaryOctahedral) {
      info.label = "<2,3,4>";
    } else if (info.order_statistics == kBinaryIcosahedral) {
      info.label = "<2,3,5>";
    } else if (is_dicyclic(ws, orders)) {
      info.label = "dicyclic";
    }
  } else if (so3) {
    if (info.order_statistics == kTetrahedral) {
      info.label = "A4";
    } else if (info.order_statistics == kOctahedral) {
      info.label = "S4";
    } else if (info.order_statistics == kIcosahedral) {
      info.label = "A5";
    } else if (is_dihedral(ws, orders)) {
      info.label = "dihedral";
    }
  }
  return info;
}

}  // namespace univgate
