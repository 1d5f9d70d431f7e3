#include "univgate/word_set.h"

#include <algorithm>
#include <random>

#include "univgate/errors.h"

namespace univgate {

WordSet::WordSet(std::vector<Eigen::MatrixXcd> generators, Group group,
                 const Tolerances& tol, std::size_t max_size,
                 std::vector<bool> active)
    : generators_(std::move(generators)),
      active_(std::move(active)),
      group_(group),
      eps_(tol.dedup),
      max_size_(max_size) {
  if (generators_.empty()) {
    throw Error(ErrorCode::kEmptyInput, "word set needs generators");
  }
  if (active_.empty()) active_.assign(generators_.size(), true);
  const int d = static_cast<int>(generators_.front().rows());
  // Fixed pseudo-random unit probe: |key(a) − key(b)| ≤ ‖a − b‖_F.
  std::mt19937_64 rng(0x5eedULL + d);
  std::normal_distribution<double> normal;
  probe_.resize(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) probe_(i, j) = Complex(normal(rng), normal(rng));
  }
  probe_ /= probe_.norm();
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (!active_[g]) continue;
    if (insert(generators_[g], kNoParent, static_cast<int>(g), 1)) {
      frontier_.push_back(elements_.size() - 1);
    }
  }
  if (elements_.empty()) {
    // No active generators: the set holds the identity only.
    elements_.push_back(Eigen::MatrixXcd::Identity(d, d));
    parents_.push_back(kNoParent);
    letters_.push_back(-1);
    lengths_.push_back(0);
    index_.emplace(key(elements_.back()), 0);
    closed_ = true;
    length_ = 0;
  }
}

double WordSet::key(const Eigen::MatrixXcd& m) const {
  return (probe_.conjugate().cwiseProduct(m)).sum().real();
}

std::vector<int> WordSet::word(std::size_t i) const {
  std::vector<int> out;
  while (i != kNoParent) {
    if (letters_[i] >= 0) out.push_back(letters_[i]);
    i = parents_[i];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Eigen::MatrixXcd WordSet::multiply_word(const std::vector<int>& word) const {
  const int d = static_cast<int>(generators_.front().rows());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  for (int letter : word) m = m * generators_[letter];
  return m;
}

std::optional<std::size_t> WordSet::find(const Eigen::MatrixXcd& m) const {
  const double k = key(m);
  auto lo = index_.lower_bound(k - eps_);
  auto hi = index_.upper_bound(k + eps_);
  for (auto it = lo; it != hi; ++it) {
    if ((elements_[it->second] - m).norm() < eps_) return it->second;
  }
  return std::nullopt;
}

bool WordSet::insert(Eigen::MatrixXcd m, std::size_t parent, int letter,
                     int length) {
  if (auto hit = find(m)) {
    const double dist = (elements_[*hit] - m).norm();
    if (dist <= 1e-3 * eps_) return false;
    // Near the radius: recompute both from their labels before deciding.
    std::vector<int> w = parent == kNoParent ? std::vector<int>{} : word(parent);
    w.push_back(letter);
    const Eigen::MatrixXcd fresh_new = multiply_word(w);
    const Eigen::MatrixXcd fresh_old = multiply_word(word(*hit));
    if ((fresh_new - fresh_old).norm() < eps_) return false;
  }
  if (elements_.size() >= max_size_) {
    throw Error(ErrorCode::kSetBudgetExceeded,
                "word set exceeded " + std::to_string(max_size_) + " elements");
  }
  index_.emplace(key(m), elements_.size());
  elements_.push_back(std::move(m));
  parents_.push_back(parent);
  letters_.push_back(letter);
  lengths_.push_back(length);
  return true;
}

std::size_t WordSet::absorb(int index) {
  std::size_t added = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (insert(elements_[i] * generators_[index], i, index, lengths_[i] + 1)) {
        ++added;
        grew = true;
      }
    }
  }
  return added;
}

WordSet grow_words(WordSet ws) {
  std::vector<std::size_t> next;
  const int new_length = ws.length_ + 1;
  for (std::size_t g = 0; g < ws.generators_.size(); ++g) {
    if (!ws.active_[g]) continue;
    for (std::size_t f : ws.frontier_) {
      Eigen::MatrixXcd m = ws.elements_[f] * ws.generators_[g];
      if (ws.insert(std::move(m), f, static_cast<int>(g), new_length)) {
        next.push_back(ws.elements_.size() - 1);
      }
    }
  }
  ws.closed_ = next.empty();
  if (!next.empty()) ws.length_ = new_length;
  ws.frontier_ = std::move(next);
  return ws;
}

}  // namespace univgate
