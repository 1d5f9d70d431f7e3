#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "univgate/gate.h"

namespace univgate {

/// Deduplicated products of generators, each labelled by the word that
/// produced it. Elements closer than the dedup radius (Frobenius) are one
/// element.
class WordSet {
 public:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  /// Seeds the set with the generators (length-1 words). Only generators
  /// flagged active take part in grow_words; the rest can be folded in with
  /// absorb().
  WordSet(std::vector<Eigen::MatrixXcd> generators, Group group,
          const Tolerances& tol = {}, std::size_t max_size = 1000000,
          std::vector<bool> active = {});

  std::size_t size() const { return elements_.size(); }
  /// Longest word length among the stored elements.
  int length() const { return length_; }
  /// True when the last growth step added nothing.
  bool closed() const { return closed_; }
  Group group() const { return group_; }

  const Eigen::MatrixXcd& element(std::size_t i) const { return elements_[i]; }
  int word_length(std::size_t i) const { return lengths_[i]; }
  /// Generator indices, left to right: element = g[w0] g[w1] ….
  std::vector<int> word(std::size_t i) const;
  /// Elements added by the most recent step (the generators initially).
  const std::vector<std::size_t>& frontier() const { return frontier_; }
  const std::vector<Eigen::MatrixXcd>& generators() const { return generators_; }

  std::optional<std::size_t> find(const Eigen::MatrixXcd& m) const;
  Eigen::MatrixXcd multiply_word(const std::vector<int>& word) const;

  /// Multiplies every element by generator `index` until nothing new
  /// appears. Used for central generators. Returns the number added.
  std::size_t absorb(int index);

 private:
  friend WordSet grow_words(WordSet ws);

  double key(const Eigen::MatrixXcd& m) const;
  // Returns false when m duplicates a stored element.
  bool insert(Eigen::MatrixXcd m, std::size_t parent, int letter, int length);

  std::vector<Eigen::MatrixXcd> generators_;
  std::vector<bool> active_;
  Group group_;
  double eps_;
  std::size_t max_size_;
  Eigen::MatrixXcd probe_;

  std::vector<Eigen::MatrixXcd> elements_;
  std::vector<std::size_t> parents_;
  std::vector<int> letters_;
  std::vector<int> lengths_;
  std::multimap<double, std::size_t> index_;
  std::vector<std::size_t> frontier_;
  int length_ = 1;
  bool closed_ = false;
};

/// Appends frontier × active generator products that are new. Iterates by
/// generator index, then frontier insertion order.
/// Throws kSetBudgetExceeded when the set would outgrow its budget.
WordSet grow_words(WordSet ws);

}  // namespace univgate
