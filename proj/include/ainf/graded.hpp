#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/// A basis vector of e_target · X · e_source. Object indices are 0-based.
struct BasisElement {
  std::string id;
  int degree = 0;
  int source = 0;
  int target = 0;

  bool operator==(const BasisElement&) const = default;
};

/// Finite graded vector space over R = K^m with a labelled basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  /// Throws on duplicate ids or object labels outside [0, num_objects).
  GradedSpace(int num_objects, std::vector<BasisElement> basis);

  int num_objects() const { return num_objects_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const BasisElement& operator[](int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const std::vector<BasisElement>& elements() const { return basis_; }

  std::optional<int> find(std::string_view id) const;
  /// Throws ErrorKind::kSemantic for unknown ids.
  int index_of(std::string_view id) const;

  int degree(int i) const { return (*this)[i].degree; }
  /// deg(x) - 1.
  int reduced_degree(int i) const { return degree(i) - 1; }

  bool operator==(const GradedSpace& other) const {
    return num_objects_ == other.num_objects_ && basis_ == other.basis_;
  }

 private:
  int num_objects_ = 1;
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, int> index_;
};

/// Sum of reduced degrees; callers add their own offsets.
int koszul_exponent(const GradedSpace& space, std::span<const int> elements);

/// Sparse vector: basis index -> nonzero coefficient.
using LinComb = std::map<int, Scalar>;

void add_term(LinComb& target, int index, const Scalar& coefficient);
void add_scaled(LinComb& target, const LinComb& source, const Scalar& factor);
LinComb scaled(const LinComb& source, const Scalar& factor);
LinComb single(int index, const Scalar& coefficient);

/// Inputs in written order (a_d, ..., a_1); a_1 is the last entry.
using Tuple = std::vector<int>;

/// A sparse d-linear map. Entries never store zero outputs.
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(int arity, int degree_shift) : arity_(arity), degree_shift_(degree_shift) {}

  int arity() const { return arity_; }
  int degree_shift() const { return degree_shift_; }
  const std::map<Tuple, LinComb>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void add(const Tuple& inputs, int output, const Scalar& coefficient);
  void add(const Tuple& inputs, const LinComb& output);
  /// nullptr when the tuple has no entry (i.e. maps to zero).
  const LinComb* find(const Tuple& inputs) const;

  bool operator==(const MultiMap& other) const;

 private:
  int arity_ = 1;
  int degree_shift_ = 0;
  std::map<Tuple, LinComb> entries_;
};

/// Throws ErrorKind::kSemantic naming the first entry that violates degrees or
/// R-composability. Slot k of an input tuple is read from input_space(k).
void validate_multimap(const MultiMap& map, const std::function<const GradedSpace&(int slot)>& input_space,
                       const GradedSpace& output_space, std::string_view label);
void validate_multimap(const MultiMap& map, const GradedSpace& input_space, const GradedSpace& output_space,
                       std::string_view label);

/// Multilinear extension of the entries. Throws on arity mismatch.
LinComb apply_multimap(const MultiMap& map, std::span<const LinComb> args);

std::string describe_tuple(const GradedSpace& space, const Tuple& tuple);
std::string describe_lincomb(const GradedSpace& space, const LinComb& value);

}  // namespace ainf
