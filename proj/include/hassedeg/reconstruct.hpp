#pragma once

#include <stdexcept>
#include <vector>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/permutation.hpp"

namespace hassedeg {

// The input set is not the strong descent set of any permutation.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rebuilds the unique permutation whose strong descent set is `d`.
//
// Values are inserted in increasing order 2, 3, ..., n into the word built so
// far. Value v goes to the end when no member has the form t_{a,v}; otherwise
// it is placed immediately before the smallest such a. The result is checked
// by recomputing its descent set; a mismatch throws ValidationFailure.
Permutation reconstruct(int n, const StrongDescentSet& d);

bool is_realizable(int n, const std::vector<Transposition>& members);

}  // namespace hassedeg
