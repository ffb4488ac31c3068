#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "opsat/cnf.hpp"

namespace opsat {

// Clause reference: index into the database. References are stable because
// the database is append-only; original clauses come first, learned clauses
// follow in learning order and are never removed.
class ClauseDb {
 public:
  int add_original(Clause c) {
    assert(original_count_ == static_cast<int>(clauses_.size()));
    clauses_.push_back(std::move(c));
    return original_count_++;
  }

  int add_learned(Clause c) {
    clauses_.push_back(std::move(c));
    return static_cast<int>(clauses_.size()) - 1;
  }

  const Clause& operator[](int ref) const {
    return clauses_[static_cast<std::size_t>(ref)];
  }

  bool is_learned(int ref) const { return ref >= original_count_; }

  int size() const { return static_cast<int>(clauses_.size()); }
  int original_count() const { return original_count_; }
  int learned_count() const { return size() - original_count_; }

  std::span<const Clause> learned_clauses() const {
    return {clauses_.data() + original_count_,
            static_cast<std::size_t>(learned_count())};
  }

 private:
  std::vector<Clause> clauses_;
  int original_count_ = 0;
};

}  // namespace opsat
