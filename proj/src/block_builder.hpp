#ifndef SYMCOH_SRC_BLOCK_BUILDER_HPP
#define SYMCOH_SRC_BLOCK_BUILDER_HPP

#include "symcoh/cochain.hpp"

#include <string>
#include <vector>

namespace symcoh::detail {

// Accumulates k x k blocks of a sparse operator between cochain spaces.
class BlockBuilder {
 public:
  BlockBuilder(const CochainSpace& source, const CochainSpace& target) : source_(source), target_(target) {
    const std::uint64_t k = static_cast<std::uint64_t>(source.slots());
    Guards::check_count(target.num_tuples() * k * k, "operator " + std::to_string(source.degree()) + "->" + std::to_string(target.degree()));
    triplets_.reserve(target.num_tuples() * k);
    const GModule& m = source.module();
    for (int g = 0; g < m.group().order(); ++g) actions_.push_back(m.action(g).dense());
  }

  // Adds sign * (action of g, or identity when g < 0) from source tuple to target tuple.
  void add(std::uint64_t target_rank, std::uint64_t source_rank, int g, int sign) {
    const Index k = source_.slots();
    if (g < 0 || source_.module().is_trivial()) {
      for (Index s = 0; s < k; ++s) {
        triplets_.emplace_back(target_.position(target_rank, s), source_.position(source_rank, s), Integer(sign));
      }
      return;
    }
    const IntMatrix& a = actions_[static_cast<std::size_t>(g)];
    for (Index r = 0; r < k; ++r) {
      for (Index c = 0; c < k; ++c) {
        if (a(r, c).is_zero()) continue;
        triplets_.emplace_back(target_.position(target_rank, r), source_.position(source_rank, c), a(r, c) * Integer(sign));
      }
    }
  }

  AbHom build() {
    SparseIntMatrix m(target_.dimension(), source_.dimension());
    m.setFromTriplets(triplets_.begin(), triplets_.end());
    return AbHom(source_.space(), target_.space(), std::move(m));
  }

 private:
  const CochainSpace& source_;
  const CochainSpace& target_;
  std::vector<IntMatrix> actions_;
  std::vector<IntTriplet> triplets_;
};

}  // namespace symcoh::detail

#endif  // SYMCOH_SRC_BLOCK_BUILDER_HPP
