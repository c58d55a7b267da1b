#include <string>

#include "slater/errors.hpp"
#include "slater/tournament.hpp"

namespace slater {

MajorityResult aggregate_majority(const Profile& profile) {
  profile.validate();
  const std::size_t n = profile.candidates;
  PairMargins margins(n);
  for (const auto& voter : profile.voters) {
    const auto& seq = voter.sequence();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) margins.add(seq[i], seq[j], 1);
    }
  }
  auto t = Tournament::transitive(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const auto m = margins.margin(a, b);
      if (m == 0) {
        throw InvalidInput("pairwise tie between candidates " + std::to_string(a) + " and " +
                           std::to_string(b));
      }
      if (m < 0) t.orient(b, a);
    }
  }
  return {std::move(t), std::move(margins)};
}

}  // namespace slater
