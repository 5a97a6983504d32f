#pragma once

#include <memory>
#include <vector>

#include <json.hpp>

#include "stone/clopen.hpp"

namespace stone {

namespace detail {
class HomeoNode;
}

/// A homeomorphism between two clopen sets, expanded lazily. Domains are
/// infinite in general, so the map is a tree of strategies that is refined
/// only as far as the queried points require. Handles are cheap to copy and
/// share their memo tables; evaluation is internally synchronized.
class Homeomorphism {
 public:
  static Homeomorphism identity(const ClopenSet& a);

  const ClopenSet& domain() const;
  const ClopenSet& codomain() const;

  /// Throws PointNotInDomain.
  Ordinal eval(const Ordinal& x) const;
  Ordinal eval_inverse(const Ordinal& y) const;

  /// The image of a clopen subset of the domain. Throws PointNotInDomain
  /// when s is not contained in the domain.
  ClopenSet image(const ClopenSet& s) const;

  Homeomorphism inverse() const;

  /// The part of the matching tree expanded so far.
  nlohmann::json trace() const;

  explicit Homeomorphism(std::shared_ptr<detail::HomeoNode> node, bool inverted = false)
      : node_(std::move(node)), inverted_(inverted) {}

 private:
  std::shared_ptr<detail::HomeoNode> node_;
  bool inverted_ = false;
};

struct BuildOptions {
  /// Map two single intervals of the same length by translation instead of
  /// running the general construction.
  bool translate = true;
};

bool are_homeomorphic(const ClopenSet& a, const ClopenSet& b);

/// Throws EmptySets when both are empty, NotHomeomorphic when the
/// characteristic pairs differ.
Homeomorphism build_homeo(const ClopenSet& a, const ClopenSet& b, const BuildOptions& opt = {});

/// Glues maps with pairwise disjoint domains and pairwise disjoint codomains.
Homeomorphism glue(const std::vector<Homeomorphism>& pieces);

/// A map of the common ambient carrying as[i] onto bs[i]. Throws
/// NotAPartition or PieceMismatch.
Homeomorphism partition_map(const std::vector<ClopenSet>& as, const std::vector<ClopenSet>& bs,
                            const BuildOptions& opt = {});

struct GroupClass {
  bool coarsely_bounded = false;
  bool boundedly_generated = false;
  bool locally_bounded = true;

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

/// Coarse-geometric type of the homeomorphism group of X_{alpha,n}.
GroupClass classify_group(const Ordinal& alpha, std::uint64_t n);

}  // namespace stone
