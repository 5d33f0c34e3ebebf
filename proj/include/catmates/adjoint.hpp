#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "catmates/functor.hpp"
#include "catmates/report.hpp"

namespace catmates {

using Permutation = std::vector<std::uint32_t>;

// F: A -> B•, G: B -> A• with phi[a * |B| + b] : B(Fa, b) -> A(Gb, a), stored
// as a map between positions in the two hom lists.
struct MutualLeftAdjunction {
  Functor left;
  Functor right;
  std::vector<Permutation> phi;

  const CategoryPtr& a_cat() const { return left.source; }
  const CategoryPtr& b_cat() const { return right.source; }
  const Permutation& bijection(ObjId a, ObjId b) const {
    return phi[std::size_t{a} * right.source->object_count() + b];
  }
  bool operator==(const MutualLeftAdjunction&) const = default;
};

// F: A• -> B, G: B• -> A with phi[a * |B| + b] : B(b, Fa) -> A(a, Gb).
struct MutualRightAdjunction {
  Functor left;
  Functor right;
  std::vector<Permutation> phi;

  CategoryPtr a_cat() const { return opposite(left.source); }
  CategoryPtr b_cat() const { return opposite(right.source); }
  bool operator==(const MutualRightAdjunction&) const = default;
};

// left ⊣ right with unit 1 => right∘left and counit left∘right => 1.
struct OrdinaryAdjunction {
  Functor left;
  Functor right;
  NatTransformation eta;
  NatTransformation epsilon;
  bool operator==(const OrdinaryAdjunction&) const = default;
};

// eta[a] : GFa -> a in A, epsilon[b] : FGb -> b in B.
struct UnitCounit {
  std::vector<MorId> eta;
  std::vector<MorId> epsilon;
  bool operator==(const UnitCounit&) const = default;
};

Report verify_mutual_left(const MutualLeftAdjunction& c);
Report verify_mutual_right(const MutualRightAdjunction& c);
Report verify_ordinary(const OrdinaryAdjunction& a);

// A mutual right adjunction on (A, B) is a mutual left adjunction on (A•, B•)
// with the same tables; these are that relabeling.
MutualLeftAdjunction to_mutual_left(const MutualRightAdjunction& c);
MutualRightAdjunction to_mutual_right(const MutualLeftAdjunction& c);

// The same adjunction read with the roles of (A, F) and (B, G) exchanged.
MutualLeftAdjunction transpose(const MutualLeftAdjunction& c);

// Throws InvalidAdjunction unless verify_mutual_left passes (skipped when
// check is false, for inner loops over data already known to be valid).
UnitCounit unit_counit(const MutualLeftAdjunction& c, bool check = true);
OrdinaryAdjunction to_ordinary(const MutualLeftAdjunction& c);
// Throws TriangleFailure.
MutualLeftAdjunction from_unit_counit(const OrdinaryAdjunction& a);

// Mate of alpha: L'S => TL across adj = (L ⊣ R) and adj2 = (L' ⊣ R'), giving
// SR => R'T. Throws BoundaryMismatch.
NatTransformation mate1(const NatTransformation& alpha, const Functor& S, const Functor& T,
                        const OrdinaryAdjunction& adj, const OrdinaryAdjunction& adj2);
// The inverse direction: beta: SR => R'T to L'S => TL.
NatTransformation mate1_inverse(const NatTransformation& beta, const Functor& S, const Functor& T,
                                const OrdinaryAdjunction& adj, const OrdinaryAdjunction& adj2);

// Component-level mate: (R, eps) from the first adjunction, (R', eta') from the
// second, sides S: X -> X', T: Y -> Y', alpha[x]: L'Sx -> TLx in Y'. Returns
// the components SRy -> R'Ty, composed in Xp (= X').
std::vector<MorId> mate_components(const FinCategory& Xp, const Functor& R, const Functor& Rp,
                                   const Functor& S, const Functor& T,
                                   std::span<const MorId> eps, std::span<const MorId> eta_p,
                                   std::span<const MorId> alpha);

// Mutual form. A square from m to m2 with sides SA: A -> A', SB: B -> B' has
// components alpha[a] : F'(SA a) -> SB(F a) in B'. Its mate has components
// beta[b] : G'(SB b) -> SA(G b) in A'. Applying mate_mutual to
// (transpose(m), transpose(m2), SB, SA, beta) returns alpha.
std::vector<MorId> mate_mutual(const MutualLeftAdjunction& m, const MutualLeftAdjunction& m2,
                               const Functor& SA, const Functor& SB, std::span<const MorId> alpha);
// Same, with the unit/counit data supplied by the caller.
std::vector<MorId> mate_mutual(const MutualLeftAdjunction& m, const UnitCounit& uc,
                               const MutualLeftAdjunction& m2, const UnitCounit& uc2,
                               const Functor& SA, const Functor& SB, std::span<const MorId> alpha);

// Composite of M1 = (F1: X -> Y•, G1) and M2 = (F2: Y• -> Z•, G2):
// F = F2∘F1, G = G1∘G2, phi_{x,z} = phi1_{x, G2 z} ∘ phi2_{F1 x, z}.
MutualLeftAdjunction compose_mutual(const MutualLeftAdjunction& m1, const MutualLeftAdjunction& m2);

struct AdjointSearch {
  std::optional<MutualLeftAdjunction> adjunction;
  std::optional<ObjId> witness;  // b in B with B(F-, b) not representable
};

// For F: A -> B•, find G and phi. Per b, candidates Gb = x are tried in stored
// order and the representing element e in B(Fx, b) in hom order.
AdjointSearch adjoint_search(const Functor& F);

}  // namespace catmates
