#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contralg/boolalg.hpp"
#include "contralg/lattice.hpp"

namespace contralg {

class AugStone;
using AugStonePtr = std::shared_ptr<const AugStone>;

// The Boolean algebra of closed elements together with the embedding into
// the ambient algebra (mask <-> ambient index).
struct Skeleton {
  BoolAlgPtr alg;
  std::vector<int> to_ambient;
  std::vector<int> from_ambient;  // -1 for non-closed ambient elements
};

// Results of running the defining law suites on a lattice.
struct Certification {
  LawReport distributive{"bounded-distributive"};
  LawReport heyting{"heyting"};
  LawReport stone{"stone"};
  LawReport augmented{"augmented"};
  std::optional<int> closure_element;

  bool ok() const {
    return distributive.passed() && heyting.passed() && stone.passed() && augmented.passed();
  }
  nlohmann::ordered_json to_json() const;
  std::string summary() const;
};

class CertificationError : public Error {
 public:
  explicit CertificationError(Certification cert)
      : Error(ErrorKind::CertificationFailed, cert.summary()), cert_(std::move(cert)) {}
  const Certification& certification() const { return cert_; }

 private:
  Certification cert_;
};

// A Stone algebra with its closure element, certified at construction.
// Immutable; the skeleton is computed once up front.
class AugStone {
 public:
  const LatticePtr& lattice() const { return lattice_; }
  int e() const { return e_; }
  const Skeleton& skeleton() const { return skeleton_; }
  const std::string& name() const { return name_; }

  int size() const { return lattice_->size(); }
  int bot() const { return lattice_->bot(); }
  int top() const { return lattice_->top(); }
  int meet(int x, int y) const { return lattice_->meet(x, y); }
  int join(int x, int y) const { return lattice_->join(x, y); }
  int implies(int x, int y) const { return lattice_->implies(x, y); }
  int closure(int x) const { return lattice_->closure(x); }
  const std::string& element_name(int x) const { return lattice_->element_name(x); }

  AugStone(LatticePtr lattice, int e, Skeleton skeleton, std::string name)
      : lattice_(std::move(lattice)), e_(e), skeleton_(std::move(skeleton)), name_(std::move(name)) {}

 private:
  LatticePtr lattice_;
  int e_;
  Skeleton skeleton_;
  std::string name_;
};

// The unique e with e -> x = cl(x) for all x. Tries the meet of all dense
// elements first and falls back to a full candidate scan; the scan is the
// source of truth.
int find_closure_element(const FiniteLattice& L);

// Augmentation suite as data: exists + unique. Returns the element when it
// is unique.
std::pair<LawReport, std::optional<int>> check_augmented(const FiniteLattice& L);

// Runs all defining suites.
Certification certify_lattice(const FiniteLattice& L);

// Certifies and wraps. A declared closure element is verified against the
// discovered one. Throws CertificationError when any suite fails.
AugStonePtr make_aug_stone(LatticePtr L, std::optional<int> declared_e = {},
                           std::string name = "");

// Closed elements as a Boolean algebra. For certified Stone algebras the
// closed elements form a sublattice; violations signal an upstream bug.
Skeleton compute_skeleton(const FiniteLattice& L);

// Elementary facts about the closure element, checked exhaustively:
//   (i)   cl(e) = 1
//   (ii)  no other element satisfies the augmentation identity
//   (iii) y -> e is dense for every y
//   (iv)  x -> y = !x \/ y whenever x is closed
LawReport check_aug_props(const AugStone& S);

struct StoneHom {
  AugStonePtr src;
  AugStonePtr dst;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

StoneHom identity_stone_hom(const AugStonePtr& S);
StoneHom compose(const StoneHom& g, const StoneHom& f);  // g after f
bool same_map(const StoneHom& a, const StoneHom& b);

// Exhaustive preservation report for meet, join, implication, 0, 1 and e.
LawReport check_stone_hom(const StoneHom& s);

// Restriction to closed elements. Closed elements map to closed elements
// because the hom preserves implication and 0.
BoolHom cl_on_hom(const StoneHom& s);

}  // namespace contralg
