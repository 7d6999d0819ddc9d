#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contralg/error.hpp"
#include "contralg/law_report.hpp"

namespace contralg {

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

// Index into a specific lattice's carrier. The owner tag lets operations
// reject indices that belong to a different lattice.
struct Element {
  int idx = -1;
  std::uint64_t owner = 0;

  bool operator==(const Element&) const = default;
};

// Finite bounded lattice with explicit order and operation tables. Immutable
// after construction; every operation is a table lookup. The implication
// table is built on first use and validated by the heyting law suite.
class FiniteLattice {
 public:
  static constexpr int kDefaultCarrierCap = 2048;

  int size() const { return n_; }
  std::uint64_t id() const { return id_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(int x) const { return names_[check_idx(x)]; }

  int bot() const { return bot_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return leq_[check_idx(x) * n_ + check_idx(y)]; }
  int meet(int x, int y) const { return meet_[check_idx(x) * n_ + check_idx(y)]; }
  int join(int x, int y) const { return join_[check_idx(x) * n_ + check_idx(y)]; }

  // Residual of meet: the greatest a with a ∧ x ≤ y. Throws NotHeyting when
  // some pair has no greatest such element.
  int implies(int x, int y) const;
  int pseudo_complement(int x) const { return implies(x, bot_); }
  int closure(int x) const { return pseudo_complement(pseudo_complement(x)); }
  bool is_closed(int x) const { return closure(x) == x; }
  bool is_dense(int x) const { return closure(x) == top_; }

  // True when the implication table exists (i.e. the lattice is Heyting).
  bool heyting() const;

  Element element(int idx) const { return Element{check_idx(idx), id_}; }
  int index_of(Element e) const;

  Element meet(Element x, Element y) const { return element(meet(index_of(x), index_of(y))); }
  Element join(Element x, Element y) const { return element(join(index_of(x), index_of(y))); }
  Element implies(Element x, Element y) const { return element(implies(index_of(x), index_of(y))); }
  bool leq(Element x, Element y) const { return leq(index_of(x), index_of(y)); }

  // Covering pairs (x, y) with x < y and nothing strictly between; the edge
  // set of the Hasse diagram.
  std::vector<std::pair<int, int>> cover_pairs() const;

  // All (x, y) with x ≤ y and x ≠ y, ascending. This is the JSON "leq" field.
  std::vector<std::pair<int, int>> order_pairs() const;

  struct Tables {
    std::string name;
    std::vector<std::string> names;
    std::vector<std::uint8_t> leq;
    std::vector<int> meet;
    std::vector<int> join;
    std::vector<int> impl;  // may be empty: built lazily
    int bot = -1;
    int top = -1;
  };

  explicit FiniteLattice(Tables t);

 private:
  int check_idx(int x) const {
    if (x < 0 || x >= n_) throw Error(ErrorKind::BadIndex, "element index " + std::to_string(x) + " out of range for " + name_);
    return x;
  }
  void build_impl_table() const;

  int n_;
  std::uint64_t id_;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bot_;
  int top_;

  mutable std::once_flag impl_once_;
  mutable std::vector<int> impl_;
  mutable bool impl_ok_ = false;
  mutable bool impl_ready_ = false;
  mutable std::string impl_error_;
};

// Builds a lattice from the reflexive-transitive closure of the given
// relation on 0..n-1. Fails loudly instead of quotienting: antisymmetry
// violations raise NotAPartialOrder, missing glb/lub raise NotALattice.
LatticePtr build_lattice(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                         std::vector<std::string> names = {}, std::string name = "",
                         int carrier_cap = FiniteLattice::kDefaultCarrierCap);

// Total chain 0 < x1 < ... < 1 on n elements.
LatticePtr make_chain(int n, std::string name = "");

// Componentwise product; operations and implication act per coordinate.
LatticePtr product_lattice(const LatticePtr& a, const LatticePtr& b, std::string name = "");

namespace detail {
// Trusted-table constructor used by modules that compute tables in closed
// form (power sets, contract algebras, products). Certification suites check
// the tables afterwards; nothing here is assumed correct.
LatticePtr lattice_from_tables(FiniteLattice::Tables t);
}  // namespace detail

// Law suites. These never throw for law violations; a non-Heyting lattice
// produces a FAIL report rather than an error.
LawReport check_bounded_distributive(const FiniteLattice& L);
LawReport check_heyting(const FiniteLattice& L);
LawReport check_stone(const FiniteLattice& L);

}  // namespace contralg
