#include "contralg/lattice.hpp"

#include <atomic>

namespace contralg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::NotHeyting: return "NotHeyting";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotComplemented: return "NotComplemented";
    case ErrorKind::NotAtomistic: return "NotAtomistic";
    case ErrorKind::NotAugmented: return "NotAugmented";
    case ErrorKind::MultipleClosureElements: return "MultipleClosureElements";
    case ErrorKind::SkeletonNotSublattice: return "SkeletonNotSublattice";
    case ErrorKind::SkeletonNotBoolean: return "SkeletonNotBoolean";
    case ErrorKind::NotClosedImage: return "NotClosedImage";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownToken: return "UnknownToken";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotAContract: return "NotAContract";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

namespace {

std::uint64_t next_lattice_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

FiniteLattice::FiniteLattice(Tables t)
    : n_(static_cast<int>(t.names.size())),
      id_(next_lattice_id()),
      name_(std::move(t.name)),
      names_(std::move(t.names)),
      leq_(std::move(t.leq)),
      meet_(std::move(t.meet)),
      join_(std::move(t.join)),
      bot_(t.bot),
      top_(t.top) {
  if (!t.impl.empty()) {
    impl_ = std::move(t.impl);
    impl_ok_ = true;
    impl_ready_ = true;
  }
}

int FiniteLattice::index_of(Element e) const {
  if (e.owner != id_)
    throw Error(ErrorKind::ForeignElement,
                "element belongs to a different lattice (owner " + std::to_string(e.owner) +
                    ", expected " + std::to_string(id_) + " for " + name_ + ")");
  return check_idx(e.idx);
}

void FiniteLattice::build_impl_table() const {
  std::vector<int> table(static_cast<std::size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      // Join of all candidates; it is the residual iff it is itself a candidate.
      int j = bot_;
      for (int a = 0; a < n_; ++a)
        if (leq_[static_cast<std::size_t>(meet_[static_cast<std::size_t>(a) * n_ + x]) * n_ + y])
          j = join_[static_cast<std::size_t>(j) * n_ + a];
      if (!leq_[static_cast<std::size_t>(meet_[static_cast<std::size_t>(j) * n_ + x]) * n_ + y]) {
        impl_ok_ = false;
        impl_error_ = "no residual for (" + names_[x] + ", " + names_[y] +
                      "): candidates have no greatest element";
        return;
      }
      table[static_cast<std::size_t>(x) * n_ + y] = j;
    }
  }
  impl_ = std::move(table);
  impl_ok_ = true;
}

int FiniteLattice::implies(int x, int y) const {
  check_idx(x);
  check_idx(y);
  if (!impl_ready_) {
    std::call_once(impl_once_, [this] {
      build_impl_table();
      impl_ready_ = true;
    });
  }
  if (!impl_ok_) throw Error(ErrorKind::NotHeyting, name_ + ": " + impl_error_);
  return impl_[static_cast<std::size_t>(x) * n_ + y];
}

bool FiniteLattice::heyting() const {
  try {
    implies(0, 0);
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<std::pair<int, int>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < n_ && direct; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
      if (direct) covers.emplace_back(x, y);
    }
  return covers;
}

std::vector<std::pair<int, int>> FiniteLattice::order_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y && leq(x, y)) pairs.emplace_back(x, y);
  return pairs;
}

namespace detail {

LatticePtr lattice_from_tables(FiniteLattice::Tables t) {
  return std::make_shared<FiniteLattice>(std::move(t));
}

}  // namespace detail

LatticePtr build_lattice(int n, const std::vector<std::pair<int, int>>& leq_pairs,
                         std::vector<std::string> names, std::string name, int carrier_cap) {
  if (n < 0) throw Error(ErrorKind::BadIndex, "negative carrier size");
  if (n == 0) throw Error(ErrorKind::NoBounds, "empty carrier has no top or bottom");
  if (n > carrier_cap)
    throw Error(ErrorKind::TooLarge, "carrier size " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(carrier_cap));
  if (name.empty()) name = "lattice" + std::to_string(n);
  if (names.empty()) {
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != n)
    throw Error(ErrorKind::Mismatch, "expected " + std::to_string(n) + " element names, got " +
                                         std::to_string(names.size()));

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
  for (auto [i, j] : leq_pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw Error(ErrorKind::BadIndex, "order pair (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ") out of range");
    leq[static_cast<std::size_t>(i) * n + j] = 1;
  }

  // Warshall transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!leq[static_cast<std::size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq[static_cast<std::size_t>(k) * n + j]) leq[static_cast<std::size_t>(i) * n + j] = 1;
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[static_cast<std::size_t>(i) * n + j] && leq[static_cast<std::size_t>(j) * n + i])
        throw Error(ErrorKind::NotAPartialOrder, "antisymmetry fails: " + names[i] + " <= " +
                                                     names[j] + " and " + names[j] + " <= " +
                                                     names[i]);

  auto at = [&](int i, int j) { return leq[static_cast<std::size_t>(i) * n + j] != 0; };

  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
  std::vector<int> bounds;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      bounds.clear();
      for (int z = 0; z < n; ++z)
        if (at(z, x) && at(z, y)) bounds.push_back(z);
      int glb = -1;
      for (int m : bounds) {
        bool greatest = true;
        for (int z : bounds)
          if (!at(z, m)) { greatest = false; break; }
        if (greatest) { glb = m; break; }
      }
      if (glb < 0)
        throw Error(ErrorKind::NotALattice,
                    "no greatest lower bound for (" + names[x] + ", " + names[y] + ")");
      meet[static_cast<std::size_t>(x) * n + y] = meet[static_cast<std::size_t>(y) * n + x] = glb;

      bounds.clear();
      for (int z = 0; z < n; ++z)
        if (at(x, z) && at(y, z)) bounds.push_back(z);
      int lub = -1;
      for (int m : bounds) {
        bool least = true;
        for (int z : bounds)
          if (!at(m, z)) { least = false; break; }
        if (least) { lub = m; break; }
      }
      if (lub < 0)
        throw Error(ErrorKind::NotALattice,
                    "no least upper bound for (" + names[x] + ", " + names[y] + ")");
      join[static_cast<std::size_t>(x) * n + y] = join[static_cast<std::size_t>(y) * n + x] = lub;
    }

  int bot = -1, top = -1;
  for (int z = 0; z < n; ++z) {
    bool is_bot = true, is_top = true;
    for (int x = 0; x < n; ++x) {
      if (!at(z, x)) is_bot = false;
      if (!at(x, z)) is_top = false;
    }
    if (is_bot) bot = z;
    if (is_top) top = z;
  }
  if (bot < 0 || top < 0) throw Error(ErrorKind::NoBounds, "no global bottom or top element");

  FiniteLattice::Tables t;
  t.name = std::move(name);
  t.names = std::move(names);
  t.leq = std::move(leq);
  t.meet = std::move(meet);
  t.join = std::move(join);
  t.bot = bot;
  t.top = top;
  return detail::lattice_from_tables(std::move(t));
}

LatticePtr make_chain(int n, std::string name) {
  if (n < 1) throw Error(ErrorKind::NoBounds, "chain needs at least one element");
  if (name.empty()) name = "chain" + std::to_string(n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) names[i] = "0";
    else if (i == n - 1) names[i] = "1";
    else names[i] = std::string(1, static_cast<char>('a' + i - 1));
  }
  if (n == 1) names[0] = "0";
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return build_lattice(n, pairs, std::move(names), std::move(name));
}

LatticePtr product_lattice(const LatticePtr& a, const LatticePtr& b, std::string name) {
  const int na = a->size(), nb = b->size();
  const long long n = static_cast<long long>(na) * nb;
  if (n > FiniteLattice::kDefaultCarrierCap)
    throw Error(ErrorKind::TooLarge, "product carrier " + std::to_string(n) + " exceeds cap");
  if (name.empty()) name = a->name() + "*" + b->name();

  auto idx = [&](int x, int y) { return x * nb + y; };
  FiniteLattice::Tables t;
  t.name = std::move(name);
  t.names.reserve(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      t.names.push_back("(" + a->element_name(x) + "," + b->element_name(y) + ")");

  t.leq.assign(static_cast<std::size_t>(n) * n, 0);
  t.meet.resize(static_cast<std::size_t>(n) * n);
  t.join.resize(static_cast<std::size_t>(n) * n);
  const bool heyting = a->heyting() && b->heyting();
  if (heyting) t.impl.resize(static_cast<std::size_t>(n) * n);

  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          const std::size_t p = static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2);
          t.leq[p] = a->leq(x1, x2) && b->leq(y1, y2);
          t.meet[p] = idx(a->meet(x1, x2), b->meet(y1, y2));
          t.join[p] = idx(a->join(x1, x2), b->join(y1, y2));
          if (heyting) t.impl[p] = idx(a->implies(x1, x2), b->implies(y1, y2));
        }
  t.bot = idx(a->bot(), b->bot());
  t.top = idx(a->top(), b->top());
  return detail::lattice_from_tables(std::move(t));
}

LawReport check_bounded_distributive(const FiniteLattice& L) {
  LawReport rep("bounded-distributive");
  const int n = L.size();
  auto nm = [&](int x) { return L.element_name(x); };

  rep.mark_law("reflexive");
  for (int x = 0; x < n; ++x) {
    rep.count_check();
    if (!L.leq(x, x)) rep.add("reflexive", {x}, nm(x) + " is not <= itself");
  }

  rep.mark_law("antisymmetric");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      rep.count_check();
      if (L.leq(x, y) && L.leq(y, x))
        rep.add("antisymmetric", {x, y}, nm(x) + " and " + nm(y) + " are mutually <=");
    }

  rep.mark_law("transitive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!L.leq(x, y)) { rep.count_checks(n); continue; }
      for (int z = 0; z < n; ++z) {
        rep.count_check();
        if (L.leq(y, z) && !L.leq(x, z))
          rep.add("transitive", {x, y, z},
                  nm(x) + " <= " + nm(y) + " <= " + nm(z) + " but not " + nm(x) + " <= " + nm(z));
      }
    }

  rep.mark_law("bounds");
  for (int x = 0; x < n; ++x) {
    rep.count_check();
    if (!L.leq(L.bot(), x) || !L.leq(x, L.top()))
      rep.add("bounds", {x}, nm(x) + " is not between bottom and top");
  }

  rep.mark_law("glb");
  rep.mark_law("lub");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int m = L.meet(x, y), j = L.join(x, y);
      rep.count_check();
      if (!L.leq(m, x) || !L.leq(m, y))
        rep.add("glb", {x, y}, "meet(" + nm(x) + ", " + nm(y) + ") = " + nm(m) + " is not a lower bound");
      if (!L.leq(x, j) || !L.leq(y, j))
        rep.add("lub", {x, y}, "join(" + nm(x) + ", " + nm(y) + ") = " + nm(j) + " is not an upper bound");
      for (int z = 0; z < n; ++z) {
        rep.count_check();
        if (L.leq(z, x) && L.leq(z, y) && !L.leq(z, m))
          rep.add("glb", {x, y, z}, nm(z) + " is a lower bound of (" + nm(x) + ", " + nm(y) +
                                        ") not below meet = " + nm(m));
        if (L.leq(x, z) && L.leq(y, z) && !L.leq(j, z))
          rep.add("lub", {x, y, z}, nm(z) + " is an upper bound of (" + nm(x) + ", " + nm(y) +
                                        ") not above join = " + nm(j));
      }
    }

  rep.mark_law("distributive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        rep.count_check();
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          rep.add("distributive", {x, y, z},
                  nm(x) + " /\\ (" + nm(y) + " \\/ " + nm(z) + ") = " +
                      nm(L.meet(x, L.join(y, z))) + " but (" + nm(x) + " /\\ " + nm(y) +
                      ") \\/ (" + nm(x) + " /\\ " + nm(z) + ") = " +
                      nm(L.join(L.meet(x, y), L.meet(x, z))));
      }
  return rep;
}

LawReport check_heyting(const FiniteLattice& L) {
  LawReport rep("heyting");
  rep.mark_law("residuation");
  const int n = L.size();
  try {
    L.implies(0, 0);
  } catch (const Error& e) {
    rep.add("residuation", {}, e.what());
    return rep;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int r = L.implies(x, y);
      for (int a = 0; a < n; ++a) {
        rep.count_check();
        const bool below = L.leq(L.meet(a, x), y);
        const bool under_r = L.leq(a, r);
        if (below != under_r)
          rep.add("residuation", {a, x, y},
                  L.element_name(a) + " /\\ " + L.element_name(x) +
                      (below ? " <= " : " !<= ") + L.element_name(y) + " but " +
                      L.element_name(a) + (under_r ? " <= " : " !<= ") + "(" +
                      L.element_name(x) + " -> " + L.element_name(y) + ") = " + L.element_name(r));
      }
    }
  return rep;
}

LawReport check_stone(const FiniteLattice& L) {
  LawReport rep("stone");
  rep.mark_law("stone-identity");
  try {
    L.implies(0, 0);
  } catch (const Error& e) {
    rep.add("stone-identity", {}, std::string("requires a Heyting algebra: ") + e.what());
    return rep;
  }
  for (int x = 0; x < L.size(); ++x) {
    rep.count_check();
    const int lhs = L.join(L.pseudo_complement(x), L.closure(x));
    if (lhs != L.top())
      rep.add("stone-identity", {x}, "!" + L.element_name(x) + " \\/ cl(" + L.element_name(x) +
                                         ") = " + L.element_name(lhs) + " != 1");
  }
  return rep;
}

}  // namespace contralg
