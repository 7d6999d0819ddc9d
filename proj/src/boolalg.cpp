#include "contralg/boolalg.hpp"

#include <algorithm>
#include <set>

namespace contralg {

namespace {

std::vector<std::string> default_atom_names(int k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 0; i < k; ++i) {
    if (k <= 26) names.push_back(std::string(1, static_cast<char>('a' + i)));
    else names.push_back("a" + std::to_string(i));
  }
  return names;
}

}  // namespace

BoolAlg::BoolAlg(int k, std::vector<std::string> atom_names, std::string name)
    : k_(k), name_(std::move(name)), atom_names_(std::move(atom_names)) {
  if (k < 0) throw Error(ErrorKind::BadIndex, "negative atom count");
  if (k > kMaxAtoms)
    throw Error(ErrorKind::TooLarge, "2^" + std::to_string(k) + " elements exceeds the carrier cap");
  ones_ = k == 0 ? 0 : (k == 32 ? ~Mask{0} : ((Mask{1} << k) - 1));
  if (atom_names_.empty()) atom_names_ = default_atom_names(k);
  if (static_cast<int>(atom_names_.size()) != k)
    throw Error(ErrorKind::Mismatch, "expected " + std::to_string(k) + " atom names");
  if (name_.empty()) name_ = "powerset" + std::to_string(k);
}

std::string BoolAlg::element_name(Mask x) const {
  check(x);
  if (x == 0) return "0";
  if (x == ones_) return "1";
  std::string out;
  for (int i = 0; i < k_; ++i)
    if (x & (Mask{1} << i)) {
      if (!out.empty()) out += "|";
      out += atom_names_[i];
    }
  return out;
}

LatticePtr BoolAlg::lattice(int carrier_cap) const {
  const int n = size();
  if (n > carrier_cap)
    throw Error(ErrorKind::TooLarge, name_ + ": lattice view of " + std::to_string(n) +
                                         " elements exceeds cap " + std::to_string(carrier_cap));
  std::call_once(lattice_once_, [&] {
    FiniteLattice::Tables t;
    t.name = name_;
    t.names.reserve(n);
    for (int x = 0; x < n; ++x) t.names.push_back(element_name(static_cast<Mask>(x)));
    t.leq.resize(static_cast<std::size_t>(n) * n);
    t.meet.resize(static_cast<std::size_t>(n) * n);
    t.join.resize(static_cast<std::size_t>(n) * n);
    t.impl.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const std::size_t p = static_cast<std::size_t>(x) * n + y;
        t.leq[p] = (x & ~y) == 0;
        t.meet[p] = x & y;
        t.join[p] = x | y;
        t.impl[p] = static_cast<int>(implies(static_cast<Mask>(x), static_cast<Mask>(y)));
      }
    t.bot = 0;
    t.top = static_cast<int>(ones_);
    lattice_ = detail::lattice_from_tables(std::move(t));
  });
  return lattice_;
}

BoolAlgPtr powerset_algebra(int k, std::vector<std::string> atom_names, std::string name) {
  return std::make_shared<BoolAlg>(k, std::move(atom_names), std::move(name));
}

BoolAlgPtr free_boolean_algebra(const std::vector<std::string>& vars, std::string name) {
  const int m = static_cast<int>(vars.size());
  if (m > 4)
    throw Error(ErrorKind::TooLarge, "free Boolean algebra capped at 4 variables, got " +
                                         std::to_string(m));
  std::set<std::string> seen(vars.begin(), vars.end());
  if (static_cast<int>(seen.size()) != m)
    throw Error(ErrorKind::Mismatch, "duplicate variable names");

  const int k = 1 << m;  // minterms
  std::vector<std::string> minterms;
  minterms.reserve(k);
  for (int j = 0; j < k; ++j) {
    std::string s;
    for (int i = 0; i < m; ++i) {
      if (!s.empty()) s += "&";
      if (!((j >> i) & 1)) s += "!";
      s += vars[i];
    }
    if (s.empty()) s = "*";  // the single minterm of the empty context
    minterms.push_back(s);
  }
  if (name.empty()) {
    name = "free(";
    for (int i = 0; i < m; ++i) name += (i ? "," : "") + vars[i];
    name += ")";
  }
  return powerset_algebra(k, std::move(minterms), std::move(name));
}

Mask free_variable_mask(const BoolAlg& free_alg, int var_index, int var_count) {
  if (free_alg.atom_count() != (1 << var_count))
    throw Error(ErrorKind::Mismatch, "algebra is not free on " + std::to_string(var_count) +
                                         " variables");
  Mask mask = 0;
  for (int j = 0; j < free_alg.atom_count(); ++j)
    if ((j >> var_index) & 1) mask |= Mask{1} << j;
  return mask;
}

BooleanView as_boolean(const LatticePtr& L) {
  const int n = L->size();
  for (int x = 0; x < n; ++x) {
    const int nx = L->pseudo_complement(x);
    if (L->join(x, nx) != L->top())
      throw Error(ErrorKind::NotComplemented,
                  L->name() + ": element " + L->element_name(x) + " has no complement (" +
                      L->element_name(x) + " \\/ !" + L->element_name(x) + " = " +
                      L->element_name(L->join(x, nx)) + " != 1)");
  }

  std::vector<int> atoms;
  for (int x = 0; x < n; ++x) {
    if (x == L->bot()) continue;
    bool atom = true;
    for (int z = 0; z < n; ++z)
      if (z != x && z != L->bot() && L->leq(z, x)) { atom = false; break; }
    if (atom) atoms.push_back(x);
  }
  const int k = static_cast<int>(atoms.size());
  if (k > BoolAlg::kMaxAtoms || (1LL << k) != n)
    throw Error(ErrorKind::NotAtomistic, L->name() + ": " + std::to_string(n) +
                                             " elements but " + std::to_string(k) + " atoms");

  std::vector<std::string> atom_names;
  for (int a : atoms) atom_names.push_back(L->element_name(a));
  auto alg = powerset_algebra(k, std::move(atom_names), L->name());

  BooleanView view;
  view.alg = alg;
  view.mask_of.resize(n);
  view.elem_of.assign(1 << k, -1);
  for (int x = 0; x < n; ++x) {
    Mask m = 0;
    for (int i = 0; i < k; ++i)
      if (L->leq(atoms[i], x)) m |= Mask{1} << i;
    view.mask_of[x] = m;
    if (view.elem_of[m] != -1)
      throw Error(ErrorKind::NotAtomistic, L->name() + ": elements " +
                                               L->element_name(view.elem_of[m]) + " and " +
                                               L->element_name(x) + " sit under the same atoms");
    view.elem_of[m] = x;
  }
  return view;
}

BoolHom identity_bool_hom(const BoolAlgPtr& B) {
  BoolHom h{B, B, {}};
  h.map.resize(B->size());
  for (int x = 0; x < B->size(); ++x) h.map[x] = static_cast<Mask>(x);
  return h;
}

BoolHom compose(const BoolHom& g, const BoolHom& f) {
  if (g.src != f.dst)
    throw Error(ErrorKind::Mismatch, "cannot compose: codomain of " + f.src->name() + " -> " +
                                         f.dst->name() + " is not the domain of " +
                                         g.src->name() + " -> " + g.dst->name());
  BoolHom h{f.src, g.dst, {}};
  h.map.resize(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) h.map[x] = g.map[f.map[x]];
  return h;
}

bool same_map(const BoolHom& a, const BoolHom& b) {
  return a.src == b.src && a.dst == b.dst && a.map == b.map;
}

std::vector<BoolHom> enumerate_bool_homs(const BoolAlgPtr& B, const BoolAlgPtr& B2) {
  const int k1 = B->atom_count(), k2 = B2->atom_count();
  std::vector<BoolHom> out;

  if (k1 == 0) {
    // Degenerate source (0 = 1): a homomorphism exists only into the
    // degenerate target.
    if (k2 == 0) out.push_back(BoolHom{B, B2, {0}});
    return out;
  }

  // Assign each atom of B2 to one atom of B; block i is the union of target
  // atoms assigned to source atom i. Blocks are disjoint and cover 1 by
  // construction, and may be empty.
  std::vector<int> phi(k2, 0);
  while (true) {
    std::vector<Mask> block(k1, 0);
    for (int y = 0; y < k2; ++y) block[phi[y]] |= Mask{1} << y;

    BoolHom h{B, B2, {}};
    h.map.resize(B->size());
    h.map[0] = 0;
    for (int x = 1; x < B->size(); ++x) {
      const int low = x & -x;
      int bit = 0;
      while (!((low >> bit) & 1)) ++bit;
      h.map[x] = h.map[x & (x - 1)] | block[bit];
    }
    out.push_back(std::move(h));

    int i = 0;
    while (i < k2 && ++phi[i] == k1) phi[i++] = 0;
    if (i == k2) break;
  }
  return out;
}

LawReport check_bool_hom(const BoolHom& h) {
  LawReport rep("bool-hom");
  const auto& B = *h.src;
  const auto& B2 = *h.dst;
  if (static_cast<int>(h.map.size()) != B.size())
    throw Error(ErrorKind::Mismatch, "hom map has " + std::to_string(h.map.size()) +
                                         " entries for a " + std::to_string(B.size()) +
                                         "-element source");
  auto nm = [&](Mask x) { return B.element_name(x); };
  auto nm2 = [&](Mask x) { return B2.element_name(x); };

  rep.mark_law("preserves-0");
  rep.count_check();
  if (h.map[0] != 0) rep.add("preserves-0", {0}, "0 maps to " + nm2(h.map[0]));
  rep.mark_law("preserves-1");
  rep.count_check();
  if (h.map[B.ones()] != B2.ones())
    rep.add("preserves-1", {static_cast<int>(B.ones())}, "1 maps to " + nm2(h.map[B.ones()]));

  rep.mark_law("preserves-complement");
  for (Mask x = 0; x < static_cast<Mask>(B.size()); ++x) {
    rep.count_check();
    if (h.map[B.complement(x)] != B2.complement(h.map[x]))
      rep.add("preserves-complement", {static_cast<int>(x)},
              "!(" + nm(x) + ") maps to " + nm2(h.map[B.complement(x)]) + " but !(h " + nm(x) +
                  ") = " + nm2(B2.complement(h.map[x])));
  }

  rep.mark_law("preserves-meet");
  rep.mark_law("preserves-join");
  for (Mask x = 0; x < static_cast<Mask>(B.size()); ++x)
    for (Mask y = 0; y < static_cast<Mask>(B.size()); ++y) {
      rep.count_check();
      if (h.map[B.meet(x, y)] != B2.meet(h.map[x], h.map[y]))
        rep.add("preserves-meet", {static_cast<int>(x), static_cast<int>(y)},
                nm(x) + " /\\ " + nm(y) + " is not preserved");
      if (h.map[B.join(x, y)] != B2.join(h.map[x], h.map[y]))
        rep.add("preserves-join", {static_cast<int>(x), static_cast<int>(y)},
                nm(x) + " \\/ " + nm(y) + " is not preserved");
    }
  return rep;
}

}  // namespace contralg
