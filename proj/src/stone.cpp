#include "contralg/stone.hpp"

#include <sstream>

namespace contralg {

nlohmann::ordered_json Certification::to_json() const {
  nlohmann::ordered_json j;
  j["status"] = ok() ? "PASS" : "FAIL";
  j["distributive"] = distributive.to_json();
  j["heyting"] = heyting.to_json();
  j["stone"] = stone.to_json();
  j["augmented"] = augmented.to_json();
  j["closure_element"] = closure_element ? nlohmann::ordered_json(*closure_element)
                                         : nlohmann::ordered_json(nullptr);
  return j;
}

std::string Certification::summary() const {
  std::ostringstream os;
  os << distributive.summary() << "\n" << heyting.summary() << "\n" << stone.summary() << "\n"
     << augmented.summary();
  if (closure_element) os << "\n  closure element: index " << *closure_element;
  return os.str();
}

int find_closure_element(const FiniteLattice& L) {
  const int n = L.size();
  auto passes = [&](int c) {
    for (int x = 0; x < n; ++x)
      if (L.implies(c, x) != L.closure(x)) return false;
    return true;
  };

  int cand = L.top();
  for (int x = 0; x < n; ++x)
    if (L.is_dense(x)) cand = L.meet(cand, x);
  if (passes(cand)) return cand;

  std::vector<int> found;
  for (int c = 0; c < n; ++c)
    if (passes(c)) found.push_back(c);
  if (found.empty())
    throw Error(ErrorKind::NotAugmented,
                L.name() + ": no element satisfies e -> x = cl(x) for all x");
  if (found.size() > 1)
    throw Error(ErrorKind::MultipleClosureElements,
                L.name() + ": elements " + L.element_name(found[0]) + " and " +
                    L.element_name(found[1]) + " both satisfy the augmentation identity");
  return found[0];
}

std::pair<LawReport, std::optional<int>> check_augmented(const FiniteLattice& L) {
  LawReport rep("augmented");
  rep.mark_law("closure-element-exists");
  rep.mark_law("closure-element-unique");
  const int n = L.size();

  try {
    L.implies(0, 0);
  } catch (const Error& e) {
    rep.add("closure-element-exists", {}, std::string("requires a Heyting algebra: ") + e.what());
    return {rep, std::nullopt};
  }

  std::vector<int> found;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      rep.count_check();
      if (L.implies(c, x) != L.closure(x)) { ok = false; break; }
    }
    if (ok) found.push_back(c);
  }
  if (found.empty()) {
    rep.add("closure-element-exists", {},
            "no element satisfies e -> x = cl(x) for all x");
    return {rep, std::nullopt};
  }
  if (found.size() > 1) {
    rep.add("closure-element-unique", found,
            L.element_name(found[0]) + " and " + L.element_name(found[1]) +
                " both satisfy the augmentation identity");
    return {rep, std::nullopt};
  }
  return {rep, found[0]};
}

Certification certify_lattice(const FiniteLattice& L) {
  Certification cert;
  cert.distributive = check_bounded_distributive(L);
  cert.heyting = check_heyting(L);
  cert.stone = check_stone(L);
  auto [aug, e] = check_augmented(L);
  cert.augmented = std::move(aug);
  cert.closure_element = e;
  return cert;
}

Skeleton compute_skeleton(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> closed;
  std::vector<int> local(n, -1);
  for (int x = 0; x < n; ++x)
    if (L.is_closed(x)) {
      local[x] = static_cast<int>(closed.size());
      closed.push_back(x);
    }
  const int m = static_cast<int>(closed.size());

  FiniteLattice::Tables t;
  t.name = "Cl(" + L.name() + ")";
  for (int x : closed) t.names.push_back(L.element_name(x));
  t.leq.resize(static_cast<std::size_t>(m) * m);
  t.meet.resize(static_cast<std::size_t>(m) * m);
  t.join.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const std::size_t p = static_cast<std::size_t>(i) * m + j;
      t.leq[p] = L.leq(closed[i], closed[j]);
      const int mt = L.meet(closed[i], closed[j]);
      const int jn = L.join(closed[i], closed[j]);
      if (local[mt] < 0 || local[jn] < 0)
        throw Error(ErrorKind::SkeletonNotSublattice,
                    L.name() + ": closed elements not closed under meet/join at (" +
                        L.element_name(closed[i]) + ", " + L.element_name(closed[j]) + ")");
      t.meet[p] = local[mt];
      t.join[p] = local[jn];
    }
  t.bot = local[L.bot()];
  t.top = local[L.top()];
  auto sub = detail::lattice_from_tables(std::move(t));

  BooleanView view;
  try {
    view = as_boolean(sub);
  } catch (const Error& e) {
    throw Error(ErrorKind::SkeletonNotBoolean, std::string(e.what()));
  }

  Skeleton sk;
  sk.alg = view.alg;
  sk.to_ambient.resize(view.alg->size());
  sk.from_ambient.assign(n, -1);
  for (int i = 0; i < m; ++i) {
    sk.to_ambient[view.mask_of[i]] = closed[i];
    sk.from_ambient[closed[i]] = static_cast<int>(view.mask_of[i]);
  }
  return sk;
}

AugStonePtr make_aug_stone(LatticePtr L, std::optional<int> declared_e, std::string name) {
  Certification cert = certify_lattice(*L);
  if (!cert.ok()) throw CertificationError(std::move(cert));
  const int e = *cert.closure_element;
  if (declared_e && *declared_e != e)
    throw Error(ErrorKind::NotAugmented,
                L->name() + ": declared closure element " + L->element_name(*declared_e) +
                    " fails the augmentation identity; the closure element is " +
                    L->element_name(e));
  Skeleton sk = compute_skeleton(*L);
  if (name.empty()) name = L->name();
  return std::make_shared<AugStone>(std::move(L), e, std::move(sk), std::move(name));
}

LawReport check_aug_props(const AugStone& S) {
  const auto& L = *S.lattice();
  const int n = L.size();
  const int e = S.e();
  LawReport rep("props-i-iv");
  auto nm = [&](int x) { return L.element_name(x); };

  rep.mark_law("i-closure-of-e-is-top");
  rep.count_check();
  if (L.closure(e) != L.top())
    rep.add("i-closure-of-e-is-top", {e}, "cl(e) = " + nm(L.closure(e)) + " != 1");

  rep.mark_law("ii-closure-element-unique");
  for (int c = 0; c < n; ++c) {
    if (c == e) continue;
    bool other = true;
    for (int x = 0; x < n; ++x) {
      rep.count_check();
      if (L.implies(c, x) != L.closure(x)) { other = false; break; }
    }
    if (other)
      rep.add("ii-closure-element-unique", {c, e},
              nm(c) + " also satisfies the augmentation identity");
  }

  rep.mark_law("iii-impl-into-e-dense");
  for (int y = 0; y < n; ++y) {
    rep.count_check();
    const int r = L.implies(y, e);
    if (!L.is_dense(r))
      rep.add("iii-impl-into-e-dense", {y},
              nm(y) + " -> e = " + nm(r) + " is not dense (cl = " + nm(L.closure(r)) + ")");
  }

  rep.mark_law("iv-closed-implication-boolean");
  for (int x = 0; x < n; ++x) {
    if (!L.is_closed(x)) continue;
    for (int y = 0; y < n; ++y) {
      rep.count_check();
      if (L.implies(x, y) != L.join(L.pseudo_complement(x), y))
        rep.add("iv-closed-implication-boolean", {x, y},
                nm(x) + " -> " + nm(y) + " = " + nm(L.implies(x, y)) + " but !x \\/ y = " +
                    nm(L.join(L.pseudo_complement(x), y)));
    }
  }
  return rep;
}

StoneHom identity_stone_hom(const AugStonePtr& S) {
  StoneHom h{S, S, {}};
  h.map.resize(S->size());
  for (int x = 0; x < S->size(); ++x) h.map[x] = x;
  return h;
}

StoneHom compose(const StoneHom& g, const StoneHom& f) {
  if (g.src != f.dst)
    throw Error(ErrorKind::Mismatch, "cannot compose: codomain of " + f.src->name() + " -> " +
                                         f.dst->name() + " is not the domain of " +
                                         g.src->name() + " -> " + g.dst->name());
  StoneHom h{f.src, g.dst, {}};
  h.map.resize(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) h.map[x] = g.map[f.map[x]];
  return h;
}

bool same_map(const StoneHom& a, const StoneHom& b) {
  return a.src == b.src && a.dst == b.dst && a.map == b.map;
}

LawReport check_stone_hom(const StoneHom& s) {
  LawReport rep("stone-hom");
  const auto& A = *s.src;
  const auto& B = *s.dst;
  if (static_cast<int>(s.map.size()) != A.size())
    throw Error(ErrorKind::Mismatch, "hom map has " + std::to_string(s.map.size()) +
                                         " entries for a " + std::to_string(A.size()) +
                                         "-element source");
  auto nm = [&](int x) { return A.element_name(x); };
  auto nm2 = [&](int x) { return B.element_name(x); };

  rep.mark_law("preserves-0");
  rep.count_check();
  if (s.map[A.bot()] != B.bot()) rep.add("preserves-0", {A.bot()}, "0 maps to " + nm2(s.map[A.bot()]));
  rep.mark_law("preserves-1");
  rep.count_check();
  if (s.map[A.top()] != B.top()) rep.add("preserves-1", {A.top()}, "1 maps to " + nm2(s.map[A.top()]));
  rep.mark_law("preserves-e");
  rep.count_check();
  if (s.map[A.e()] != B.e())
    rep.add("preserves-e", {A.e()}, "e = " + nm(A.e()) + " maps to " + nm2(s.map[A.e()]) +
                                        " instead of e = " + nm2(B.e()));

  rep.mark_law("preserves-meet");
  rep.mark_law("preserves-join");
  rep.mark_law("preserves-impl");
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y) {
      rep.count_check();
      if (s.map[A.meet(x, y)] != B.meet(s.map[x], s.map[y]))
        rep.add("preserves-meet", {x, y}, nm(x) + " /\\ " + nm(y) + " is not preserved");
      if (s.map[A.join(x, y)] != B.join(s.map[x], s.map[y]))
        rep.add("preserves-join", {x, y}, nm(x) + " \\/ " + nm(y) + " is not preserved");
      if (s.map[A.implies(x, y)] != B.implies(s.map[x], s.map[y]))
        rep.add("preserves-impl", {x, y},
                nm(x) + " -> " + nm(y) + " maps to " + nm2(s.map[A.implies(x, y)]) +
                    " but h(x) -> h(y) = " + nm2(B.implies(s.map[x], s.map[y])));
    }
  return rep;
}

BoolHom cl_on_hom(const StoneHom& s) {
  const Skeleton& sk1 = s.src->skeleton();
  const Skeleton& sk2 = s.dst->skeleton();
  BoolHom h{sk1.alg, sk2.alg, {}};
  h.map.resize(sk1.alg->size());
  for (int m = 0; m < sk1.alg->size(); ++m) {
    const int img = s.map[sk1.to_ambient[m]];
    const int m2 = sk2.from_ambient[img];
    if (m2 < 0)
      throw Error(ErrorKind::NotClosedImage,
                  "closed element " + s.src->element_name(sk1.to_ambient[m]) +
                      " maps to non-closed " + s.dst->element_name(img));
    h.map[m] = static_cast<Mask>(m2);
  }
  return h;
}

}  // namespace contralg
