#include "contralg/adjunction.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace contralg {

StoneHom alpha(const BoolHom& f, const ContractAlgebraPtr& CB, const AugStonePtr& S) {
  if (f.src != CB->base())
    throw Error(ErrorKind::Mismatch, "hom source is not the base of " + CB->aug_stone()->name());
  if (f.dst != S->skeleton().alg)
    throw Error(ErrorKind::TargetMismatch,
                "hom target is not the skeleton of " + S->name());
  const auto& emb = S->skeleton().to_ambient;
  StoneHom h{CB->aug_stone(), S, {}};
  h.map.resize(CB->size());
  for (int i = 0; i < CB->size(); ++i) {
    const ContractPair c = CB->pair_of(i);
    const int fa = emb[f.map[c.a]];
    const int fg = emb[f.map[c.g]];
    h.map[i] = S->meet(fg, S->implies(fa, S->e()));
  }
  return h;
}

BoolHom beta(const StoneHom& fstar, const ContractAlgebraPtr& CB) {
  if (fstar.src != CB->aug_stone())
    throw Error(ErrorKind::Mismatch, "hom source is not the given contract algebra");
  const Skeleton& sk = fstar.dst->skeleton();
  BoolHom h{CB->base(), sk.alg, {}};
  h.map.resize(CB->base()->size());
  for (int b = 0; b < CB->base()->size(); ++b) {
    const int img = fstar.map[CB->delta(static_cast<Mask>(b))];
    const int m = sk.from_ambient[img];
    if (m < 0)
      throw Error(ErrorKind::NotClosedImage,
                  "image of a Delta element is not closed in " + fstar.dst->name());
    h.map[b] = static_cast<Mask>(m);
  }
  return h;
}

BoolHom unit(const ContractAlgebraPtr& CB) { return beta(identity_stone_hom(CB->aug_stone()), CB); }

StoneHom counit(const AugStonePtr& S, const ContractAlgebraPtr& C_skel) {
  if (C_skel->base() != S->skeleton().alg)
    throw Error(ErrorKind::TargetMismatch,
                "contract algebra is not built over the skeleton of " + S->name());
  return alpha(identity_bool_hom(S->skeleton().alg), C_skel, S);
}

namespace {

struct BruteSpec {
  const FiniteLattice* src;
  const FiniteLattice* dst;
  bool check_impl = false;
  bool check_compl = false;
  int src_e = -1;
  int dst_e = -1;
};

bool preserves(const BruteSpec& spec, const std::vector<int>& map) {
  const auto& A = *spec.src;
  const auto& B = *spec.dst;
  if (map[A.bot()] != B.bot()) return false;
  if (map[A.top()] != B.top()) return false;
  if (spec.src_e >= 0 && map[spec.src_e] != spec.dst_e) return false;
  const int n = A.size();
  for (int x = 0; x < n; ++x) {
    if (spec.check_compl && map[A.pseudo_complement(x)] != B.pseudo_complement(map[x]))
      return false;
    for (int y = 0; y < n; ++y) {
      if (map[A.meet(x, y)] != B.meet(map[x], map[y])) return false;
      if (map[A.join(x, y)] != B.join(map[x], map[y])) return false;
      if (spec.check_impl && map[A.implies(x, y)] != B.implies(map[x], map[y])) return false;
    }
  }
  return true;
}

// All functions passing the preservation predicate, in odometer order with
// map[0] changing fastest.
std::vector<std::vector<int>> brute_force_maps(const BruteSpec& spec, long long budget,
                                               int workers) {
  const int n = spec.src->size();
  const int m = spec.dst->size();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / m + 1) {
      total = budget + 1;
      break;
    }
    total *= m;
  }
  if (total > budget)
    throw Error(ErrorKind::SearchTooLarge,
                std::to_string(m) + "^" + std::to_string(n) + " functions exceed the budget of " +
                    std::to_string(budget) + "; shrink the inputs or raise --budget");

  auto scan = [&](long long lo, long long hi, std::vector<std::vector<int>>& out) {
    std::vector<int> map(n);
    long long rest = lo;
    for (int i = 0; i < n; ++i) {
      map[i] = static_cast<int>(rest % m);
      rest /= m;
    }
    for (long long idx = lo; idx < hi; ++idx) {
      if (preserves(spec, map)) out.push_back(map);
      int i = 0;
      while (i < n && ++map[i] == m) map[i++] = 0;
    }
  };

  if (workers <= 1 || total < 4096) {
    std::vector<std::vector<int>> out;
    scan(0, total, out);
    return out;
  }

  const int w = std::min<long long>(workers, 64);
  std::vector<std::vector<std::vector<int>>> parts(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (int t = 0; t < w; ++t) {
    const long long lo = total * t / w;
    const long long hi = total * (t + 1) / w;
    threads.emplace_back([&, t, lo, hi] { scan(lo, hi, parts[t]); });
  }
  for (auto& th : threads) th.join();
  std::vector<std::vector<int>> out;
  for (auto& p : parts)
    for (auto& map : p) out.push_back(std::move(map));
  return out;
}

}  // namespace

std::vector<BoolHom> brute_force_bool_homs(const BoolAlgPtr& src, const BoolAlgPtr& dst,
                                           long long budget, int workers) {
  BruteSpec spec{src->lattice().get(), dst->lattice().get(), false, true, -1, -1};
  std::vector<BoolHom> out;
  for (const auto& map : brute_force_maps(spec, budget, workers)) {
    BoolHom h{src, dst, {}};
    h.map.assign(map.begin(), map.end());
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<StoneHom> brute_force_stone_homs(const AugStonePtr& src, const AugStonePtr& dst,
                                             long long budget, int workers) {
  BruteSpec spec{src->lattice().get(), dst->lattice().get(), true, false, src->e(), dst->e()};
  std::vector<StoneHom> out;
  for (auto& map : brute_force_maps(spec, budget, workers))
    out.push_back(StoneHom{src, dst, std::move(map)});
  return out;
}

std::vector<StoneHom> enumerate_stone_homs(const AugStonePtr& src, const AugStonePtr& dst) {
  const auto& A = *src->lattice();
  const auto& B = *dst->lattice();
  const int n = A.size();
  const int m = B.size();

  std::vector<int> map(n, -1);
  std::vector<int> order;
  auto preassign = [&](int x, int v) {
    if (map[x] >= 0) return map[x] == v;
    map[x] = v;
    return true;
  };
  std::vector<StoneHom> out;
  if (!preassign(A.bot(), B.bot()) || !preassign(A.top(), B.top()) ||
      !preassign(src->e(), dst->e()))
    return out;
  for (int x = 0; x < n; ++x)
    if (map[x] < 0) order.push_back(x);

  // Rejects as soon as any fully-assigned operation instance disagrees.
  auto consistent = [&]() {
    for (int x = 0; x < n; ++x) {
      if (map[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (map[y] < 0) continue;
        if (A.leq(x, y) && !B.leq(map[x], map[y])) return false;
        const int mt = A.meet(x, y), jn = A.join(x, y), im = A.implies(x, y);
        if (map[mt] >= 0 && map[mt] != B.meet(map[x], map[y])) return false;
        if (map[jn] >= 0 && map[jn] != B.join(map[x], map[y])) return false;
        if (map[im] >= 0 && map[im] != B.implies(map[x], map[y])) return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      out.push_back(StoneHom{src, dst, map});
      return;
    }
    const int x = order[pos];
    for (int v = 0; v < m; ++v) {
      map[x] = v;
      if (consistent()) self(self, pos + 1);
    }
    map[x] = -1;
  };
  if (consistent()) dfs(dfs, 0);
  return out;
}

HomSetWitness check_bijection(const BoolAlgPtr& B, const AugStonePtr& S, long long budget,
                              int workers, ContractAlgebraPtr CB) {
  if (!CB) CB = contract_algebra(B);
  if (CB->base() != B) throw Error(ErrorKind::Mismatch, "contract algebra not built over B");

  HomSetWitness w;
  w.B = B;
  w.S = S;
  w.bool_homs = enumerate_bool_homs(B, S->skeleton().alg);
  for (const auto& f : w.bool_homs) w.stone_homs.push_back(alpha(f, CB, S));
  w.pairing.resize(w.bool_homs.size());
  for (std::size_t i = 0; i < w.pairing.size(); ++i) w.pairing[i] = static_cast<int>(i);

  w.beta_alpha_identity = true;
  for (std::size_t i = 0; i < w.bool_homs.size(); ++i)
    if (!same_map(beta(w.stone_homs[i], CB), w.bool_homs[i])) w.beta_alpha_identity = false;

  auto alpha_beta_on = [&](const std::vector<StoneHom>& homs) {
    for (const auto& h : homs)
      if (!same_map(alpha(beta(h, CB), CB, S), h)) return false;
    return true;
  };

  try {
    auto brute = brute_force_stone_homs(CB->aug_stone(), S, budget, workers);
    w.brute_forced_count = static_cast<long long>(brute.size());
    w.alpha_beta_identity = alpha_beta_on(brute);
    w.counts_equal = brute.size() == w.bool_homs.size();

    std::set<std::vector<int>> brute_maps, image_maps;
    for (const auto& h : brute) brute_maps.insert(h.map);
    for (const auto& h : w.stone_homs) image_maps.insert(h.map);
    w.image_matches_brute = brute_maps == image_maps;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchTooLarge) throw;
    w.alpha_beta_identity = alpha_beta_on(w.stone_homs);
    w.counts_equal = w.bool_homs.size() == w.stone_homs.size();
  }
  return w;
}

nlohmann::ordered_json HomSetWitness::to_json() const {
  nlohmann::ordered_json j;
  j["B"] = B->name();
  j["S"] = S->name();
  j["bool_hom_count"] = bool_homs.size();
  j["stone_hom_count"] = stone_homs.size();
  j["beta_alpha_identity"] = beta_alpha_identity;
  j["alpha_beta_identity"] = alpha_beta_identity;
  j["counts_equal"] = counts_equal;
  j["brute_forced_count"] =
      brute_forced_count ? nlohmann::ordered_json(*brute_forced_count) : nlohmann::ordered_json(nullptr);
  j["image_matches_brute"] = brute_forced_count ? nlohmann::ordered_json(image_matches_brute)
                                                : nlohmann::ordered_json(nullptr);
  j["status"] = passed() ? "PASS" : "FAIL";
  return j;
}

FullyFaithfulReport check_fully_faithful(const BoolAlgPtr& B, const BoolAlgPtr& B2,
                                         long long budget, int workers) {
  auto CB = contract_algebra(B);
  auto CB2 = contract_algebra(B2);

  FullyFaithfulReport rep;
  auto fs = enumerate_bool_homs(B, B2);
  rep.bool_hom_count = static_cast<long long>(fs.size());

  std::set<std::vector<int>> images;
  for (const auto& f : fs) images.insert(contract_on_hom(f, CB, CB2).map);
  rep.injective = images.size() == fs.size();

  std::set<std::vector<int>> alpha_set;
  for (const auto& g : enumerate_bool_homs(B, CB2->aug_stone()->skeleton().alg))
    alpha_set.insert(alpha(g, CB, CB2->aug_stone()).map);
  rep.stone_hom_count_alpha = static_cast<long long>(alpha_set.size());
  rep.surjective_alpha = alpha_set == images;

  try {
    auto brute = brute_force_stone_homs(CB->aug_stone(), CB2->aug_stone(), budget, workers);
    rep.stone_hom_count_brute = static_cast<long long>(brute.size());
    std::set<std::vector<int>> brute_set;
    for (const auto& h : brute) brute_set.insert(h.map);
    rep.surjective_brute = brute_set == images;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchTooLarge) throw;
  }
  return rep;
}

nlohmann::ordered_json FullyFaithfulReport::to_json() const {
  nlohmann::ordered_json j;
  j["bool_hom_count"] = bool_hom_count;
  j["stone_hom_count_alpha"] = stone_hom_count_alpha;
  j["stone_hom_count_brute"] = stone_hom_count_brute
                                   ? nlohmann::ordered_json(*stone_hom_count_brute)
                                   : nlohmann::ordered_json(nullptr);
  j["injective"] = injective;
  j["surjective_alpha"] = surjective_alpha;
  j["surjective_brute"] = surjective_brute;
  j["status"] = passed() ? "PASS" : "FAIL";
  return j;
}

NaturalityReport check_naturality(const BoolHom& rho, const StoneHom& sigma,
                                  ContractAlgebraPtr CB, ContractAlgebraPtr CBprime) {
  const BoolAlgPtr& B = rho.dst;
  const BoolAlgPtr& Bprime = rho.src;
  const AugStonePtr& S = sigma.src;
  const AugStonePtr& Sprime = sigma.dst;
  if (!CB) CB = contract_algebra(B);
  if (!CBprime) CBprime = contract_algebra(Bprime);
  if (CB->base() != B || CBprime->base() != Bprime)
    throw Error(ErrorKind::Mismatch, "contract algebras do not match rho");

  NaturalityReport rep;
  const BoolHom cl_sigma = cl_on_hom(sigma);
  const StoneHom C_rho = contract_on_hom(rho, CBprime, CB);

  auto record = [&](bool ok, const std::string& what) {
    ++rep.squares_checked;
    if (!ok) {
      ++rep.failures;
      if (rep.witnesses.size() < 8) rep.witnesses.push_back(what);
    }
  };

  for (const auto& f : enumerate_bool_homs(B, S->skeleton().alg)) {
    const StoneHom af = alpha(f, CB, S);

    const StoneHom lhs = alpha(compose(cl_sigma, compose(f, rho)), CBprime, Sprime);
    const StoneHom rhs = compose(sigma, compose(af, C_rho));
    record(lhs.map == rhs.map,
           "alpha square fails for some f: hom(" + B->name() + ", Cl(" + S->name() + "))");

    const BoolHom lhs2 = beta(compose(sigma, compose(af, C_rho)), CBprime);
    const BoolHom rhs2 = compose(cl_sigma, compose(beta(af, CB), rho));
    record(lhs2.map == rhs2.map,
           "beta square fails for some f*: hom(C(" + B->name() + "), " + S->name() + ")");
  }
  return rep;
}

nlohmann::ordered_json NaturalityReport::to_json() const {
  nlohmann::ordered_json j;
  j["squares_checked"] = squares_checked;
  j["failures"] = failures;
  j["witnesses"] = witnesses;
  j["status"] = passed() ? "PASS" : "FAIL";
  return j;
}

bool check_triangle_on_base(const BoolAlgPtr& B) {
  auto CB = contract_algebra(B);
  const BoolHom unit_B = unit(CB);
  auto CClCB = contract_algebra(CB->aug_stone()->skeleton().alg);
  const StoneHom C_unit = contract_on_hom(unit_B, CB, CClCB);
  const StoneHom eps = counit(CB->aug_stone(), CClCB);
  const StoneHom comp = compose(eps, C_unit);
  for (int i = 0; i < CB->size(); ++i)
    if (comp.map[i] != i) return false;
  return true;
}

bool check_triangle_on_stone(const AugStonePtr& S) {
  auto CClS = contract_algebra(S->skeleton().alg);
  const StoneHom eps = counit(S, CClS);
  const BoolHom unit_Cl = unit(CClS);
  const BoolHom comp = compose(cl_on_hom(eps), unit_Cl);
  for (std::size_t b = 0; b < comp.map.size(); ++b)
    if (comp.map[b] != b) return false;
  return true;
}

}  // namespace contralg
