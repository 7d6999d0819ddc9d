#include "contralg/contract.hpp"

namespace contralg {

namespace {

std::uint64_t pair_key(ContractPair c) {
  return (static_cast<std::uint64_t>(c.a) << 32) | c.g;
}

}  // namespace

ContractPair contract_meet(const BoolAlg& B, ContractPair x, ContractPair y) {
  return {B.join(x.a, y.a), B.meet(x.g, y.g)};
}

ContractPair contract_join(const BoolAlg& B, ContractPair x, ContractPair y) {
  return {B.meet(x.a, y.a), B.join(x.g, y.g)};
}

ContractPair contract_impl(const BoolAlg& B, ContractPair x, ContractPair y) {
  const Mask first = B.join(B.meet(y.a, B.complement(x.a)), B.meet(x.g, B.complement(y.g)));
  const Mask second = B.join(B.complement(x.g), y.g);
  return {first, second};
}

ContractPair contract_not(const BoolAlg& B, ContractPair x) {
  return contract_impl(B, x, ContractPair{B.ones(), 0});
}

ContractPair contract_cl(const BoolAlg& B, ContractPair x) {
  return contract_not(B, contract_not(B, x));
}

ContractAlgebra::ContractAlgebra(BoolAlgPtr base, std::vector<ContractPair> pairs,
                                 AugStonePtr view)
    : base_(std::move(base)), pairs_(std::move(pairs)), view_(std::move(view)) {
  index_.reserve(pairs_.size());
  for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) index_[pair_key(pairs_[i])] = i;
}

ContractPair ContractAlgebra::pair_of(int idx) const {
  if (idx < 0 || idx >= size())
    throw Error(ErrorKind::BadIndex, "contract index " + std::to_string(idx) + " out of range");
  return pairs_[idx];
}

bool ContractAlgebra::contains(ContractPair c) const {
  return index_.find(pair_key(c)) != index_.end();
}

int ContractAlgebra::index_of(ContractPair c) const {
  auto it = index_.find(pair_key(c));
  if (it == index_.end())
    throw Error(ErrorKind::NotAContract, "(" + base_->element_name(c.a) + ", " +
                                             base_->element_name(c.g) + ") with a \\/ g != 1");
  return it->second;
}

int ContractAlgebra::delta(Mask x) const {
  return index_of(ContractPair{base_->complement(x), x});
}

ContractAlgebraPtr contract_algebra(const BoolAlgPtr& B, int carrier_cap) {
  long long count = 1;
  for (int i = 0; i < B->atom_count(); ++i) count *= 3;
  if (count > carrier_cap)
    throw Error(ErrorKind::TooLarge, "contract algebra over " + B->name() + " has " +
                                         std::to_string(count) + " elements, cap is " +
                                         std::to_string(carrier_cap));

  std::vector<ContractPair> pairs;
  pairs.reserve(count);
  for (Mask a = 0; a < static_cast<Mask>(B->size()); ++a)
    for (Mask g = 0; g < static_cast<Mask>(B->size()); ++g)
      if (B->join(a, g) == B->ones()) pairs.push_back({a, g});

  const int n = static_cast<int>(pairs.size());
  FiniteLattice::Tables t;
  t.name = "C(" + B->name() + ")";
  t.names.reserve(n);
  for (const auto& c : pairs)
    t.names.push_back("(" + B->element_name(c.a) + "," + B->element_name(c.g) + ")");

  std::unordered_map<std::uint64_t, int> index;
  index.reserve(n);
  for (int i = 0; i < n; ++i) index[pair_key(pairs[i])] = i;
  auto idx = [&](ContractPair c) { return index.at(pair_key(c)); };

  t.leq.resize(static_cast<std::size_t>(n) * n);
  t.meet.resize(static_cast<std::size_t>(n) * n);
  t.join.resize(static_cast<std::size_t>(n) * n);
  t.impl.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t p = static_cast<std::size_t>(i) * n + j;
      const ContractPair x = pairs[i], y = pairs[j];
      t.leq[p] = B->leq(y.a, x.a) && B->leq(x.g, y.g);
      t.meet[p] = idx(contract_meet(*B, x, y));
      t.join[p] = idx(contract_join(*B, x, y));
      t.impl[p] = idx(contract_impl(*B, x, y));
    }
  t.bot = idx({B->ones(), 0});
  t.top = idx({0, B->ones()});
  const int e = idx({B->ones(), B->ones()});

  auto lattice = detail::lattice_from_tables(std::move(t));
  auto view = make_aug_stone(lattice, e);
  return std::make_shared<ContractAlgebra>(B, std::move(pairs), std::move(view));
}

StoneHom contract_on_hom(const BoolHom& f, const ContractAlgebraPtr& CB,
                         const ContractAlgebraPtr& CB2) {
  if (f.src != CB->base() || f.dst != CB2->base())
    throw Error(ErrorKind::Mismatch,
                "contract algebras are not built over the hom's source and target");
  StoneHom h{CB->aug_stone(), CB2->aug_stone(), {}};
  h.map.resize(CB->size());
  for (int i = 0; i < CB->size(); ++i) {
    const ContractPair c = CB->pair_of(i);
    h.map[i] = CB2->index_of(ContractPair{f.map[c.a], f.map[c.g]});
  }
  return h;
}

}  // namespace contralg
