#include "pqk/embeddings.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace pqk {

namespace {

// Block size a factor occupies under the canonical blockwise inclusion
// into a classical group of the given family.
std::optional<long long> block_cost(const SimpleType& f, Family ambient) {
  long long r = f.rank;
  bool into_sp = ambient == Family::C;
  bool into_su = ambient == Family::A;
  bool into_so = ambient == Family::B || ambient == Family::D;
  switch (f.family) {
    case Family::A: {  // SU(r+1)
      if (into_su || into_sp) return r + 1;
      if (into_so) return 2 * (r + 1);
      break;
    }
    case Family::B: {  // SO(2r+1)
      if (into_so || into_su || into_sp) return 2 * r + 1;
      break;
    }
    case Family::C: {  // Sp(r)
      if (into_sp) return r;
      if (into_su) return 2 * r;
      if (into_so) return 4 * r;
      break;
    }
    case Family::D: {  // SO(2r)
      if (into_so || into_su || into_sp) return 2 * r;
      break;
    }
    case Family::G2:
      if (into_so || into_su || into_sp) return 7;
      break;
    case Family::F4:
      if (into_so || into_su || into_sp) return 26;
      break;
    case Family::E6:
      if (into_su || into_sp) return 27;
      if (into_so) return 54;
      break;
    case Family::E7:
      if (into_sp) return 28;
      if (into_su) return 56;
      if (into_so) return 112;
      break;
    case Family::E8:
      if (into_so || into_su || into_sp) return 248;
      break;
  }
  return std::nullopt;
}

long long classical_size(const SimpleType& h) {
  switch (h.family) {
    case Family::A: return h.rank + 1;
    case Family::B: return 2 * h.rank + 1;
    case Family::C: return h.rank;
    case Family::D: return 2 * h.rank;
    default: return 0;
  }
}

bool is_classical(const SimpleType& h) {
  return h.family == Family::A || h.family == Family::B || h.family == Family::C ||
         h.family == Family::D;
}

bool blockwise_into_simple(const GroupTerm& g, const SimpleType& h,
                           std::vector<std::string>* chain) {
  if (g.factors.size() == 1 && g.torus_rank == 0 && g.factors[0] == h) return true;
  if (is_classical(h)) {
    long long capacity = classical_size(h);
    long long used = 0;
    for (const auto& f : g.factors) {
      auto c = block_cost(f, h.family);
      if (!c) return false;
      used += *c;
    }
    long long torus_cost = (h.family == Family::B || h.family == Family::D) ? 2 : 1;
    used += torus_cost * g.torus_rank;
    if (used > capacity) return false;
    if (g.factors.empty() && h.family == Family::A && g.torus_rank > h.rank) return false;
    if (g.rank() > h.rank) return false;
    if (chain)
      chain->push_back(g.str() + " included blockwise in " + h.str());
    return true;
  }
  if (h.family == Family::G2) {
    // Through a maximal subgroup of G2.
    for (const auto& m : std::vector<GroupTerm>{SU(3), SO(4)})
      if (blockwise_chain(g, m, chain)) {
        if (chain) chain->push_back("... in " + m.str() + " in G2");
        return true;
      }
    return false;
  }
  return false;
}

}  // namespace

bool blockwise_chain(const GroupTerm& g, const GroupTerm& h, std::vector<std::string>* chain) {
  if (g == h) return true;
  if (g.rank() > h.rank() || g.dim() > h.dim()) return false;
  // Assign each simple factor of g to a factor slot of h; torus rank goes
  // to h's torus or to slots with spare capacity via their maximal torus.
  const auto& slots = h.factors;
  size_t nf = g.factors.size();
  std::vector<int> assign(nf, 0);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == nf) {
      std::vector<GroupTerm> per(slots.size());
      for (size_t j = 0; j < slots.size(); ++j) per[j] = GroupTerm({}, 0);
      for (size_t k = 0; k < nf; ++k)
        per[assign[k]] = per[assign[k]] * GroupTerm({g.factors[k]}, 0);
      long long torus_room = h.torus_rank;
      std::vector<std::string> local;
      for (size_t j = 0; j < slots.size(); ++j) {
        if (per[j].factors.empty()) {
          torus_room += slots[j].rank;  // whole maximal torus available
          continue;
        }
        if (!blockwise_into_simple(per[j], slots[j], &local)) return false;
        if (is_classical(slots[j])) {
          long long cap = classical_size(slots[j]);
          long long used = 0;
          for (const auto& f : per[j].factors) used += *block_cost(f, slots[j].family);
          long long per_unit = (slots[j].family == Family::B || slots[j].family == Family::D)
                                   ? 2 : 1;
          torus_room += (cap - used) / per_unit;
        }
      }
      if (torus_room < g.torus_rank) return false;
      if (chain) chain->insert(chain->end(), local.begin(), local.end());
      return true;
    }
    for (size_t j = 0; j < slots.size(); ++j) {
      assign[i] = static_cast<int>(j);
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (nf == 0) {
    long long torus_room = h.torus_rank;
    for (const auto& s : slots) torus_room += s.rank;
    if (h.factors.empty() && h.torus_rank >= g.torus_rank) {
      if (chain) chain->push_back("torus into torus");
      return true;
    }
    if (torus_room >= g.torus_rank && !slots.empty()) {
      if (chain) chain->push_back("torus into a maximal torus of " + h.str());
      return true;
    }
    return false;
  }
  if (slots.empty()) return false;
  return rec(0);
}

namespace {

struct Searcher {
  std::map<std::pair<std::string, std::string>, EmbeddingReport> memo;

  EmbeddingReport decide(const GroupTerm& g, const GroupTerm& h, int depth) {
    auto key = std::make_pair(g.str(), h.str());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    EmbeddingReport rep = decide_uncached(g, h, depth);
    memo[key] = rep;
    return rep;
  }

  EmbeddingReport decide_uncached(const GroupTerm& g, const GroupTerm& h, int depth) {
    EmbeddingReport rep;
    if (g == h) {
      rep.verdict = Verdict::chain_found;
      rep.chain = {g.str() + " = " + h.str()};
      return rep;
    }
    if (g.rank() > h.rank() || g.dim() >= h.dim()) {
      // A proper subgroup has strictly smaller dimension and no larger rank.
      rep.verdict = Verdict::obstructed;
      return rep;
    }
    std::vector<std::string> chain;
    if (blockwise_chain(g, h, &chain)) {
      rep.verdict = Verdict::chain_found;
      rep.chain = std::move(chain);
      return rep;
    }
    if (depth <= 0) {
      rep.verdict = Verdict::inconclusive;
      rep.missing_facts.push_back("depth limit at " + g.str() + " in " + h.str());
      return rep;
    }
    if (h.factors.size() + (h.torus_rank > 0 ? 1 : 0) > 1) return decide_product(g, h, depth);
    if (h.factors.size() == 1) return decide_simple(g, h.factors[0], depth);
    // h is a torus; any nontrivial g was size-pruned above.
    rep.verdict = Verdict::obstructed;
    return rep;
  }

  // h = product of simple slots (and possibly a torus). Every simple
  // factor of g injects into some slot; factors sharing a slot embed as a
  // product. The search is over slot assignments.
  EmbeddingReport decide_product(const GroupTerm& g, const GroupTerm& h, int depth) {
    EmbeddingReport rep;
    if (g.factors.empty()) {
      // Pure torus; rank was already checked.
      rep.verdict = Verdict::chain_found;
      rep.chain = {"torus into a maximal torus of " + h.str()};
      return rep;
    }
    const auto& slots = h.factors;
    size_t nf = g.factors.size();
    std::vector<int> assign(nf, 0);
    bool any_open = false;
    bool found_chain = false;
    std::vector<std::string> found_steps;
    std::vector<std::string> missing;
    std::function<void(size_t)> rec = [&](size_t i) {
      if (found_chain) return;
      if (i == nf) {
        std::vector<GroupTerm> per(slots.size(), GroupTerm({}, 0));
        for (size_t k = 0; k < nf; ++k)
          per[assign[k]] = per[assign[k]] * GroupTerm({g.factors[k]}, 0);
        bool dead = false, all_chain = true;
        std::vector<std::string> steps;
        for (size_t j = 0; j < slots.size() && !dead; ++j) {
          if (per[j].factors.empty()) continue;
          EmbeddingReport sub = decide(per[j], GroupTerm({slots[j]}, 0), depth - 1);
          if (sub.verdict == Verdict::obstructed) dead = true;
          else if (sub.verdict == Verdict::chain_found)
            steps.insert(steps.end(), sub.chain.begin(), sub.chain.end());
          else {
            all_chain = false;
            missing.insert(missing.end(), sub.missing_facts.begin(), sub.missing_facts.end());
          }
        }
        if (dead) return;
        if (all_chain) {
          // Torus accounting: h's own torus plus unused slots.
          long long room = h.torus_rank;
          for (size_t j = 0; j < slots.size(); ++j)
            if (per[j].factors.empty()) room += slots[j].rank;
          if (g.torus_rank <= room) {
            found_chain = true;
            found_steps = std::move(steps);
            return;
          }
        }
        any_open = true;
        return;
      }
      for (size_t j = 0; j < slots.size(); ++j) {
        assign[i] = static_cast<int>(j);
        rec(i + 1);
        if (found_chain) return;
      }
    };
    rec(0);
    if (found_chain) {
      rep.verdict = Verdict::chain_found;
      rep.chain = std::move(found_steps);
    } else if (!any_open) {
      rep.verdict = Verdict::obstructed;
    } else {
      rep.verdict = Verdict::inconclusive;
      rep.missing_facts = std::move(missing);
    }
    return rep;
  }

  EmbeddingReport decide_simple(const GroupTerm& g, const SimpleType& h, int depth) {
    EmbeddingReport rep;
    bool all_closed = true;
    std::vector<std::string> missing;

    if (h.family == Family::F4 || h.family == Family::E6 || h.family == Family::E7 ||
        h.family == Family::E8) {
      rep.verdict = Verdict::inconclusive;
      rep.missing_facts = {"no subgroup table for " + h.str()};
      return rep;
    }

    for (const auto& inst : maximal_subgroup_instances(h)) {
      EmbeddingReport sub = decide(g, inst.group, depth - 1);
      if (sub.verdict == Verdict::chain_found) {
        rep.verdict = Verdict::chain_found;
        rep.chain = sub.chain;
        rep.chain.push_back(inst.group.str() + " maximal in " + h.str() + " [" + inst.tag +
                            "]");
        return rep;
      }
      if (sub.verdict == Verdict::inconclusive) {
        all_closed = false;
        missing.insert(missing.end(), sub.missing_facts.begin(), sub.missing_facts.end());
      }
    }

    RepRow row = rep_row(h);
    if (row.present) {
      long long hdim = h.dim();
      for (int r = 1; r <= h.rank; ++r) {
        for (const auto& cand : candidate_types(r)) {
          long long cdim = cand.dim();
          if (cdim < g.dim() || cdim >= hdim) continue;
          if (cand == h) continue;
          // Classification bound on the degree of a faithful irreducible.
          bool plausible = true;
          if (row.field == RepField::real) plausible = 2 * cdim >= row.degree - 2;
          if (row.field == RepField::cplx) plausible = cdim >= row.degree - 1;
          if (row.field == RepField::quat) plausible = 2 * cdim >= 3 * row.degree - 8;
          if (!plausible) continue;
          std::string why;
          Tri avail = has_irrep(cand, row.field, row.degree, &why);
          if (avail == Tri::no) continue;
          EmbeddingReport sub = decide(g, GroupTerm({cand}, 0), depth - 1);
          if (sub.verdict == Verdict::obstructed) continue;
          if (avail == Tri::yes && sub.verdict == Verdict::chain_found) {
            rep.verdict = Verdict::chain_found;
            rep.chain = sub.chain;
            rep.chain.push_back("rho(" + cand.str() + ") maximal in " +
                                SimpleType(h).str() + " [" + why + "]");
            return rep;
          }
          all_closed = false;
          if (avail == Tri::unknown)
            missing.push_back("irreducible " + field_name(row.field) + " representation of " +
                              cand.str() + " of degree " + std::to_string(row.degree) + "?");
          else
            missing.insert(missing.end(), sub.missing_facts.begin(), sub.missing_facts.end());
        }
      }
    }

    rep.verdict = all_closed ? Verdict::obstructed : Verdict::inconclusive;
    rep.missing_facts = std::move(missing);
    return rep;
  }

  static std::string field_name(RepField f) {
    switch (f) {
      case RepField::real: return "real";
      case RepField::cplx: return "complex";
      case RepField::quat: return "quaternionic";
    }
    return "?";
  }

  static const std::vector<SimpleType>& candidate_types(int rank) {
    static std::map<int, std::vector<SimpleType>> cache;
    auto it = cache.find(rank);
    if (it != cache.end()) return it->second;
    std::vector<SimpleType> v;
    v.push_back({Family::A, rank});
    if (rank >= 2) v.push_back({Family::C, rank});
    if (rank >= 3) v.push_back({Family::B, rank});
    if (rank >= 4) v.push_back({Family::D, rank});
    if (rank == 2) v.push_back({Family::G2, 2});
    if (rank == 4) v.push_back({Family::F4, 4});
    if (rank == 6) v.push_back({Family::E6, 6});
    if (rank == 7) v.push_back({Family::E7, 7});
    if (rank == 8) v.push_back({Family::E8, 8});
    return cache.emplace(rank, std::move(v)).first->second;
  }
};

}  // namespace

EmbeddingReport embedding_obstructed(const GroupTerm& g, const GroupTerm& h, int depth) {
  Searcher s;
  return s.decide(g, h, depth);
}

}  // namespace pqk
