#ifndef PQK_EMBEDDINGS_HPP
#define PQK_EMBEDDINGS_HPP

#include <map>
#include <string>
#include <vector>

#include "pqk/lie_atlas.hpp"

namespace pqk {

enum class Verdict { obstructed, chain_found, inconclusive };

enum class RepField { real, cplx, quat };

enum class Tri { no, yes, unknown };

/// Does the simple type admit an irreducible representation of this field
/// type and exact degree? Answers come from the embedded fact table
/// (explicit low-degree lists, minimal/second fundamental degrees, and the
/// self-duality flags); "unknown" past the stored horizon.
Tri has_irrep(const SimpleType& t, RepField f, long long degree,
              std::string* provenance = nullptr);

/// Maximal connected subgroups of a simple group, instantiated from the
/// subgroup tables (the representation rows are handled separately by the
/// search). Each instance carries its table tag.
struct MaximalInstance {
  GroupTerm group;
  std::string tag;
};
std::vector<MaximalInstance> maximal_subgroup_instances(const SimpleType& h);

/// The representation row of the ambient's table: field type and degree of
/// the irreducible representations that could realize a maximal simple
/// subgroup. Empty when the ambient has no such row.
struct RepRow {
  bool present = false;
  RepField field = RepField::real;
  long long degree = 0;
};
RepRow rep_row(const SimpleType& h);

struct EmbeddingReport {
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> chain;          // witness steps when found
  std::vector<std::string> missing_facts;  // rep queries answered "unknown"
};

/// Bounded decision for "g embeds into h up to finite coverings":
/// `chain_found` only with a concrete witness, `obstructed` only when the
/// table-driven search space is exhausted, else `inconclusive`.
EmbeddingReport embedding_obstructed(const GroupTerm& g, const GroupTerm& h, int depth = 16);

/// Sufficient blockwise-witness search used for the chain-found side.
bool blockwise_chain(const GroupTerm& g, const GroupTerm& h, std::vector<std::string>* chain);

/// One row of the embedded subgroup/rep-fact data, for the audit dump.
struct DataRecord {
  std::string kind;    // "subgroup-row" or "rep-fact"
  std::string content;
  std::string tag;     // table or source note
};
std::vector<DataRecord> embedded_data_records();

}  // namespace pqk

#endif
