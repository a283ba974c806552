#pragma once

#include <array>
#include <string>
#include <vector>

#include "siegel/json_io.hpp"

namespace siegel {

/// Vector with entries in {-1, 0, 1}; q is the 1-based index of the last
/// nonzero entry.
struct MVector {
  std::array<int, 4> c{};
  int q = 0;
};

/// Throws ZeroVector for the zero vector.
int q_of_m(const std::array<int, 4>& m);

/// The fixed data behind the dimension-four reduction: the 20 vectors of the
/// Barnes-Cohn conditions, 12 gluing generators with their witness forms, and
/// the 28 coset representatives (as generator words and expanded).
struct ReductionTables {
  std::vector<MVector> m_vectors;
  std::vector<Matrix> generators;
  std::vector<Matrix> witnesses;
  std::vector<std::vector<int>> rep_words;
  std::vector<Matrix> reps;
  std::string checksum;
};

/// Product of generators (1-based indices) from left to right; [] is Id.
Matrix expand_word(const std::vector<int>& word, const std::vector<Matrix>& generators);

/// "sha256:<hex>" of the compact, key-sorted serialization of `doc` without
/// its "checksum" member.
std::string table_checksum(const Json& doc);

/// Parses the asset. With `validate` the checksum and the structural checks
/// of validate_tables are enforced (TableError on failure).
ReductionTables parse_tables(const Json& doc, bool validate = true);

/// Counts (20, 12, 12, 28), m-vector entries and q, unimodular generators,
/// symmetric positive definite witnesses, unimodular representatives.
void validate_tables(const ReductionTables& t);

Json tables_to_json(const ReductionTables& t);

/// Process-wide tables: the file named by SIEGEL_REDUCE_TABLES if set,
/// otherwise the copy compiled into the library. Loaded once.
const ReductionTables& reduction_tables();

/// The JSON text compiled into the library.
std::string_view embedded_tables_text();

}  // namespace siegel
