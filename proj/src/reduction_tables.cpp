#include "siegel/reduction_tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace siegel {
namespace detail {
extern const std::string_view kEmbeddedTables;
}

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::TableError, "SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::TableError, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::TableError, "expected an integer, got " + x.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<Matrix> matrix_list(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw Error(ErrorCode::TableError, std::string("missing table '") + key + "'");
  }
  std::vector<Matrix> out;
  for (const auto& m : doc.at(key)) out.push_back(matrix_from_json(m));
  return out;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::TableError, what);
}

}  // namespace

int q_of_m(const std::array<int, 4>& m) {
  for (int j = 3; j >= 0; --j)
    if (m[static_cast<std::size_t>(j)] != 0) return j + 1;
  throw Error(ErrorCode::ZeroVector, "q is undefined for the zero vector");
}

Matrix expand_word(const std::vector<int>& word, const std::vector<Matrix>& generators) {
  if (generators.empty()) throw Error(ErrorCode::TableError, "no generators");
  Matrix m = Matrix::identity(generators.front().rows());
  for (int k : word) {
    if (k < 1 || static_cast<std::size_t>(k) > generators.size()) {
      throw Error(ErrorCode::TableError, "generator index " + std::to_string(k) + " out of range");
    }
    m = m * generators[static_cast<std::size_t>(k - 1)];
  }
  return m;
}

std::string table_checksum(const Json& doc) {
  Json copy = doc;
  copy.erase("checksum");
  return "sha256:" + sha256_hex(copy.dump());
}

ReductionTables parse_tables(const Json& doc, bool validate) {
  if (!doc.is_object()) throw Error(ErrorCode::TableError, "table document must be an object");
  ReductionTables t;
  t.checksum = doc.value("checksum", std::string());
  if (validate) {
    const std::string actual = table_checksum(doc);
    check(t.checksum == actual, "checksum mismatch: recorded " + t.checksum + ", computed " + actual);
  }
  try {
    for (const auto& v : doc.at("m_vectors")) {
      const std::vector<int> c = int_list(v);
      check(c.size() == 4, "m-vector must have 4 entries");
      MVector mv;
      std::copy(c.begin(), c.end(), mv.c.begin());
      mv.q = q_of_m(mv.c);
      t.m_vectors.push_back(mv);
    }
    t.generators = matrix_list(doc, "generators");
    t.witnesses = matrix_list(doc, "witnesses");
    for (const auto& w : doc.at("representative_words")) t.rep_words.push_back(int_list(w));
    t.reps = matrix_list(doc, "representatives");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::TableError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TableError) throw;
    throw Error(ErrorCode::TableError, e.what());
  }
  if (validate) validate_tables(t);
  return t;
}

void validate_tables(const ReductionTables& t) {
  check(t.m_vectors.size() == 20, "expected 20 m-vectors");
  check(t.generators.size() == 12, "expected 12 generators");
  check(t.witnesses.size() == 12, "expected 12 witnesses");
  check(t.rep_words.size() == 28 && t.reps.size() == 28, "expected 28 representatives");
  for (const auto& m : t.m_vectors) {
    for (int x : m.c) check(x >= -1 && x <= 1, "m-vector entries must lie in {-1, 0, 1}");
    check(m.c[static_cast<std::size_t>(m.q - 1)] == 1, "m-vector must have m_q = 1");
  }
  for (std::size_t j = 0; j < 12; ++j) {
    const auto label = std::to_string(j + 1);
    check(t.generators[j].rows() == 4 && t.generators[j].is_square(), "generator " + label + " is not 4x4");
    check(is_unimodular(t.generators[j]), "generator " + label + " is not unimodular");
    check(t.witnesses[j].rows() == 4 && t.witnesses[j].is_square(), "witness " + label + " is not 4x4");
    check(t.witnesses[j].is_symmetric() && is_positive_definite(t.witnesses[j]),
          "witness " + label + " is not symmetric positive definite");
  }
  for (std::size_t j = 0; j < 28; ++j) {
    check(t.reps[j].rows() == 4 && is_unimodular(t.reps[j]), "representative " + std::to_string(j + 1) + " is not unimodular");
  }
}

Json tables_to_json(const ReductionTables& t) {
  Json doc;
  doc["format"] = "siegel-reduce-tables";
  doc["version"] = 1;
  Json mv = Json::array();
  for (const auto& m : t.m_vectors) mv.push_back(m.c);
  doc["m_vectors"] = mv;
  auto ints = [](const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_long());
        rows.push_back(row);
      }
      out.push_back(rows);
    }
    return out;
  };
  doc["generators"] = ints(t.generators);
  doc["witnesses"] = ints(t.witnesses);
  doc["representative_words"] = t.rep_words;
  doc["representatives"] = ints(t.reps);
  doc["checksum"] = table_checksum(doc);
  return doc;
}

std::string_view embedded_tables_text() { return detail::kEmbeddedTables; }

const ReductionTables& reduction_tables() {
  static const ReductionTables tables = [] {
    std::string text;
    if (const char* path = std::getenv("SIEGEL_REDUCE_TABLES"); path && *path) {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::TableError, std::string("cannot open tables file ") + path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      text = std::string(detail::kEmbeddedTables);
    }
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::TableError, e.what());
    }
    return parse_tables(doc);
  }();
  return tables;
}

}  // namespace siegel
