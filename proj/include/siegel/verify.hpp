#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegel/reduction_tables.hpp"

namespace siegel {

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  std::size_t samples = 200;
};

struct VerifyItem {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerifyItem> items;
  bool all_passed() const;
};

/// Checks, each reported rather than thrown:
///   a  GL(4, F2) / Sp(4, F2) index is 28
///   b  the representatives lie in distinct cosets and there are index many
///   c  each representative equals the product of its generator word
///   d  each witness and its image under its generator lie in the Minkowski
///      domain with exactly one vanishing condition
///   e  sign(beta) is preserved by random genus-two G elements
///   f  the invariant I is preserved by random G elements in genus 2 and 4
VerificationReport verify_paper(const ReductionTables& tables, const VerifyOptions& options = {});
VerificationReport verify_paper(const VerifyOptions& options = {});

}  // namespace siegel
