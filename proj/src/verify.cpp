#include "siegel/verify.hpp"

#include <functional>
#include <future>
#include <sstream>

#include "siegel/minkowski.hpp"
#include "siegel/mod2.hpp"
#include "siegel/sampling.hpp"
#include "siegel/siegel_maps.hpp"

namespace siegel {
namespace {

using Check = std::function<std::string(const ReductionTables&, const VerifyOptions&)>;

std::string check_index(const ReductionTables&, const VerifyOptions&) {
  const GroupOrders o = group_orders(2);
  if (o.gl == 20160 && o.sp == 720 && o.index == 28) return {};
  std::ostringstream os;
  os << "orders " << o.gl << "/" << o.sp << ", index " << o.index;
  return os.str();
}

std::string check_cosets(const ReductionTables& t, const VerifyOptions&) {
  std::vector<F2Matrix> inv;
  std::vector<F2Matrix> img;
  for (const auto& r : t.reps) {
    inv.push_back(reduce_mod2(inverse(r)));
    img.push_back(reduce_mod2(r));
  }
  std::ostringstream os;
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = 0; j < img.size(); ++j) {
      if (i == j || !is_symplectic_mod2(inv[i] * img[j])) continue;
      if (collisions++ == 0) os << "representatives " << i + 1 << " and " << j + 1 << " share a coset";
    }
  }
  if (collisions > 0) return os.str() + " (" + std::to_string(collisions) + " colliding pairs)";
  if (t.reps.size() != 28) return "expected 28 representatives, found " + std::to_string(t.reps.size());
  return {};
}

std::string check_words(const ReductionTables& t, const VerifyOptions&) {
  if (t.rep_words.size() != t.reps.size()) return "word and matrix lists differ in length";
  for (std::size_t j = 0; j < t.reps.size(); ++j) {
    if (!expand_word(t.rep_words[j], t.generators).identical(t.reps[j])) {
      return "representative " + std::to_string(j + 1) + " differs from its word";
    }
  }
  return {};
}

std::string check_witnesses(const ReductionTables& t, const VerifyOptions&) {
  for (std::size_t j = 0; j < t.generators.size(); ++j) {
    const auto at = barnes_cohn_conditions(t.witnesses[j], t.m_vectors);
    const auto image = barnes_cohn_conditions(congruence(t.witnesses[j], t.generators[j]), t.m_vectors);
    if (!at.member || at.zero_count() != 1 || !image.member || image.zero_count() != 1) {
      std::ostringstream os;
      os << "pair " << j + 1 << ": witness member=" << at.member << " zeros=" << at.zero_count()
         << ", image member=" << image.member << " zeros=" << image.zero_count();
      return os.str();
    }
  }
  return {};
}

std::string check_beta_sign(const ReductionTables&, const VerifyOptions& o) {
  Rng rng(o.seed);
  const auto gens = g_generators(1);
  for (std::size_t i = 0; i < o.samples; ++i) {
    const SiegelPoint w = random_w21(rng);
    const Matrix G = random_word(rng, gens, 1 + i % 6);
    const W21Params before = w21_params(w);
    const W21Params after = w21_params(SiegelPoint::unchecked(modular_action(G, w.w())));
    if (before.beta.sign() != after.beta.sign()) return "sign of beta changed at sample " + std::to_string(i);
  }
  return {};
}

std::string check_invariant(const ReductionTables&, const VerifyOptions& o) {
  Rng rng(o.seed + 1);
  const auto gens2 = g_generators(1);
  const auto gens4 = g_generators(2);
  for (std::size_t i = 0; i < o.samples; ++i) {
    const SiegelPoint w = random_w21(rng);
    const Matrix G = random_word(rng, gens2, 1 + i % 6);
    if (!(invariant_I(SiegelPoint::unchecked(modular_action(G, w.w()))) == invariant_I(w))) {
      return "genus-two invariant changed at sample " + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < o.samples / 4 + 1; ++i) {
    const SiegelPoint w = random_w41(rng);
    const Matrix G = random_word(rng, gens4, 1 + i % 6);
    if (!(invariant_I(SiegelPoint::unchecked(modular_action(G, w.w()))) == invariant_I(w))) {
      return "genus-four invariant changed at sample " + std::to_string(i);
    }
  }
  return {};
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const auto& i : items)
    if (!i.passed) return false;
  return !items.empty();
}

VerificationReport verify_paper(const ReductionTables& tables, const VerifyOptions& options) {
  const std::vector<std::tuple<std::string, std::string, Check>> checks{
      {"a", "index of K in GL(4, Z) is 28", check_index},
      {"b", "representatives are coset-distinct and complete", check_cosets},
      {"c", "representatives expand from their words", check_words},
      {"d", "gluing hypotheses at the 12 witnesses", check_witnesses},
      {"e", "sign of beta is preserved", check_beta_sign},
      {"f", "invariant I is preserved", check_invariant},
  };
  std::vector<std::future<std::string>> running;
  for (const auto& c : checks) {
    const Check& fn = std::get<2>(c);
    running.push_back(std::async(std::launch::async, [&fn, &tables, &options] {
      try {
        return fn(tables, options);
      } catch (const std::exception& e) {
        return std::string("error: ") + e.what();
      }
    }));
  }
  VerificationReport report;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::string failure = running[i].get();
    report.items.push_back({std::get<0>(checks[i]), std::get<1>(checks[i]), failure.empty(), std::move(failure)});
  }
  return report;
}

VerificationReport verify_paper(const VerifyOptions& options) { return verify_paper(reduction_tables(), options); }

}  // namespace siegel
