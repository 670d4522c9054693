#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootclosure/json_io.hpp"

namespace rootclosure {

struct CorpusAssertion {
  std::string id;
  // membership | non-membership | non-membership-within-budget |
  // ideal-equality | certificate-exponent | check
  std::string kind;
  // Short mathematical statement being checked.
  std::string anchor;
  // exact | normal-form | monomial-oracle | degree-argument | budget
  std::string provenance;
  bool passed = false;
  std::string detail;
};

struct CorpusReport {
  std::string id;
  std::string setup;
  SearchBudget budget;
  std::vector<CorpusAssertion> assertions;
  std::vector<RootCertificate> certificates;
  bool passed = true;
};

struct BudgetOverrides {
  std::optional<unsigned> max_exponent;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> max_tower;

  SearchBudget apply(SearchBudget b) const;
};

constexpr std::uint64_t kDefaultSeed = 20261016;

std::vector<std::string> corpus_case_ids();
// Throws std::invalid_argument for an unknown id.
CorpusReport run_case(const std::string& id, const BudgetOverrides& overrides = {},
                      std::uint64_t seed = kDefaultSeed);
// "all" runs every case; results ordered by case id.
std::vector<CorpusReport> run_corpus(const std::string& id_or_all, const BudgetOverrides& overrides = {},
                                     std::uint64_t seed = kDefaultSeed);

Json corpus_report_json(const CorpusReport& r);

}  // namespace rootclosure
