#pragma once

#include <string>
#include <utility>
#include <vector>

#include "commdeg/action.hpp"
#include "commdeg/group_spec.hpp"

namespace commdeg::testdata {

struct CorpusGroup {
  std::string name;
  GroupSpecPtr spec;
};

/// Forty-odd groups of order at most 128, mixing presets, generated groups,
/// products, semidirect products and quotients.
const std::vector<CorpusGroup>& group_corpus();

/// The corpus elaborated to tables, in corpus order.
const std::vector<GroupTable>& corpus_tables();

/// Index pairs into the corpus for product-law checks.
std::vector<std::pair<std::size_t, std::size_t>> product_pairs();

struct CorpusAction {
  std::string name;
  FiniteAction action;
  Distribution mu;
  std::vector<Rational> nu;
};

std::vector<CorpusAction> action_corpus();

/// Weights proportional to 1, 2, ..., n.
std::vector<Rational> ramp_weights(std::size_t n);

}  // namespace commdeg::testdata
