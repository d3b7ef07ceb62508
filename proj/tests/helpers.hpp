#pragma once

#include "rankfn/angulated.hpp"
#include "rankfn/rank_objects.hpp"
#include "rankfn/rational.hpp"

#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing {

inline rankfn::Rational q(const char* text) { return rankfn::parse_rational(text); }

inline rankfn::RankOnObjects rank(std::initializer_list<std::pair<const rankfn::IndecId, rankfn::Rational>> values) {
  return rankfn::RankOnObjects(std::map<rankfn::IndecId, rankfn::Rational>(values));
}

inline rankfn::AngleTemplate angle(int d, std::vector<std::vector<rankfn::IndecId>> objects) {
  rankfn::AngleTemplate a{d, {}};
  for (auto& o : objects) a.objects.emplace_back(o);
  return a;
}

/// Random combination with small positive rational weights of the given points.
inline rankfn::RankOnObjects random_combination(const std::vector<rankfn::RankOnObjects>& gens, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(0, 7);
  std::uniform_int_distribution<int> den(1, 5);
  rankfn::RankOnObjects out = rankfn::Rational(0) * gens.front();
  for (const auto& g : gens) out = out + rankfn::Rational(num(rng), den(rng)) * g;
  return out;
}

}  // namespace testing
