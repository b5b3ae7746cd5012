#pragma once

#include "qorder/qord.hpp"

#include <optional>
#include <random>

namespace qorder {

using Rng = std::mt19937_64;

// Seeded instance generators. Distributions:
//   subsets    size uniform in [min_size, max_size], membership uniform over Q
//   relations  each entry is, with probability density, uniform over its
//              diagonal set, and bottom otherwise
//   preorders  reflexive-transitive closure (iterated alpha v alpha o alpha)
//              of the identity joined with a random relation
//   maps       uniform membership-preserving assignments, kept when
//              order-preserving
QSubset random_subset(const QuantalePtr& q, Rng& rng, std::size_t min_size = 1, std::size_t max_size = 4);
QRelation random_relation(const QSubset& x, const QSubset& y, Rng& rng, double density = 1.0);
QOrderedSet random_ordered(const QSubset& x, Rng& rng, double density = 0.5);
QOrderedSet random_ordered(const QuantalePtr& q, Rng& rng, std::size_t min_size = 1, std::size_t max_size = 4);
QRelation random_distributor(const QOrderedSet& x, const QOrderedSet& y, Rng& rng, double density = 0.5);
std::optional<QOrderMap> random_map(const QOrderedSet& x, const QOrderedSet& y, Rng& rng, std::size_t tries = 200);

// The least preorder containing the identity and r.
QRelation preorder_closure(const QRelation& r);

std::size_t uniform_index(Rng& rng, std::size_t n);

}  // namespace qorder
