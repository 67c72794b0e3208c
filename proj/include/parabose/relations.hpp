#ifndef PARABOSE_RELATIONS_HPP
#define PARABOSE_RELATIONS_HPP

#include <string>
#include <vector>

#include "parabose/element.hpp"

namespace parabose {

/// A named generator of a defining ideal, as a free-algebra Element in B
/// (and g, K) letters only.
struct Relation {
  std::string label;
  Element element;
};

/// [{B_i^x, B_j^y}, B_k^z] - (z - y) d_jk B_i^x - (z - x) d_ik B_j^y.
Element paraboson_relation(std::uint32_t i, Sign xi, std::uint32_t j, Sign eta, std::uint32_t k, Sign eps);

/// Every paraboson relation with indices in [1, max_index] and all 8 sign choices.
std::vector<Relation> paraboson_relations(std::uint32_t max_index);

/// [b_i^-, b_j^+] - d_ij I, [b_i^-, b_j^-], [b_i^+, b_j^+].
std::vector<Relation> boson_relations(std::uint32_t max_index);

/// g^2 - I and {g, B_i^s}.
std::vector<Relation> g_relations(std::uint32_t max_index);

/// K+K- - I, K-K+ - I, {K^t, B_i^s}.
std::vector<Relation> k_relations(std::uint32_t max_index);

}  // namespace parabose

#endif
