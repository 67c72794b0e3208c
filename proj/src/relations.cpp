#include "parabose/relations.hpp"

namespace parabose {

namespace {

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

constexpr Sign kSigns[] = {Sign::Plus, Sign::Minus};

}  // namespace

Element paraboson_relation(std::uint32_t i, Sign xi, std::uint32_t j, Sign eta, std::uint32_t k, Sign eps) {
  const Element bi(Generator::b(xi, i));
  const Element bj(Generator::b(eta, j));
  const Element bk(Generator::b(eps, k));
  Element rel = commutator(anticommutator(bi, bj), bk);
  if (j == k) rel -= bi * Scalar(sign_value(eps) - sign_value(eta));
  if (i == k) rel -= bj * Scalar(sign_value(eps) - sign_value(xi));
  return rel;
}

std::vector<Relation> paraboson_relations(std::uint32_t max_index) {
  std::vector<Relation> out;
  for (std::uint32_t i = 1; i <= max_index; ++i)
    for (std::uint32_t j = 1; j <= max_index; ++j)
      for (std::uint32_t k = 1; k <= max_index; ++k)
        for (Sign xi : kSigns)
          for (Sign eta : kSigns)
            for (Sign eps : kSigns) {
              std::string label = "[{B" + std::string(1, sign_char(xi)) + std::to_string(i) + ",B" +
                                  sign_char(eta) + std::to_string(j) + "},B" + sign_char(eps) +
                                  std::to_string(k) + "]";
              out.push_back({std::move(label), paraboson_relation(i, xi, j, eta, k, eps)});
            }
  return out;
}

std::vector<Relation> boson_relations(std::uint32_t max_index) {
  std::vector<Relation> out;
  for (std::uint32_t i = 1; i <= max_index; ++i)
    for (std::uint32_t j = 1; j <= max_index; ++j) {
      const Element mi(Generator::b_minus(i)), pi(Generator::b_plus(i));
      const Element mj(Generator::b_minus(j)), pj(Generator::b_plus(j));
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      Element ccr = commutator(mi, pj);
      if (i == j) ccr -= Element::unit();
      out.push_back({"[b-" + std::to_string(i) + ",b+" + std::to_string(j) + "]", ccr});
      out.push_back({"[b-,b-](" + ij + ")", commutator(mi, mj)});
      out.push_back({"[b+,b+](" + ij + ")", commutator(pi, pj)});
    }
  return out;
}

std::vector<Relation> g_relations(std::uint32_t max_index) {
  const Element g(Generator::g());
  std::vector<Relation> out{{"g^2-I", g * g - Element::unit()}};
  for (Sign s : kSigns)
    for (std::uint32_t i = 1; i <= max_index; ++i) {
      const Generator b = Generator::b(s, i);
      out.push_back({"{g," + b.str() + "}", anticommutator(g, Element(b))});
    }
  return out;
}

std::vector<Relation> k_relations(std::uint32_t max_index) {
  const Element kp(Generator::k_plus()), km(Generator::k_minus());
  std::vector<Relation> out{{"K+K- - I", kp * km - Element::unit()},
                            {"K-K+ - I", km * kp - Element::unit()}};
  for (const auto& k : {Generator::k_plus(), Generator::k_minus()})
    for (Sign s : kSigns)
      for (std::uint32_t i = 1; i <= max_index; ++i) {
        const Generator b = Generator::b(s, i);
        out.push_back({"{" + k.str() + "," + b.str() + "}", anticommutator(Element(k), Element(b))});
      }
  return out;
}

}  // namespace parabose
