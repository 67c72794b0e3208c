#ifndef PARABOSE_PARSE_HPP
#define PARABOSE_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "parabose/element.hpp"

namespace parabose {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the expression grammar into a free-algebra Element.
///
///   expr   := [+|-] term { (+|-) term }
///   term   := factor { [*] factor }          juxtaposition is the product
///   factor := int | int/int | i | letter | ( expr )
///   letter := B+<i> | B-<i> | E(<i><s>,<j><s>) | g | K+ | K- | I
///
/// No relations are applied; feed the result to normal_form.
Element parse_element(std::string_view text);

}  // namespace parabose

#endif
