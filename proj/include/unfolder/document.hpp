#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unfolder/complex.hpp"

namespace unfolder {

/// A parsed input file. Abstract documents list facets by vertex label;
/// pseudo documents (`"kind": "pseudo"`) add a gluings block and optionally a
/// projection table from a previous unfolding.
struct Document {
  std::variant<AbstractComplex, PseudoComplex> complex;
  /// Facet -> base facet, empty when absent.
  std::vector<int> projection;

  bool is_pseudo() const { return std::holds_alternative<PseudoComplex>(complex); }
  /// The pseudo-complex itself, or the `as_pseudo` embedding.
  PseudoComplex pseudo() const;
};

/// Throws ParseError (with line and column), MixedDimension, DegenerateFacet,
/// BadGluing or SelfIdentification.
Document parse_document(std::string_view text);

std::string emit(const AbstractComplex& k);
std::string emit(const PseudoComplex& p, const std::vector<int>& projection = {});
std::string emit(const Document& doc);

/// Orders strings with embedded numbers by value: "v2" < "v10".
bool natural_less(std::string_view a, std::string_view b);

}  // namespace unfolder
