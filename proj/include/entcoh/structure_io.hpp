#pragma once

#include <optional>
#include <string>

#include "entcoh/galois.hpp"

namespace entcoh {

/// On-disk description of a structure: scalars are exact strings ("a" or
/// "a/b"), tables are nested arrays. The algebra and coalgebra blocks are
/// required; coaction, entwining and bimodule are optional.
struct StructureFile {
  Field field;
  Algebra algebra;
  Coalgebra coalgebra;
  std::optional<Matrix> coaction;   // dim(A)*dim(C) x dim(A)
  std::optional<Matrix> entwining;  // dim(A)*dim(C) x dim(C)*dim(A)
  std::optional<Bimodule> bimodule;
};

/// Parse a JSON structure file. Dimension mismatches and bad scalars raise
/// ParseError naming the offending key.
StructureFile parse_structure(const std::string& text);

/// Canonical serialization: fixed key order, scalar strings, no whitespace
/// dependence on input. parse_structure(emit_structure(x)) == x.
std::string emit_structure(const StructureFile& sf);

ComoduleAlgebra to_comodule(const StructureFile& sf);     // needs coaction
Entwining to_entwining(const StructureFile& sf);          // needs entwining

StructureFile from_comodule(const ComoduleAlgebra& ca);
StructureFile from_entwining(const Entwining& e);

}  // namespace entcoh
