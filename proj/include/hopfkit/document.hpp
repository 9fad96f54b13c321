#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfkit/hilbert90.hpp"

namespace hopfkit {

struct ModuleObject {
  std::string algebra;
  Bimodule module;
};

struct HopfModuleObject {
  std::string comodule_algebra;
  DKHopfModule module;
};

struct ComoduleAlgebraObject {
  ComoduleAlgebra ca;
  std::optional<Matrix> free_basis;  // right B-basis of A, as columns
};

struct GroupActionObject {
  GroupAction action;
  std::optional<std::vector<Matrix>> pool;  // cocycle values to search over ℚ
};

struct CocycleObject {
  std::string action;
  Cocycle cocycle;
};

using ObjectValue = std::variant<Algebra, Coalgebra, Bialgebra, ComoduleAlgebraObject, ModuleCoalgebra, ModuleObject,
                                 HopfModuleObject, GroupPresentation, GroupActionObject, CocycleObject>;

struct NamedObject {
  std::string name;
  std::string type;
  ObjectValue value;
};

struct Document {
  Field field = Field::rationals();
  std::string source;
  std::vector<NamedObject> objects;                       // document order
  std::map<std::string, std::vector<std::string>> tasks;  // default selection per task

  const NamedObject& find(const std::string& name) const;  // throws UnknownName
};

/* Throws ParseError (malformed text or scalars), ShapeError, UnknownName. */
Document parse_document(const std::string& text, const std::string& source = "<input>");
const std::string& builtin_text(const std::string& name);  // throws UnknownName
Document load_builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace hopfkit
