#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gg/generalized.hpp"

namespace gg {

struct Manifold {
  std::string name;
  Chart chart;
};

enum class ObjectKind { vector, form, twoform, map };

const char* to_string(ObjectKind kind);

/// Named geometric datum declared in a model file.
struct ModelObject {
  std::string name;
  std::string manifold;
  ObjectKind kind = ObjectKind::vector;
  GVector section;  // vector and form
  TwoForm two;      // twoform
  Matrix map;       // map; column k is the image of D<c_k>
};

enum class StructureKind { almost_contact, contact, complex, symplectic };

const char* to_string(StructureKind kind);

/// A structure declaration. Construction runs while parsing; a failed
/// precondition is kept in `error` rather than aborting the parse.
struct ModelStructure {
  std::string name;
  std::string manifold;
  StructureKind kind = StructureKind::almost_contact;
  /// Constructor arguments in canonical printed form.
  std::vector<std::string> args;
  std::optional<ClassicalACS> classical;
  std::optional<GACS> gacs;
  std::optional<GCS> gcs;
  std::string error;

  bool is_contact_type() const { return kind == StructureKind::almost_contact || kind == StructureKind::contact; }
};

struct ModelProduct {
  std::string name;
  std::string left;
  std::string right;
};

struct Model {
  std::vector<Manifold> manifolds;
  std::vector<ModelObject> objects;
  std::vector<ModelStructure> structures;
  std::vector<ModelProduct> products;

  const Manifold* find_manifold(std::string_view name) const;
  const ModelObject* find_object(std::string_view name) const;
  const ModelStructure* find_structure(std::string_view name) const;
  const ModelProduct* find_product(std::string_view name) const;
};

/// Parses and resolves a `.ggm` model. Throws ParseError on syntax errors,
/// unresolved or duplicate names and coordinate collisions in products.
Model parse_model(std::string_view text);

/// Canonical model text; parse_model(print_model(m)) describes the same model.
std::string print_model(const Model& model);

/// Parses a section expression such as "Dx + y*dz" on `chart`, resolving
/// names of vectors and forms declared on `manifold`.
GVector parse_section(std::string_view text, const Model& model, const std::string& manifold);

/// Same, on an explicit chart such as a product's. Named objects resolve only
/// when declared on a manifold called `manifold.name`.
GVector parse_section(std::string_view text, const Model& model, const Manifold& manifold);

}  // namespace gg
