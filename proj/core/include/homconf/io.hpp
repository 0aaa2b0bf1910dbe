#pragma once

// Text surface: polynomials and definition files.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homconf/bialgebra.hpp"
#include "homconf/constructions.hpp"

namespace homconf {

/// Parses `2*L^2 - 3/4*D1 + (L + D)^2`. Unicode aliases: λ μ ν ∂ ∂1..∂4.
/// `line` and `column` locate the first character for error messages.
Poly parse_poly(std::string_view src, int line = 1, int column = 1);

struct NamedForm {
  std::string name;
  std::string algebra;
  BilinearForm form;
};

struct NamedRep {
  std::string algebra;
  Representation rep;
};

struct NamedTensor {
  std::string name;
  std::string algebra;
  Tensor tensor;
};

/// A matched pair given by its two algebras and action tables.
struct NamedPair {
  std::string name;
  Kind kind = Kind::Lie;
  std::string a;
  std::string b;
  std::vector<StructureTable> tables;  // rho, sigma (lie) or la, ra, lb, rb (left-symmetric)
};

struct Task {
  std::string verb;
  std::vector<std::string> args;
  int line = 0;

  friend bool operator==(const Task& x, const Task& y) { return x.verb == y.verb && x.args == y.args; }
};

struct DefinitionFile {
  std::vector<Algebra> algebras;
  std::vector<NamedForm> forms;
  std::vector<NamedRep> reps;
  std::vector<NamedTensor> tensors;
  std::vector<Coalgebra> coalgebras;
  std::vector<NamedPair> pairs;
  std::vector<Task> tasks;

  const Algebra& algebra(const std::string& name) const;
  const NamedForm& form(const std::string& name) const;
  const NamedRep& rep(const std::string& name) const;
  const NamedTensor& tensor(const std::string& name) const;
  const Coalgebra& coalgebra(const std::string& name) const;
  const NamedPair& pair(const std::string& name) const;
};

/// Throws ParseError with the line and column of the offending token.
DefinitionFile parse_definition(std::string_view src);
std::string print_definition(const DefinitionFile& file);

/// Structural equality of the declarations and tasks.
bool same_definition(const DefinitionFile& x, const DefinitionFile& y);

LieMatchedPair resolve_lie_pair(const DefinitionFile& file, const NamedPair& p);
LscMatchedPair resolve_lsc_pair(const DefinitionFile& file, const NamedPair& p);

}  // namespace homconf
