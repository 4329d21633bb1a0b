#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/simplicial.hpp"
#include "ainf/suspension.hpp"

namespace ainf {

/// An algebra as read from or written to JSON, optionally with a subalgebra.
///
///   {"field": "q", "objects": 2, "arity_bound": 2,
///    "basis": [{"id": "e1", "degree": 0, "source": 1, "target": 1, "unit": true}, ...],
///    "mu": [{"inputs": ["x", "e1"], "output": [["1", "x"]]}, ...],
///    "subalgebra": ["e1", "e2", {"id": "y", "terms": [["1", "x"], ["-1", "z"]]}]}
///
/// Objects are numbered from 1. Inputs are written (a_d, ..., a_1). Coefficients
/// are strings (integers are accepted on input). A subalgebra given only by ids
/// is the span of those basis elements; otherwise every entry is an object.
struct AlgebraDocument {
  AlgebraPtr algebra;
  std::optional<AlgebraPair> pair;  // pair->ambient == algebra
  std::vector<std::string> tags;    // per basis element; empty when untagged
};

/// Throws ErrorKind::kParse on malformed JSON and ErrorKind::kSemantic on
/// well-formed documents that do not describe a valid algebra.
AlgebraDocument parse_algebra_document(std::string_view text);
/// Normalized: basis order kept, mu entries sorted by arity and inputs, terms
/// by basis order, coefficients canonical.
std::string serialize_algebra_document(const AlgebraDocument& doc);

AlgebraDocument document_from_algebra(const AlgebraPtr& alg);
AlgebraDocument document_from_pair(const AlgebraPair& pair);
/// B^s with basis tags "+", "-", "s" and A^s as its subalgebra.
AlgebraDocument document_from_suspension(const SuspensionResult& s);

/// {"vertices": [...], "simplices": [[names], ...], "subcomplex": [[names], ...]}.
/// Simplices may instead be objects {"name", "vertices", "faces"} (faces by
/// name), which allows several simplices on one vertex set.
SimplicialPair parse_complex_document(std::string_view text);
/// Always written in the explicit form, so glued complexes round-trip.
std::string serialize_complex_document(const SimplicialPair& pair);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace ainf
