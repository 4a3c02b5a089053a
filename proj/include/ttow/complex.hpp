// Simplicial complexes on {0..v}, Stanley-Reisner ideals and primary
// decomposition of monomial ideals.
#pragma once

#include "ttow/groebner.hpp"

#include <cstdint>
#include <set>

namespace ttow {

TTOW_ERROR(NotDownwardClosed);
TTOW_ERROR(NotMonomial);

using Face = std::uint32_t; // bit a set <=> vertex a in the face

Face face_of(const std::vector<std::size_t> &vertices);
std::vector<std::size_t> vertices_of(Face f);

class SimplicialComplex {
public:
  SimplicialComplex() = default;
  // The void complex (no faces at all) on n vertices.
  explicit SimplicialComplex(std::size_t n) : n_(n) {}
  // Throws NotDownwardClosed unless every subset of a face is listed.
  SimplicialComplex(std::size_t n, std::set<Face> faces);
  // Smallest complex containing the given faces.
  static SimplicialComplex generated(std::size_t n,
                                     const std::vector<Face> &facets);
  static SimplicialComplex simplex(std::size_t n);

  std::size_t nvertices() const { return n_; }
  const std::set<Face> &faces() const { return faces_; }
  bool contains(Face f) const { return faces_.count(f) > 0; }
  bool is_void() const { return faces_.empty(); }
  std::vector<Face> facets() const;
  std::vector<Face> minimal_nonfaces() const;

  // "{{0,1},{2}}": facets, each listed by vertex.
  std::string str() const;
  bool operator==(const SimplicialComplex &o) const {
    return n_ == o.n_ && faces_ == o.faces_;
  }
  bool operator!=(const SimplicialComplex &o) const { return !(*this == o); }

private:
  std::size_t n_ = 0;
  std::set<Face> faces_;
};

Monomial squarefree(std::size_t n, Face f);

Ideal stanley_reisner(const SimplicialComplex &c, const FieldSpec &f);
// Faces A with x^A outside I. I must be a monomial ideal.
SimplicialComplex complex_of(const Ideal &I);

struct PrimaryDecomposition {
  std::vector<Ideal> components;     // monomial primary ideals
  std::vector<Ideal> minimal_primes; // generated by variables
};

// Irredundant irreducible decomposition by splitting on mixed generators,
// with components of equal radical merged.
PrimaryDecomposition monomial_primary_decomposition(const Ideal &I);

} // namespace ttow
