#pragma once

// Character-level representation theory: graded decomposition matrices,
// projective and tilting Delta-multiplicities, Cartan matrices, socle
// descriptors of projective covers, and restriction bookkeeping.

#include "blob/alcoves.hpp"
#include "blob/laurent.hpp"
#include "blob/scalars.hpp"
#include "blob/weights.hpp"

#include <map>
#include <vector>

namespace blob {

class GradedMultiplicityMatrix {
  public:
    GradedMultiplicityMatrix() = default;
    explicit GradedMultiplicityMatrix(std::vector<Bipartition> weights);

    const std::vector<Bipartition>& row_weights() const { return weights_; }
    const std::vector<Bipartition>& col_weights() const { return weights_; }
    long size() const { return static_cast<long>(weights_.size()); }

    long index_of(const Bipartition& w) const;

    const Laurent& at(const Bipartition& row, const Bipartition& col) const;
    const Laurent& at(long row, long col) const { return entries_.at(row).at(col); }
    void set(const Bipartition& row, const Bipartition& col, Laurent v);

    friend bool operator==(const GradedMultiplicityMatrix& a,
                           const GradedMultiplicityMatrix& b) {
        return a.weights_ == b.weights_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const GradedMultiplicityMatrix& a,
                           const GradedMultiplicityMatrix& b) {
        return !(a == b);
    }

  private:
    std::vector<Bipartition> weights_;  // fixed display order, rows == cols
    std::vector<std::vector<Laurent>> entries_;
};

// The singular linkage-class chain in canonical order: decreasing |classical
// weight|, ending at the weight on a fundamental-alcove wall.
std::vector<long> singular_chain(const LinkageClass& cls);

// [Delta(mu) : L(la)]_v for a single pair of weights of the same n.
Laurent graded_decomposition_entry(const Bipartition& mu, const Bipartition& la,
                                   const GeometryParams& g);

GradedMultiplicityMatrix graded_decomposition_matrix(long n, const GeometryParams& g);

// Graded dimension of Delta(la): sum of v^{deg t} over Std(la).
Laurent graded_weyl_dim(const Bipartition& la, const GeometryParams& g);
// Graded dimension of the dominant-residue word space of Delta(mu):
// sum over Std_la(mu).
Laurent truncated_weyl_dim(const Bipartition& mu, const Bipartition& la,
                           const GeometryParams& g);

// (P(la) : Delta(mu))_v via Brauer-Humphreys reciprocity; rows are projective
// labels, columns Weyl labels.
GradedMultiplicityMatrix projective_delta_multiplicities(long n, const GeometryParams& g);

// [P(la) : L(nu)]_v.
GradedMultiplicityMatrix graded_cartan_matrix(long n, const GeometryParams& g);

enum class TiltingMode { Formula, Construction };

// (T(mu) : Delta(la))_v; the two modes must agree and are cross-checked in
// the test suites.
GradedMultiplicityMatrix tilting_delta_multiplicities(long n, const GeometryParams& g,
                                                      TiltingMode mode);

struct SocleDescriptor {
    std::vector<Bipartition> constituents;  // one or two simple labels
    long shift = 0;                         // common grade shift
};

SocleDescriptor socle_of_projective(const Bipartition& la, const GeometryParams& g);

// Restriction of Delta(la), la of n+1, at character level: the ordered
// (submodule, quotient) pair of Weyl labels of n, or a single label at the
// one-column boundary.
std::vector<Bipartition> restriction_delta_pair(const Bipartition& la);

// dim L(la) for every weight of n, from the unitriangular system
// dim Delta(mu) = sum_la [Delta(mu):L(la)](1) dim L(la).
std::map<long, BigInt> simple_dimensions(long n, const GeometryParams& g);

// Recover the ungraded decomposition matrix from Weyl and simple dimensions
// alone (no Kazhdan-Lusztig input): for each mu the multiset of strictly
// dominated composition factors is the unique 0/1 subset matching
// dim Delta(mu) - dim L(mu). Errors if no unique solution exists.
GradedMultiplicityMatrix decomposition_from_dimensions(
    long n, const GeometryParams& g, const std::map<long, BigInt>& delta_dims,
    const std::map<long, BigInt>& simple_dims);

}  // namespace blob
