#pragma once

// Alcove geometry for the infinite dihedral group acting on the classical
// weight line: walls, linkage classes, Weyl group elements by (length, side),
// tableau degrees, maximal-degree tableaux, and the (inverse) Kazhdan-Lusztig
// polynomials of this geometry.

#include "blob/laurent.hpp"
#include "blob/weights.hpp"

#include <set>
#include <vector>

namespace blob {

struct GeometryParams {
    long e = 4;
    Bicharge kappa;

    GeometryParams() = default;
    GeometryParams(long e_, Bicharge kappa_);

    // Positive representative of kappa_1 - kappa_2 mod e; walls are the
    // integers congruent to it. Adjacency-freeness puts it in [2, e-2].
    long positive_wall() const { return wall_pos_; }
    long negative_wall() const { return wall_pos_ - e; }

    bool is_wall(long c) const;
    // Index of the alcove containing c (0 = fundamental); error on a wall.
    long alcove_index(long c) const;

  private:
    long wall_pos_ = 2;
};

struct WElement {
    long length = 0;
    int side = 0;  // +1 right of the origin, -1 left, 0 only for the identity

    friend bool operator==(const WElement& a, const WElement& b) {
        return a.length == b.length && a.side == b.side;
    }
    friend bool operator!=(const WElement& a, const WElement& b) { return !(a == b); }
};

// Infinite dihedral Bruhat order: y <= x iff l(y) < l(x) or y = x.
bool bruhat_leq(const WElement& y, const WElement& x);

// h_{y,x}(v) = v^{l(x)-l(y)} if y <= x, else 0.
Laurent kl_poly(const WElement& y, const WElement& x);
// h^{x,y}(v), the inverse Kazhdan-Lusztig polynomial; in this rank the same
// closed formula with the roles of the arguments fixed by the superscript.
Laurent inverse_kl_poly(const WElement& x, const WElement& y);

struct LinkageClass {
    long n = 0;
    std::vector<long> members;  // classical weights, decreasing

    bool contains(long c) const;
};

bool is_singular(const Bipartition& la, const GeometryParams& g);

// The element carrying the fundamental-alcove representative to la.
// Error if la is singular.
WElement weyl_element_of(const Bipartition& la, const GeometryParams& g);

LinkageClass linkage_class(const Bipartition& la, const GeometryParams& g);

// Chain labels la_0 = la, la_1, ... of a singular linkage class: alternating
// extremes, starting on the side opposite la_0.
std::vector<long> singular_labels(const Bipartition& la, const GeometryParams& g);

// First step index at which the dominant path of la meets a wall of the
// fundamental alcove. Error if la lies in the open fundamental alcove.
long f_lambda(const Bipartition& la, const GeometryParams& g);

LatticePath reflect_after(const LatticePath& p, long k, const GeometryParams& g);

// All paths obtainable from p by repeatedly reflecting at wall touchpoints.
std::set<LatticePath> reflection_closure(const LatticePath& p, const GeometryParams& g);

// Std_la(mu): standard tableaux of shape mu whose residue sequence is the
// dominant residue sequence of la, computed by reflecting the dominant path
// of la. Deterministic path-lexicographic order.
std::vector<StdTableau> linked_tableaux(const Bipartition& mu, const Bipartition& la,
                                        const GeometryParams& g);

long path_degree(const LatticePath& p, const GeometryParams& g);
long tableau_degree(const StdTableau& t, const GeometryParams& g);

// The unique maximal-degree element of Std_la(mu); error if that set is empty.
StdTableau max_degree_tableau(const Bipartition& mu, const Bipartition& la,
                              const GeometryParams& g);

// A weight is paired when its linkage class contains a (unique) member
// incomparable to it: the same-length weight on the other side of the origin.
bool is_paired(const Bipartition& la, const GeometryParams& g);

struct Extremes {
    Bipartition maximal;
    std::vector<Bipartition> minimal;  // one or two
};

Extremes extremes(const Bipartition& la, const GeometryParams& g);

}  // namespace blob
