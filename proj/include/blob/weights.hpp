#pragma once

// One-column bipartitions of n, their standard tableaux, residue sequences,
// and the tableau <-> lattice-path bijection. Tableau entries and simple
// transposition indices are 1-based throughout, matching the usual
// combinatorial conventions.

#include <algorithm>
#include <string>
#include <vector>

namespace blob {

struct Bipartition {
    long col1 = 0;  // number of boxes in the first one-column component
    long col2 = 0;

    long n() const { return col1 + col2; }
    long classical_weight() const { return col1 - col2; }

    friend bool operator==(const Bipartition& a, const Bipartition& b) {
        return a.col1 == b.col1 && a.col2 == b.col2;
    }
    friend bool operator!=(const Bipartition& a, const Bipartition& b) { return !(a == b); }
    friend bool operator<(const Bipartition& a, const Bipartition& b) {
        return a.col1 != b.col1 ? a.col1 < b.col1 : a.col2 < b.col2;
    }
    std::string str() const;
};

// All one-column bipartitions of n, in the fixed display order used by every
// emitted table: decreasing |classical weight|, negative weight first on ties.
std::vector<Bipartition> weights_of(long n);

// The bipartition of n with the given classical weight (|w| <= n, w = n mod 2).
Bipartition bipartition_of_classical(long n, long w);

struct Box {
    long row = 1;       // 1-based
    int component = 1;  // 1 or 2
    friend bool operator==(const Box& a, const Box& b) {
        return a.row == b.row && a.component == b.component;
    }
};

// Strict dominance: mu strictly dominates la iff |la_1-la_2| > |mu_1-mu_2|.
bool dominates(const Bipartition& mu, const Bipartition& la);

struct Bicharge {
    int k1 = 0;
    int k2 = 0;
};

bool adjacency_free(const Bicharge& kappa, long e);

// kappa_m + 1 - r mod e for a box in row r of component m.
int box_residue(const Box& b, const Bicharge& kappa, long e);

class LatticePath {
  public:
    LatticePath() = default;
    // points p(0..n) with p(0)=0 and unit steps; throws otherwise.
    explicit LatticePath(std::vector<long> points);

    long n() const { return static_cast<long>(points_.size()) - 1; }
    long at(long k) const { return points_.at(k); }
    long endpoint() const { return points_.back(); }
    const std::vector<long>& points() const { return points_; }

    friend bool operator==(const LatticePath& a, const LatticePath& b) {
        return a.points_ == b.points_;
    }
    // Path-lexicographic: at the first differing step the +1 step sorts
    // first, matching the standard-tableau enumeration order.
    friend bool operator<(const LatticePath& a, const LatticePath& b) {
        size_t m = std::min(a.points_.size(), b.points_.size());
        for (size_t i = 0; i < m; ++i)
            if (a.points_[i] != b.points_[i]) return a.points_[i] > b.points_[i];
        return a.points_.size() < b.points_.size();
    }

  private:
    std::vector<long> points_{0};
};

using ResidueSeq = std::vector<int>;

std::string residue_key(const ResidueSeq& seq);

class Permutation {
  public:
    Permutation() = default;
    static Permutation identity(long n);
    static Permutation simple(int r, long n);  // transposition (r, r+1)
    static Permutation from_word(const std::vector<int>& word, long n);
    static Permutation from_one_line(std::vector<long> image);

    long n() const { return static_cast<long>(image_.size()); }
    long apply(long k) const { return image_.at(k - 1); }
    long apply_inverse(long k) const;
    bool is_identity() const;

    long length() const;  // Coxeter length = inversion count
    bool left_descent(int r) const;
    bool right_descent(int r) const;

    Permutation inverse() const;
    // (a*b)(k) = a(b(k))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.image_ < b.image_;
    }

    // Reduced word from the smallest-index left descent, repeatedly; this is
    // also the lexicographically least reduced word.
    std::vector<int> canonical_word() const;

    const std::vector<long>& one_line() const { return image_; }

  private:
    std::vector<long> image_;  // image_[i] = w(i+1)
};

class StdTableau {
  public:
    StdTableau() = default;
    // boxes_in_entry_order[k-1] is the box containing entry k; must be a
    // standard filling of `shape`.
    StdTableau(Bipartition shape, std::vector<Box> boxes_in_entry_order);

    const Bipartition& shape() const { return shape_; }
    long n() const { return shape_.n(); }
    const Box& box_of(long entry) const { return boxes_.at(entry - 1); }
    long entry_of(const Box& b) const;

    friend bool operator==(const StdTableau& a, const StdTableau& b);
    friend bool operator<(const StdTableau& a, const StdTableau& b);

    std::string str() const;

  private:
    Bipartition shape_;
    std::vector<Box> boxes_;
};

// Book-order filling: rows left to right, top to bottom.
StdTableau dominant_tableau(const Bipartition& la);

ResidueSeq residue_sequence(const StdTableau& t, const Bicharge& kappa, long e);

// Residue sequence of the dominant tableau of la.
ResidueSeq dominant_residue(const Bipartition& la, const Bicharge& kappa, long e);

LatticePath tableau_to_path(const StdTableau& t);
StdTableau path_to_tableau(const LatticePath& p);

// All standard tableaux of this shape in path-lexicographic order
// (a +1 step sorts before a -1 step).
std::vector<StdTableau> enumerate_std(const Bipartition& la);

// d_t, the permutation with d_t . (dominant tableau) = t.
Permutation tableau_permutation(const StdTableau& t);

}  // namespace blob
