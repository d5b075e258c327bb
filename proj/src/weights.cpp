#include "blob/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blob {

std::string Bipartition::str() const {
    std::ostringstream os;
    os << "(1^" << col1 << ",1^" << col2 << ")";
    return os.str();
}

std::vector<Bipartition> weights_of(long n) {
    if (n < 0) throw std::invalid_argument("weights_of: negative n");
    std::vector<Bipartition> out;
    for (long c1 = 0; c1 <= n; ++c1) out.push_back({c1, n - c1});
    std::sort(out.begin(), out.end(), [](const Bipartition& a, const Bipartition& b) {
        long wa = a.classical_weight(), wb = b.classical_weight();
        if (std::labs(wa) != std::labs(wb)) return std::labs(wa) > std::labs(wb);
        return wa < wb;
    });
    return out;
}

Bipartition bipartition_of_classical(long n, long w) {
    if (std::labs(w) > n || (n - w) % 2 != 0)
        throw std::invalid_argument("bipartition_of_classical: bad weight");
    return {(n + w) / 2, (n - w) / 2};
}

bool dominates(const Bipartition& mu, const Bipartition& la) {
    if (mu.n() != la.n()) throw std::invalid_argument("dominates: size mismatch");
    return std::labs(la.classical_weight()) > std::labs(mu.classical_weight());
}

bool adjacency_free(const Bicharge& kappa, long e) {
    if (e < 2) return false;
    long d = ((kappa.k1 - kappa.k2) % e + e) % e;
    return d != 0 && d != 1 && d != e - 1;
}

int box_residue(const Box& b, const Bicharge& kappa, long e) {
    if (!adjacency_free(kappa, e))
        throw std::invalid_argument("box_residue: bicharge is not adjacency-free");
    long base = b.component == 1 ? kappa.k1 : kappa.k2;
    long r = (base + 1 - b.row) % e;
    return static_cast<int>((r + e) % e);
}

LatticePath::LatticePath(std::vector<long> points) : points_(std::move(points)) {
    if (points_.empty() || points_[0] != 0)
        throw std::invalid_argument("lattice path must start at 0");
    for (size_t k = 0; k + 1 < points_.size(); ++k)
        if (std::labs(points_[k + 1] - points_[k]) != 1)
            throw std::invalid_argument("lattice path steps must be +-1");
}

std::string residue_key(const ResidueSeq& seq) {
    std::string key;
    key.reserve(seq.size());
    for (int v : seq) key.push_back(static_cast<char>('0' + v));
    return key;
}

Permutation Permutation::identity(long n) {
    Permutation p;
    p.image_.resize(n);
    std::iota(p.image_.begin(), p.image_.end(), 1);
    return p;
}

Permutation Permutation::simple(int r, long n) {
    if (r < 1 || r >= n) throw std::out_of_range("simple transposition index");
    Permutation p = identity(n);
    std::swap(p.image_[r - 1], p.image_[r]);
    return p;
}

Permutation Permutation::from_one_line(std::vector<long> image) {
    std::vector<bool> seen(image.size(), false);
    for (long v : image) {
        if (v < 1 || v > static_cast<long>(image.size()) || seen[v - 1])
            throw std::invalid_argument("from_one_line: not a permutation");
        seen[v - 1] = true;
    }
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::from_word(const std::vector<int>& word, long n) {
    Permutation p = identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        // multiply on the left: p <- s_r * p, i.e. postcompose images
        int r = *it;
        if (r < 1 || r >= n) throw std::out_of_range("word letter out of range");
        for (auto& v : p.image_) {
            if (v == r)
                v = r + 1;
            else if (v == r + 1)
                v = r;
        }
    }
    return p;
}

long Permutation::apply_inverse(long k) const {
    for (long i = 0; i < n(); ++i)
        if (image_[i] == k) return i + 1;
    throw std::out_of_range("apply_inverse");
}

bool Permutation::is_identity() const {
    for (long i = 0; i < n(); ++i)
        if (image_[i] != i + 1) return false;
    return true;
}

long Permutation::length() const {
    long inv = 0;
    for (long i = 0; i < n(); ++i)
        for (long j = i + 1; j < n(); ++j)
            if (image_[i] > image_[j]) ++inv;
    return inv;
}

bool Permutation::left_descent(int r) const {
    return apply_inverse(r) > apply_inverse(r + 1);
}

bool Permutation::right_descent(int r) const {
    return image_.at(r - 1) > image_.at(r);
}

Permutation Permutation::inverse() const {
    Permutation p = identity(n());
    for (long i = 0; i < n(); ++i) p.image_[image_[i] - 1] = i + 1;
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("permutation size mismatch");
    Permutation p;
    p.image_.resize(a.n());
    for (long i = 0; i < a.n(); ++i) p.image_[i] = a.image_[b.image_[i] - 1];
    return p;
}

std::vector<int> Permutation::canonical_word() const {
    std::vector<int> word;
    Permutation w = *this;
    while (!w.is_identity()) {
        int r = 0;
        for (int cand = 1; cand < w.n(); ++cand)
            if (w.left_descent(cand)) { r = cand; break; }
        if (r == 0) throw std::logic_error("non-identity permutation without descent");
        word.push_back(r);
        w = simple(r, w.n()) * w;
    }
    return word;
}

StdTableau::StdTableau(Bipartition shape, std::vector<Box> boxes)
    : shape_(shape), boxes_(std::move(boxes)) {
    if (static_cast<long>(boxes_.size()) != shape_.n())
        throw std::invalid_argument("tableau entry count mismatch");
    // Standardness: entries strictly increase down each column, every box used.
    std::vector<long> last_row{0, 0, 0};
    std::vector<long> count{0, 0, 0};
    for (const Box& b : boxes_) {
        if (b.component != 1 && b.component != 2)
            throw std::invalid_argument("tableau component out of range");
        long limit = b.component == 1 ? shape_.col1 : shape_.col2;
        if (b.row < 1 || b.row > limit) throw std::invalid_argument("tableau box outside shape");
        if (b.row <= last_row[b.component])
            throw std::invalid_argument("tableau column entries must increase");
        last_row[b.component] = b.row;
        ++count[b.component];
    }
    if (count[1] != shape_.col1 || count[2] != shape_.col2)
        throw std::invalid_argument("tableau does not fill its shape");
}

long StdTableau::entry_of(const Box& b) const {
    for (size_t k = 0; k < boxes_.size(); ++k)
        if (boxes_[k] == b) return static_cast<long>(k) + 1;
    throw std::out_of_range("entry_of: box not in tableau");
}

bool operator==(const StdTableau& a, const StdTableau& b) {
    if (!(a.shape_ == b.shape_)) return false;
    for (size_t k = 0; k < a.boxes_.size(); ++k)
        if (!(a.boxes_[k] == b.boxes_[k])) return false;
    return true;
}

bool operator<(const StdTableau& a, const StdTableau& b) {
    return tableau_to_path(a) < tableau_to_path(b);
}

std::string StdTableau::str() const {
    std::ostringstream os;
    os << shape_.str() << "[";
    for (long k = 1; k <= n(); ++k) {
        if (k > 1) os << " ";
        os << (box_of(k).component == 1 ? "+" : "-");
    }
    os << "]";
    return os.str();
}

StdTableau dominant_tableau(const Bipartition& la) {
    std::vector<Box> boxes;
    long rows = std::max(la.col1, la.col2);
    for (long r = 1; r <= rows; ++r) {
        if (r <= la.col1) boxes.push_back({r, 1});
        if (r <= la.col2) boxes.push_back({r, 2});
    }
    return StdTableau(la, std::move(boxes));
}

ResidueSeq residue_sequence(const StdTableau& t, const Bicharge& kappa, long e) {
    ResidueSeq seq;
    seq.reserve(t.n());
    for (long k = 1; k <= t.n(); ++k) seq.push_back(box_residue(t.box_of(k), kappa, e));
    return seq;
}

ResidueSeq dominant_residue(const Bipartition& la, const Bicharge& kappa, long e) {
    return residue_sequence(dominant_tableau(la), kappa, e);
}

LatticePath tableau_to_path(const StdTableau& t) {
    std::vector<long> pts{0};
    for (long k = 1; k <= t.n(); ++k)
        pts.push_back(pts.back() + (t.box_of(k).component == 1 ? 1 : -1));
    return LatticePath(std::move(pts));
}

StdTableau path_to_tableau(const LatticePath& p) {
    std::vector<Box> boxes;
    long r1 = 0, r2 = 0;
    for (long k = 1; k <= p.n(); ++k) {
        if (p.at(k) - p.at(k - 1) == 1)
            boxes.push_back({++r1, 1});
        else
            boxes.push_back({++r2, 2});
    }
    return StdTableau({r1, r2}, std::move(boxes));
}

std::vector<StdTableau> enumerate_std(const Bipartition& la) {
    std::vector<StdTableau> out;
    std::vector<Box> boxes;
    long n = la.n();
    // Depth-first with the +1 step explored before the -1 step produces
    // path-lexicographic order directly.
    std::function<void(long, long)> rec = [&](long used1, long used2) {
        if (used1 + used2 == n) {
            out.emplace_back(la, boxes);
            return;
        }
        if (used1 < la.col1) {
            boxes.push_back({used1 + 1, 1});
            rec(used1 + 1, used2);
            boxes.pop_back();
        }
        if (used2 < la.col2) {
            boxes.push_back({used2 + 1, 2});
            rec(used1, used2 + 1);
            boxes.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Permutation tableau_permutation(const StdTableau& t) {
    StdTableau dom = dominant_tableau(t.shape());
    std::vector<long> image(t.n());
    for (long k = 1; k <= t.n(); ++k) image[k - 1] = t.entry_of(dom.box_of(k));
    return Permutation::from_one_line(std::move(image));
}

}  // namespace blob
