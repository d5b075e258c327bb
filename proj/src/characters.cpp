#include "blob/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace blob {

GradedMultiplicityMatrix::GradedMultiplicityMatrix(std::vector<Bipartition> weights)
    : weights_(std::move(weights)),
      entries_(weights_.size(), std::vector<Laurent>(weights_.size())) {}

long GradedMultiplicityMatrix::index_of(const Bipartition& w) const {
    for (size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] == w) return static_cast<long>(i);
    throw std::out_of_range("weight not present in matrix");
}

const Laurent& GradedMultiplicityMatrix::at(const Bipartition& row,
                                            const Bipartition& col) const {
    return entries_[index_of(row)][index_of(col)];
}

void GradedMultiplicityMatrix::set(const Bipartition& row, const Bipartition& col,
                                   Laurent v) {
    entries_[index_of(row)][index_of(col)] = std::move(v);
}

std::vector<long> singular_chain(const LinkageClass& cls) {
    std::vector<long> chain = cls.members;
    std::sort(chain.begin(), chain.end(),
              [](long a, long b) { return std::labs(a) > std::labs(b); });
    return chain;
}

namespace {

long chain_index(const std::vector<long>& chain, long c) {
    for (size_t i = 0; i < chain.size(); ++i)
        if (chain[i] == c) return static_cast<long>(i);
    throw std::logic_error("weight missing from its own linkage chain");
}

// In-class quasi-hereditary comparison mu <= nu (nu at least as dominant),
// refined the way the alcove order demands: equal-length weights on opposite
// sides of the origin are incomparable.
bool inclass_leq(const Bipartition& mu, const Bipartition& nu, const GeometryParams& g) {
    if (mu == nu) return true;
    if (is_singular(mu, g) != is_singular(nu, g)) return false;
    if (is_singular(mu, g))
        return std::labs(mu.classical_weight()) >= std::labs(nu.classical_weight());
    WElement wmu = weyl_element_of(mu, g), wnu = weyl_element_of(nu, g);
    return bruhat_leq(wnu, wmu);
}

}  // namespace

Laurent graded_decomposition_entry(const Bipartition& mu, const Bipartition& la,
                                   const GeometryParams& g) {
    if (mu.n() != la.n()) throw std::invalid_argument("decomposition entry: size mismatch");
    if (mu == la) return Laurent::one();
    LinkageClass cls = linkage_class(la, g);
    if (!cls.contains(mu.classical_weight())) return Laurent::zero();
    if (is_singular(la, g)) {
        std::vector<long> chain = singular_chain(cls);
        long k = chain_index(chain, mu.classical_weight()) -
                 chain_index(chain, la.classical_weight());
        return k >= 0 ? Laurent::monomial(k) : Laurent::zero();
    }
    WElement wmu = weyl_element_of(mu, g), wla = weyl_element_of(la, g);
    return kl_poly(wmu, wla);
}

GradedMultiplicityMatrix graded_decomposition_matrix(long n, const GeometryParams& g) {
    GradedMultiplicityMatrix m(weights_of(n));
    for (const Bipartition& mu : m.row_weights())
        for (const Bipartition& la : m.col_weights())
            m.set(mu, la, graded_decomposition_entry(mu, la, g));
    return m;
}

Laurent graded_weyl_dim(const Bipartition& la, const GeometryParams& g) {
    Laurent sum;
    for (const StdTableau& t : enumerate_std(la))
        sum += Laurent::monomial(tableau_degree(t, g));
    return sum;
}

Laurent truncated_weyl_dim(const Bipartition& mu, const Bipartition& la,
                           const GeometryParams& g) {
    Laurent sum;
    for (const StdTableau& t : linked_tableaux(mu, la, g))
        sum += Laurent::monomial(tableau_degree(t, g));
    return sum;
}

GradedMultiplicityMatrix projective_delta_multiplicities(long n, const GeometryParams& g) {
    // (P(la) : Delta(mu))_v = [Delta(mu) : L(la)]_v, with the grading carried
    // over unchanged; validated downstream against socle degrees.
    GradedMultiplicityMatrix m(weights_of(n));
    for (const Bipartition& la : m.row_weights())
        for (const Bipartition& mu : m.col_weights())
            m.set(la, mu, graded_decomposition_entry(mu, la, g));
    return m;
}

GradedMultiplicityMatrix graded_cartan_matrix(long n, const GeometryParams& g) {
    GradedMultiplicityMatrix proj = projective_delta_multiplicities(n, g);
    GradedMultiplicityMatrix dec = graded_decomposition_matrix(n, g);
    GradedMultiplicityMatrix cartan(weights_of(n));
    long size = cartan.size();
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j) {
            Laurent sum;
            for (long k = 0; k < size; ++k) sum += proj.at(i, k) * dec.at(k, j);
            cartan.set(cartan.row_weights()[i], cartan.col_weights()[j], sum);
        }
    return cartan;
}

namespace {

Laurent tilting_formula_entry(const Bipartition& mu, const Bipartition& la,
                              const GeometryParams& g) {
    if (mu == la) return Laurent::one();
    LinkageClass cls = linkage_class(la, g);
    if (!cls.contains(mu.classical_weight())) return Laurent::zero();
    if (is_singular(la, g)) {
        std::vector<long> chain = singular_chain(cls);
        long k = chain_index(chain, mu.classical_weight()) -
                 chain_index(chain, la.classical_weight());
        return k >= 0 ? Laurent::monomial(-k) : Laurent::zero();
    }
    WElement wmu = weyl_element_of(mu, g), wla = weyl_element_of(la, g);
    return inverse_kl_poly(wla, wmu).bar();
}

GradedMultiplicityMatrix tilting_by_construction(long n, const GeometryParams& g) {
    GradedMultiplicityMatrix out(weights_of(n));
    std::vector<bool> done(out.size(), false);
    for (const Bipartition& seed : out.row_weights()) {
        if (done[out.index_of(seed)]) continue;
        LinkageClass cls = linkage_class(seed, g);
        std::vector<Bipartition> members;
        for (long c : cls.members) members.push_back(bipartition_of_classical(n, c));
        for (const Bipartition& m : members) done[out.index_of(m)] = true;

        Extremes ex = extremes(seed, g);
        const Bipartition nu_max = ex.maximal;

        // Delta-multiplicities of the maximal-weight tilting module, built
        // from a projective cover of a minimal weight (plus one extra Weyl
        // layer when that minimal weight is paired).
        auto build_from = [&](const Bipartition& la_min) {
            std::map<long, Laurent> row;  // keyed by column index
            long d = la_min == nu_max
                         ? 0
                         : tableau_degree(max_degree_tableau(nu_max, la_min, g), g);
            for (const Bipartition& mu : members) {
                Laurent v = graded_decomposition_entry(mu, la_min, g).shifted(-d);
                if (!v.is_zero()) row[out.index_of(mu)] = v;
            }
            if (is_paired(la_min, g)) {
                if (ex.minimal.size() != 2)
                    throw std::logic_error("paired minimal weight without partner");
                const Bipartition& other =
                    ex.minimal[0] == la_min ? ex.minimal[1] : ex.minimal[0];
                row[out.index_of(other)] += Laurent::monomial(-d);
            }
            return row;
        };

        std::map<long, Laurent> top_row = build_from(ex.minimal[0]);
        if (ex.minimal.size() == 2) {
            // The construction must not depend on which minimal weight seeds it.
            if (build_from(ex.minimal[1]) != top_row)
                throw std::logic_error("tilting construction depends on minimal-weight choice");
        }

        for (const Bipartition& nu : members) {
            // Truncate to composition factors at or below nu, then renormalize
            // so the diagonal multiplicity is 1.
            std::map<long, Laurent> row;
            for (const Bipartition& mu : members) {
                if (!inclass_leq(mu, nu, g)) continue;
                auto it = top_row.find(out.index_of(mu));
                if (it != top_row.end() && !it->second.is_zero())
                    row[it->first] = it->second;
            }
            auto diag = row.find(out.index_of(nu));
            if (diag == row.end() || diag->second.coefficients().size() != 1 ||
                diag->second.coefficients().begin()->second != 1)
                throw std::logic_error("tilting construction: bad diagonal entry");
            long shift = -diag->second.coefficients().begin()->first;
            for (auto& [col, v] : row) out.set(nu, out.col_weights()[col], v.shifted(shift));
        }
    }
    return out;
}

}  // namespace

GradedMultiplicityMatrix tilting_delta_multiplicities(long n, const GeometryParams& g,
                                                      TiltingMode mode) {
    if (mode == TiltingMode::Construction) return tilting_by_construction(n, g);
    GradedMultiplicityMatrix m(weights_of(n));
    for (const Bipartition& mu : m.row_weights())
        for (const Bipartition& la : m.col_weights())
            m.set(mu, la, tilting_formula_entry(mu, la, g));
    return m;
}

SocleDescriptor socle_of_projective(const Bipartition& la, const GeometryParams& g) {
    Extremes ex = extremes(la, g);
    Bipartition la_min = la;
    bool la_is_minimal = false;
    for (const Bipartition& m : ex.minimal)
        if (m == la) la_is_minimal = true;
    if (!la_is_minimal) la_min = ex.minimal[0];

    long up = la == ex.maximal ? 0 : tableau_degree(max_degree_tableau(ex.maximal, la, g), g);
    long down = la == la_min ? 0 : tableau_degree(max_degree_tableau(la, la_min, g), g);

    SocleDescriptor out;
    out.shift = 2 * up + down;
    out.constituents.push_back(la_min);
    if (is_paired(la_min, g)) {
        if (ex.minimal.size() != 2)
            throw std::logic_error("paired minimal weight without partner");
        out.constituents.push_back(ex.minimal[0] == la_min ? ex.minimal[1] : ex.minimal[0]);
    }
    return out;
}

std::vector<Bipartition> restriction_delta_pair(const Bipartition& la) {
    long a = la.col1, b = la.col2;
    if (a + b < 1) throw std::invalid_argument("restriction of the empty bipartition");
    if (b == 0) return {{a - 1, 0}};
    if (a == 0) return {{0, b - 1}};
    if (a >= b) return {{a - 1, b}, {a, b - 1}};
    return {{a, b - 1}, {a - 1, b}};
}

std::map<long, BigInt> simple_dimensions(long n, const GeometryParams& g) {
    std::map<long, BigInt> dims;
    // weights_of order has strictly-more-dominated weights first, so every
    // composition factor of Delta(mu) other than L(mu) is already solved.
    for (const Bipartition& mu : weights_of(n)) {
        BigInt total = binomial(n, mu.col1);
        for (const Bipartition& la : weights_of(n)) {
            if (la == mu) continue;
            Laurent d = graded_decomposition_entry(mu, la, g);
            if (d.is_zero()) continue;
            total -= d.eval_at_one() * dims.at(la.classical_weight());
        }
        if (total <= 0) throw std::logic_error("non-positive simple dimension");
        dims[mu.classical_weight()] = total;
    }
    return dims;
}

GradedMultiplicityMatrix decomposition_from_dimensions(
    long n, const GeometryParams& g, const std::map<long, BigInt>& delta_dims,
    const std::map<long, BigInt>& simple_dims) {
    GradedMultiplicityMatrix out(weights_of(n));
    for (const Bipartition& mu : out.row_weights()) {
        out.set(mu, mu, Laurent::one());
        LinkageClass cls = linkage_class(mu, g);
        std::vector<long> candidates;
        for (long c : cls.members)
            if (std::labs(c) > std::labs(mu.classical_weight())) candidates.push_back(c);
        BigInt defect = delta_dims.at(mu.classical_weight()) -
                        simple_dims.at(mu.classical_weight());
        // The composition factors below L(mu) form the unique 0/1 subset of
        // the strictly dominated class members whose simple dimensions sum to
        // the defect.
        size_t count = candidates.size();
        std::vector<long> solution;
        bool found = false;
        for (size_t mask = 0; mask < (1u << count); ++mask) {
            BigInt sum = 0;
            for (size_t i = 0; i < count; ++i)
                if (mask & (1u << i)) sum += simple_dims.at(candidates[i]);
            if (sum == defect) {
                if (found)
                    throw std::logic_error(
                        "decomposition_from_dimensions: ambiguous subset solution");
                found = true;
                solution.clear();
                for (size_t i = 0; i < count; ++i)
                    if (mask & (1u << i)) solution.push_back(candidates[i]);
            }
        }
        if (!found)
            throw std::logic_error("decomposition_from_dimensions: inconsistent dimensions");
        for (long c : solution)
            out.set(mu, bipartition_of_classical(n, c), Laurent::one());
    }
    return out;
}

}  // namespace blob
