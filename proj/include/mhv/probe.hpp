#pragma once

#include "mhv/modules.hpp"

#include <string>
#include <vector>

namespace mhv {

// Defaults sized so that the whole capped word orbit of every designated
// reducibility witness is explored exactly in well under a minute; at word
// length 4 the largest such orbit has dimension 4638.
struct ProbeCaps {
    long long index_window = 6;
    long long max_word_length = 4;
    long long max_dimension = 20000;
};

enum class ProbeVerdict { CyclicEvidence, ProperWitness, Inconclusive };

std::string probe_verdict_name(ProbeVerdict v);

// Outcome of the finite-truncation submodule search.
//  - CyclicEvidence: the vacuum basis vector entered the explored span; the
//    recorded path, replayed from the seed, produces a vector with nonzero
//    vacuum coordinate.
//  - ProperWitness: the whole capped word orbit was explored and its span
//    excludes the vacuum vector; the echelon basis is the certificate.
//    certified = the seed additionally passed the structural check (exact
//    Whittaker vector, or membership in the closed t-line of a degenerate
//    Omega factor), which upgrades the witness from empirical evidence to a
//    proof of reducibility.
//  - Inconclusive: a cap was hit before either happened.
struct ProbeOutcome {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    bool certified = false;
    std::vector<std::string> witness_basis; // rendered rows (truncated for reports)
    std::vector<std::string> path;
    long long dims_explored = 0;
    long long words_explored = 0;
    std::string note;
};

// Exact sparse row echelon over the rationals: rows are normalized to a unit
// leading coefficient and indexed by their pivot key.
class ExactRowSpan {
public:
    // Reduces vec against the span; inserts the residual if nonzero.
    // Returns true when the dimension grew.
    bool insert(SparseCoords vec);
    bool contains(SparseCoords vec) const;
    // Leading-term reduction without insertion (complete membership test:
    // the residual is empty iff the vector lies in the span).
    SparseCoords reduce_against(SparseCoords vec) const { return reduce(std::move(vec)); }
    long long dimension() const { return static_cast<long long>(rows_.size()); }
    const std::map<BasisKey, SparseCoords>& rows() const { return rows_; }

private:
    SparseCoords reduce(SparseCoords vec) const;
    std::map<BasisKey, SparseCoords> rows_;
};

// Breadth-first closure of the span of {u * seed} over all words u in the
// window generators up to the word-length cap, with exact elimination.
// Returns CyclicEvidence the moment any produced vector has a nonzero vacuum
// coordinate. The span lives in the full module; finiteness comes from the
// caps, not from truncating the action.
ProbeOutcome probe_submodule(const Vector& seed, const ProbeCaps& caps);

} // namespace mhv
