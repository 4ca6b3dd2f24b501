#include "mhv/probe.hpp"

#include "mhv/analysis.hpp"
#include "mhv/errors.hpp"

#include <deque>

namespace mhv {

std::string probe_verdict_name(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::CyclicEvidence: return "CyclicEvidence";
        case ProbeVerdict::ProperWitness: return "ProperWitness";
        case ProbeVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

SparseCoords ExactRowSpan::reduce(SparseCoords vec) const {
    while (!vec.empty()) {
        auto lead = vec.begin();
        auto row = rows_.find(lead->first);
        if (row == rows_.end()) break;
        Scalar f = lead->second;
        for (const auto& [k, c] : row->second) {
            auto it = vec.find(k);
            if (it == vec.end()) {
                Scalar v = -(f * c);
                if (!v.is_zero()) vec.emplace(k, std::move(v));
            } else {
                it->second -= f * c;
                if (it->second.is_zero()) vec.erase(it);
            }
        }
    }
    return vec;
}

bool ExactRowSpan::insert(SparseCoords vec) {
    vec = reduce(std::move(vec));
    if (vec.empty()) return false;
    Scalar inv = Scalar(1) / vec.begin()->second;
    for (auto& [k, c] : vec) c *= inv;
    BasisKey pivot = vec.begin()->first;
    rows_.emplace(std::move(pivot), std::move(vec));
    return true;
}

bool ExactRowSpan::contains(SparseCoords vec) const { return reduce(std::move(vec)).empty(); }

namespace {

std::vector<Generator> window_generators(const ModulePtr& mod, long long K) {
    // Central elements act by scalars and never grow the span; skip them.
    std::vector<Generator> out;
    for (long long m = -K; m <= K; ++m) {
        Generator g = Generator::d(m);
        if (mod->in_ambient(g)) out.push_back(g);
    }
    for (long long t = -(2 * K - 1); t <= 2 * K - 1; t += 2) {
        Generator g = Generator::h_twice(t);
        if (mod->in_ambient(g)) out.push_back(g);
    }
    return out;
}

// Projection of a pure tensor-key vector onto one side, or nullopt when some
// key has a different partner on the other side.
std::optional<Vector> project_side(const Vector& v, const TensorModule& t, bool left_fixed) {
    const ModulePtr& target = left_fixed ? t.right() : t.left();
    const ModulePtr& fixed = left_fixed ? t.left() : t.right();
    auto vac = fixed->vacuum();
    if (!vac) return std::nullopt;
    Vector out(target);
    for (const auto& [key, c] : v.coords()) {
        if (key.kind != BasisKey::Kind::Pair) return std::nullopt;
        const BasisKey& anchor = left_fixed ? *key.left : *key.right;
        if (!(anchor == *vac)) return std::nullopt;
        out.add(left_fixed ? *key.right : *key.left, c);
    }
    return out;
}

bool omega_closed_line_member(const ModulePtr& mod, const Vector& seed) {
    if (mod->kind() == ModuleKind::Omega) {
        const auto& om = static_cast<const OmegaModule&>(*mod);
        if (!om.params().alpha.is_zero() || !om.params().beta.is_zero()) return false;
        for (const auto& [key, c] : seed.coords())
            if (key.poly_exp < 1) return false;
        return true;
    }
    if (mod->kind() == ModuleKind::Tensor) {
        const auto& t = static_cast<const TensorModule&>(*mod);
        auto side_degenerate = [](const ModulePtr& m) {
            if (m->kind() != ModuleKind::Omega) return false;
            const auto& om = static_cast<const OmegaModule&>(*m);
            return om.params().alpha.is_zero() && om.params().beta.is_zero();
        };
        if (side_degenerate(t.left())) {
            bool all = true;
            for (const auto& [key, c] : seed.coords())
                if (key.kind != BasisKey::Kind::Pair || key.left->kind != BasisKey::Kind::Poly ||
                    key.left->poly_exp < 1) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        if (side_degenerate(t.right())) {
            bool all = true;
            for (const auto& [key, c] : seed.coords())
                if (key.kind != BasisKey::Kind::Pair || key.right->kind != BasisKey::Kind::Poly ||
                    key.right->poly_exp < 1) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    }
    return false;
}

// Structural certification of a reducibility witness: an exact Whittaker
// vector generates a submodule avoiding the vacuum, and a seed inside the
// t-line of a degenerate Omega factor stays there.
bool certify_seed(const Vector& seed, long long window) {
    const ModulePtr& mod = seed.module();
    switch (mod->kind()) {
        case ModuleKind::Induced:
            return whittaker_vector_check(
                seed, static_cast<const InducedWhittakerModule&>(*mod).phi(), window);
        case ModuleKind::Sugawara:
            return whittaker_vector_check(
                seed, WhittakerAny(static_cast<const SugawaraHModule&>(*mod).phi()), window);
        case ModuleKind::Omega:
            return omega_closed_line_member(mod, seed);
        case ModuleKind::Tensor: {
            if (omega_closed_line_member(mod, seed)) return true;
            const auto& t = static_cast<const TensorModule&>(*mod);
            for (bool left_fixed : {true, false}) {
                auto part = project_side(seed, t, left_fixed);
                if (!part) continue;
                const ModulePtr& side = left_fixed ? t.right() : t.left();
                if (side->kind() == ModuleKind::Induced &&
                    whittaker_vector_check(
                        *part, static_cast<const InducedWhittakerModule&>(*side).phi(), window))
                    return true;
            }
            return false;
        }
        default:
            return false;
    }
}

} // namespace

ProbeOutcome probe_submodule(const Vector& seed, const ProbeCaps& caps) {
    if (seed.is_zero()) fail("BadKey", "probe seed must be nonzero");
    const ModulePtr& mod = seed.module();
    auto vac = mod->vacuum();
    if (!vac) fail("BadModule", "probe needs a module with a distinguished vacuum coordinate");

    ProbeOutcome out;
    out.certified = certify_seed(seed, caps.index_window);

    std::vector<Generator> gens = window_generators(mod, caps.index_window);
    ExactRowSpan span;

    // The cyclicity test asks whether the vacuum basis vector itself enters
    // the span (a vector merely having a nonzero vacuum coordinate proves
    // nothing: the generated submodule may meet that coordinate obliquely).
    // The residual of e_vac is kept leading-reduced; it empties exactly when
    // e_vac becomes a span member. The reported path is the first produced
    // vector with a nonzero vacuum coordinate, which exists whenever the
    // vacuum is reached, so replaying it exhibits the coordinate.
    SparseCoords vac_residual{{*vac, Scalar(1)}};
    bool have_vac_path = false;
    std::vector<std::string> first_vac_path;

    auto note_vac_coordinate = [&](const SparseCoords& y, const std::vector<Generator>& path,
                                   const Generator* last) {
        if (have_vac_path) return;
        auto hit = y.find(*vac);
        if (hit == y.end() || hit->second.is_zero()) return;
        have_vac_path = true;
        for (Generator pg : path) first_vac_path.push_back(pg.str());
        if (last) first_vac_path.push_back(last->str());
    };

    auto vacuum_reached = [&]() {
        vac_residual = span.reduce_against(std::move(vac_residual));
        return vac_residual.empty();
    };

    note_vac_coordinate(seed.coords(), {}, nullptr);
    span.insert(seed.coords());
    if (vacuum_reached()) {
        out.verdict = ProbeVerdict::CyclicEvidence;
        out.dims_explored = 1;
        out.path = first_vac_path;
        out.note = "vacuum vector spanned by the seed";
        return out;
    }

    struct Item {
        SparseCoords vec;
        std::vector<Generator> path;
    };
    std::deque<Item> queue;
    queue.push_back({seed.coords(), {}});

    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        if (static_cast<long long>(item.path.size()) >= caps.max_word_length) continue;

        for (Generator g : gens) {
            SparseCoords y = mod->act_coords(g, item.vec);
            ++out.words_explored;
            if (y.empty()) continue;
            note_vac_coordinate(y, item.path, &g);

            if (!span.insert(y)) continue;
            if (vacuum_reached()) {
                out.verdict = ProbeVerdict::CyclicEvidence;
                out.dims_explored = span.dimension();
                out.path = first_vac_path;
                return out;
            }
            if (span.dimension() > caps.max_dimension) {
                out.verdict = ProbeVerdict::Inconclusive;
                out.dims_explored = span.dimension();
                out.note = "dimension cap exceeded";
                return out;
            }
            std::vector<Generator> path = item.path;
            path.push_back(g);
            queue.push_back({std::move(y), std::move(path)});
        }
    }

    out.verdict = ProbeVerdict::ProperWitness;
    out.dims_explored = span.dimension();
    // every witness_basis entry is a plain vector in the seed grammar; when
    // truncated, the note carries the full row count
    constexpr long long kWitnessRows = 16;
    long long shown = 0;
    for (const auto& [pivot, row] : span.rows()) {
        if (shown++ == kWitnessRows) {
            out.note = "witness basis truncated to " + std::to_string(kWitnessRows) + " of " +
                       std::to_string(span.dimension()) + " rows";
            break;
        }
        out.witness_basis.push_back(Vector(mod, row).str());
    }
    return out;
}

} // namespace mhv
