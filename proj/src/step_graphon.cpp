#include "pgraphon/step_graphon.hpp"

#include <algorithm>
#include <cmath>

#include "pgraphon/errors.hpp"

namespace pgraphon {

namespace {

void check_kind(const SignedMeasure& mu, GraphonKind kind) {
    switch (kind) {
        case GraphonKind::Signed: return;
        case GraphonKind::Positive:
            if (!mu.is_nonnegative()) throw InputError("cell is not a nonnegative measure");
            return;
        case GraphonKind::SubProbability:
            if (!mu.is_subprobability()) throw InputError("cell is not a sub-probability measure");
            return;
        case GraphonKind::Probability:
            if (!mu.is_probability()) throw InputError("cell mass does not sum to one");
            return;
    }
}

// 1-D overlay piece: a maximal interval contained in one block of each
// partition.
struct OverlayPiece {
    Rational length;
    int left;   // block index in the first partition
    int right;  // block index in the second partition
};

std::vector<OverlayPiece> overlay(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<OverlayPiece> pieces;
    std::size_t ia = 0, ib = 0;
    Rational rem_a = a[0], rem_b = b[0];
    while (ia < a.size() && ib < b.size()) {
        const Rational step = std::min(rem_a, rem_b);
        pieces.push_back({step, static_cast<int>(ia), static_cast<int>(ib)});
        rem_a -= step;
        rem_b -= step;
        if (rem_a == 0) {
            ++ia;
            if (ia < a.size()) rem_a = a[ia];
        }
        if (rem_b == 0) {
            ++ib;
            if (ib < b.size()) rem_b = b[ib];
        }
    }
    if (ia != a.size() || ib != b.size()) throw InputError("partitions do not both sum to one");
    return pieces;
}

GraphonKind averaged_kind(GraphonKind kind) { return kind; }  // averaging is convex stable

}  // namespace

std::string kind_name(GraphonKind k) {
    switch (k) {
        case GraphonKind::Signed: return "signed";
        case GraphonKind::Positive: return "positive";
        case GraphonKind::SubProbability: return "sub-probability";
        case GraphonKind::Probability: return "probability";
    }
    return "?";
}

GraphonKind kind_from_name(const std::string& name) {
    if (name == "signed") return GraphonKind::Signed;
    if (name == "positive") return GraphonKind::Positive;
    if (name == "sub-probability") return GraphonKind::SubProbability;
    if (name == "probability") return GraphonKind::Probability;
    throw InputError("unknown graphon kind: '" + name + "'");
}

StepGraphon::StepGraphon(WeightSpacePtr space, std::vector<Rational> lengths,
                         std::vector<SignedMeasure> cells, GraphonKind kind)
    : space_(std::move(space)), lengths_(std::move(lengths)), cells_(std::move(cells)), kind_(kind) {
    if (!space_) throw InputError("step graphon without a weight space");
    const std::size_t k = lengths_.size();
    if (k == 0) throw InputError("step graphon needs at least one block");
    Rational total(0);
    for (const auto& l : lengths_) {
        if (l <= 0) throw InputError("block lengths must be positive rationals");
        total += l;
    }
    if (total != Rational(1)) throw InputError("block lengths must sum to exactly one");
    if (cells_.size() != k * k) throw InputError("cell matrix must be k x k");
    for (const auto& c : cells_) {
        if (static_cast<int>(c.mass.size()) != space_->size())
            throw InputError("cell measure does not match the space");
        check_kind(c, kind_);
        sup_norm_ = std::max(sup_norm_, total_mass(c));
    }
}

std::vector<double> StepGraphon::lengths_double() const {
    std::vector<double> out;
    out.reserve(lengths_.size());
    for (const auto& l : lengths_) out.push_back(rational_to_double(l));
    return out;
}

std::vector<std::vector<double>> StepGraphon::integrate_cells(const std::vector<double>& f) const {
    const int k = block_count();
    std::vector<std::vector<double>> out(k, std::vector<double>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out[i][j] = cell(i, j).integrate(f);
    return out;
}

Rational BlockPartitionMap::group_length(int g) const {
    Rational total(0);
    for (const auto& sb : groups[g]) total += sb.length;
    return total;
}

std::vector<int> BlockPartitionMap::fine_to_group(int fine_count) const {
    std::vector<int> owner(fine_count, -1);
    for (int g = 0; g < target_count(); ++g)
        for (const auto& sb : groups[g]) {
            if (sb.fine_index < 0 || sb.fine_index >= fine_count)
                throw InputError("partition map references an unknown fine block");
            if (owner[sb.fine_index] != -1)
                throw InputError("partition map assigns a fine block twice");
            owner[sb.fine_index] = g;
        }
    for (int o : owner)
        if (o == -1) throw InputError("partition map misses a fine block");
    return owner;
}

BlockPartitionMap BlockPartitionMap::from_grouping(const std::vector<Rational>& fine_lengths,
                                                   const std::vector<int>& grouping) {
    if (grouping.size() != fine_lengths.size())
        throw InputError("grouping length does not match the block count");
    const int target = grouping.empty() ? 0 : *std::max_element(grouping.begin(), grouping.end()) + 1;
    BlockPartitionMap map;
    map.groups.resize(target);
    for (std::size_t i = 0; i < grouping.size(); ++i) {
        const int g = grouping[i];
        if (g < 0 || g >= target) throw InputError("grouping uses an invalid class id");
        map.groups[g].push_back({static_cast<int>(i), fine_lengths[i]});
    }
    for (const auto& grp : map.groups)
        if (grp.empty()) throw InputError("grouping leaves an empty class");
    return map;
}

StepGraphon stepping(const StepGraphon& w, const std::vector<int>& grouping) {
    const int k = w.block_count();
    const auto map = BlockPartitionMap::from_grouping(w.lengths(), grouping);
    const int groups = map.target_count();
    const int m = w.space()->size();

    std::vector<Rational> group_len(groups);
    for (int g = 0; g < groups; ++g) group_len[g] = map.group_length(g);

    // Average once per class pair, then broadcast back onto the fine grid
    // so scattered classes stay representable.
    std::vector<SignedMeasure> averaged(static_cast<std::size_t>(groups) * groups,
                                        zero_measure(w.space()));
    for (int ga = 0; ga < groups; ++ga)
        for (int gb = 0; gb < groups; ++gb) {
            std::vector<long double> acc(m, 0.0L);
            for (const auto& sa : map.groups[ga])
                for (const auto& sb : map.groups[gb]) {
                    const long double weight =
                        rational_to_double((sa.length * sb.length) / (group_len[ga] * group_len[gb]));
                    const auto& mass = w.cell(sa.fine_index, sb.fine_index).mass;
                    for (int z = 0; z < m; ++z) acc[z] += weight * static_cast<long double>(mass[z]);
                }
            std::vector<double> mass(m);
            for (int z = 0; z < m; ++z) mass[z] = static_cast<double>(acc[z]);
            averaged[static_cast<std::size_t>(ga) * groups + gb] = SignedMeasure(w.space(), std::move(mass));
        }

    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            cells.push_back(averaged[static_cast<std::size_t>(grouping[i]) * groups + grouping[j]]);
    return StepGraphon(w.space(), w.lengths(), std::move(cells), averaged_kind(w.kind()));
}

StepGraphon stepping(const StepGraphon& w, const std::vector<Rational>& target_lengths) {
    const auto pieces = overlay(w.lengths(), target_lengths);
    const int target = static_cast<int>(target_lengths.size());
    const int m = w.space()->size();

    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(target) * target);
    for (int a = 0; a < target; ++a)
        for (int b = 0; b < target; ++b) {
            std::vector<long double> acc(m, 0.0L);
            for (const auto& pa : pieces) {
                if (pa.right != a) continue;
                for (const auto& pb : pieces) {
                    if (pb.right != b) continue;
                    const long double weight = rational_to_double(
                        (pa.length * pb.length) / (target_lengths[a] * target_lengths[b]));
                    const auto& mass = w.cell(pa.left, pb.left).mass;
                    for (int z = 0; z < m; ++z) acc[z] += weight * static_cast<long double>(mass[z]);
                }
            }
            std::vector<double> mass(m);
            for (int z = 0; z < m; ++z) mass[z] = static_cast<double>(acc[z]);
            cells.emplace_back(w.space(), std::move(mass));
        }
    return StepGraphon(w.space(), target_lengths, std::move(cells), averaged_kind(w.kind()));
}

StepGraphon relabel(const StepGraphon& w, const std::vector<int>& sigma) {
    const int k = w.block_count();
    if (static_cast<int>(sigma.size()) != k) throw InputError("permutation size mismatch");
    std::vector<bool> seen(k, false);
    for (int s : sigma) {
        if (s < 0 || s >= k || seen[s]) throw InputError("not a permutation of the blocks");
        seen[s] = true;
    }
    for (int i = 0; i < k; ++i)
        if (w.length(i) != w.length(sigma[i]))
            throw InputError("relabeling must permute blocks of equal length");
    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cells.push_back(w.cell(sigma[i], sigma[j]));
    return StepGraphon(w.space(), w.lengths(), std::move(cells), w.kind());
}

std::pair<StepGraphon, StepGraphon> refine_common(const StepGraphon& u, const StepGraphon& w) {
    require_same_space(u.cell(0, 0), w.cell(0, 0));
    const auto pieces = overlay(u.lengths(), w.lengths());
    const int k = static_cast<int>(pieces.size());
    std::vector<Rational> lengths;
    lengths.reserve(k);
    for (const auto& p : pieces) lengths.push_back(p.length);
    std::vector<SignedMeasure> uc, wc;
    uc.reserve(static_cast<std::size_t>(k) * k);
    wc.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            uc.push_back(u.cell(pieces[i].left, pieces[j].left));
            wc.push_back(w.cell(pieces[i].right, pieces[j].right));
        }
    return {StepGraphon(u.space(), lengths, std::move(uc), u.kind()),
            StepGraphon(w.space(), lengths, std::move(wc), w.kind())};
}

StepGraphon equipartition(const StepGraphon& w, std::int64_t L) {
    if (L <= 0) throw InputError("equipartition size must be positive");
    std::vector<int> owner;  // fine equal block -> original block
    for (int i = 0; i < w.block_count(); ++i) {
        const Rational count = w.length(i) * L;
        if (count.denominator() != 1)
            throw InputError("L is not a common denominator of the block lengths");
        for (std::int64_t c = 0; c < count.numerator(); ++c) owner.push_back(i);
    }
    const int k = static_cast<int>(owner.size());  // == L
    std::vector<Rational> lengths(k, Rational(1, L));
    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cells.push_back(w.cell(owner[i], owner[j]));
    return StepGraphon(w.space(), std::move(lengths), std::move(cells), w.kind());
}

StepGraphon from_weighted_graph(const SampledGraph& g) {
    const int n = g.n;
    const int cemetery = g.space->require_cemetery();
    std::vector<Rational> lengths(n, Rational(1, n));
    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int z = i == j ? cemetery : g.weight(i, j);
            cells.push_back(dirac(g.space, z));
        }
    return StepGraphon(g.space, std::move(lengths), std::move(cells), GraphonKind::Probability);
}

StepGraphon from_measure_graph(const MeasureGraph& h) {
    const int n = h.n;
    std::vector<Rational> lengths(n, Rational(1, n));
    std::vector<SignedMeasure> cells(h.cells);
    return StepGraphon(h.space, std::move(lengths), std::move(cells), GraphonKind::Probability);
}

SignedMeasure marginal_measure(const StepGraphon& w) {
    const int k = w.block_count();
    const int m = w.space()->size();
    const auto lens = w.lengths_double();
    std::vector<long double> acc(m, 0.0L);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const long double weight = static_cast<long double>(lens[i]) * lens[j];
            const auto& mass = w.cell(i, j).mass;
            for (int z = 0; z < m; ++z) acc[z] += weight * std::abs(static_cast<long double>(mass[z]));
        }
    std::vector<double> mass(m);
    for (int z = 0; z < m; ++z) mass[z] = static_cast<double>(acc[z]);
    return SignedMeasure(w.space(), std::move(mass));
}

StepGraphon embed_real_graphon(const std::vector<std::vector<double>>& values,
                               const std::vector<Rational>& lengths) {
    const auto space = make_binary_space();
    const int k = static_cast<int>(lengths.size());
    if (static_cast<int>(values.size()) != k) throw InputError("value matrix must be k x k");
    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(values[i].size()) != k) throw InputError("value matrix must be k x k");
        for (int j = 0; j < k; ++j) {
            const double v = values[i][j];
            if (!(v >= 0.0 && v <= 1.0)) throw InputError("real graphon values must lie in [0,1]");
            cells.push_back(SignedMeasure(space, {1.0 - v, v}));
        }
    }
    return StepGraphon(space, lengths, std::move(cells), GraphonKind::Probability);
}

StepGraphon constant_graphon(const SignedMeasure& mu, GraphonKind kind) {
    return StepGraphon(mu.space, {Rational(1)}, {mu}, kind);
}

StepGraphon kernel_difference(const StepGraphon& u, const StepGraphon& w) {
    auto [ur, wr] = refine_common(u, w);
    const int k = ur.block_count();
    std::vector<SignedMeasure> cells;
    cells.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cells.push_back(ur.cell(i, j) - wr.cell(i, j));
    return StepGraphon(ur.space(), ur.lengths(), std::move(cells), GraphonKind::Signed);
}

bool same_cells(const StepGraphon& u, const StepGraphon& w) {
    if (u.lengths() != w.lengths()) return false;
    for (std::size_t c = 0; c < u.cells().size(); ++c)
        if (u.cells()[c].mass != w.cells()[c].mass) return false;
    return true;
}

}  // namespace pgraphon
