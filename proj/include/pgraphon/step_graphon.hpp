#ifndef PGRAPHON_STEP_GRAPHON_HPP
#define PGRAPHON_STEP_GRAPHON_HPP

#include <string>
#include <utility>
#include <vector>

#include "pgraphon/graphs.hpp"
#include "pgraphon/rational.hpp"
#include "pgraphon/signed_measure.hpp"

namespace pgraphon {

enum class GraphonKind { Signed, Positive, SubProbability, Probability };

std::string kind_name(GraphonKind k);
GraphonKind kind_from_name(const std::string& name);

/// A measure-valued stepfunction kernel: a partition of [0,1] into
/// consecutive blocks of exact rational lengths, and one signed measure
/// per block pair. Partition algebra is exact; only masses are doubles.
/// Immutable after construction.
class StepGraphon {
  public:
    /// Validates: lengths positive and summing to exactly one, cell count
    /// k*k on the common space, cells matching the kind flag.
    StepGraphon(WeightSpacePtr space, std::vector<Rational> lengths,
                std::vector<SignedMeasure> cells, GraphonKind kind);

    const WeightSpacePtr& space() const { return space_; }
    int block_count() const { return static_cast<int>(lengths_.size()); }
    const std::vector<Rational>& lengths() const { return lengths_; }
    const Rational& length(int i) const { return lengths_[i]; }
    std::vector<double> lengths_double() const;
    GraphonKind kind() const { return kind_; }

    const SignedMeasure& cell(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * block_count() + j];
    }
    const std::vector<SignedMeasure>& cells() const { return cells_; }

    /// Cached sup over cells of the total variation mass (the kernel's
    /// uniform bound).
    double sup_norm() const { return sup_norm_; }

    /// The real-valued kernel W[f] as a k x k matrix of cell integrals.
    std::vector<std::vector<double>> integrate_cells(const std::vector<double>& f) const;

  private:
    WeightSpacePtr space_;
    std::vector<Rational> lengths_;
    std::vector<SignedMeasure> cells_;
    GraphonKind kind_;
    double sup_norm_ = 0.0;
};

/// Assignment of the fine blocks of a kernel to coarse classes; records
/// each class's fine sub-blocks with their exact lengths.
struct BlockPartitionMap {
    struct SubBlock {
        int fine_index;
        Rational length;
    };
    std::vector<std::vector<SubBlock>> groups;

    int target_count() const { return static_cast<int>(groups.size()); }
    Rational group_length(int g) const;

    /// Inverse view: fine block index -> class index. Throws InputError
    /// if the groups are not a partition of 0..fine_count-1.
    std::vector<int> fine_to_group(int fine_count) const;

    static BlockPartitionMap from_grouping(const std::vector<Rational>& fine_lengths,
                                           const std::vector<int>& grouping);
};

/// Averages w over the classes of a grouping of its own blocks. The
/// result keeps w's fine partition, constant within each class rectangle
/// (classes may be scattered unions of blocks, so broadcasting preserves
/// the interval structure).
StepGraphon stepping(const StepGraphon& w, const std::vector<int>& grouping);

/// Averages w onto an independent partition with rational lengths; both
/// partitions are overlaid exactly and every target cell is the
/// length-weighted average of the covered fine cells.
StepGraphon stepping(const StepGraphon& w, const std::vector<Rational>& target_lengths);

/// Relabels blocks by a permutation; only permutations preserving block
/// lengths are measure preserving, anything else throws InputError.
StepGraphon relabel(const StepGraphon& w, const std::vector<int>& sigma);

/// Re-adapts both kernels to the overlay of their partitions (cell values
/// copied, no averaging); the outputs share identical block lengths.
std::pair<StepGraphon, StepGraphon> refine_common(const StepGraphon& u, const StepGraphon& w);

/// Splits every block into equal pieces of length 1/L; L must be a
/// multiple of every length's denominator.
StepGraphon equipartition(const StepGraphon& w, std::int64_t L);

/// The natural stepfunction of a weighted graph: n equal blocks, Dirac
/// masses at the edge weights, cemetery Diracs on the diagonal.
StepGraphon from_weighted_graph(const SampledGraph& g);

/// Same embedding for a measure-decorated graph.
StepGraphon from_measure_graph(const MeasureGraph& h);

/// M_W: the total variation of the kernel averaged over [0,1]^2.
SignedMeasure marginal_measure(const StepGraphon& w);

/// Embeds a real-valued stepfunction graphon into measures on {0,1}:
/// cell value w becomes w delta_1 + (1-w) delta_0.
StepGraphon embed_real_graphon(const std::vector<std::vector<double>>& values,
                               const std::vector<Rational>& lengths);

/// One-block kernel constantly equal to mu.
StepGraphon constant_graphon(const SignedMeasure& mu,
                             GraphonKind kind = GraphonKind::Probability);

/// u - w on the common refinement (a signed kernel).
StepGraphon kernel_difference(const StepGraphon& u, const StepGraphon& w);

/// Exact equality of partitions and bitwise equality of all masses.
bool same_cells(const StepGraphon& u, const StepGraphon& w);

}  // namespace pgraphon

#endif
