#pragma once

// Structural objects defined on a coloring of [m]x[n] (contributing
// diagonals, the W and Y regions, consecutive contributing pairs, disjoint
// corners, the delta-diagonal sets) and a registry of lemma predicates
// evaluated on them.

#include "rainbow/coloring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

struct DiagonalStatus {
    DiagonalIndex k = 0;
    bool main = false;
    std::vector<ColorId> palette;      // c(D_k), ascending
    std::vector<ColorId> extra;        // c(D_k) \ c(D_m)
    std::vector<ColorId> contributed;  // extra colors absent from every D_i, i < k
    bool contributing() const { return !contributed.empty(); }
};

/// Indexed by diagonal: entry k-1 describes D_k.
struct ContributingMap {
    std::vector<DiagonalStatus> diagonals;
    std::vector<ColorId> main_palette;

    const DiagonalStatus& at(DiagonalIndex k) const { return diagonals.at(k - 1); }
    bool contributing(DiagonalIndex k) const;
    int contributing_count() const;     // off-diagonals only
    int noncontributing_count() const;  // off-diagonals only
    bool in_main_palette(ColorId x) const;
};

ContributingMap contributing_map(const Coloring& c);

/// Y corner blocks. `figure` uses s2 x s2 blocks at (m, 1) and (1, n);
/// `literal` evaluates the inequalities exactly as written in the source
/// text, with strict comparisons and m bounding the column of Y2.
enum class YRegionMode { figure, literal };

struct RegionMask {
    bool defined = false;  // false when the main diagonal is monochromatic
    int s2 = 0;
    GridDims dims;
    std::vector<bool> w1, w2, y1, y2;  // row-major

    bool in_w(GridPoint p) const { return defined && (w1[dims.flat(p)] || w2[dims.flat(p)]); }
    bool in_y(GridPoint p) const { return defined && (y1[dims.flat(p)] || y2[dims.flat(p)]); }
};

RegionMask region_mask(const Coloring& c, YRegionMode mode = YRegionMode::figure);

enum class PairKind { horizontal, vertical, other };

std::string_view to_string(PairKind k);

struct PairRecord {
    PairKind kind = PairKind::other;
    DiagonalIndex a = 0;  // alpha in D_a, beta in D_{a+1}
    GridPoint alpha;
    GridPoint beta;
    ColorId alpha_color = 0;
    ColorId beta_color = 0;
};

std::vector<PairRecord> find_pairs(const Coloring& c, const ContributingMap& map);

struct CornerRecord {
    PairRecord vertical;
    PairRecord horizontal;
    bool strict_colors = false;  // the four cells carry four distinct colors
};

std::vector<CornerRecord> find_disjoint_corners(const Coloring& c);
std::vector<CornerRecord> find_disjoint_corners(const std::vector<PairRecord>& pairs, const RegionMask& regions);

struct DeltaDiagonalSets {
    GridPoint delta;
    std::vector<DiagonalIndex> dd;     // off-diagonals whose every cell can add or subtract delta
    std::vector<GridPoint> sd_cells;   // cells that can do neither
    int count_bound = 0;               // m + n - 2 d1 - 2 d2
    bool bound_holds() const { return static_cast<int>(dd.size()) >= count_bound; }
};

DeltaDiagonalSets delta_sets(GridPoint delta, GridDims dims);

struct LemmaInfo {
    std::string_view id;
    std::string_view statement;
};

const std::vector<LemmaInfo>& lemma_registry();
bool is_known_lemma(std::string_view id);

struct LemmaVerdict {
    std::string id;
    bool applicable = false;
    std::string reason;  // why not applicable
    bool holds = false;  // meaningful only when applicable
    std::string detail;  // witness or counterexample
};

struct StructureReport {
    Coloring coloring;  // relabeled so the main-diagonal palette is {1..ell}
    bool exact = false;
    bool rainbow_free = false;
    SSequence s;
    ContributingMap map;
    RegionMask regions;
    std::vector<PairRecord> pairs;
    std::vector<CornerRecord> corners;
    std::vector<LemmaVerdict> verdicts;
};

StructureReport analyze(const Coloring& c, YRegionMode mode = YRegionMode::figure);

std::vector<LemmaVerdict> lemma_suite(const Coloring& c);

/// Evaluates one registered lemma; throws std::invalid_argument for an
/// unknown id.
LemmaVerdict evaluate_lemma(std::string_view id, const Coloring& c);

}  // namespace rainbow
