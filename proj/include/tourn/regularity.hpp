#pragma once

// Homogeneity audits for 0/1 matrices and tournaments, ordered submatrix
// copy counting, a splitting partitioner with audited output, equipartition
// refinement and the two-pass strong decomposition.

#include "tourn/bits.hpp"
#include "tourn/digraph.hpp"
#include "tourn/forcing.hpp"
#include "tourn/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace tourn {

// Square 0/1 matrix with row and column bit access.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(int n);

    // A(T): entry (i,j) is 1 iff i -> j; zero diagonal.
    static BinaryMatrix adjacency(const Tournament& t);
    // B(F) for a bipartite tournament with parts M = V_1, N = V_2:
    // entry (x,y) is 1 iff M[x] -> N[y]. Throws unless f has 2 parts.
    static BinaryMatrix bipartite_adjacency(const KPartiteTournament& f);

    int size() const { return n_; }
    bool at(int r, int c) const { return rows_.test(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); }
    void set(int r, int c, bool value);
    std::span<const Word> row(int r) const { return rows_.row(static_cast<std::size_t>(r)); }
    std::span<const Word> column(int c) const { return cols_.row(static_cast<std::size_t>(c)); }
    std::uint64_t ones() const;

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) { return a.rows_ == b.rows_; }

private:
    int n_ = 0;
    BitMatrix rows_;
    BitMatrix cols_;  // transpose
};

// "n" then n rows of 0/1 characters.
void write_matrix(std::ostream& out, const BinaryMatrix& a);
BinaryMatrix read_matrix(std::istream& in);

// Parts of 0..n-1; each part is kept sorted.
using Partition = std::vector<std::vector<int>>;

// Throws std::invalid_argument unless parts are nonempty and cover 0..n-1 exactly once.
void check_partition(const Partition& p, int n);
bool is_equipartition(const Partition& p);
// True iff every part of fine lies inside one part of coarse.
bool refines(const Partition& fine, const Partition& coarse, int n);

struct BlockStats {
    int row_part = 0;
    int col_part = 0;
    std::uint64_t ones = 0;
    std::uint64_t cells = 0;
    int dominant = 1;          // 1 when 2*ones >= cells
    bool homogeneous = false;  // ones <= delta*cells or ones >= (1-delta)*cells
    Rational weight;           // cells / n^2
};

struct BipartitionAudit {
    Rational delta;
    std::vector<BlockStats> blocks;  // row-major over (R, C)
    Rational bad_weight;
    Rational total_weight;
    bool homogeneous = false;  // bad_weight <= delta
};

// Throws std::invalid_argument unless 0 < delta < 1/2 and R, C are partitions.
BipartitionAudit audit_bipartition(const BinaryMatrix& a, const Partition& rows, const Partition& cols,
                                   const Rational& delta);

struct EquipartitionAudit {
    Rational delta;
    bool equipartition = false;
    std::size_t pairs = 0;      // ordered pairs (i, j), i != j
    std::size_t bad_pairs = 0;  // non-delta-homogeneous ordered pairs
    Rational bad_weight;
    bool homogeneous = false;   // bad_weight <= delta
};

EquipartitionAudit audit_equipartition(const Tournament& t, const Partition& p, const Rational& delta);

// True iff d(X,Y) >= 1 - delta or d(X,Y) <= delta.
bool homogeneous_pair(const Tournament& t, const std::vector<int>& x, const std::vector<int>& y,
                      const Rational& delta);

// Copies of the k x k matrix b: rows r_1 < ... < r_k and columns
// c_1 < ... < c_k with a[r_i][c_j] = b[i][j]. With avoid_diagonal, copies
// using some r_i = c_j are excluded.
std::uint64_t count_matrix_copies(const BinaryMatrix& a, const BinaryMatrix& b, bool avoid_diagonal = false);

struct MatrixCopy {
    std::vector<int> rows;
    std::vector<int> cols;
};
std::optional<MatrixCopy> find_matrix_copy(const BinaryMatrix& a, const BinaryMatrix& b, bool avoid_diagonal = false);

enum class AfnKind { partition, copies, inconclusive };
const char* to_string(AfnKind kind);

struct AfnResult {
    AfnKind kind = AfnKind::inconclusive;
    Partition rows;
    Partition cols;
    BipartitionAudit audit;            // audit of (rows, cols), always filled
    std::uint64_t copies = 0;          // copies of b (copies branch)
    std::optional<MatrixCopy> witness;
    int splits = 0;
};

// Splits the row or column class with the largest bad weight at the median
// of a two-pivot Hamming score until the audit certifies delta-homogeneity.
// When a side would exceed size_budget classes, the copy branch is taken if
// a has a copy of b; otherwise the result is inconclusive.
AfnResult afn_partition(const BinaryMatrix& a, const BinaryMatrix& b, const Rational& delta, int size_budget);

struct RefineResult {
    Partition parts;
    int part_size = 0;                       // floor(n / q)
    int remainder = 0;                       // n - q * part_size, distributed one per part
    std::vector<std::size_t> leftover;       // |Z_i| per part of P
    std::size_t cells = 0;                   // nonempty P_i cap R cap C cells
    std::size_t parts_inside_cells = 0;      // parts contained in one cell
};

// Common refinement of P with (R, C), chopped into chunks of size
// floor(n/q); leftovers pooled per P-part and chopped; vertices beyond the
// chunks are distributed so that sizes differ by at most one. Each P-part
// receives q / |P| parts. Throws std::invalid_argument if q > n, q < 1,
// |P| does not divide q, or P is not an equipartition.
RefineResult refine_to_equipartition(int n, const Partition& p, const Partition& rows, const Partition& cols,
                                     int q);

enum class DecompositionKind { decomposition, copies, inconclusive };
const char* to_string(DecompositionKind kind);

struct DecompositionOptions {
    int max_retries = 64;
    std::uint64_t seed = 0;
};

struct StrongDecomposition {
    DecompositionKind kind = DecompositionKind::inconclusive;
    std::string stage;                 // stage that ended the pipeline early
    Partition q_parts;                 // Q_1..Q_q
    Partition fine_parts;              // second-pass equipartition refining Q
    std::vector<std::vector<int>> w;   // W_i, a fine part inside Q_i
    std::vector<int> representatives;  // sampled w_i
    Rational gamma;                    // 1 / (2 q^4)
    int attempts = 0;
    std::uint64_t copies = 0;
    // Audit of items 1-3.
    std::size_t item1_failures = 0;
    Rational item1_limit;              // delta * q^2
    bool item1 = false;
    bool item2 = false;
    std::size_t min_w = 0;             // item 3 is reported only
    bool event_a1 = false;
    bool event_a2 = false;
};

// Throws std::invalid_argument unless 0 < delta < 1/2 and f is bipartite with equal parts.
StrongDecomposition strong_decomposition(const Tournament& t, const KPartiteTournament& f, const Rational& delta,
                                         const DecompositionOptions& options = {});

// Recomputes items 1 and 2 of a decomposition from scratch.
struct DecompositionAudit {
    std::size_t item1_failures = 0;
    bool item1 = false;
    bool item2 = false;
    bool w_inside_q = false;
    bool q_equipartition = false;
};
DecompositionAudit audit_decomposition(const Tournament& t, const StrongDecomposition& d, const Rational& delta);

} // namespace tourn
