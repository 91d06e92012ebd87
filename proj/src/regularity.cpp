#include "tourn/regularity.hpp"

#include "tourn/io.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tourn {

BinaryMatrix::BinaryMatrix(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative matrix size");
    rows_ = BitMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    cols_ = BitMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
}

BinaryMatrix BinaryMatrix::adjacency(const Tournament& t)
{
    BinaryMatrix a(t.order());
    for (int i = 0; i < t.order(); ++i)
        for (int j = 0; j < t.order(); ++j)
            if (t.beats(i, j))
                a.set(i, j, true);
    return a;
}

BinaryMatrix BinaryMatrix::bipartite_adjacency(const KPartiteTournament& f)
{
    if (f.parts() != 2)
        throw std::invalid_argument("bipartite adjacency needs a bipartite tournament");
    const int k = f.part_size();
    BinaryMatrix b(k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            b.set(x, y, f.has_edge(f.vertex(0, x), f.vertex(1, y)));
    return b;
}

void BinaryMatrix::set(int r, int c, bool value)
{
    rows_.assign(static_cast<std::size_t>(r), static_cast<std::size_t>(c), value);
    cols_.assign(static_cast<std::size_t>(c), static_cast<std::size_t>(r), value);
}

std::uint64_t BinaryMatrix::ones() const
{
    std::uint64_t total = 0;
    for (int r = 0; r < n_; ++r)
        total += rows_.row_count(static_cast<std::size_t>(r));
    return total;
}

void write_matrix(std::ostream& out, const BinaryMatrix& a)
{
    out << a.size() << '\n';
    for (int r = 0; r < a.size(); ++r) {
        for (int c = 0; c < a.size(); ++c)
            out << (a.at(r, c) ? '1' : '0');
        out << '\n';
    }
}

BinaryMatrix read_matrix(std::istream& in)
{
    LineReader reader(in);
    std::string line;
    if (!reader.next(line))
        throw ParseError(reader.line_number(), "empty input, expected matrix size");
    const auto header = reader.integers(line);
    if (header.size() != 1 || header[0] < 0 || header[0] > 100000)
        reader.fail("expected a single matrix size");
    const int n = static_cast<int>(header[0]);
    BinaryMatrix a(n);
    for (int r = 0; r < n; ++r) {
        if (!reader.next(line))
            throw ParseError(reader.line_number(), "expected " + std::to_string(n) + " matrix rows");
        if (static_cast<int>(line.size()) != n)
            reader.fail("row " + std::to_string(r + 1) + " has " + std::to_string(line.size()) + " entries, expected " +
                        std::to_string(n));
        for (int c = 0; c < n; ++c) {
            const char ch = line[static_cast<std::size_t>(c)];
            if (ch != '0' && ch != '1')
                reader.fail("matrix entries must be 0 or 1");
            a.set(r, c, ch == '1');
        }
    }
    if (reader.next(line))
        reader.fail("unexpected content after matrix");
    return a;
}

void check_partition(const Partition& p, int n)
{
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::size_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty())
            throw std::invalid_argument("part " + std::to_string(i + 1) + " is empty");
        for (int v : p[i]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("part " + std::to_string(i + 1) + " has out-of-range element " +
                                            std::to_string(v + 1));
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("element " + std::to_string(v + 1) + " appears twice");
            seen[static_cast<std::size_t>(v)] = true;
            ++total;
        }
    }
    if (static_cast<int>(total) != n)
        throw std::invalid_argument("partition misses " + std::to_string(n - static_cast<int>(total)) + " elements");
}

bool is_equipartition(const Partition& p)
{
    if (p.empty())
        return true;
    std::size_t lo = p.front().size();
    std::size_t hi = lo;
    for (const auto& part : p) {
        lo = std::min(lo, part.size());
        hi = std::max(hi, part.size());
    }
    return hi - lo <= 1;
}

bool refines(const Partition& fine, const Partition& coarse, int n)
{
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < coarse.size(); ++i)
        for (int v : coarse[i])
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (const auto& part : fine)
        for (int v : part)
            if (owner[static_cast<std::size_t>(v)] != owner[static_cast<std::size_t>(part.front())])
                return false;
    return true;
}

namespace {

void check_delta(const Rational& delta)
{
    if (delta <= 0 || delta >= Rational(1, 2))
        throw std::invalid_argument("delta must lie in (0, 1/2), got " + to_string(delta));
}

bool homogeneous_count(std::uint64_t ones, std::uint64_t cells, const Rational& delta)
{
    const Rational d(ones, cells);
    return d <= delta || d >= 1 - delta;
}

Bitset mask_of(int n, const std::vector<int>& part)
{
    return make_mask(static_cast<std::size_t>(n), part);
}

} // namespace

BipartitionAudit audit_bipartition(const BinaryMatrix& a, const Partition& rows, const Partition& cols,
                                   const Rational& delta)
{
    check_delta(delta);
    const int n = a.size();
    check_partition(rows, n);
    check_partition(cols, n);
    BipartitionAudit audit;
    audit.delta = delta;
    const auto n2 = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::vector<Bitset> col_masks;
    for (const auto& c : cols)
        col_masks.push_back(mask_of(n, c));
    std::uint64_t bad_cells = 0;
    std::uint64_t all_cells = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            BlockStats s;
            s.row_part = static_cast<int>(i);
            s.col_part = static_cast<int>(j);
            for (int r : rows[i])
                s.ones += kernels::popcount_and(a.row(r), col_masks[j].words());
            s.cells = static_cast<std::uint64_t>(rows[i].size()) * cols[j].size();
            s.dominant = 2 * s.ones >= s.cells ? 1 : 0;
            s.homogeneous = homogeneous_count(s.ones, s.cells, delta);
            s.weight = Rational(s.cells, n2);
            all_cells += s.cells;
            if (!s.homogeneous)
                bad_cells += s.cells;
            audit.blocks.push_back(std::move(s));
        }
    audit.bad_weight = n2 == 0 ? Rational(0) : Rational(bad_cells, n2);
    audit.total_weight = n2 == 0 ? Rational(0) : Rational(all_cells, n2);
    audit.homogeneous = audit.bad_weight <= delta;
    return audit;
}

bool homogeneous_pair(const Tournament& t, const std::vector<int>& x, const std::vector<int>& y,
                      const Rational& delta)
{
    const PairStats s = density(t, x, y);
    return s.density <= delta || s.density >= 1 - delta;
}

EquipartitionAudit audit_equipartition(const Tournament& t, const Partition& p, const Rational& delta)
{
    check_delta(delta);
    const int n = t.order();
    check_partition(p, n);
    EquipartitionAudit audit;
    audit.delta = delta;
    audit.equipartition = is_equipartition(p);
    std::uint64_t bad_cells = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j)
                continue;
            ++audit.pairs;
            if (!homogeneous_pair(t, p[i], p[j], delta)) {
                ++audit.bad_pairs;
                bad_cells += static_cast<std::uint64_t>(p[i].size()) * p[j].size();
            }
        }
    const auto n2 = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    audit.bad_weight = n2 == 0 ? Rational(0) : Rational(bad_cells, n2);
    audit.homogeneous = audit.bad_weight <= delta;
    return audit;
}

namespace {

// Visits every copy; stops when visit returns false.
template <class Visit>
void scan_matrix_copies(const BinaryMatrix& a, const BinaryMatrix& b, bool avoid_diagonal, Visit&& visit)
{
    const int n = a.size();
    const int k = b.size();
    if (k == 0 || k > n)
        return;
    std::vector<int> rows(static_cast<std::size_t>(k));
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<Bitset> masks(static_cast<std::size_t>(k));
    while (true) {
        Bitset allowed = Bitset::full(static_cast<std::size_t>(n));
        if (avoid_diagonal)
            for (int r : rows)
                allowed.reset(static_cast<std::size_t>(r));
        for (int j = 0; j < k; ++j) {
            Bitset& m = masks[static_cast<std::size_t>(j)];
            m = allowed;
            for (int i = 0; i < k; ++i)
                kernels::and_into(m.words(), a.row(rows[static_cast<std::size_t>(i)]), !b.at(i, j));
        }
        if (!visit(rows, masks))
            return;
        int i = k - 1;
        while (i >= 0 && rows[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++rows[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            rows[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Number of c_1 < ... < c_k with c_j in masks[j].
std::uint64_t count_increasing(const std::vector<Bitset>& masks, int n)
{
    const std::size_t k = masks.size();
    std::vector<std::uint64_t> ways(k + 1, 0);
    ways[0] = 1;
    for (int c = 0; c < n; ++c)
        for (std::size_t j = k; j-- > 0;)
            if (masks[j].test(static_cast<std::size_t>(c)))
                ways[j + 1] += ways[j];
    return ways[k];
}

std::optional<std::vector<int>> first_increasing(const std::vector<Bitset>& masks, int n)
{
    std::vector<int> cols;
    int from = 0;
    for (const Bitset& m : masks) {
        const std::size_t c = m.find_next(static_cast<std::size_t>(from));
        if (c >= static_cast<std::size_t>(n))
            return std::nullopt;
        cols.push_back(static_cast<int>(c));
        from = static_cast<int>(c) + 1;
    }
    return cols;
}

} // namespace

std::uint64_t count_matrix_copies(const BinaryMatrix& a, const BinaryMatrix& b, bool avoid_diagonal)
{
    if (b.size() == 0)
        return 1;
    std::uint64_t total = 0;
    scan_matrix_copies(a, b, avoid_diagonal, [&](const std::vector<int>&, const std::vector<Bitset>& masks) {
        total += count_increasing(masks, a.size());
        return true;
    });
    return total;
}

std::optional<MatrixCopy> find_matrix_copy(const BinaryMatrix& a, const BinaryMatrix& b, bool avoid_diagonal)
{
    std::optional<MatrixCopy> found;
    scan_matrix_copies(a, b, avoid_diagonal, [&](const std::vector<int>& rows, const std::vector<Bitset>& masks) {
        if (auto cols = first_increasing(masks, a.size())) {
            found = MatrixCopy{rows, *cols};
            return false;
        }
        return true;
    });
    return found;
}

const char* to_string(AfnKind kind)
{
    switch (kind) {
    case AfnKind::partition:
        return "partition";
    case AfnKind::copies:
        return "copies";
    case AfnKind::inconclusive:
        break;
    }
    return "inconclusive";
}

namespace {

// Splits part into two halves by the median of d(x, p1) - d(x, p2), where d
// is the Hamming distance of the lines restricted to mask.
std::pair<std::vector<int>, std::vector<int>> split_class(const std::vector<int>& part, const Bitset& mask,
                                                          const std::function<std::span<const Word>(int)>& line)
{
    auto dist = [&](int x, int y) { return kernels::popcount_xor_and(line(x), line(y), mask.words()); };
    const int p1 = part.front();
    int p2 = part.back();
    std::uint64_t far = 0;
    for (int x : part) {
        const std::uint64_t d = dist(x, p1);
        if (d > far) {
            far = d;
            p2 = x;
        }
    }
    std::vector<std::pair<long long, int>> score;
    for (int x : part)
        score.emplace_back(static_cast<long long>(dist(x, p1)) - static_cast<long long>(dist(x, p2)), x);
    std::sort(score.begin(), score.end());
    const std::size_t half = part.size() / 2;
    std::vector<int> left;
    std::vector<int> right;
    for (std::size_t i = 0; i < score.size(); ++i)
        (i < half ? left : right).push_back(score[i].second);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return {left, right};
}

} // namespace

AfnResult afn_partition(const BinaryMatrix& a, const BinaryMatrix& b, const Rational& delta, int size_budget)
{
    check_delta(delta);
    const int n = a.size();
    AfnResult result;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    result.rows = n == 0 ? Partition{} : Partition{all};
    result.cols = result.rows;
    if (n == 0) {
        result.kind = AfnKind::partition;
        result.audit.delta = delta;
        result.audit.homogeneous = true;
        return result;
    }
    while (true) {
        result.audit = audit_bipartition(a, result.rows, result.cols, delta);
        if (result.audit.homogeneous) {
            result.kind = AfnKind::partition;
            return result;
        }
        // Bad weight per row class and per column class.
        std::vector<std::uint64_t> row_bad(result.rows.size(), 0);
        std::vector<std::uint64_t> col_bad(result.cols.size(), 0);
        for (const BlockStats& s : result.audit.blocks)
            if (!s.homogeneous) {
                row_bad[static_cast<std::size_t>(s.row_part)] += s.cells;
                col_bad[static_cast<std::size_t>(s.col_part)] += s.cells;
            }
        bool pick_row = true;
        int pick = -1;
        std::uint64_t best = 0;
        for (std::size_t i = 0; i < result.rows.size(); ++i)
            if (result.rows[i].size() > 1 && row_bad[i] > best) {
                best = row_bad[i];
                pick = static_cast<int>(i);
                pick_row = true;
            }
        for (std::size_t j = 0; j < result.cols.size(); ++j)
            if (result.cols[j].size() > 1 && col_bad[j] > best) {
                best = col_bad[j];
                pick = static_cast<int>(j);
                pick_row = false;
            }
        Partition& side = pick_row ? result.rows : result.cols;
        if (pick < 0 || static_cast<int>(side.size()) + 1 > size_budget) {
            result.copies = count_matrix_copies(a, b);
            if (result.copies > 0) {
                result.kind = AfnKind::copies;
                result.witness = find_matrix_copy(a, b);
            }
            else {
                result.kind = AfnKind::inconclusive;
            }
            return result;
        }
        // Restrict distances to the lines of the other side in bad blocks.
        Bitset mask(static_cast<std::size_t>(n));
        for (const BlockStats& s : result.audit.blocks) {
            if (s.homogeneous || (pick_row ? s.row_part : s.col_part) != pick)
                continue;
            const auto& other = pick_row ? result.cols[static_cast<std::size_t>(s.col_part)]
                                         : result.rows[static_cast<std::size_t>(s.row_part)];
            for (int v : other)
                mask.set(static_cast<std::size_t>(v));
        }
        std::function<std::span<const Word>(int)> line;
        if (pick_row)
            line = [&](int r) { return a.row(r); };
        else
            line = [&](int c) { return a.column(c); };
        auto [left, right] = split_class(side[static_cast<std::size_t>(pick)], mask, line);
        side[static_cast<std::size_t>(pick)] = std::move(left);
        side.insert(side.begin() + pick + 1, std::move(right));
        ++result.splits;
    }
}

RefineResult refine_to_equipartition(int n, const Partition& p, const Partition& rows, const Partition& cols, int q)
{
    if (q < 1 || q > n)
        throw std::invalid_argument("target part count " + std::to_string(q) + " outside 1.." + std::to_string(n));
    check_partition(p, n);
    check_partition(rows, n);
    check_partition(cols, n);
    if (!is_equipartition(p))
        throw std::invalid_argument("P is not an equipartition");
    const int parts = static_cast<int>(p.size());
    if (q % parts != 0)
        throw std::invalid_argument("|P| = " + std::to_string(parts) + " does not divide q = " + std::to_string(q));
    const int per_part = q / parts;

    RefineResult result;
    result.part_size = n / q;
    result.remainder = n - q * result.part_size;
    const auto s = static_cast<std::size_t>(result.part_size);

    std::vector<int> row_of(static_cast<std::size_t>(n));
    std::vector<int> col_of(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int v : rows[i])
            row_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int v : cols[j])
            col_of[static_cast<std::size_t>(v)] = static_cast<int>(j);

    for (const auto& part : p) {
        // Cells P_i cap R cap C in (R, C) order.
        std::vector<std::vector<int>> cells(rows.size() * cols.size());
        std::vector<int> members(part.begin(), part.end());
        std::sort(members.begin(), members.end());
        for (int v : members)
            cells[static_cast<std::size_t>(row_of[static_cast<std::size_t>(v)]) * cols.size() +
                  static_cast<std::size_t>(col_of[static_cast<std::size_t>(v)])]
                .push_back(v);
        std::vector<std::vector<int>> chunks;
        std::vector<bool> inside_cell;
        std::vector<int> leftover;
        for (const auto& cell : cells) {
            if (cell.empty())
                continue;
            ++result.cells;
            std::size_t pos = 0;
            for (; pos + s <= cell.size(); pos += s) {
                chunks.emplace_back(cell.begin() + static_cast<long>(pos), cell.begin() + static_cast<long>(pos + s));
                inside_cell.push_back(true);
            }
            leftover.insert(leftover.end(), cell.begin() + static_cast<long>(pos), cell.end());
        }
        result.leftover.push_back(leftover.size());
        std::size_t pos = 0;
        for (; pos + s <= leftover.size(); pos += s) {
            chunks.emplace_back(leftover.begin() + static_cast<long>(pos), leftover.begin() + static_cast<long>(pos + s));
            inside_cell.push_back(false);
        }
        std::vector<int> extra(leftover.begin() + static_cast<long>(pos), leftover.end());
        // Keep per_part chunks; the rest become extra vertices.
        while (static_cast<int>(chunks.size()) > per_part) {
            extra.insert(extra.end(), chunks.back().begin(), chunks.back().end());
            chunks.pop_back();
            inside_cell.pop_back();
        }
        const std::size_t base = members.size() / static_cast<std::size_t>(per_part);
        const std::size_t plus = members.size() % static_cast<std::size_t>(per_part);
        // Chunks outside a cell absorb extra vertices first.
        std::vector<std::size_t> order(chunks.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return !inside_cell[x] && inside_cell[y]; });
        std::size_t next = 0;
        for (std::size_t r = 0; r < order.size(); ++r) {
            auto& chunk = chunks[order[r]];
            const std::size_t want = base + (r < plus ? 1 : 0);
            while (chunk.size() < want) {
                chunk.push_back(extra[next++]);
                inside_cell[order[r]] = false;
            }
        }
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            std::sort(chunks[c].begin(), chunks[c].end());
            if (inside_cell[c])
                ++result.parts_inside_cells;
            result.parts.push_back(std::move(chunks[c]));
        }
    }
    return result;
}

const char* to_string(DecompositionKind kind)
{
    switch (kind) {
    case DecompositionKind::decomposition:
        return "decomposition";
    case DecompositionKind::copies:
        return "copies";
    case DecompositionKind::inconclusive:
        break;
    }
    return "inconclusive";
}

namespace {

// ceil(x) for a positive rational, clamped to [lo, hi].
int clamp_ceil(const Rational& x, int lo, int hi)
{
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    const BigInt c = (num + den - 1) / den;
    if (c > hi)
        return std::max(lo, hi);
    return std::max(lo, static_cast<int>(c));
}

} // namespace

StrongDecomposition strong_decomposition(const Tournament& t, const KPartiteTournament& f, const Rational& delta,
                                         const DecompositionOptions& options)
{
    check_delta(delta);
    if (f.parts() != 2)
        throw std::invalid_argument("strong decomposition needs a bipartite pattern");
    const int n = t.order();
    if (n < 1)
        throw std::invalid_argument("strong decomposition needs a nonempty tournament");
    StrongDecomposition out;
    const BinaryMatrix a = BinaryMatrix::adjacency(t);
    const BinaryMatrix b = BinaryMatrix::bipartite_adjacency(f);

    auto copy_branch = [&](const char* stage) {
        out.kind = DecompositionKind::copies;
        out.stage = stage;
        out.copies = count_matrix_copies(a, b, true);
    };

    // First pass at delta / 5.
    const Rational d1 = delta / 5;
    const AfnResult first = afn_partition(a, b, d1 * d1 / 3, n);
    if (first.kind != AfnKind::partition) {
        if (first.kind == AfnKind::copies)
            copy_branch("first pass");
        else
            out.stage = "first pass";
        return out;
    }
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    const Rational want1 = Rational(6 * first.rows.size() * first.cols.size()) / d1;
    const int lower = clamp_ceil(1 / delta, 1, n);
    const int q = clamp_ceil(want1, lower, n);
    out.q_parts = refine_to_equipartition(n, Partition{all}, first.rows, first.cols, q).parts;

    // Second pass at gamma = 1 / (2 q^4).
    out.gamma = Rational(1, 2 * BigInt(q) * q * q * q);
    const Rational g2 = out.gamma * out.gamma / 3;
    const AfnResult second = afn_partition(a, b, g2, n);
    if (second.kind != AfnKind::partition) {
        if (second.kind == AfnKind::copies)
            copy_branch("second pass");
        else
            out.stage = "second pass";
        return out;
    }
    const Rational want2 = Rational(6 * second.rows.size() * second.cols.size()) / out.gamma;
    const int per_q = clamp_ceil(want2, 1, n / q);
    out.fine_parts = refine_to_equipartition(n, out.q_parts, second.rows, second.cols, q * per_q).parts;

    // Fine parts inside each Q_i.
    std::vector<int> owner(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < out.q_parts.size(); ++i)
        for (int v : out.q_parts[i])
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    std::vector<int> fine_of(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < out.fine_parts.size(); ++j)
        for (int v : out.fine_parts[j])
            fine_of[static_cast<std::size_t>(v)] = static_cast<int>(j);

    const std::size_t qn = out.q_parts.size();
    const Rational a2_limit = 4 * delta * qn * qn / 5;
    CounterRng rng(options.seed);
    for (out.attempts = 1; out.attempts <= options.max_retries; ++out.attempts) {
        out.representatives.clear();
        out.w.clear();
        for (const auto& part : out.q_parts) {
            const int w = part[static_cast<std::size_t>(rng.uniform(part.size()))];
            out.representatives.push_back(w);
            out.w.push_back(out.fine_parts[static_cast<std::size_t>(fine_of[static_cast<std::size_t>(w)])]);
        }
        bool a1 = true;
        std::size_t bad = 0;
        for (std::size_t i = 0; i < qn; ++i)
            for (std::size_t j = i + 1; j < qn; ++j) {
                const Rational dw = density(t, out.w[i], out.w[j]).density;
                if (!(dw <= delta || dw >= 1 - delta))
                    a1 = false;
                const Rational dq = density(t, out.q_parts[i], out.q_parts[j]).density;
                if ((dq >= 1 - d1 && dw <= delta) || (dq <= d1 && dw >= 1 - delta))
                    ++bad;
            }
        out.event_a1 = a1;
        out.event_a2 = Rational(bad) <= a2_limit;
        if (a1 && out.event_a2)
            break;
    }
    if (out.attempts > options.max_retries)
        out.attempts = options.max_retries;

    const DecompositionAudit audit = audit_decomposition(t, out, delta);
    out.item1_failures = audit.item1_failures;
    out.item1_limit = delta * qn * qn;
    out.item1 = audit.item1;
    out.item2 = audit.item2;
    out.min_w = out.w.empty() ? 0 : out.w.front().size();
    for (const auto& w : out.w)
        out.min_w = std::min(out.min_w, w.size());
    if (out.event_a1 && out.event_a2) {
        out.kind = DecompositionKind::decomposition;
    }
    else {
        out.kind = DecompositionKind::inconclusive;
        out.stage = "sampling";
    }
    return out;
}

DecompositionAudit audit_decomposition(const Tournament& t, const StrongDecomposition& d, const Rational& delta)
{
    DecompositionAudit audit;
    const int n = t.order();
    check_partition(d.q_parts, n);
    audit.q_equipartition = is_equipartition(d.q_parts);
    const std::size_t q = d.q_parts.size();
    audit.w_inside_q = d.w.size() == q;
    for (std::size_t i = 0; i < d.w.size() && audit.w_inside_q; ++i)
        for (int v : d.w[i])
            if (!std::binary_search(d.q_parts[i].begin(), d.q_parts[i].end(), v))
                audit.w_inside_q = false;
    if (!audit.w_inside_q)
        return audit;
    audit.item2 = true;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            const PairStats qs = density(t, d.q_parts[i], d.q_parts[j]);
            const PairStats ws = density(t, d.w[i], d.w[j]);
            const bool q_hom = qs.density <= delta || qs.density >= 1 - delta;
            const bool w_hom = ws.density <= delta || ws.density >= 1 - delta;
            if (!w_hom)
                audit.item2 = false;
            if (!q_hom || qs.x_dominates != ws.x_dominates)
                ++audit.item1_failures;
        }
    audit.item1 = Rational(audit.item1_failures) <= delta * q * q;
    return audit;
}

} // namespace tourn
