#include "nilorb/linalg.hpp"

#include <stdexcept>

#include "nilorb/types.hpp"

namespace nilorb {

IntMat toInt(const RatMat& m) {
    IntMat out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        Int l = 1;
        for (int c = 0; c < m.cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < m.cols; ++c) {
            Rat v = m.at(r, c) * Rat(l);
            if (v.get_den() != 1) throw InternalError("denominator clearing failed");
            out.at(r, c) = v.get_num();
        }
    }
    return out;
}

RatMat matMul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matMul shape mismatch");
    RatMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

IntMat matMul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matMul shape mismatch");
    IntMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

// One-step fraction-free elimination (Bareiss).  Every intermediate entry is a
// minor of the input, so divisions are exact; pivots are chosen smallest in
// bit size to slow entry growth.
int rankBareiss(IntMat m) {
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        size_t best = 0;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            size_t sz = mpz_sizeinbase(m.at(r, col).get_mpz_t(), 2);
            if (pivot < 0 || sz < best) { pivot = r; best = sz; }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const Int& p = m.at(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            const Int& f = m.at(r, col);
            for (int c = col + 1; c < m.cols; ++c) {
                Int v = p * m.at(r, c) - f * m.at(rank, c);
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw InternalError("Bareiss division not exact");
                m.at(r, c) = std::move(q);
            }
            m.at(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

int rankRationalReversed(const IntMat& m) {
    RatMat w(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) w.at(r, c) = Rat(m.at(r, c));
    int rank = 0;
    for (int col = w.cols - 1; col >= 0 && rank < w.rows; --col) {
        int pivot = -1;
        for (int r = rank; r < w.rows; ++r)
            if (w.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < w.cols; ++c) std::swap(w.at(pivot, c), w.at(rank, c));
        Rat p = w.at(rank, col);
        for (int r = rank + 1; r < w.rows; ++r) {
            if (w.at(r, col) == 0) continue;
            Rat f = w.at(r, col) / p;
            for (int c = 0; c <= col; ++c)
                if (w.at(rank, c) != 0) w.at(r, c) -= f * w.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

int rankExact(const IntMat& m) { return rankBareiss(m); }
int rankExact(const RatMat& m) { return rankBareiss(toInt(m)); }

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> kernelBasis(const RatMat& m) {
    RatMat w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> isPivot(m.cols, false);
    for (int p : pivots) isPivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (isPivot[free]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -w.at(int(pr), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b) {
    if (int(b.size()) != m.rows) throw std::invalid_argument("solve shape mismatch");
    RatMat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == m.cols) return std::nullopt;  // inconsistent row 0...0 | 1
    std::vector<Rat> x(m.cols, Rat(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        x[pivots[pr]] = aug.at(int(pr), m.cols);
    return x;
}

std::vector<std::vector<Rat>> rowBasis(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return {};
    size_t width = rows[0].size();
    RatMat m(int(rows.size()), int(width));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) throw std::invalid_argument("ragged rows");
        for (size_t c = 0; c < width; ++c) m.at(int(r), int(c)) = rows[r][c];
    }
    std::vector<int> pivots = rref(m);
    std::vector<std::vector<Rat>> out;
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        std::vector<Rat> v(width);
        for (size_t c = 0; c < width; ++c) v[c] = m.at(int(pr), int(c));
        out.push_back(std::move(v));
    }
    return out;
}

int intersectionDim(const std::vector<std::vector<Rat>>& a,
                    const std::vector<std::vector<Rat>>& b) {
    if (a.empty() || b.empty()) return 0;
    // dim(A) + dim(B) - dim(A + B)
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    int dimA = int(rowBasis(a).size());
    int dimB = int(rowBasis(b).size());
    int dimSum = int(rowBasis(ab).size());
    return dimA + dimB - dimSum;
}

std::vector<std::vector<Rat>> intersectionBasis(const std::vector<std::vector<Rat>>& a,
                                                const std::vector<std::vector<Rat>>& b) {
    if (a.empty() || b.empty()) return {};
    size_t width = a[0].size();
    // A vector lies in both spans iff it is c.a = d.b for coefficient rows c, d,
    // i.e. (c, d) is in the kernel of [a^T | -b^T].
    RatMat k(int(width), int(a.size() + b.size()));
    for (size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != width) throw std::invalid_argument("ragged rows");
        for (size_t c = 0; c < width; ++c) k.at(int(c), int(r)) = a[r][c];
    }
    for (size_t r = 0; r < b.size(); ++r) {
        if (b[r].size() != width) throw std::invalid_argument("ragged rows");
        for (size_t c = 0; c < width; ++c) k.at(int(c), int(a.size() + r)) = -b[r][c];
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& cd : kernelBasis(k)) {
        std::vector<Rat> v(width, Rat(0));
        for (size_t r = 0; r < a.size(); ++r)
            if (cd[r] != 0)
                for (size_t c = 0; c < width; ++c) v[c] += cd[r] * a[r][c];
        rows.push_back(std::move(v));
    }
    return rowBasis(std::move(rows));
}

}  // namespace nilorb
