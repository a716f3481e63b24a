#include "sring/linalg.hpp"

#include <optional>

namespace sring {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(a, j), M.at(b, j));
}

void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < M.rows; ++i) std::swap(M.at(i, a), M.at(i, b));
}

std::optional<Position> smallest_entry(const IntMatrix& M, std::size_t from) {
    std::optional<Position> best;
    BigInt best_abs;
    for (std::size_t i = from; i < M.rows; ++i) {
        for (std::size_t j = from; j < M.cols; ++j) {
            const BigInt& x = M.at(i, j);
            if (x == 0) continue;
            BigInt a = abs(x);
            if (!best || a < best_abs) {
                best = Position{i, j};
                best_abs = std::move(a);
                if (best_abs == 1) return best;
            }
        }
    }
    return best;
}

}  // namespace

std::vector<BigInt> smith_invariant_factors(IntMatrix M) {
    std::vector<BigInt> factors;
    const std::size_t limit = std::min(M.rows, M.cols);
    for (std::size_t t = 0; t < limit; ++t) {
        auto pivot = smallest_entry(M, t);
        if (!pivot) break;
        swap_rows(M, t, pivot->row);
        swap_cols(M, t, pivot->col);

        while (true) {
            bool cleared = true;
            for (std::size_t i = t + 1; i < M.rows; ++i) {
                if (M.at(i, t) == 0) continue;
                const BigInt q = M.at(i, t) / M.at(t, t);
                for (std::size_t j = t; j < M.cols; ++j) M.at(i, j) -= q * M.at(t, j);
                if (M.at(i, t) != 0) cleared = false;
            }
            for (std::size_t j = t + 1; j < M.cols; ++j) {
                if (M.at(t, j) == 0) continue;
                const BigInt q = M.at(t, j) / M.at(t, t);
                for (std::size_t i = t; i < M.rows; ++i) M.at(i, j) -= q * M.at(i, t);
                if (M.at(t, j) != 0) cleared = false;
            }
            if (!cleared) {
                // A remainder smaller than the pivot survived; move it to the
                // pivot slot and sweep again.
                std::size_t bi = t, bj = t;
                BigInt best = abs(M.at(t, t));
                for (std::size_t i = t + 1; i < M.rows; ++i)
                    if (M.at(i, t) != 0 && abs(M.at(i, t)) < best) best = abs(M.at(i, t)), bi = i, bj = t;
                for (std::size_t j = t + 1; j < M.cols; ++j)
                    if (M.at(t, j) != 0 && abs(M.at(t, j)) < best) best = abs(M.at(t, j)), bi = t, bj = j;
                swap_rows(M, t, bi);
                swap_cols(M, t, bj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < M.rows && !bad_row; ++i)
                for (std::size_t j = t + 1; j < M.cols; ++j)
                    if (M.at(i, j) % M.at(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            for (std::size_t j = t; j < M.cols; ++j) M.at(t, j) += M.at(*bad_row, j);
        }
        factors.push_back(abs(M.at(t, t)));
    }
    return factors;
}

}  // namespace sring
