#pragma once

#include <map>
#include <vector>

#include "polynomial.hpp"

namespace hilb10 {

/// Small dense matrix over an exact field; enough linear algebra for socle,
/// catalecticant and kernel computations.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& field)
        : rows_(rows), cols_(cols), field_(field),
          data_(rows * cols, Scalar::zero(field)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rank() const {
        Matrix m = *this;
        return m.forwardEliminate().size();
    }

    /// Basis of the right kernel, as coordinate vectors of length cols().
    std::vector<std::vector<Scalar>> kernelBasis() const {
        Matrix m = *this;
        std::vector<std::size_t> pivotCols = m.forwardEliminate();
        std::vector<bool> isPivot(cols_, false);
        for (std::size_t c : pivotCols) isPivot[c] = true;

        // back substitution to reduced echelon form
        for (std::size_t i = pivotCols.size(); i-- > 0;) {
            std::size_t pc = pivotCols[i];
            Scalar inv = m.at(i, pc).inverse();
            for (std::size_t c = pc; c < cols_; ++c) m.at(i, c) = m.at(i, c) * inv;
            for (std::size_t r = 0; r < i; ++r) {
                Scalar f = m.at(r, pc);
                if (f.isZero()) continue;
                for (std::size_t c = pc; c < cols_; ++c)
                    m.at(r, c) = m.at(r, c) - f * m.at(i, c);
            }
        }

        std::vector<std::vector<Scalar>> kernel;
        for (std::size_t freeCol = 0; freeCol < cols_; ++freeCol) {
            if (isPivot[freeCol]) continue;
            std::vector<Scalar> v(cols_, Scalar::zero(field_));
            v[freeCol] = Scalar::one(field_);
            for (std::size_t i = 0; i < pivotCols.size(); ++i)
                v[pivotCols[i]] = -m.at(i, freeCol);
            kernel.push_back(std::move(v));
        }
        return kernel;
    }

private:
    /// In-place row echelon; returns pivot column per pivot row.
    std::vector<std::size_t> forwardEliminate() {
        std::vector<std::size_t> pivotCols;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < rows_ && at(pivot, col).isZero()) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != row)
                for (std::size_t c = col; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
            for (std::size_t r = row + 1; r < rows_; ++r) {
                if (at(r, col).isZero()) continue;
                Scalar f = at(r, col) / at(row, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) = at(r, c) - f * at(row, c);
            }
            pivotCols.push_back(col);
            ++row;
        }
        return pivotCols;
    }

    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

/// Triangular basis of a k-span of polynomials, keyed by degrevlex leading
/// monomial. Inserting reduces against existing rows; a polynomial reduces to
/// zero iff it already lies in the span.
class PolyEchelon {
public:
    explicit PolyEchelon(RingPtr ring) : ring_(std::move(ring)) {}

    std::size_t dimension() const { return rows_.size(); }
    const RingPtr& ring() const { return ring_; }

    /// Returns true if p enlarged the span.
    bool insert(Polynomial p) {
        p = reduce(std::move(p));
        if (p.isZero()) return false;
        const Monomial lead = p.leadingMonomial(MonomialOrder::degrevlex());
        Scalar inv = p.coefficient(lead).inverse();
        rows_.emplace(lead, p * inv);
        return true;
    }

    bool contains(const Polynomial& p) const { return reduce(p).isZero(); }

    /// Remainder of p modulo the span (rows are monic, keyed by lead).
    Polynomial reduce(Polynomial p) const {
        for (;;) {
            if (p.isZero()) return p;
            // eliminate the highest term that matches a row lead
            const Polynomial* row = nullptr;
            Scalar coeff = Scalar::zero(ring_->field());
            for (const auto& [m, c] : p.terms()) {
                auto it = rows_.find(m);
                if (it != rows_.end()) {
                    row = &it->second;
                    coeff = c;
                    break;
                }
            }
            if (!row) return p;
            p = p - (*row) * coeff;
        }
    }

    const std::map<Monomial, Polynomial, MonomialDegRevLexGreater>& rows() const { return rows_; }

private:
    RingPtr ring_;
    std::map<Monomial, Polynomial, MonomialDegRevLexGreater> rows_;
};

} // namespace hilb10
