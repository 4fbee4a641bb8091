#include "wheelhouse/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wheelhouse {

void SparseMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    Rat vv = v;
    vv.canonicalize();
    if (vv == 0)
        data_[r].erase(c);
    else
        data_[r][c] = std::move(vv);
}

void SparseMatrix::add(int r, int c, const Rat& v) {
    if (v == 0) return;
    Rat nv = get(r, c) + v;
    set(r, c, nv);
}

Rat SparseMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rat(0) : it->second;
}

size_t SparseMatrix::nnz() const {
    size_t s = 0;
    for (const auto& r : data_) s += r.size();
    return s;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.set(c, r, v);
    return t;
}

int SparseMatrix::rank() const {
    // Clear denominators row by row, then run fraction-free elimination
    // with exact integer divisions (Bareiss).
    std::vector<std::map<int, mpz_class>> rows;
    rows.reserve(rows_);
    for (int r = 0; r < rows_; ++r) {
        if (data_[r].empty()) continue;
        mpz_class lcm = 1;
        for (const auto& [c, v] : data_[r]) {
            mpz_class den = v.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::map<int, mpz_class> row;
        for (const auto& [c, v] : data_[r]) row[c] = v.get_num() * (lcm / v.get_den());
        rows.push_back(std::move(row));
    }

    int rank = 0;
    mpz_class prev_pivot = 1;
    std::vector<bool> used(rows.size(), false);
    while (true) {
        // pick the unused row with fewest entries
        int best = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            if (best < 0 || rows[r].size() < rows[best].size()) best = (int)r;
        }
        if (best < 0) break;
        used[best] = true;
        ++rank;
        int pc = rows[best].begin()->first;
        mpz_class pv = rows[best].begin()->second;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            auto it = rows[r].find(pc);
            mpz_class f = it == rows[r].end() ? mpz_class(0) : it->second;
            std::map<int, mpz_class> nr;
            // Bareiss update: (pv*a - f*b) / prev_pivot, exact division.
            // Every remaining row is updated, including those with f = 0,
            // or the divisions of later rounds stop being exact.
            for (const auto& [c, a] : rows[r]) {
                if (c == pc) continue;
                mpz_class val = pv * a;
                if (f != 0) {
                    auto jt = rows[best].find(c);
                    if (jt != rows[best].end()) val -= f * jt->second;
                }
                if (val != 0) {
                    mpz_class q;
                    mpz_divexact(q.get_mpz_t(), val.get_mpz_t(), prev_pivot.get_mpz_t());
                    nr[c] = std::move(q);
                }
            }
            if (f != 0) {
                for (const auto& [c, b] : rows[best]) {
                    if (c == pc || rows[r].count(c)) continue;
                    mpz_class val = -f * b;
                    mpz_class q;
                    mpz_divexact(q.get_mpz_t(), val.get_mpz_t(), prev_pivot.get_mpz_t());
                    if (q != 0) nr[c] = std::move(q);
                }
            }
            rows[r] = std::move(nr);
        }
        prev_pivot = pv;
    }
    return rank;
}

namespace {

// Column echelon bookkeeping: reduced vectors plus the combination of
// original vectors that produced each reduced one.
struct Echelon {
    std::vector<int> pivot_col;
    std::vector<std::map<int, Rat>> rows;
    std::vector<std::map<int, Rat>> combo;

    std::pair<std::map<int, Rat>, std::map<int, Rat>> reduce(std::map<int, Rat> v) const {
        std::map<int, Rat> used;
        bool progress = true;
        while (progress && !v.empty()) {
            progress = false;
            for (size_t i = 0; i < rows.size(); ++i) {
                auto it = v.find(pivot_col[i]);
                if (it == v.end()) continue;
                Rat f = it->second / rows[i].begin()->second;
                for (const auto& [c, val] : rows[i]) {
                    auto jt = v.find(c);
                    Rat nv = (jt == v.end() ? Rat(0) : jt->second) - f * val;
                    if (nv == 0) {
                        if (jt != v.end()) v.erase(jt);
                    } else {
                        v[c] = nv;
                    }
                }
                for (const auto& [r, val] : combo[i]) {
                    Rat nv = (used.count(r) ? used[r] : Rat(0)) + f * val;
                    if (nv == 0)
                        used.erase(r);
                    else
                        used[r] = nv;
                }
                progress = true;
            }
        }
        return {std::move(v), std::move(used)};
    }

    bool insert(std::map<int, Rat> v, int idx) {
        auto [res, used] = reduce(std::move(v));
        if (res.empty()) return false;
        std::map<int, Rat> cmb;
        cmb[idx] = 1;
        for (const auto& [r, val] : used) {
            Rat nv = -val + (cmb.count(r) ? cmb[r] : Rat(0));
            if (nv == 0)
                cmb.erase(r);
            else
                cmb[r] = nv;
        }
        pivot_col.push_back(res.begin()->first);
        rows.push_back(std::move(res));
        combo.push_back(std::move(cmb));
        return true;
    }
};

} // namespace

std::optional<std::vector<Rat>> SparseMatrix::solve(const std::vector<Rat>& y) const {
    if ((int)y.size() != rows_) throw std::invalid_argument("solve: size mismatch");
    SparseMatrix t = transpose();
    Echelon ech;
    for (int c = 0; c < cols_; ++c) {
        std::map<int, Rat> v = t.data_[c];
        ech.insert(std::move(v), c);
    }
    std::map<int, Rat> target;
    for (int r = 0; r < rows_; ++r)
        if (y[r] != 0) target[r] = y[r];
    auto [res, used] = ech.reduce(std::move(target));
    if (!res.empty()) return std::nullopt;
    std::vector<Rat> x(cols_, 0);
    for (const auto& [c, val] : used) x[c] = val;
    return x;
}

std::vector<std::vector<Rat>> SparseMatrix::kernel() const {
    SparseMatrix t = transpose();
    Echelon ech;
    std::vector<std::vector<Rat>> out;
    for (int c = 0; c < cols_; ++c) {
        std::map<int, Rat> v = t.data_[c];
        auto [res, used] = ech.reduce(std::move(v));
        if (res.empty()) {
            std::vector<Rat> k(cols_, 0);
            k[c] = 1;
            for (const auto& [cc, val] : used) k[cc] = -val;
            out.push_back(std::move(k));
        } else {
            std::map<int, Rat> cmb;
            cmb[c] = 1;
            for (const auto& [r, val] : used) cmb[r] = -val;
            ech.pivot_col.push_back(res.begin()->first);
            ech.rows.push_back(std::move(res));
            ech.combo.push_back(std::move(cmb));
        }
    }
    return out;
}

std::optional<std::vector<Rat>> in_span(const std::vector<std::vector<Rat>>& vectors,
                                        const std::vector<Rat>& target) {
    size_t dim = target.size();
    SparseMatrix m((int)dim, (int)vectors.size());
    for (size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != dim) throw std::invalid_argument("in_span: dimension mismatch");
        for (size_t i = 0; i < dim; ++i)
            if (vectors[j][i] != 0) m.set((int)i, (int)j, vectors[j][i]);
    }
    return m.solve(target);
}

} // namespace wheelhouse
