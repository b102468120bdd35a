#include "recon/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace recon {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// a ^= b over Z/2, both sorted ascending
void xor_into(std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a.swap(out);
}

// Rank of a sparse Z/2 matrix given as sorted columns.
int z2_rank(std::vector<std::vector<int>> cols) {
    std::unordered_map<int, int> owner;
    std::vector<std::vector<int>> basis;
    int rank = 0;
    for (auto& col : cols) {
        while (!col.empty()) {
            auto it = owner.find(col.back());
            if (it == owner.end()) break;
            xor_into(col, basis[it->second]);
        }
        if (!col.empty()) {
            owner[col.back()] = static_cast<int>(basis.size());
            basis.push_back(std::move(col));
            ++rank;
        }
    }
    return rank;
}

// Simplices of one dimension, as a sorted block (the global order is
// dimension-major, so each block is lexicographically sorted).
std::vector<const Simplex*> dim_block(const SimplicialComplex& k, int dim) {
    std::vector<const Simplex*> out;
    for (const Simplex& s : k.simplices)
        if (static_cast<int>(s.size()) == dim + 1) out.push_back(&s);
    return out;
}

int block_index(const std::vector<const Simplex*>& block, const Simplex& s) {
    auto it = std::lower_bound(block.begin(), block.end(), s,
                               [](const Simplex* a, const Simplex& b) { return *a < b; });
    if (it == block.end() || **it != s) return -1;
    return static_cast<int>(it - block.begin());
}

// Boundary columns of the (dim)-simplices over the (dim-1)-block indices.
std::vector<std::vector<int>> boundary_columns(const std::vector<const Simplex*>& faces,
                                               const std::vector<const Simplex*>& cells) {
    std::vector<std::vector<int>> cols;
    cols.reserve(cells.size());
    for (const Simplex* cell : cells) {
        std::vector<int> col;
        Simplex face(cell->size() - 1);
        for (std::size_t drop = 0; drop < cell->size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < cell->size(); ++i)
                if (i != drop) face[w++] = (*cell)[i];
            const int row = block_index(faces, face);
            if (row < 0) throw std::invalid_argument("complex is not closed under faces");
            col.push_back(row);
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

PersistenceDiagram compute_persistence(const Filtration& f) {
    const int m = static_cast<int>(f.entries.size());
    std::unordered_map<Simplex, int, SimplexHash> index;
    index.reserve(m * 2);

    std::vector<std::vector<int>> cols(m);
    for (int j = 0; j < m; ++j) {
        const Simplex& s = f.entries[j].simplex;
        if (static_cast<int>(s.size()) - 1 > f.dim_cap)
            throw std::invalid_argument("filtration entry above the dimension cap");
        if (s.size() >= 2) {
            Simplex face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face[w++] = s[i];
                auto it = index.find(face);
                if (it == index.end())
                    throw std::invalid_argument("malformed filtration: missing face");
                if (it->second >= j)
                    throw std::invalid_argument("malformed filtration: face after coface");
                cols[j].push_back(it->second);
            }
            std::sort(cols[j].begin(), cols[j].end());
        }
        if (!index.emplace(s, j).second)
            throw std::invalid_argument("duplicate simplex in filtration");
    }

    std::vector<int> low_owner(m, -1);
    std::vector<int> killer_of(m, -1);
    std::vector<bool> is_killer(m, false);
    for (int j = 0; j < m; ++j) {
        auto& col = cols[j];
        while (!col.empty() && low_owner[col.back()] != -1)
            xor_into(col, cols[low_owner[col.back()]]);
        if (!col.empty()) {
            low_owner[col.back()] = j;
            killer_of[col.back()] = j;
            is_killer[j] = true;
        }
    }

    PersistenceDiagram diagram;
    diagram.max_scale = f.alpha_max;
    for (int i = 0; i < m; ++i) {
        if (is_killer[i]) continue;  // killers never create classes
        const int dim = static_cast<int>(f.entries[i].simplex.size()) - 1;
        if (dim > f.dim_cap - 1) continue;
        const double birth = f.entries[i].value;
        if (killer_of[i] >= 0) {
            const double death = f.entries[killer_of[i]].value;
            if (birth < death) diagram.intervals.push_back({dim, birth, death});
        } else {
            diagram.intervals.push_back({dim, birth, kInf});
        }
    }
    std::sort(diagram.intervals.begin(), diagram.intervals.end(),
              [](const PersistenceInterval& a, const PersistenceInterval& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  if (a.birth != b.birth) return a.birth < b.birth;
                  return a.death < b.death;
              });
    return diagram;
}

int persistent_betti(const PersistenceDiagram& d, const BettiQuery& q) {
    if (q.dim < 0) throw std::invalid_argument("negative homology dimension");
    if (q.s > q.t) throw std::invalid_argument("persistent Betti query needs s <= t");
    if (q.t > d.max_scale)
        throw std::out_of_range("query beyond the computed filtration range");
    int count = 0;
    for (const PersistenceInterval& iv : d.intervals)
        if (iv.dim == q.dim && iv.birth <= q.s && iv.death > q.t) ++count;
    return count;
}

int betti(const SimplicialComplex& k, int dim) {
    if (dim < 0) throw std::invalid_argument("negative homology dimension");
    if (dim >= k.dim_cap)
        throw std::invalid_argument("betti dimension exceeds the complex cap");
    const auto cells = dim_block(k, dim);
    if (cells.empty()) return 0;
    int rank_d = 0;
    if (dim >= 1) {
        const auto faces = dim_block(k, dim - 1);
        rank_d = z2_rank(boundary_columns(faces, cells));
    }
    const auto cofaces = dim_block(k, dim + 1);
    const int rank_up = cofaces.empty() ? 0 : z2_rank(boundary_columns(cells, cofaces));
    return static_cast<int>(cells.size()) - rank_d - rank_up;
}

int image_rank_oracle(const SimplicialComplex& k, const SimplicialComplex& l, int dim) {
    if (dim < 0) throw std::invalid_argument("negative homology dimension");
    if (!is_subcomplex(k, l))
        throw std::invalid_argument("image_rank_oracle: not a subcomplex");

    const auto k_cells = dim_block(k, dim);
    if (k_cells.empty()) return 0;

    // cycle basis of K: kernel of its boundary map, tracked through the
    // elimination
    std::vector<std::vector<int>> kernels;
    if (dim == 0) {
        for (std::size_t j = 0; j < k_cells.size(); ++j)
            kernels.push_back({static_cast<int>(j)});
    } else {
        const auto k_faces = dim_block(k, dim - 1);
        auto cols = boundary_columns(k_faces, k_cells);
        std::unordered_map<int, int> owner;
        std::vector<std::vector<int>> basis_col, basis_combo;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<int> col = std::move(cols[j]);
            std::vector<int> combo = {static_cast<int>(j)};
            while (!col.empty()) {
                auto it = owner.find(col.back());
                if (it == owner.end()) break;
                xor_into(col, basis_col[it->second]);
                xor_into(combo, basis_combo[it->second]);
            }
            if (col.empty()) {
                kernels.push_back(std::move(combo));
            } else {
                owner[col.back()] = static_cast<int>(basis_col.size());
                basis_col.push_back(std::move(col));
                basis_combo.push_back(std::move(combo));
            }
        }
    }
    if (kernels.empty()) return 0;

    const auto l_cells = dim_block(l, dim);
    const auto l_cofaces = dim_block(l, dim + 1);
    std::vector<std::vector<int>> boundaries;
    if (!l_cofaces.empty()) boundaries = boundary_columns(l_cells, l_cofaces);
    const int rank_b = z2_rank(boundaries);

    // re-index K's cycles into L's cell block and stack them after the
    // boundaries: image rank = rank[B | Z] - rank[B]
    std::vector<std::vector<int>> stacked = std::move(boundaries);
    for (const auto& ker : kernels) {
        std::vector<int> vec;
        for (int j : ker) {
            const int row = block_index(l_cells, *k_cells[j]);
            if (row < 0) throw std::invalid_argument("subcomplex cell missing from target");
            vec.push_back(row);
        }
        std::sort(vec.begin(), vec.end());
        stacked.push_back(std::move(vec));
    }
    return z2_rank(std::move(stacked)) - rank_b;
}

}  // namespace recon
