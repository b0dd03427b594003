// Copyright 2026 The adiaquant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Symmetry sectors built from groups of bit permutations combined with bit
 * negations. Such maps permute computational basis states without phases,
 * so the invariant subspace is spanned by normalized orbit sums; the
 * uniform starting state always lies in it.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/hamiltonian.hpp"

namespace adiaquant {

/// Flip `flips`, then apply `swaps` left to right. Bits are 1-based.
struct BitSymmetry {
    std::vector<std::pair<unsigned, unsigned>> swaps;
    std::vector<unsigned> flips;

    [[nodiscard]] BasisIndex apply(unsigned n, BasisIndex z) const {
        for (unsigned b : flips) {
            z ^= bit_mask(n, b);
        }
        for (const auto &[a, b] : swaps) {
            unsigned va = bit_value(n, z, a);
            unsigned vb = bit_value(n, z, b);
            if (va != vb) {
                z ^= bit_mask(n, a) | bit_mask(n, b);
            }
        }
        return z;
    }

    /// Image of each bit under the permutation part (index 0 holds bit 1).
    [[nodiscard]] std::vector<unsigned> permutation(unsigned n) const {
        std::vector<unsigned> image(n);
        std::iota(image.begin(), image.end(), 1u);
        for (const auto &[a, b] : swaps) {
            for (auto &x : image) {
                if (x == a) {
                    x = b;
                } else if (x == b) {
                    x = a;
                }
            }
        }
        return image;
    }
};

class SectorProjector {
  public:
    enum class Kind { Full, GlobalNegation, BitPermutationInvariant };

    static SectorProjector full() { return SectorProjector(Kind::Full, {}, "full"); }

    /// +1 eigenspace of G = prod_j sigma_x^(j).
    static SectorProjector global_negation() { return SectorProjector(Kind::GlobalNegation, {}, "global-negation"); }

    /// Invariant under the group generated by the given signed permutations.
    static SectorProjector invariant_under(std::vector<BitSymmetry> generators, std::string description) {
        return SectorProjector(Kind::BitPermutationInvariant, std::move(generators), std::move(description));
    }

    /// Fully symmetric in the listed bits, optionally also under global negation.
    static SectorProjector symmetric(const std::vector<unsigned> &bits, unsigned n, bool with_negation = false) {
        std::vector<BitSymmetry> gens;
        for (std::size_t k = 0; k + 1 < bits.size(); ++k) {
            gens.push_back(BitSymmetry{{{bits[k], bits[k + 1]}}, {}});
        }
        if (with_negation) {
            BitSymmetry neg;
            for (unsigned b = 1; b <= n; ++b) {
                neg.flips.push_back(b);
            }
            gens.push_back(std::move(neg));
        }
        std::string desc = "bit-permutation(";
        for (std::size_t k = 0; k < bits.size(); ++k) {
            desc += (k ? "," : "") + std::to_string(bits[k]);
        }
        desc += with_negation ? ";negation)" : ")";
        return invariant_under(std::move(gens), std::move(desc));
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const std::string &description() const { return description_; }

    /// Generators for an n-bit register (global negation expands to one flip-all map).
    [[nodiscard]] std::vector<BitSymmetry> generators(unsigned n) const {
        if (kind_ == Kind::GlobalNegation) {
            BitSymmetry neg;
            for (unsigned b = 1; b <= n; ++b) {
                neg.flips.push_back(b);
            }
            return {neg};
        }
        return generators_;
    }

  private:
    SectorProjector(Kind kind, std::vector<BitSymmetry> gens, std::string description)
        : kind_(kind), generators_(std::move(gens)), description_(std::move(description)) {}

    Kind kind_ = Kind::Full;
    std::vector<BitSymmetry> generators_;
    std::string description_;
};

/// Orbit decomposition of the 2^n basis under a sector's symmetry group.
struct SectorBasis {
    unsigned n = 0;
    std::vector<std::uint32_t> orbit_of;  // basis index -> orbit label
    std::vector<std::uint32_t> orbit_size;
    std::vector<double> inv_sqrt_size;

    [[nodiscard]] std::size_t dimension() const { return orbit_size.size(); }

    static SectorBasis build(unsigned n, const SectorProjector &sector) {
        SectorBasis basis;
        basis.n = n;
        const std::size_t dim = std::size_t{1} << n;
        basis.orbit_of.resize(dim);
        if (sector.kind() == SectorProjector::Kind::Full) {
            std::iota(basis.orbit_of.begin(), basis.orbit_of.end(), 0u);
            basis.orbit_size.assign(dim, 1);
            basis.inv_sqrt_size.assign(dim, 1.0);
            return basis;
        }
        // union-find keyed by the smallest member
        std::vector<std::uint32_t> parent(dim);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto &g : sector.generators(n)) {
            for (std::size_t z = 0; z < dim; ++z) {
                auto a = find(static_cast<std::uint32_t>(z));
                auto b = find(static_cast<std::uint32_t>(g.apply(n, z)));
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
        std::vector<std::uint32_t> label(dim, UINT32_MAX);
        for (std::size_t z = 0; z < dim; ++z) {
            auto root = find(static_cast<std::uint32_t>(z));
            if (label[root] == UINT32_MAX) {
                label[root] = static_cast<std::uint32_t>(basis.orbit_size.size());
                basis.orbit_size.push_back(0);
            }
            basis.orbit_of[z] = label[root];
            ++basis.orbit_size[label[root]];
        }
        for (auto size : basis.orbit_size) {
            basis.inv_sqrt_size.push_back(1.0 / std::sqrt(static_cast<double>(size)));
        }
        return basis;
    }

    template <class T>
    void embed(std::span<const T> coords, std::span<T> full) const {
        for (std::size_t z = 0; z < orbit_of.size(); ++z) {
            full[z] = coords[orbit_of[z]] * inv_sqrt_size[orbit_of[z]];
        }
    }

    template <class T>
    void project(std::span<const T> full, std::span<T> coords) const {
        std::fill(coords.begin(), coords.end(), T{});
        for (std::size_t z = 0; z < orbit_of.size(); ++z) {
            coords[orbit_of[z]] += full[z];
        }
        for (std::size_t a = 0; a < coords.size(); ++a) {
            coords[a] *= inv_sqrt_size[a];
        }
    }
};

/// True when every generator preserves both H_P and the driver weights.
inline bool sector_commutes(const OperatorPair &pair, const SectorProjector &sector) {
    const unsigned n = pair.n();
    const auto &hp = pair.hp().values;
    const auto &w = pair.hb().weights;
    for (const auto &g : sector.generators(n)) {
        auto image = g.permutation(n);
        for (unsigned k = 0; k < n; ++k) {
            if (w[image[k] - 1] != w[k]) {
                return false;
            }
        }
        for (std::size_t z = 0; z < hp.size(); ++z) {
            if (hp[g.apply(n, z)] != hp[z]) {
                return false;
            }
        }
    }
    return true;
}

/**
 * An OperatorPair restricted to a symmetry sector, in orthonormal orbit-sum
 * coordinates. Keeps a reference to the pair, which must outlive it.
 */
class SectorOperator {
  public:
    SectorOperator(const OperatorPair &pair, const SectorProjector &sector)
        : pair_(pair), sector_(sector), basis_(SectorBasis::build(pair.n(), sector)) {
        if (!sector_commutes(pair, sector)) {
            throw Error(ErrorKind::InvalidArgument,
                        "sector '" + sector.description() + "' is not a symmetry of this instance");
        }
    }

    [[nodiscard]] std::size_t dimension() const { return basis_.dimension(); }
    [[nodiscard]] const SectorBasis &basis() const { return basis_; }
    [[nodiscard]] const SectorProjector &sector() const { return sector_; }
    [[nodiscard]] const OperatorPair &pair() const { return pair_.get(); }
    [[nodiscard]] double norm_bound() const { return pair_.get().norm_bound(); }

    template <class T>
    void apply(double s, std::span<const T> in, std::span<T> out) const {
        if (sector_.kind() == SectorProjector::Kind::Full) {
            pair_.get().apply<T>(s, in, out);
            return;
        }
        const std::size_t full_dim = pair_.get().dimension();
        std::vector<T> a(full_dim), b(full_dim);
        basis_.embed<T>(in, a);
        pair_.get().apply<T>(s, std::span<const T>(a), std::span<T>(b));
        basis_.project<T>(std::span<const T>(b), out);
    }

    [[nodiscard]] Eigen::MatrixXd dense(double s) const {
        if (sector_.kind() == SectorProjector::Kind::Full) {
            return pair_.get().dense(s);
        }
        const auto &pair = pair_.get();
        const unsigned n = pair.n();
        const auto d = static_cast<Eigen::Index>(dimension());
        if (static_cast<std::size_t>(d) > kDenseDimensionCap) {
            throw Error(ErrorKind::Capacity, "dense sector matrix too large");
        }
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
        const double driver = 1.0 - s;
        const double shift = 0.5 * driver * pair.hb().total_weight();
        for (std::size_t z = 0; z < pair.dimension(); ++z) {
            const auto a = basis_.orbit_of[z];
            const double na = std::sqrt(static_cast<double>(basis_.orbit_size[a]));
            h(a, a) += (s * pair.hp().values[z] + shift) / (na * na);
            for (unsigned k = 1; k <= n; ++k) {
                const auto b = basis_.orbit_of[z ^ bit_mask(n, k)];
                const double nb = std::sqrt(static_cast<double>(basis_.orbit_size[b]));
                h(a, b) -= 0.5 * driver * pair.hb().weights[k - 1] / (na * nb);
            }
        }
        return h;
    }

  private:
    std::reference_wrapper<const OperatorPair> pair_;
    SectorProjector sector_;
    SectorBasis basis_;
};

static_assert(InterpolatedOperator<SectorOperator>);

} // namespace adiaquant
