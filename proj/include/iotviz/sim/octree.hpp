#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "iotviz/core/vec3.hpp"

namespace iotviz {

// Barnes-Hut octree over charged particles.
//
// Each cell stores its summed charge, a center of charge weighted by |q|
// (so mixed-sign clusters still get a point inside the cell), and the
// dipole and traceless quadrupole moments about that center. Leaves hold
// one particle, or several when they coincide below kMaxDepth.
class ChargeOctree {
public:
    static constexpr int kMaxDepth = 24;

    struct Cell {
        Vec3 center;
        double half = 0.0;  // half the cell edge length
        double charge = 0.0;
        double abs_charge = 0.0;
        Vec3 center_of_charge;
        Vec3 dipole;
        std::array<double, 6> quadrupole{};  // xx yy zz xy xz yz
        std::array<std::int32_t, 8> child{-1, -1, -1, -1, -1, -1, -1, -1};
        std::uint32_t first = 0;  // into leaf_members(), leaves only
        std::uint32_t count = 0;
        bool leaf = true;

        double extent() const { return 2.0 * half; }
        bool contains(const Vec3& p) const {
            return std::abs(p.x - center.x) <= half && std::abs(p.y - center.y) <= half &&
                   std::abs(p.z - center.z) <= half;
        }
    };

    ChargeOctree() = default;

    // `members` are indices into positions/charges; only they are inserted.
    ChargeOctree(std::span<const Vec3> positions, std::span<const double> charges, std::span<const std::size_t> members)
        : positions_(positions), charges_(charges) {
        if (members.empty()) return;
        Vec3 lo = positions[members[0]];
        Vec3 hi = lo;
        for (const auto i : members) {
            const auto& p = positions[i];
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
        }
        const double half = 0.5 * std::max({hi.x - lo.x, hi.y - lo.y, hi.z - lo.z, 1e-9}) * (1.0 + 1e-9);
        std::vector<std::size_t> idx(members.begin(), members.end());
        cells_.reserve(2 * members.size() + 1);
        cells_.push_back({});
        cells_[0].center = 0.5 * (lo + hi);
        cells_[0].half = half;
        build(0, idx, 0);
    }

    bool empty() const { return cells_.empty(); }
    std::span<const Cell> cells() const { return cells_; }
    std::span<const std::size_t> leaf_members() const { return leaf_members_; }
    const Cell& root() const { return cells_.front(); }

    // Visit the cells that act on particle `self`: `on_cell(cell)` for cells
    // accepted by the opening test (extent / distance < theta, and `self`
    // not inside), `on_particle(j)` for every particle reached in an
    // opened leaf. theta == 0 opens everything, which is the exact sum.
    template <class CellFn, class ParticleFn>
    void walk(std::size_t self, double theta, CellFn&& on_cell, ParticleFn&& on_particle) const {
        if (cells_.empty()) return;
        const Vec3 x = positions_[self];
        std::int32_t stack[8 * kMaxDepth + 8];
        int top = 0;
        stack[top++] = 0;
        while (top > 0) {
            const Cell& c = cells_[static_cast<std::size_t>(stack[--top])];
            if (c.leaf) {
                for (std::uint32_t k = 0; k < c.count; ++k) {
                    const auto j = leaf_members_[c.first + k];
                    if (j != self) on_particle(j);
                }
                continue;
            }
            if (theta > 0.0 && !c.contains(x)) {
                const double d = norm(c.center_of_charge - x);
                if (d > 0.0 && c.extent() < theta * d) {
                    on_cell(c);
                    continue;
                }
            }
            // push in reverse so children are visited in octant order 0..7
            for (int o = 7; o >= 0; --o)
                if (c.child[static_cast<std::size_t>(o)] >= 0) stack[top++] = c.child[static_cast<std::size_t>(o)];
        }
    }

private:
    static int octant(const Vec3& p, const Vec3& c) {
        return (p.x >= c.x ? 1 : 0) | (p.y >= c.y ? 2 : 0) | (p.z >= c.z ? 4 : 0);
    }

    void build(std::size_t cell_index, std::vector<std::size_t>& idx, int depth) {
        double q = 0.0;
        double aq = 0.0;
        Vec3 weighted;
        for (const auto i : idx) {
            q += charges_[i];
            aq += std::abs(charges_[i]);
            weighted += std::abs(charges_[i]) * positions_[i];
        }
        {
            Cell& c = cells_[cell_index];
            c.charge = q;
            c.abs_charge = aq;
            c.center_of_charge = aq > 0.0 ? weighted * (1.0 / aq) : c.center;
            for (const auto i : idx) {
                const Vec3 r = positions_[i] - c.center_of_charge;
                const double qi = charges_[i];
                const double r2 = norm2(r);
                c.dipole += qi * r;
                c.quadrupole[0] += qi * (3.0 * r.x * r.x - r2);
                c.quadrupole[1] += qi * (3.0 * r.y * r.y - r2);
                c.quadrupole[2] += qi * (3.0 * r.z * r.z - r2);
                c.quadrupole[3] += qi * 3.0 * r.x * r.y;
                c.quadrupole[4] += qi * 3.0 * r.x * r.z;
                c.quadrupole[5] += qi * 3.0 * r.y * r.z;
            }
        }

        if (idx.size() <= 1 || depth >= kMaxDepth) {
            Cell& c = cells_[cell_index];
            c.leaf = true;
            c.first = static_cast<std::uint32_t>(leaf_members_.size());
            c.count = static_cast<std::uint32_t>(idx.size());
            leaf_members_.insert(leaf_members_.end(), idx.begin(), idx.end());
            return;
        }

        std::array<std::vector<std::size_t>, 8> parts;
        const Vec3 center = cells_[cell_index].center;
        const double half = cells_[cell_index].half;
        for (const auto i : idx) parts[static_cast<std::size_t>(octant(positions_[i], center))].push_back(i);
        cells_[cell_index].leaf = false;
        for (int o = 0; o < 8; ++o) {
            auto& part = parts[static_cast<std::size_t>(o)];
            if (part.empty()) continue;
            const double h = 0.5 * half;
            Cell child;
            child.half = h;
            child.center = {center.x + ((o & 1) ? h : -h), center.y + ((o & 2) ? h : -h),
                            center.z + ((o & 4) ? h : -h)};
            const auto child_index = cells_.size();
            cells_.push_back(child);
            cells_[cell_index].child[static_cast<std::size_t>(o)] = static_cast<std::int32_t>(child_index);
            build(child_index, part, depth + 1);
        }
    }

    std::span<const Vec3> positions_;
    std::span<const double> charges_;
    std::vector<Cell> cells_;
    std::vector<std::size_t> leaf_members_;
};

}  // namespace iotviz
