#include "lightpanel/integrate.hpp"

#include <Eigen/Sparse>

#include <cmath>
#include <queue>

namespace lightpanel {

GradientField normals_to_gradients(const NormalAlbedoMap& map, double z_floor) {
    GradientField field;
    field.width = map.width;
    field.height = map.height;
    const std::size_t npix = map.normals.size();
    field.p.assign(npix, 0.0);
    field.q.assign(npix, 0.0);
    field.valid.assign(npix, false);
    for (std::size_t i = 0; i < npix; ++i) {
        if (!map.valid[i])
            continue;
        const UnitVector3& n = map.normals[i];
        if (n.z <= z_floor)
            continue;
        field.p[i] = -n.x / n.z;
        field.q[i] = -n.y / n.z;
        field.valid[i] = true;
    }
    return field;
}

namespace {

// 4-connected component labels over the valid mask; -1 for invalid pixels.
std::vector<int> label_components(const GradientField& f, int& count) {
    std::vector<int> label(f.valid.size(), -1);
    count = 0;
    for (int y = 0; y < f.height; ++y) {
        for (int x = 0; x < f.width; ++x) {
            const std::size_t s = f.idx(x, y);
            if (!f.valid[s] || label[s] >= 0)
                continue;
            std::queue<std::pair<int, int>> work;
            work.emplace(x, y);
            label[s] = count;
            while (!work.empty()) {
                auto [cx, cy] = work.front();
                work.pop();
                const int nx[4] = {cx - 1, cx + 1, cx, cx};
                const int ny[4] = {cy, cy, cy - 1, cy + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nx[k] < 0 || nx[k] >= f.width || ny[k] < 0 || ny[k] >= f.height)
                        continue;
                    const std::size_t t = f.idx(nx[k], ny[k]);
                    if (f.valid[t] && label[t] < 0) {
                        label[t] = count;
                        work.emplace(nx[k], ny[k]);
                    }
                }
            }
            ++count;
        }
    }
    return label;
}

} // namespace

DepthMap integrate(const GradientField& field, const IntegrateOptions& opts) {
    const std::size_t npix = field.valid.size();
    std::size_t nvalid = 0;
    for (bool v : field.valid) nvalid += v ? 1 : 0;
    if (nvalid == 0)
        throw std::domain_error("integrate: empty valid region");

    // Unknown index per valid pixel.
    std::vector<int> unknown(npix, -1);
    {
        int next = 0;
        for (std::size_t i = 0; i < npix; ++i)
            if (field.valid[i])
                unknown[i] = next++;
    }

    // One equation per valid-adjacent pixel pair, with the gradient sampled
    // at the edge midpoint: z(b) - z(a) = (g(a) + g(b)) / 2.
    using Triplet = Eigen::Triplet<double>;
    std::vector<Triplet> lap;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nvalid));
    std::vector<double> diag(nvalid, 0.0);

    auto add_edge = [&](std::size_t a, std::size_t b, double d) {
        const int ia = unknown[a], ib = unknown[b];
        diag[static_cast<std::size_t>(ia)] += 1.0;
        diag[static_cast<std::size_t>(ib)] += 1.0;
        lap.emplace_back(ia, ib, -1.0);
        lap.emplace_back(ib, ia, -1.0);
        rhs[ia] -= d;
        rhs[ib] += d;
    };

    for (int y = 0; y < field.height; ++y) {
        for (int x = 0; x < field.width; ++x) {
            const std::size_t s = field.idx(x, y);
            if (!field.valid[s])
                continue;
            if (x + 1 < field.width) {
                const std::size_t t = field.idx(x + 1, y);
                if (field.valid[t])
                    add_edge(s, t, 0.5 * (field.p[s] + field.p[t]));
            }
            if (y + 1 < field.height) {
                const std::size_t t = field.idx(x, y + 1);
                if (field.valid[t])
                    add_edge(s, t, 0.5 * (field.q[s] + field.q[t]));
            }
        }
    }
    for (std::size_t i = 0; i < nvalid; ++i)
        lap.emplace_back(static_cast<int>(i), static_cast<int>(i), diag[i]);

    Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(nvalid),
                                  static_cast<Eigen::Index>(nvalid));
    a.setFromTriplets(lap.begin(), lap.end());

    Eigen::VectorXd z;
    if (rhs.norm() == 0.0) {
        z = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nvalid));
    } else {
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper>
            cg(a);
        cg.setTolerance(opts.cg_tolerance);
        cg.setMaxIterations(static_cast<Eigen::Index>(nvalid) * opts.max_iterations_per_pixel);
        z = cg.solve(rhs);
    }

    // Zero-mean anchor, per connected component.
    int ncomp = 0;
    const std::vector<int> label = label_components(field, ncomp);
    std::vector<double> comp_sum(static_cast<std::size_t>(ncomp), 0.0);
    std::vector<std::size_t> comp_count(static_cast<std::size_t>(ncomp), 0);
    for (std::size_t i = 0; i < npix; ++i) {
        if (unknown[i] >= 0) {
            comp_sum[static_cast<std::size_t>(label[i])] += z[unknown[i]];
            comp_count[static_cast<std::size_t>(label[i])] += 1;
        }
    }

    DepthMap depth;
    depth.width = field.width;
    depth.height = field.height;
    depth.z.assign(npix, 0.0);
    depth.valid = field.valid;
    for (std::size_t i = 0; i < npix; ++i) {
        if (unknown[i] >= 0) {
            const auto c = static_cast<std::size_t>(label[i]);
            depth.z[i] = z[unknown[i]] - comp_sum[c] / static_cast<double>(comp_count[c]);
        }
    }
    return depth;
}

TriangleMesh depth_to_mesh(const DepthMap& depth, const NormalAlbedoMap* albedo) {
    TriangleMesh mesh;
    const std::size_t npix = depth.z.size();
    std::vector<std::uint32_t> vertex_of(npix, 0);
    std::vector<bool> has_vertex(npix, false);
    for (int y = 0; y < depth.height; ++y) {
        for (int x = 0; x < depth.width; ++x) {
            const std::size_t i = depth.idx(x, y);
            if (!depth.valid[i])
                continue;
            vertex_of[i] = static_cast<std::uint32_t>(mesh.vertices.size());
            has_vertex[i] = true;
            mesh.vertices.push_back({static_cast<double>(x), static_cast<double>(y),
                                     depth.z[i]});
            if (albedo) {
                const double g = std::clamp(albedo->albedo[i], 0.0, 1.0);
                mesh.gray.push_back(static_cast<std::uint8_t>(std::lround(g * 255.0)));
            }
        }
    }
    for (int y = 0; y + 1 < depth.height; ++y) {
        for (int x = 0; x + 1 < depth.width; ++x) {
            const std::size_t i00 = depth.idx(x, y), i10 = depth.idx(x + 1, y);
            const std::size_t i01 = depth.idx(x, y + 1), i11 = depth.idx(x + 1, y + 1);
            if (has_vertex[i00] && has_vertex[i10] && has_vertex[i01] && has_vertex[i11]) {
                mesh.triangles.push_back({vertex_of[i00], vertex_of[i10], vertex_of[i11]});
                mesh.triangles.push_back({vertex_of[i00], vertex_of[i11], vertex_of[i01]});
            }
        }
    }
    return mesh;
}

} // namespace lightpanel
