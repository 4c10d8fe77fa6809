#include <cmath>
#include <string>
#include <utility>

#include "cosserat_plate/dynamics.hpp"
#include "stencil.hpp"

namespace cosserat_plate {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;
using detail::first_derivative;

SymbolTables block_diagonal(const SymbolTables& f, const SymbolTables& e) {
  auto join = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(9, 9);
    out.topLeftCorner(6, 6) = a;
    out.bottomRightCorner(3, 3) = b;
    return out;
  };
  SymbolTables out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out.second[a][b] = join(f.second[a][b], e.second[a][b]);
    out.first[a] = join(f.first[a], e.first[a]);
  }
  out.zeroth = join(f.zeroth, e.zeroth);
  return out;
}

BoundaryTables block_diagonal(const BoundaryTables& f, const BoundaryTables& e) {
  auto join = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(9, 9);
    out.topLeftCorner(6, 6) = a;
    out.bottomRightCorner(3, 3) = b;
    return out;
  };
  BoundaryTables out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out.first[a][b] = join(f.first[a][b], e.first[a][b]);
    out.zeroth[a] = join(f.zeroth[a], e.zeroth[a]);
    out.load[a].resize(9, 4);
    out.load[a] << f.load[a], e.load[a];
  }
  return out;
}

LoadTables stack(const LoadTables& f, const LoadTables& e) {
  LoadTables out;
  for (int a = 0; a < 2; ++a) {
    out.gradient[a].resize(9, 4);
    out.gradient[a] << f.gradient[a], e.gradient[a];
  }
  out.value.resize(9, 4);
  out.value << f.value, e.value;
  return out;
}

void add_block(Triplets& t, int row_node, int col_node, const Eigen::MatrixXd& block,
               double weight, int row_offset) {
  if (weight == 0.0) return;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      const double v = block(r, c) * weight;
      if (v != 0.0) t.emplace_back(row_offset + 9 * row_node + r, 9 * col_node + c, v);
    }
}

Eigen::Vector2d edge_normal(int e) {
  switch (e) {
    case kLeft: return {-1.0, 0.0};
    case kRight: return {1.0, 0.0};
    case kBottom: return {0.0, -1.0};
    default: return {0.0, 1.0};
  }
}

LoadValues sample_loads(const ModelConfig& c, double x, double y, double t) {
  return c.loads ? c.loads(x, y, t) : LoadValues{};
}

// Renumbers rows of a triplet list built with row index 9*node + r.
Eigen::SparseMatrix<double, Eigen::RowMajor> rows_for(const Triplets& t,
                                                      const std::vector<int>& dofs,
                                                      int num_dofs) {
  std::vector<int> row_of(num_dofs, -1);
  for (std::size_t k = 0; k < dofs.size(); ++k) row_of[dofs[k]] = static_cast<int>(k);
  Triplets mapped;
  mapped.reserve(t.size());
  for (const auto& e : t)
    if (row_of[e.row()] >= 0) mapped.emplace_back(row_of[e.row()], e.col(), e.value());
  Eigen::SparseMatrix<double, Eigen::RowMajor> m(static_cast<int>(dofs.size()), num_dofs);
  m.setFromTriplets(mapped.begin(), mapped.end());
  return m;
}

}  // namespace

bool DiscreteModel::has_displacement_edge() const {
  for (const auto& e : config.edges)
    if (e.kind == EdgeKind::kDisplacement) return true;
  return false;
}

DiscreteModel assemble(const ModelConfig& config) {
  if (config.nx < 5 || config.ny < 5) throw ConfigError("grid too small: need nx,ny >= 5");
  if (!(config.a > 0.0) || !(config.b > 0.0) || !(config.h > 0.0))
    throw ConfigError("geometry must be positive (a, b, h)");
  if (config.threads < 1) throw ConfigError("threads must be >= 1");
  const ValidationReport report = validate_parameters(config.material);
  if (!report.admissible()) {
    std::string msg = "inadmissible material:";
    for (const auto& v : report.violations) msg += " " + v;
    throw ConfigError(msg);
  }

  DiscreteModel m;
  m.config = config;
  m.tc = config.constants ? *config.constants
                          : technical_constants(config.material, config.h, config.shear);
  m.inertia = inertia_constants(config.material, config.h, config.k4_star);
  try {
    m.flexural = build_flexural(m.tc, m.inertia, config.h);
    m.extensional = build_extensional(m.tc, m.inertia, config.h);
    m.traction = build_traction(m.tc, config.h);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  m.L9 = block_diagonal(m.flexural.L, m.extensional.L);
  m.T9 = block_diagonal(m.traction.flexural, m.traction.extensional);
  m.loads9 = stack(m.flexural.loads, m.extensional.loads);
  m.mass << m.flexural.mass, m.extensional.mass;

  m.nx = config.nx;
  m.ny = config.ny;
  m.dx = config.a / (config.nx - 1);
  m.dy = config.b / (config.ny - 1);
  const int nn = m.num_nodes();
  m.node_kind.assign(nn, NodeKind::kInterior);
  m.node_normal.assign(nn, Eigen::Vector2d::Zero());

  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      std::vector<int> on;
      if (i == 0) on.push_back(kLeft);
      if (i == m.nx - 1) on.push_back(kRight);
      if (j == 0) on.push_back(kBottom);
      if (j == m.ny - 1) on.push_back(kTop);
      if (on.empty()) continue;
      const int n = m.node(i, j);
      bool displacement = false;
      Eigen::Vector2d normal = Eigen::Vector2d::Zero();
      for (int e : on) {
        if (config.edges[e].kind == EdgeKind::kDisplacement) displacement = true;
        normal += edge_normal(e);
      }
      if (displacement) {
        m.node_kind[n] = NodeKind::kDisplacement;
      } else {
        m.node_kind[n] = NodeKind::kTraction;
        m.node_normal[n] = normal.normalized();
      }
    }

  Triplets interior, boundary;
  const auto& L = m.L9;
  const Eigen::MatrixXd mixed = L.second[0][1] + L.second[1][0];
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const int n = m.node(i, j);
      switch (m.node_kind[n]) {
        case NodeKind::kInterior: {
          for (int f = 0; f < 9; ++f) m.interior_dofs.push_back(9 * n + f);
          const double ix2 = 1.0 / (m.dx * m.dx), iy2 = 1.0 / (m.dy * m.dy);
          add_block(interior, n, n, L.zeroth - 2.0 * ix2 * L.second[0][0] -
                                        2.0 * iy2 * L.second[1][1], 1.0, 0);
          for (int s : {-1, 1}) {
            add_block(interior, n, m.node(i + s, j), L.second[0][0] * ix2 +
                                                          L.first[0] * (0.5 * s / m.dx), 1.0, 0);
            add_block(interior, n, m.node(i, j + s), L.second[1][1] * iy2 +
                                                          L.first[1] * (0.5 * s / m.dy), 1.0, 0);
            for (int r : {-1, 1})
              add_block(interior, n, m.node(i + s, j + r), mixed, s * r / (4.0 * m.dx * m.dy), 0);
          }
          break;
        }
        case NodeKind::kDisplacement:
          m.displacement_nodes.push_back(n);
          for (int f = 0; f < 9; ++f) m.displacement_dofs.push_back(9 * n + f);
          break;
        case NodeKind::kTraction: {
          m.traction_nodes.push_back(n);
          for (int f = 0; f < 9; ++f) m.traction_dofs.push_back(9 * n + f);
          const Eigen::Vector2d nv = m.node_normal[n];
          const Eigen::MatrixXd z = nv[0] * m.T9.zeroth[0] + nv[1] * m.T9.zeroth[1];
          add_block(boundary, n, n, z, 1.0, 0);
          const Eigen::MatrixXd t1 = nv[0] * m.T9.first[0][0] + nv[1] * m.T9.first[1][0];
          const Eigen::MatrixXd t2 = nv[0] * m.T9.first[0][1] + nv[1] * m.T9.first[1][1];
          for (const auto& [o, w] : first_derivative(i, m.nx, m.dx))
            add_block(boundary, n, m.node(i + o, j), t1, w, 0);
          for (const auto& [o, w] : first_derivative(j, m.ny, m.dy))
            add_block(boundary, n, m.node(i, j + o), t2, w, 0);
          break;
        }
      }
    }

  m.L_i = rows_for(interior, m.interior_dofs, m.num_dofs());
  m.B_t = rows_for(boundary, m.traction_dofs, m.num_dofs());
  if (!m.traction_dofs.empty()) {
    Triplets tt;
    std::vector<int> col_of(m.num_dofs(), -1);
    for (std::size_t k = 0; k < m.traction_dofs.size(); ++k)
      col_of[m.traction_dofs[k]] = static_cast<int>(k);
    for (int r = 0; r < m.B_t.outerSize(); ++r)
      for (DiscreteModel::RowSparse::InnerIterator it(m.B_t, r); it; ++it)
        if (col_of[it.col()] >= 0) tt.emplace_back(r, col_of[it.col()], it.value());
    const int nt = static_cast<int>(m.traction_dofs.size());
    m.B_tt.resize(nt, nt);
    m.B_tt.setFromTriplets(tt.begin(), tt.end());
    m.boundary_solver = std::make_shared<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
    m.boundary_solver->compute(m.B_tt);
    if (m.boundary_solver->info() != Eigen::Success)
      throw SolverError("traction boundary rows are singular");
  }
  return m;
}

Eigen::VectorXd DiscreteModel::interior_F(double t) const {
  Eigen::VectorXd F(interior_dofs.size());
  for (std::size_t k = 0; k < interior_dofs.size(); k += 9) {
    const int n = interior_dofs[k] / 9;
    const int i = n % nx, j = n / nx;
    const double xi = x(i), yj = y(j);
    LoadValues l{}, d1{}, d2{};
    if (config.loads) {
      l = config.loads(xi, yj, t);
      const Eigen::Vector4d g1 =
          (config.loads(x(i + 1), yj, t).to_vector() - config.loads(x(i - 1), yj, t).to_vector()) /
          (2.0 * dx);
      const Eigen::Vector4d g2 =
          (config.loads(xi, y(j + 1), t).to_vector() - config.loads(xi, y(j - 1), t).to_vector()) /
          (2.0 * dy);
      d1 = LoadValues::from_vector(g1);
      d2 = LoadValues::from_vector(g2);
    }
    Vector9 f = loads9.F(l, d1, d2);
    if (config.source) f -= config.source(xi, yj, t);
    F.segment<9>(k) = f;
  }
  return F;
}

Eigen::VectorXd DiscreteModel::traction_F(double t) const {
  Eigen::VectorXd F(traction_dofs.size());
  for (std::size_t k = 0; k < traction_nodes.size(); ++k) {
    const int n = traction_nodes[k];
    const int i = n % nx, j = n / nx;
    const double xi = x(i), yj = y(j);
    // Edge data are resultants for that edge's normal; at a corner the traction
    // for the diagonal normal is the normalized sum of both edges' data.
    Vector9 prescribed = Vector9::Zero();
    Eigen::Vector2d normal_sum = Eigen::Vector2d::Zero();
    const bool on[4] = {i == 0, i == nx - 1, j == 0, j == ny - 1};
    for (int e = 0; e < 4; ++e) {
      if (!on[e]) continue;
      normal_sum += edge_normal(e);
      if (config.edges[e].data) prescribed += config.edges[e].data(xi, yj, t);
    }
    prescribed /= normal_sum.norm();
    const Eigen::Vector2d nv = node_normal[n];
    F.segment<9>(9 * k) = T9.F_star(nv[0], nv[1], sample_loads(config, xi, yj, t), prescribed);
  }
  return F;
}

void DiscreteModel::apply_displacement_data(Eigen::VectorXd& H, double t) const {
  for (int n : displacement_nodes) {
    const int i = n % nx, j = n / nx;
    const int edge = (i == 0 && config.edges[kLeft].kind == EdgeKind::kDisplacement)     ? kLeft
                     : (i == nx - 1 && config.edges[kRight].kind == EdgeKind::kDisplacement) ? kRight
                     : (j == 0 && config.edges[kBottom].kind == EdgeKind::kDisplacement) ? kBottom
                                                                                          : kTop;
    const auto& data = config.edges[edge].data;
    H.segment<9>(9 * n) = data ? data(x(i), y(j), t) : Vector9::Zero();
  }
}

void DiscreteModel::solve_traction_dofs(Eigen::VectorXd& H, double t) const {
  if (traction_dofs.empty()) return;
  for (int d : traction_dofs) H[d] = 0.0;
  const Eigen::VectorXd rhs = traction_F(t) - B_t * H;
  const Eigen::VectorXd ht = boundary_solver->solve(rhs);
  for (std::size_t k = 0; k < traction_dofs.size(); ++k) H[traction_dofs[k]] = ht[k];
}

PlateKinematics DiscreteState::at(int node) const {
  return PlateKinematics::from_vector(H.segment<9>(9 * node));
}

}  // namespace cosserat_plate
