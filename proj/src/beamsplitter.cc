#include "univgate/beamsplitter.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "univgate/errors.h"
#include "univgate/spectra.h"

namespace univgate {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBorderline = 1e-6;

double wrap_two_pi(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

std::vector<GateMatrix> s3_set(const Beamsplitter& bs, const Tolerances& tol) {
  return embed_gate_set(bs, 3, tol);
}

// cos γ for a 3×3 special unitary with spectrum {e^{iγ}, e^{−iγ}, 1}.
double chain_cos(const Eigen::MatrixXcd& m) { return 0.5 * (m.trace().real() - 1.0); }

Eigen::Matrix3cd z_generator(int i, int j) {
  Eigen::Matrix3cd z = Eigen::Matrix3cd::Zero();
  z(i, i) = Complex(0, 1);
  z(j, j) = Complex(0, -1);
  return z;
}

UniversalityVerdict reduced_note(UniversalityVerdict v, Group group, int d) {
  if (d > 3) {
    v.trace.insert(v.trace.begin(),
                   {0, 0, "d = " + std::to_string(d) +
                              " reduced to three modes; universality on three "
                              "modes implies it on more"});
    if (v.status == VerdictStatus::kUniversal) {
      v.group_label = std::string(group_name(group)) + "(" + std::to_string(d) + ")";
    } else if (v.order) {
      v.trace.push_back({0, 0, "order and label describe the three-mode group"});
    }
  }
  return v;
}

}  // namespace

Eigen::Matrix2cd swapped(const Eigen::Matrix2cd& b) {
  Eigen::Matrix2cd s;
  s << b(1, 1), b(1, 0), b(0, 1), b(0, 0);
  return s;
}

Eigen::MatrixXcd embed(const Eigen::Matrix2cd& b, int i, int j, int d) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  m(i, i) = b(0, 0);
  m(i, j) = b(0, 1);
  m(j, i) = b(1, 0);
  m(j, j) = b(1, 1);
  return m;
}

int s3_index(int i, int j, bool sigma) {
  int pair = 0;
  if (i == 1 && j == 2) pair = 0;
  else if (i == 1 && j == 3) pair = 1;
  else if (i == 2 && j == 3) pair = 2;
  else throw Error(ErrorCode::kBadArgument, "mode pair must be 1 <= i < j <= 3");
  return 2 * pair + (sigma ? 1 : 0);
}

Beamsplitter make_beamsplitter(const Eigen::Matrix2cd& b, Group group, int d,
                               const Tolerances& tol) {
  if (d < 3) throw Error(ErrorCode::kBadDimension, "embedding needs d >= 3");
  const GateMatrix g = validate_gate(b, group, tol);
  Beamsplitter bs;
  bs.b = g.entries();
  bs.group = group;
  bs.embedding_dim = d;
  if (group == Group::kSU) {
    bs.axis_angle = axis_angle_of(bs.b);
    bs.phi = bs.axis_angle->phi;
  } else {
    bs.phi = wrap_two_pi(std::atan2(bs.b(0, 1).real(), bs.b(0, 0).real()));
  }
  return bs;
}

Beamsplitter make_beamsplitter(const AxisAngleGate& gate, int d) {
  Beamsplitter bs = make_beamsplitter(
      Eigen::Matrix2cd(su2_matrix(gate.phi, gate.axis)), Group::kSU, d);
  return bs;
}

Beamsplitter make_orthogonal_beamsplitter(double phi, int d) {
  Eigen::Matrix2cd b;
  b << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  Beamsplitter bs = make_beamsplitter(b, Group::kSO, d);
  bs.phi = wrap_two_pi(phi);
  return bs;
}

std::vector<GateMatrix> embed_gate_set(const Beamsplitter& bs, int d,
                                       const Tolerances& tol) {
  if (d < 3) throw Error(ErrorCode::kBadDimension, "embedding needs d >= 3");
  const Eigen::Matrix2cd bsig = swapped(bs.b);
  std::vector<GateMatrix> out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      out.push_back(validate_gate(embed(bs.b, i, j, d), bs.group, tol));
      out.push_back(validate_gate(embed(bsig, i, j, d), bs.group, tol));
    }
  }
  return out;
}

const char* obstruction_family_name(ObstructionFamily f) {
  switch (f) {
    case ObstructionFamily::kNone: return "none";
    case ObstructionFamily::kCentral: return "central";
    case ObstructionFamily::kRealOffDiag: return "real";
    case ObstructionFamily::kDiagonal: return "diagonal";
    case ObstructionFamily::kQuarterTurn: return "quarter-turn";
  }
  return "unknown";
}

FamilyReport obstruction_family(const Beamsplitter& bs, double threshold) {
  FamilyReport r;
  if (bs.group == Group::kSO) {
    const double s = std::abs(std::sin(bs.phi));
    if (s <= threshold) r.family = ObstructionFamily::kCentral;
    r.borderline = s > threshold && s <= kBorderline;
    return r;
  }
  const double off = std::abs(bs.b(0, 1));
  const double diag = std::abs(bs.b(0, 0));
  const double imag = std::max({std::abs(bs.b(0, 0).imag()), std::abs(bs.b(0, 1).imag()),
                                std::abs(bs.b(1, 0).imag()), std::abs(bs.b(1, 1).imag())});
  for (double q : {off, diag, imag}) {
    if (q > threshold && q <= kBorderline) r.borderline = true;
  }
  if (off <= threshold && imag <= threshold) {
    r.family = ObstructionFamily::kCentral;
  } else if (off <= threshold) {
    r.family = ObstructionFamily::kDiagonal;
  } else if (diag <= threshold) {
    r.family = ObstructionFamily::kQuarterTurn;
  } else if (imag <= threshold) {
    r.family = ObstructionFamily::kRealOffDiag;
  }
  return r;
}

double trace_b12_b23(double phi, double kz2) {
  const double c = std::cos(phi), s = std::sin(phi);
  return 2 * c + c * c + kz2 * s * s;
}

double trace_doubled(double phi, double kz2) {
  return 0.5 * (2 + 4 * std::cos(2 * phi) + (1 - kz2) * (std::cos(4 * phi) - 1));
}

double trace_chain4(double phi, double kz2) {
  auto c = [phi](int k) { return std::cos(k * phi); };
  const double s = std::sin(phi);
  const double base = 8 * c(1) + 3 * c(2) + 4 * c(3) + 6 * c(4) + 4 * c(5) + c(6) - 2;
  const double quartic = 32 * kz2 * kz2 * std::pow(s, 4) * c(1) * c(1);
  const double quadratic = 8 * kz2 * s * s * (-2 * c(1) + 4 * c(2) + 2 * c(3) + c(4) + 4);
  return (base + quartic + quadratic) / 8;
}

double so3_gamma_cos(double phi) {
  const double c = std::cos(phi);
  return (c * c + 2 * c - 1) / 2;
}

UniversalityVerdict orthogonal_bs_universal(double phi, int d,
                                            const BeamsplitterOptions& opts) {
  const Beamsplitter bs = make_orthogonal_beamsplitter(phi, std::max(d, 3));
  if (d < 3) throw Error(ErrorCode::kBadDimension, "embedding needs d >= 3");
  const int run_d = opts.full_engine ? d : 3;
  const std::vector<GateMatrix> gates = embed_gate_set(bs, run_d, opts.engine.tol);
  UniversalityVerdict v = decide_universality(gates, opts.engine);

  const double cg = so3_gamma_cos(bs.phi);
  const Eigen::MatrixXcd prod = gates[s3_index(2, 3, false)].entries() *
                                gates[s3_index(1, 2, false)].entries();
  const double cg_matrix = 0.5 * (prod.trace().real() - 1.0);
  const double gamma = std::acos(std::clamp(cg, -1.0, 1.0));
  const auto exc = match_exceptional_angle(gamma, AngleSet::kSO3, 1e-9);
  std::ostringstream msg;
  msg << "gamma chain: cos(gamma) = " << cg << " (product trace gives "
      << cg_matrix << "), gamma "
      << (exc ? "is exceptional (" + exc->str() + " pi)" : std::string("is not exceptional"));
  v.trace.push_back({0, 2, msg.str()});
  return opts.full_engine ? v : reduced_note(std::move(v), Group::kSO, d);
}

UniversalityVerdict unitary_bs_universal(const Beamsplitter& bs,
                                         const BeamsplitterOptions& opts) {
  if (bs.group != Group::kSU || !bs.axis_angle) {
    throw Error(ErrorCode::kBadArgument, "unitary beamsplitter expected");
  }
  const Tolerances& tol = opts.engine.tol;
  const int d = bs.embedding_dim;
  if (opts.full_engine && d > 3) {
    return decide_universality(embed_gate_set(bs, d, tol), opts.engine);
  }
  const std::vector<GateMatrix> gates = s3_set(bs, tol);
  const FamilyReport family = obstruction_family(bs);
  const CommutantReport comm = check_necessary_condition(gates, tol);

  UniversalityVerdict v;
  v.commutant_dim = comm.dim;
  v.commutant_gap = comm.gap;
  v.ill_conditioned = comm.ill_conditioned;
  for (int i = 0; i < 6; ++i) v.generator_names.push_back("g" + std::to_string(i));
  const NgConfig ng = opts.engine.ng ? *opts.engine.ng : default_ng(Group::kSU, 3);
  v.n_g_used = ng.value;
  v.ng_source = ng.source;
  {
    std::ostringstream msg;
    msg << "commutant dimension " << comm.dim << ", family "
        << obstruction_family_name(family.family)
        << (family.borderline ? " (borderline entries)" : "");
    v.trace.push_back({0, 1, msg.str()});
  }

  if (family.family == ObstructionFamily::kQuarterTurn) {
    // B_ij = e^{iψ}E_ij − e^{−iψ}E_ji + E_kk: finite exactly for rational ψ/π.
    try {
      std::vector<Eigen::MatrixXcd> mats;
      for (const auto& g : gates) mats.push_back(g.entries());
      WordSet ws(std::move(mats), Group::kSU, tol, opts.closure_budget);
      while (!ws.closed()) ws = grow_words(std::move(ws));
      const std::int64_t order = static_cast<std::int64_t>(ws.size());
      const auto n = static_cast<std::int64_t>(std::llround(std::sqrt(order / 6.0)));
      v.status = VerdictStatus::kFinite;
      v.step = 3;
      v.order = order;
      v.termination_l = ws.length();
      v.group_label = (6 * n * n == order)
                          ? "Delta(6n^2), n=" + std::to_string(n)
                          : std::string("finite");
      v.trace.push_back({ws.length() + 1, 3,
                         "quarter-turn family closes: order " + std::to_string(order)});
      v.closed_set = std::make_shared<const WordSet>(std::move(ws));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSetBudgetExceeded) throw;
      v.status = VerdictStatus::kCommutantObstruction;
      v.step = 1;
      v.group_label = "Delta(6inf^2)";
      v.trace.push_back({0, 1, "quarter-turn family; no closure within budget, "
                               "span{Z12, Z23} is invariant"});
    }
    return reduced_note(std::move(v), Group::kSU, d);
  }
  if (family.family != ObstructionFamily::kNone || !comm.trivial) {
    v.status = VerdictStatus::kCommutantObstruction;
    v.step = 1;
    if (family.family == ObstructionFamily::kNone) {
      v.trace.push_back({0, 1, "commutant nontrivial outside the known families"});
    }
    return reduced_note(std::move(v), Group::kSU, d);
  }

  // Trace chain: products with a real trace, spectrum {e^{±iγ}, 1}.
  const double phi = bs.axis_angle->phi;
  const double kz2 = bs.axis_angle->axis.z() * bs.axis_angle->axis.z();
  struct Candidate {
    std::string name;
    std::vector<int> word;
    std::optional<double> formula;  // predicted trace
  };
  const int b12 = s3_index(1, 2, false), s12 = s3_index(1, 2, true);
  const int b13 = s3_index(1, 3, false);
  const int b23 = s3_index(2, 3, false), s23 = s3_index(2, 3, true);
  std::vector<Candidate> chain = {
      {"B12", {b12}, std::nullopt},
      {"B12 B23", {b12, b23}, trace_b12_b23(phi, kz2)},
      {"B12^2 B23^2", {b12, b12, b23, b23}, trace_doubled(phi, kz2)},
      {"B23^2 B12^2 B23 B12", {b23, b23, b12, b12, b23, b12}, trace_chain4(phi, kz2)},
  };
  if (std::abs(std::cos(phi)) <= 1e-9) {
    const std::vector<int> c12 = {b12, s12}, c23 = {b23, s23};
    auto cat = [](std::initializer_list<std::vector<int>> parts) {
      std::vector<int> w;
      for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
      return w;
    };
    chain.push_back({"C12 C23", cat({c12, c23}), std::nullopt});
    chain.push_back({"C12^2 C23^2", cat({c12, c12, c23, c23}), std::nullopt});
    chain.push_back({"C23^2 C12^2 C23 C12", cat({c23, c23, c12, c12, c23, c12}),
                     std::nullopt});
    chain.push_back({"B12^2 B13 B23 B13^2", {b12, b12, b13, b23, b13, b13}, kz2});
  }
  for (const Candidate& c : chain) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
    for (int w : c.word) m = m * gates[w].entries();
    std::ostringstream msg;
    msg << "chain " << c.name << ": cos(gamma) = "
        << chain_cos(m);
    if (c.formula) msg << ", trace formula " << *c.formula << " vs " << m.trace().real();
    const PowerReport p = minimal_power(m, Group::kSU, ng.value, tol);
    if (p.n_g && !p.power_in_center) {
      msg << "; power " << *p.n_g << " lands near " << *p.landing_center;
      v.trace.push_back({static_cast<int>(c.word.size()), 2, msg.str()});
      Witness w;
      w.word = c.word;
      w.power = *p.n_g;
      w.center = *p.landing_center;
      w.fast_path = !is_exceptional_spectrum(m, Group::kSU, ng.value, tol).exceptional;
      v.witness = std::move(w);
      v.status = VerdictStatus::kUniversal;
      v.step = 2;
      v.group_label = "SU(3)";
      v.termination_l = static_cast<int>(c.word.size());
      return reduced_note(std::move(v), Group::kSU, d);
    }
    msg << "; exceptional";
    v.trace.push_back({static_cast<int>(c.word.size()), 2, msg.str()});
  }
  v.trace.push_back({0, 2, "trace chain inconclusive; running the engine on S3"});
  UniversalityVerdict engine = decide_universality(gates, opts.engine);
  engine.trace.insert(engine.trace.begin(), v.trace.begin(), v.trace.end());
  return reduced_note(std::move(engine), Group::kSU, d);
}

UniversalityVerdict beamsplitter_universal(const Beamsplitter& bs,
                                           const BeamsplitterOptions& opts) {
  if (bs.group == Group::kSO) {
    return orthogonal_bs_universal(bs.phi, bs.embedding_dim, opts);
  }
  return unitary_bs_universal(bs, opts);
}

std::vector<Eigen::MatrixXcd> algebra_generators(const Beamsplitter& bs) {
  Eigen::Matrix2cd log_b, log_s;
  if (bs.group == Group::kSU) {
    const AxisAngleGate& a = *bs.axis_angle;
    const Eigen::Vector3d& k = a.axis;
    log_b = a.phi * (k.x() * su2_x() + k.y() * su2_y() + k.z() * su2_z());
    log_s = a.phi * (-k.x() * su2_x() + k.y() * su2_y() - k.z() * su2_z());
  } else {
    // Signed angle in (−π, π].
    double phi = bs.phi > std::numbers::pi ? bs.phi - kTwoPi : bs.phi;
    log_b << 0.0, phi, -phi, 0.0;
    log_s = swapped(log_b);
  }
  std::vector<Eigen::MatrixXcd> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(3, 3);
      x(i, i) = log_b(0, 0); x(i, j) = log_b(0, 1);
      x(j, i) = log_b(1, 0); x(j, j) = log_b(1, 1);
      out.push_back(x);
      Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(3, 3);
      y(i, i) = log_s(0, 0); y(i, j) = log_s(0, 1);
      y(j, i) = log_s(1, 0); y(j, j) = log_s(1, 1);
      out.push_back(y);
    }
  }
  return out;
}

CommutantReport algebra_level_check(const Beamsplitter& bs, const Tolerances& tol) {
  return check_algebra_generation(algebra_generators(bs), bs.group, tol);
}

bool cartan_plane_invariant(const Beamsplitter& bs, double tol) {
  const Eigen::Matrix3cd z12 = z_generator(0, 1), z23 = z_generator(1, 2);
  Eigen::Matrix2d gram;
  auto ip = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a.adjoint() * b).trace().real();
  };
  gram << ip(z12, z12), ip(z12, z23), ip(z23, z12), ip(z23, z23);
  for (const GateMatrix& g : s3_set(bs, Tolerances{})) {
    for (const Eigen::Matrix3cd& z : {z12, z23}) {
      const Eigen::MatrixXcd img = g.entries() * z * g.entries().adjoint();
      const Eigen::Vector2d rhs(ip(z12, img), ip(z23, img));
      const Eigen::Vector2d c = gram.ldlt().solve(rhs);
      const Eigen::MatrixXcd resid = img - c(0) * z12 - c(1) * z23;
      if (resid.norm() > tol) return false;
    }
  }
  return true;
}

}  // namespace univgate
