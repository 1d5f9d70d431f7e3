#include "univgate/engine.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "univgate/commutant.h"
#include "univgate/errors.h"

namespace univgate {

const char* verdict_status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kUniversal: return "Universal";
    case VerdictStatus::kFinite: return "Finite";
    case VerdictStatus::kCommutantObstruction: return "CommutantObstruction";
    case VerdictStatus::kInconclusive: return "Inconclusive";
  }
  return "Unknown";
}

namespace {

std::string word_text(const std::vector<int>& word,
                      const std::vector<std::string>& names) {
  std::string out;
  for (int letter : word) {
    if (!out.empty()) out += " ";
    out += names[letter];
  }
  return out;
}

// Rebuilds the generator list of a verdict from the original gates.
std::vector<Eigen::MatrixXcd> generators_from_names(
    const std::vector<GateMatrix>& gates,
    const std::vector<std::string>& names) {
  std::vector<Eigen::MatrixXcd> out;
  for (const std::string& name : names) {
    const bool inverse = name.size() > 3 && name.ends_with("^-1");
    const int idx = std::stoi(name.substr(1));
    const Eigen::MatrixXcd& m = gates.at(idx).entries();
    out.push_back(inverse ? Eigen::MatrixXcd(m.adjoint()) : m);
  }
  return out;
}

}  // namespace

UniversalityVerdict decide_universality(const std::vector<GateMatrix>& gates,
                                        const EngineConfig& config) {
  if (gates.empty()) throw Error(ErrorCode::kEmptyInput, "no gates");
  const Group group = gates.front().group();
  const int d = gates.front().dim();
  for (const auto& g : gates) {
    if (g.group() != group || g.dim() != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "all gates must share group and dimension");
    }
  }
  if (group == Group::kSO && d == 4) {
    throw Error(ErrorCode::kUnsupportedGroup,
                "SO(4) is not simple; the decision procedure does not apply");
  }
  const Tolerances& tol = config.tol;
  const NgConfig ng = config.ng ? *config.ng : default_ng(group, d);
  const std::int64_t N = ng.value;

  UniversalityVerdict verdict;
  verdict.n_g_used = N;
  verdict.ng_source = ng.source;

  // Step 1: commutant of the adjoint images.
  CommutantReport comm = check_necessary_condition(gates, tol);
  verdict.commutant_dim = comm.dim;
  verdict.commutant_gap = comm.gap;
  verdict.ill_conditioned = comm.ill_conditioned;
  {
    std::ostringstream msg;
    msg << "commutant dimension " << comm.dim << ", singular value gap "
        << comm.gap << (comm.ill_conditioned ? " (ill-conditioned)" : "");
    verdict.trace.push_back({1, 1, msg.str()});
  }
  if (!comm.trivial) {
    verdict.status = VerdictStatus::kCommutantObstruction;
    verdict.step = 1;
    return verdict;
  }

  // Central generators never change which words are central, so they sit
  // out of the growth and are folded in at the end.
  std::vector<Eigen::MatrixXcd> mats;
  std::vector<bool> active;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const bool central = ball_membership(gates[i], tol).in_center;
    mats.push_back(gates[i].entries());
    active.push_back(!central);
    verdict.generator_names.push_back("g" + std::to_string(i));
    if (central) {
      verdict.trace.push_back(
          {1, 1, "g" + std::to_string(i) + " is central; excluded from growth"});
    }
  }
  if (config.close_under_inverses) {
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!active[i]) continue;
      mats.push_back(gates[i].entries().adjoint());
      active.push_back(true);
      verdict.generator_names.push_back("g" + std::to_string(i) + "^-1");
    }
  }
  const std::vector<std::string>& names = verdict.generator_names;

  auto finish_finite = [&](WordSet ws) {
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (!active[i]) ws.absorb(static_cast<int>(i));
    }
    FiniteGroupInfo info = classify_finite_group(ws);
    verdict.status = VerdictStatus::kFinite;
    verdict.step = 3;
    verdict.order = info.order;
    verdict.group_label = info.label;
    verdict.termination_l = ws.length();
    verdict.trace.push_back(
        {ws.length() + 1, 3,
         "no new words; closed set of order " + std::to_string(info.order) +
             (info.label ? " (" + *info.label + ")" : "")});
    verdict.closed_set = std::make_shared<const WordSet>(std::move(ws));
  };

  try {
    WordSet ws(mats, group, tol, config.max_set_size, active);
    if (ws.closed()) {
      finish_finite(std::move(ws));
      return verdict;
    }
    int l = 1;
    while (true) {
      // Step 2 on the words added last (older ones were already scanned).
      for (std::size_t idx : ws.frontier()) {
        const Eigen::MatrixXcd& g = ws.element(idx);
        const ExceptionalResult exc = is_exceptional_spectrum(g, group, N, tol);
        const PowerReport power = minimal_power(g, group, N, tol);
        if (power.n_g && !power.power_in_center) {
          Witness w;
          w.word = ws.word(idx);
          w.power = *power.n_g;
          w.center = *power.landing_center;
          w.fast_path = !exc.exceptional;
          std::ostringstream msg;
          msg << (w.fast_path ? "non-exceptional spectrum; " : "")
              << "(" << word_text(w.word, names) << ")^" << w.power
              << " lands in the ball around " << w.center
              << " outside the center";
          verdict.trace.push_back({l, 2, msg.str()});
          verdict.status = VerdictStatus::kUniversal;
          verdict.group_label =
              std::string(group_name(group)) + "(" + std::to_string(d) + ")";
          verdict.step = 2;
          verdict.termination_l = l;
          verdict.witness = std::move(w);
          return verdict;
        }
        if (!exc.exceptional) {
          verdict.trace.push_back(
              {l, 2, "warning: non-exceptional spectrum without a landing "
                     "power up to N_G for (" + word_text(ws.word(idx), names) + ")"});
        }
      }
      verdict.trace.push_back(
          {l, 2, std::to_string(ws.frontier().size()) +
                     " new elements, all exceptional"});
      if (l >= config.max_length) {
        verdict.status = VerdictStatus::kInconclusive;
        verdict.termination_l = l;
        verdict.trace.push_back({l, 3, "maximal word length reached"});
        return verdict;
      }
      ws = grow_words(std::move(ws));
      if (ws.closed()) {
        finish_finite(std::move(ws));
        return verdict;
      }
      l = ws.length();
      verdict.trace.push_back(
          {l, 3, "added " + std::to_string(ws.frontier().size()) +
                     " words; set size " + std::to_string(ws.size())});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSetBudgetExceeded) throw;
    verdict.status = VerdictStatus::kInconclusive;
    verdict.trace.push_back({verdict.termination_l, 3, e.what()});
    return verdict;
  }
}

bool verify_universal(const std::vector<GateMatrix>& gates,
                      const UniversalityVerdict& verdict,
                      const EngineConfig& config) {
  if (verdict.status != VerdictStatus::kUniversal || !verdict.witness) {
    return false;
  }
  const CommutantReport comm = check_necessary_condition(gates, config.tol);
  if (!comm.trivial) return false;
  const auto gens = generators_from_names(gates, verdict.generator_names);
  const int d = gates.front().dim();
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(d, d);
  for (int letter : verdict.witness->word) g = g * gens.at(letter);
  // g^n = Q T^n Q† from the Schur form instead of repeated products.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(g);
  Eigen::VectorXcd diag(d);
  for (int i = 0; i < d; ++i) {
    const Complex lambda = schur.matrixT()(i, i);
    diag(i) = std::polar(1.0, verdict.witness->power * std::arg(lambda));
  }
  const Eigen::MatrixXcd power =
      schur.matrixU() * diag.asDiagonal() * schur.matrixU().adjoint();
  const BallReport ball = ball_membership(power, gates.front().group(), config.tol);
  return ball.member_of.has_value() && !ball.in_center;
}

bool verify_finite(const WordSet& ws) {
  const int d = static_cast<int>(ws.element(0).rows());
  if (!ws.find(Eigen::MatrixXcd::Identity(d, d))) return false;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (!ws.find(ws.element(i).adjoint())) return false;
    for (const auto& g : ws.generators()) {
      if (!ws.find(ws.element(i) * g)) return false;
    }
  }
  return true;
}

double su2_volume_constant() {
  const double t = std::asin(1.0 / 8.0);
  return 16.0 * std::sqrt(2.0) / std::numbers::pi * (2.0 * t - 0.5 * std::sin(4.0 * t));
}

WordLengthBound word_length_bound(double lambda1, int d, double epsilon,
                                  std::optional<double> a1) {
  if (!(lambda1 > 0.0 && lambda1 < 1.0)) {
    throw Error(ErrorCode::kBadLambda, "lambda1 must lie in (0, 1)");
  }
  if (d < 2 || !(epsilon > 0.0)) {
    throw Error(ErrorCode::kBadArgument, "need d >= 2 and epsilon > 0");
  }
  if (!a1) {
    if (d != 2) {
      throw Error(ErrorCode::kBadArgument,
                  "the ball volume constant a1 is only built in for d = 2");
    }
    a1 = su2_volume_constant();
  }
  const double m = d * d - 1.0;
  const double log_gap = std::log(1.0 / lambda1);
  WordLengthBound out;
  out.a1 = *a1;
  out.a = m / log_gap;
  out.b = (m * std::log(2.0) - std::log(*a1) + 0.5 * m * std::log(m)) / log_gap;
  out.bound = out.a * std::log(1.0 / epsilon) + out.b;
  return out;
}

}  // namespace univgate
