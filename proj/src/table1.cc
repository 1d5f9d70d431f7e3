#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>
#include <tuple>

#include "univgate/spectra.h"
#include "univgate/su2.h"

namespace univgate {
namespace {

long double cos_pi(const Rational& r) {
  return std::cos(r.value_ld() * std::numbers::pi_v<long double>);
}

long double sin_pi(const Rational& r) {
  return std::sin(r.value_ld() * std::numbers::pi_v<long double>);
}

void classify_record(TripletRecord& rec, const EngineConfig& config) {
  const long double c1 = cos_pi(rec.phi1), s1 = sin_pi(rec.phi1);
  const long double c2 = cos_pi(rec.phi2), s2 = sin_pi(rec.phi2);
  rec.cos_alpha = (c1 * c2 - cos_pi(rec.gamma)) / (s1 * s2);
  rec.feasible = std::abs(rec.cos_alpha) < 1.0L - 1e-12L;
  if (!rec.feasible) return;
  const long double sa = std::sqrt(1.0L - rec.cos_alpha * rec.cos_alpha);
  const AxisAngleGate a = AxisAngleGate::su2(rec.phi1, Eigen::Vector3d::UnitZ());
  const AxisAngleGate b = AxisAngleGate::su2(
      rec.phi2, Eigen::Vector3d(static_cast<double>(sa), 0.0,
                                static_cast<double>(rec.cos_alpha)));
  const UniversalityVerdict v = classify_pair(a, b, config);
  rec.step = v.step;
  rec.termination_l = v.status == VerdictStatus::kCommutantObstruction ? 0 : v.termination_l;
  rec.group_label = v.group_label.value_or("");
  rec.order = v.order.value_or(0);
}

}  // namespace

std::vector<TripletRecord> enumerate_triplets(int jobs, const EngineConfig& config) {
  const std::vector<Rational> angles = exceptional_angles(AngleSet::kSU2);
  const Rational half(1, 2), one(1), three_half(3, 2), zero(0);
  std::vector<TripletRecord> records;
  for (const Rational& p1 : angles) {
    if (p1 == zero || p1 == half || p1 == one || p1 == three_half) continue;
    for (const Rational& p2 : angles) {
      if (p2 == zero || p2 == one) continue;
      for (const Rational& g : angles) {
        TripletRecord rec;
        rec.phi1 = p1;
        rec.phi2 = p2;
        rec.gamma = g;
        records.push_back(rec);
      }
    }
  }
  EngineConfig cfg = config;
  if (!cfg.ng) cfg.ng = default_ng(Group::kSU, 2);
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    for (auto& r : records) classify_record(r, cfg);
    return records;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < records.size(); i += workers) {
        classify_record(records[i], cfg);
      }
    });
  }
  for (auto& t : pool) t.join();
  return records;
}

std::vector<Table1Row> aggregate_table1(const std::vector<TripletRecord>& records) {
  // key: (step 1 first, l, label)
  std::map<std::tuple<int, int, std::string>, std::int64_t> counts;
  for (const auto& r : records) {
    if (!r.feasible) continue;
    const int first = r.step == 1 ? 0 : 1;
    ++counts[{first, r.step == 1 ? 0 : r.termination_l, r.group_label + "\x1f" + std::to_string(r.step)}];
  }
  std::vector<Table1Row> rows;
  for (const auto& [key, count] : counts) {
    const auto& [first, l, tagged] = key;
    Table1Row row;
    const auto sep = tagged.find('\x1f');
    row.group_label = tagged.substr(0, sep);
    row.step = std::stoi(tagged.substr(sep + 1));
    if (first == 1) row.l = l;
    row.count = count;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Table1Row> expected_table1() {
  return {
      {std::nullopt, 1, "dicyclic", 80},
      {3, 2, "SU(2)", 3232},
      {4, 2, "SU(2)", 160},
      {5, 3, "<2,3,3>", 56},
      {6, 3, "<2,3,3>", 40},
      {7, 3, "<2,3,4>", 144},
      {8, 3, "<2,3,4>", 80},
      {8, 3, "<2,3,5>", 240},
      {9, 3, "<2,3,5>", 352},
      {10, 3, "<2,3,5>", 288},
      {11, 3, "<2,3,5>", 32},
      {12, 3, "<2,3,5>", 80},
      {13, 3, "<2,3,5>", 32},
  };
}

}  // namespace univgate
